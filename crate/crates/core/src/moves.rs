//! The six fundamental moves on fence diagrams, their inverses, a few
//! composite macros, and the enumerator that feeds the search frontier.
//!
//! Word positions in the public API are 1-based (`at = 1` is the first
//! band); an inflation position `after` counts the bands left of the new
//! joint, so `0 ≤ after ≤ |word|`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::diagram::{Band, FenceDiagram};
use crate::error::{Error, Result};
use crate::legendrian::reduce;

/// The three words presenting the same band pair on lines `r < s < t`:
/// `F1 = (r,s)(s,t)`, `F2 = (s,t)(r,t)`, `F3 = (r,t)(r,s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SlideForm {
    F1,
    F2,
    F3,
}

impl SlideForm {
    pub const ALL: [SlideForm; 3] = [SlideForm::F1, SlideForm::F2, SlideForm::F3];

    /// Recognises an adjacent band pair, returning its form and `(r, s, t)`.
    pub fn classify(first: Band, second: Band) -> Option<(SlideForm, [usize; 3])> {
        let (a, b) = (first.top(), first.bottom());
        let (c, d) = (second.top(), second.bottom());
        if b == c {
            Some((SlideForm::F1, [a, b, d]))
        } else if b == d && c < a {
            Some((SlideForm::F2, [c, a, b]))
        } else if a == c && d < b {
            Some((SlideForm::F3, [a, d, b]))
        } else {
            None
        }
    }

    pub fn build(self, [r, s, t]: [usize; 3]) -> [Band; 2] {
        match self {
            SlideForm::F1 => [Band::raw(r, s), Band::raw(s, t)],
            SlideForm::F2 => [Band::raw(s, t), Band::raw(r, t)],
            SlideForm::F3 => [Band::raw(r, t), Band::raw(r, s)],
        }
    }
}

impl fmt::Display for SlideForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SlideForm::F1 => "F1",
            SlideForm::F2 => "F2",
            SlideForm::F3 => "F3",
        })
    }
}

impl FromStr for SlideForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "F1" | "f1" => Ok(SlideForm::F1),
            "F2" | "f2" => Ok(SlideForm::F2),
            "F3" | "f3" => Ok(SlideForm::F3),
            _ => Err(Error::NotApplicable(format!("unknown slide form {s:?}"))),
        }
    }
}

/// Which end of the word a twirl carries around the closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    /// First band moves to the last position.
    Front,
    /// Last band moves to the first position.
    Back,
}

impl End {
    pub fn opposite(self) -> End {
        match self {
            End::Front => End::Back,
            End::Back => End::Front,
        }
    }
}

impl fmt::Display for End {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            End::Front => "front",
            End::Back => "back",
        })
    }
}

impl FromStr for End {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "front" => Ok(End::Front),
            "back" => Ok(End::Back),
            _ => Err(Error::NotApplicable(format!("unknown twirl end {s:?}"))),
        }
    }
}

/// Where an inflation sends a band end of the split line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Upper,
    Lower,
}

/// Side assignment for an inflation, one entry per band end of the line in left-to-right
/// order; written as a string of `u`/`l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Split(pub Vec<Side>);

impl Split {
    pub fn uniform(len: usize, side: Side) -> Split {
        Split(vec![side; len])
    }

    /// First `upper` ends stay on the upper line, the rest go lower.
    pub fn staircase(len: usize, upper: usize) -> Split {
        Split(
            (0..len)
                .map(|n| if n < upper { Side::Upper } else { Side::Lower })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Split {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for side in &self.0 {
            f.write_str(match side {
                Side::Upper => "u",
                Side::Lower => "l",
            })?;
        }
        Ok(())
    }
}

impl FromStr for Split {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| *c != '-')
            .map(|c| match c {
                'u' | 'U' => Ok(Side::Upper),
                'l' | 'L' => Ok(Side::Lower),
                _ => Err(Error::BadSplit(format!("unexpected character {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Split)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    Inflate,
    Deflate,
    Slip,
    Slide,
    Twirl,
    Turn,
}

impl MoveKind {
    pub const ALL: [MoveKind; 6] = [
        MoveKind::Inflate,
        MoveKind::Deflate,
        MoveKind::Slip,
        MoveKind::Slide,
        MoveKind::Twirl,
        MoveKind::Turn,
    ];
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::Inflate => "inflate",
            MoveKind::Deflate => "deflate",
            MoveKind::Slip => "slip",
            MoveKind::Slide => "slide",
            MoveKind::Twirl => "twirl",
            MoveKind::Turn => "turn",
        })
    }
}

impl FromStr for MoveKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MoveKind::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| Error::NotApplicable(format!("unknown move kind {s:?}")))
    }
}

/// A move kind together with its location on a particular diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    Inflate { line: usize, after: usize, split: Split },
    Deflate { line: usize },
    Slip { at: usize },
    Slide { at: usize, target: SlideForm },
    Twirl { end: End },
    Turn,
}

impl Move {
    pub fn kind(&self) -> MoveKind {
        match self {
            Move::Inflate { .. } => MoveKind::Inflate,
            Move::Deflate { .. } => MoveKind::Deflate,
            Move::Slip { .. } => MoveKind::Slip,
            Move::Slide { .. } => MoveKind::Slide,
            Move::Twirl { .. } => MoveKind::Twirl,
            Move::Turn => MoveKind::Turn,
        }
    }
}

/// CLI move syntax, e.g. `slide --at 2 --target F3`.
impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Inflate { line, after, split } => {
                write!(f, "inflate --line {line} --at {after}")?;
                if !split.is_empty() {
                    write!(f, " --split {split}")?;
                }
                Ok(())
            }
            Move::Deflate { line } => write!(f, "deflate --line {line}"),
            Move::Slip { at } => write!(f, "slip --at {at}"),
            Move::Slide { at, target } => write!(f, "slide --at {at} --target {target}"),
            Move::Twirl { end } => write!(f, "twirl --end {end}"),
            Move::Turn => f.write_str("turn"),
        }
    }
}

impl FromStr for Move {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut tokens = s.split_whitespace();
        let kind: MoveKind = tokens
            .next()
            .ok_or_else(|| Error::NotApplicable("empty move".into()))?
            .trim_start_matches("--kind=")
            .parse()?;
        let mut at = None;
        let mut line = None;
        let mut target = None;
        let mut end = None;
        let mut split = Split::default();
        let number = |v: Option<&str>| -> Result<usize> {
            v.and_then(|v| v.parse().ok())
                .ok_or_else(|| Error::NotApplicable("expected a number".into()))
        };
        while let Some(flag) = tokens.next() {
            match flag {
                "--at" => at = Some(number(tokens.next())?),
                "--line" => line = Some(number(tokens.next())?),
                "--target" => target = Some(tokens.next().unwrap_or("").parse()?),
                "--end" => end = Some(tokens.next().unwrap_or("").parse()?),
                "--split" => split = tokens.next().unwrap_or("").parse()?,
                other => return Err(Error::NotApplicable(format!("unknown flag {other:?}"))),
            }
        }
        let missing = |what: &str| Error::NotApplicable(format!("{kind} needs {what}"));
        Ok(match kind {
            MoveKind::Inflate => Move::Inflate {
                line: line.ok_or_else(|| missing("--line"))?,
                after: at.ok_or_else(|| missing("--at"))?,
                split,
            },
            MoveKind::Deflate => Move::Deflate {
                line: line.ok_or_else(|| missing("--line"))?,
            },
            MoveKind::Slip => Move::Slip {
                at: at.ok_or_else(|| missing("--at"))?,
            },
            MoveKind::Slide => Move::Slide {
                at: at.ok_or_else(|| missing("--at"))?,
                target: target.ok_or_else(|| missing("--target"))?,
            },
            MoveKind::Twirl => Move::Twirl {
                end: end.unwrap_or(End::Front),
            },
            MoveKind::Turn => Move::Turn,
        })
    }
}

fn check_pair_index(f: &FenceDiagram, at: usize) -> Result<()> {
    if at == 0 || at >= f.len() {
        return Err(Error::NotApplicable(format!(
            "position {at} has no right neighbour in a word of length {}",
            f.len()
        )));
    }
    Ok(())
}

/// Whether adjacent bands have disjoint or strictly nested spans.
pub fn bands_commute(x: Band, y: Band) -> bool {
    let (i, j, k, l) = (x.top(), x.bottom(), y.top(), y.bottom());
    j < k || l < i || (i < k && l < j) || (k < i && j < l)
}

/// Swaps the bands at positions `at` and `at + 1`.
pub fn slip(f: &FenceDiagram, at: usize) -> Result<FenceDiagram> {
    check_pair_index(f, at)?;
    let word = f.word();
    if !bands_commute(word[at - 1], word[at]) {
        return Err(Error::NotApplicable(format!(
            "bands {} and {} share a line or interleave",
            word[at - 1],
            word[at]
        )));
    }
    let mut out = word.to_vec();
    out.swap(at - 1, at);
    Ok(FenceDiagram::raw(f.strands(), out))
}

/// Rewrites the pair at `at`, `at + 1` into another of its three forms.
pub fn slide(f: &FenceDiagram, at: usize, target: SlideForm) -> Result<FenceDiagram> {
    check_pair_index(f, at)?;
    let word = f.word();
    let (form, lines) = SlideForm::classify(word[at - 1], word[at]).ok_or_else(|| {
        Error::NotApplicable(format!(
            "bands {} and {} are not a slide pair",
            word[at - 1],
            word[at]
        ))
    })?;
    if form == target {
        return Err(Error::BadTarget);
    }
    let mut out = word.to_vec();
    let [x, y] = target.build(lines);
    out[at - 1] = x;
    out[at] = y;
    Ok(FenceDiagram::raw(f.strands(), out))
}

/// Splits line `line` in two, joined by a new band inserted after `after`
/// bands. Ends marked lower move to the new line below.
///
/// Only splits realisable by an isotopy are accepted: everything on one
/// line, or upper ends all left of the joint and lower ends all right of it.
pub fn inflate(f: &FenceDiagram, line: usize, after: usize, split: &Split) -> Result<FenceDiagram> {
    let b = f.strands();
    if line == 0 || line > b {
        return Err(Error::NotApplicable(format!("no line {line} in {b} strands")));
    }
    if after > f.len() {
        return Err(Error::NotApplicable(format!(
            "position {after} beyond word length {}",
            f.len()
        )));
    }
    let ends = f.attachments(line);
    if split.len() != ends.len() {
        return Err(Error::BadSplit(format!(
            "line {line} has {} band ends, split assigns {}",
            ends.len(),
            split.len()
        )));
    }
    let lower: HashSet<usize> = ends
        .iter()
        .zip(&split.0)
        .filter(|(_, s)| **s == Side::Lower)
        .map(|(t, _)| *t)
        .collect();
    let upper_max = ends.iter().filter(|t| !lower.contains(t)).max();
    let lower_min = lower.iter().min();
    if let (Some(&u), Some(&l)) = (upper_max, lower_min) {
        if !(u < after && after <= l) {
            return Err(Error::BadSplit(format!(
                "upper ends must lie left of the joint and lower ends right of it (joint after {after})"
            )));
        }
    }
    let shift = |x: usize| if x > line { x + 1 } else { x };
    let mut word: Vec<Band> = f
        .word()
        .iter()
        .enumerate()
        .map(|(t, band)| {
            let moved = |x: usize| {
                if x == line {
                    if lower.contains(&t) {
                        line + 1
                    } else {
                        line
                    }
                } else {
                    shift(x)
                }
            };
            Band::raw(moved(band.top()), moved(band.bottom()))
        })
        .collect();
    word.insert(after, Band::raw(line, line + 1));
    Ok(FenceDiagram::raw(b + 1, word))
}

/// Index of the unique joint `(line, line+1)` if merging across it is an
/// isotopy of the reduced picture (a leaf line or a descending staircase).
fn deflation_joint(f: &FenceDiagram, line: usize) -> Result<usize> {
    if line == 0 || line >= f.strands() {
        return Err(Error::NotApplicable(format!(
            "no lines {line} and {} in {} strands",
            line + 1,
            f.strands()
        )));
    }
    let joint = Band::raw(line, line + 1);
    let joints: Vec<usize> = f
        .word()
        .iter()
        .enumerate()
        .filter(|(_, b)| **b == joint)
        .map(|(t, _)| t)
        .collect();
    let t0 = match joints.as_slice() {
        [t0] => *t0,
        [] => {
            return Err(Error::NotApplicable(format!("no band {joint}")));
        }
        _ => {
            return Err(Error::NotApplicable(format!(
                "{} parallel bands {joint}",
                joints.len()
            )));
        }
    };
    let upper: Vec<usize> = f.attachments(line).into_iter().filter(|&t| t != t0).collect();
    let lower: Vec<usize> = f
        .attachments(line + 1)
        .into_iter()
        .filter(|&t| t != t0)
        .collect();
    let staircase = upper.iter().all(|&t| t < t0) && lower.iter().all(|&t| t > t0);
    if upper.is_empty() || lower.is_empty() || staircase {
        Ok(t0)
    } else {
        Err(Error::NotApplicable(format!(
            "merging across {joint} would remove cusps"
        )))
    }
}

/// Deletes the single band `(line, line+1)` and merges the two lines.
pub fn deflate(f: &FenceDiagram, line: usize) -> Result<FenceDiagram> {
    let t0 = deflation_joint(f, line)?;
    let merge = |x: usize| if x > line { x - 1 } else { x };
    let word = f
        .word()
        .iter()
        .enumerate()
        .filter(|(t, _)| *t != t0)
        .map(|(_, band)| Band::raw(merge(band.top()), merge(band.bottom())))
        .collect();
    Ok(FenceDiagram::raw(f.strands() - 1, word))
}

pub fn can_deflate(f: &FenceDiagram, line: usize) -> bool {
    deflation_joint(f, line).is_ok()
}

/// Cyclic shift of the word.
pub fn twirl(f: &FenceDiagram, end: End) -> Result<FenceDiagram> {
    if f.is_empty() {
        return Err(Error::NotApplicable("twirl needs at least one band".into()));
    }
    let mut word = f.word().to_vec();
    match end {
        End::Front => word.rotate_left(1),
        End::Back => word.rotate_right(1),
    }
    Ok(FenceDiagram::raw(f.strands(), word))
}

/// Half-turn in the page: word reversed, lines flipped top to bottom.
pub fn turn(f: &FenceDiagram) -> FenceDiagram {
    let b = f.strands();
    let word = f
        .word()
        .iter()
        .rev()
        .map(|band| Band::raw(b + 1 - band.bottom(), b + 1 - band.top()))
        .collect();
    FenceDiagram::raw(b, word)
}

pub fn apply_move(f: &FenceDiagram, m: &Move) -> Result<FenceDiagram> {
    match m {
        Move::Inflate { line, after, split } => inflate(f, *line, *after, split),
        Move::Deflate { line } => deflate(f, *line),
        Move::Slip { at } => slip(f, *at),
        Move::Slide { at, target } => slide(f, *at, *target),
        Move::Twirl { end } => twirl(f, *end),
        Move::Turn => Ok(turn(f)),
    }
}

/// Replays a sequence of moves.
pub fn apply_path(f: &FenceDiagram, path: &[Move]) -> Result<FenceDiagram> {
    path.iter().try_fold(f.clone(), |g, m| apply_move(&g, m))
}

/// The move undoing `m` on `f`. Fails when `m` does not apply to `f`.
pub fn inverse_move(f: &FenceDiagram, m: &Move) -> Result<Move> {
    Ok(match m {
        Move::Inflate { line, .. } => {
            apply_move(f, m)?;
            Move::Deflate { line: *line }
        }
        Move::Deflate { line } => {
            let t0 = deflation_joint(f, *line)?;
            let merged = deflate(f, *line)?;
            // ends of the merged line that came from the lower line
            let split = merged
                .attachments(*line)
                .into_iter()
                .map(|t| {
                    let original = if t < t0 { t } else { t + 1 };
                    if f.word()[original].touches(line + 1) {
                        Side::Lower
                    } else {
                        Side::Upper
                    }
                })
                .collect();
            Move::Inflate {
                line: *line,
                after: t0,
                split: Split(split),
            }
        }
        Move::Slip { at } => {
            slip(f, *at)?;
            Move::Slip { at: *at }
        }
        Move::Slide { at, .. } => {
            apply_move(f, m)?;
            let word = f.word();
            let (form, _) = SlideForm::classify(word[at - 1], word[*at]).expect("slide applied");
            Move::Slide {
                at: *at,
                target: form,
            }
        }
        Move::Twirl { end } => {
            twirl(f, *end)?;
            Move::Twirl { end: end.opposite() }
        }
        Move::Turn => Move::Turn,
    })
}

/// Inflations kept finite: all ends up, all ends down, or a staircase cut,
/// with the joint placed next to an attachment of the split line.
pub fn bounded_inflations(f: &FenceDiagram) -> Vec<Move> {
    let mut out = Vec::new();
    for line in 1..=f.strands() {
        let ends = f.attachments(line);
        let n = ends.len();
        if n == 0 {
            out.push(Move::Inflate {
                line,
                after: 0,
                split: Split::default(),
            });
            continue;
        }
        let mut positions: Vec<usize> = ends.iter().flat_map(|&t| [t, t + 1]).collect();
        positions.dedup();
        for side in [Side::Upper, Side::Lower] {
            for &after in &positions {
                out.push(Move::Inflate {
                    line,
                    after,
                    split: Split::uniform(n, side),
                });
            }
        }
        for cut in 1..n {
            let mut afters = vec![ends[cut - 1] + 1, ends[cut]];
            afters.dedup();
            for after in afters {
                out.push(Move::Inflate {
                    line,
                    after,
                    split: Split::staircase(n, cut),
                });
            }
        }
    }
    out
}

/// Every primitive move that applies to `f`, inflations restricted as in
/// [`bounded_inflations`].
pub fn applicable_moves(f: &FenceDiagram) -> Vec<Move> {
    let mut out = Vec::new();
    let word = f.word();
    for at in 1..f.len() {
        if bands_commute(word[at - 1], word[at]) {
            out.push(Move::Slip { at });
        }
        if let Some((form, _)) = SlideForm::classify(word[at - 1], word[at]) {
            for target in SlideForm::ALL {
                if target != form {
                    out.push(Move::Slide { at, target });
                }
            }
        }
    }
    for line in 1..f.strands() {
        if can_deflate(f, line) {
            out.push(Move::Deflate { line });
        }
    }
    if !f.is_empty() {
        out.push(Move::Twirl { end: End::Front });
        out.push(Move::Twirl { end: End::Back });
    }
    out.push(Move::Turn);
    out.extend(bounded_inflations(f));
    out
}

/// Result of a composite move with the primitive moves that realise it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacroResult {
    pub diagram: FenceDiagram,
    pub trace: Vec<Move>,
}

fn cusp_corner_count(f: &FenceDiagram) -> Option<usize> {
    reduce(f).ok().map(|r| r.cusp_corners().count())
}

/// Inflation followed by a slide at the new joint, producing a zigzag:
/// line `line` is split with every end sent down, then the joint and its
/// right neighbour are slid into the first form whose reduction gains cusps.
pub fn macro_new_zigzag(f: &FenceDiagram, line: usize, after: usize) -> Result<MacroResult> {
    let n = f.attachments(line).len();
    let inflation = Move::Inflate {
        line,
        after,
        split: Split::uniform(n, Side::Lower),
    };
    let inflated = apply_move(f, &inflation)?;
    let at = after + 1;
    check_pair_index(&inflated, at)?;
    let word = inflated.word();
    let (form, _) = SlideForm::classify(word[at - 1], word[at])
        .ok_or_else(|| Error::NotApplicable("joint has no slide partner".into()))?;
    let before = cusp_corner_count(f).unwrap_or(0);
    for target in SlideForm::ALL.into_iter().filter(|t| *t != form) {
        let slide_move = Move::Slide { at, target };
        let result = apply_move(&inflated, &slide_move)?;
        if cusp_corner_count(&result).is_some_and(|c| c > before) {
            return Ok(MacroResult {
                diagram: result,
                trace: vec![inflation, slide_move],
            });
        }
    }
    Err(Error::NotApplicable("no slide at the joint adds a zigzag".into()))
}

/// Lines `line` and `line + 1` trade places.
fn swap_lines(f: &FenceDiagram, line: usize) -> FenceDiagram {
    let swap = |x: usize| {
        if x == line {
            line + 1
        } else if x == line + 1 {
            line
        } else {
            x
        }
    };
    let word = f
        .word()
        .iter()
        .map(|band| {
            let (a, b) = (swap(band.top()), swap(band.bottom()));
            Band::raw(a.min(b), a.max(b))
        })
        .collect();
    FenceDiagram::raw(f.strands(), word)
}

/// Maximum number of slides tried between the inflation and the deflation of
/// [`macro_height_exchange`].
pub const HEIGHT_EXCHANGE_SLIDES: usize = 4;

/// Exchanges the heights of lines `line` and `line + 1` by an inflation,
/// slides and a deflation. The sequence is found by a bounded search.
pub fn macro_height_exchange(f: &FenceDiagram, line: usize) -> Result<MacroResult> {
    if line == 0 || line >= f.strands() {
        return Err(Error::NotApplicable(format!("no line pair at {line}")));
    }
    if f.word().contains(&Band::raw(line, line + 1)) {
        return Err(Error::NotApplicable(format!(
            "lines {line} and {} are joined by a band",
            line + 1
        )));
    }
    let target = swap_lines(f, line);
    for inflation in bounded_inflations(f) {
        let start = apply_move(f, &inflation)?;
        let mut seen = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([(start, vec![inflation.clone()], 0usize)]);
        while let Some((g, trace, slides)) = queue.pop_front() {
            if slides > 0 {
                for k in 1..g.strands() {
                    if let Ok(h) = deflate(&g, k) {
                        if h == target {
                            let mut trace = trace.clone();
                            trace.push(Move::Deflate { line: k });
                            return Ok(MacroResult { diagram: h, trace });
                        }
                    }
                }
            }
            if slides == HEIGHT_EXCHANGE_SLIDES {
                continue;
            }
            for at in 1..g.len() {
                for t in SlideForm::ALL {
                    if let Ok(h) = slide(&g, at, t) {
                        if seen.insert(h.clone()) {
                            let mut next = trace.clone();
                            next.push(Move::Slide { at, target: t });
                            queue.push_back((h, next, slides + 1));
                        }
                    }
                }
            }
        }
    }
    Err(Error::NotApplicable(format!(
        "no inflation-slides-deflation sequence exchanges lines {line} and {}",
        line + 1
    )))
}

/// Exchanges two adjacent vertical edges: a single slip.
pub fn macro_vertical_exchange(f: &FenceDiagram, at: usize) -> Result<MacroResult> {
    let m = Move::Slip { at };
    Ok(MacroResult {
        diagram: apply_move(f, &m)?,
        trace: vec![m],
    })
}
