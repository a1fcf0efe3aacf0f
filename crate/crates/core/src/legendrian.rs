//! Reduced fence diagrams as rectilinear fronts, and their Legendrian
//! invariants.
//!
//! Geometry uses integer coordinates: `x` is a 1-based word position and
//! `y` a 1-based line index, growing downward. Bands are drawn over lines.

use std::collections::HashMap;
use std::fmt;

use crate::diagram::{Band, FenceDiagram};
use crate::error::{Error, Result};
use crate::moves::{can_deflate, deflate};
use crate::oracles::{crossing_sign, normalized_curve_bracket, CrossingVisit, Heading};

/// Shape of a line end, named by the quadrant the corner occupies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CornerShape {
    /// `┌`: line runs east, band runs south.
    LT,
    /// `┐`: line runs west, band runs south.
    RT,
    /// `┘`: line runs west, band runs north.
    RB,
    /// `└`: line runs east, band runs north.
    LB,
}

impl CornerShape {
    fn of(left_end: bool, band_south: bool) -> CornerShape {
        match (left_end, band_south) {
            (true, true) => CornerShape::LT,
            (false, true) => CornerShape::RT,
            (false, false) => CornerShape::RB,
            (true, false) => CornerShape::LB,
        }
    }

    /// LT and RB corners are the cusps of the front.
    pub fn is_cusp(self) -> bool {
        matches!(self, CornerShape::LT | CornerShape::RB)
    }

    pub fn glyph(self) -> char {
        match self {
            CornerShape::LT => '┌',
            CornerShape::RT => '┐',
            CornerShape::RB => '┘',
            CornerShape::LB => '└',
        }
    }
}

impl fmt::Display for CornerShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CornerShape::LT => "LT",
            CornerShape::RT => "RT",
            CornerShape::RB => "RB",
            CornerShape::LB => "LB",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Corner {
    pub line: usize,
    pub position: usize,
    pub shape: CornerShape,
}

/// A truncated line, spanning `from..=to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HorizontalSegment {
    pub line: usize,
    pub from: usize,
    pub to: usize,
}

/// A band, spanning lines `top..=bottom` at one position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VerticalSegment {
    pub position: usize,
    pub top: usize,
    pub bottom: usize,
}

/// A band passing over the interior of a truncated line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    pub position: usize,
    pub line: usize,
    /// Index into [`ReducedDiagram::verticals`].
    pub vertical: usize,
    /// Index into [`ReducedDiagram::horizontals`].
    pub horizontal: usize,
}

/// An interior band end on a line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub line: usize,
    pub position: usize,
}

/// The rectilinear diagram left after exhaustive deflation, leaf pruning
/// and truncation of every line to its extreme band ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedDiagram {
    core: FenceDiagram,
    horizontals: Vec<HorizontalSegment>,
    verticals: Vec<VerticalSegment>,
    corners: Vec<Corner>,
    crossings: Vec<Crossing>,
    trivalent_vertices: Vec<Vertex>,
}

/// Deletes line `line`, which carries exactly one band end, with its band.
fn prune_leaf(f: &FenceDiagram, line: usize) -> FenceDiagram {
    let shift = |x: usize| if x > line { x - 1 } else { x };
    let word = f
        .word()
        .iter()
        .filter(|b| !b.touches(line))
        .map(|b| Band::raw(shift(b.top()), shift(b.bottom())))
        .collect();
    FenceDiagram::raw(f.strands() - 1, word)
}

/// One reduction step: the leftmost deflation, else the topmost leaf line.
fn reduction_step(f: &FenceDiagram) -> Option<FenceDiagram> {
    if let Some(line) = (1..f.strands()).find(|&k| can_deflate(f, k)) {
        return deflate(f, line).ok();
    }
    (1..=f.strands())
        .find(|&k| f.attachments(k).len() == 1)
        .map(|k| prune_leaf(f, k))
}

/// The fence diagram underlying the reduction of `f`.
pub fn reduced_core(f: &FenceDiagram) -> Result<FenceDiagram> {
    if !f.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut g = f.clone();
    while let Some(h) = reduction_step(&g) {
        g = h;
    }
    Ok(g)
}

/// Reduces a connected diagram. A disk reduces to the empty diagram.
pub fn reduce(f: &FenceDiagram) -> Result<ReducedDiagram> {
    Ok(ReducedDiagram::from_core(reduced_core(f)?))
}

impl ReducedDiagram {
    /// Builds the geometry of a fence diagram read without further reduction.
    pub fn from_core(core: FenceDiagram) -> ReducedDiagram {
        let word = core.word();
        let mut horizontals = Vec::new();
        let mut corners = Vec::new();
        let mut trivalent_vertices = Vec::new();
        let mut line_segment = HashMap::new();
        for line in 1..=core.strands() {
            let ends = core.attachments(line);
            let (Some(&first), Some(&last)) = (ends.first(), ends.last()) else {
                continue;
            };
            line_segment.insert(line, horizontals.len());
            horizontals.push(HorizontalSegment {
                line,
                from: first + 1,
                to: last + 1,
            });
            for (n, &t) in ends.iter().enumerate() {
                let band = word[t];
                let south = band.other_end(line).is_some_and(|o| o > line);
                if n == 0 {
                    corners.push(Corner {
                        line,
                        position: t + 1,
                        shape: CornerShape::of(true, south),
                    });
                }
                if n + 1 == ends.len() {
                    corners.push(Corner {
                        line,
                        position: t + 1,
                        shape: CornerShape::of(false, south),
                    });
                }
                if n != 0 && n + 1 != ends.len() {
                    trivalent_vertices.push(Vertex {
                        line,
                        position: t + 1,
                    });
                }
            }
        }
        let verticals: Vec<VerticalSegment> = word
            .iter()
            .enumerate()
            .map(|(t, b)| VerticalSegment {
                position: t + 1,
                top: b.top(),
                bottom: b.bottom(),
            })
            .collect();
        let mut crossings = Vec::new();
        for (v, vertical) in verticals.iter().enumerate() {
            for line in vertical.top + 1..vertical.bottom {
                if let Some(&h) = line_segment.get(&line) {
                    let seg = horizontals[h];
                    if seg.from < vertical.position && vertical.position < seg.to {
                        crossings.push(Crossing {
                            position: vertical.position,
                            line,
                            vertical: v,
                            horizontal: h,
                        });
                    }
                }
            }
        }
        corners.sort();
        ReducedDiagram {
            core,
            horizontals,
            verticals,
            corners,
            crossings,
            trivalent_vertices,
        }
    }

    pub fn core(&self) -> &FenceDiagram {
        &self.core
    }

    pub fn horizontals(&self) -> &[HorizontalSegment] {
        &self.horizontals
    }

    pub fn verticals(&self) -> &[VerticalSegment] {
        &self.verticals
    }

    /// Corners sorted by line, then position.
    pub fn corners(&self) -> &[Corner] {
        &self.corners
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn trivalent_vertices(&self) -> &[Vertex] {
        &self.trivalent_vertices
    }

    pub fn cusp_corners(&self) -> impl Iterator<Item = &Corner> + '_ {
        self.corners.iter().filter(|c| c.shape.is_cusp())
    }

    /// Connected pieces of the drawing: 0 when empty, else 1.
    pub fn component_count(&self) -> usize {
        usize::from(!self.verticals.is_empty())
    }

    pub fn is_empty(&self) -> bool {
        self.verticals.is_empty()
    }

    /// A single closed curve: every line carries exactly two band ends.
    pub fn is_closed_curve(&self) -> bool {
        !self.is_empty()
            && (1..=self.core.strands()).all(|k| self.core.attachments(k).len() == 2)
    }

    fn corner_at(&self, line: usize, position: usize) -> Option<CornerShape> {
        self.corners
            .iter()
            .find(|c| c.line == line && c.position == position)
            .map(|c| c.shape)
    }

    /// The closed curve traversed from the left end of line 1, eastward.
    pub fn walk(&self) -> Result<Vec<PathSegment>> {
        if !self.is_closed_curve() {
            return Err(Error::NotAnnulus);
        }
        let extent = |line: usize| self.horizontals[line - 1];
        let start = (1, extent(1).from);
        let (mut line, mut x, mut east) = (1, extent(1).from, true);
        let mut path = Vec::new();
        loop {
            let seg = extent(line);
            let next = if east { seg.to } else { seg.from };
            path.push(PathSegment::Horizontal {
                line,
                from: x,
                to: next,
            });
            let band = self.core.word()[next - 1];
            let other = band.other_end(line).expect("band touches its line");
            path.push(PathSegment::Vertical {
                position: next,
                from: line,
                to: other,
            });
            line = other;
            let seg = extent(line);
            east = next == seg.from;
            x = next;
            if (line, x) == start {
                return Ok(path);
            }
        }
    }

    /// The closed curve as a front, or `None` unless it is a closed curve.
    pub fn to_front(&self) -> Option<RectilinearFront> {
        let path = self.walk().ok()?;
        let segments = path
            .into_iter()
            .map(|s| match s {
                PathSegment::Horizontal { line, from, to } => FrontSegment::Horizontal {
                    y: line as i64,
                    x1: from as i64,
                    x2: to as i64,
                },
                PathSegment::Vertical { position, from, to } => FrontSegment::Vertical {
                    x: position as i64,
                    y1: from as i64,
                    y2: to as i64,
                },
            })
            .collect();
        Some(RectilinearFront { segments })
    }

    /// Crossing visits of the oriented closed curve, verticals over.
    pub fn crossing_visits(&self) -> Result<Vec<CrossingVisit>> {
        let path = self.walk()?;
        let index: HashMap<(usize, usize), usize> = self
            .crossings
            .iter()
            .enumerate()
            .map(|(n, c)| ((c.line, c.position), n))
            .collect();
        let mut visits = Vec::new();
        for seg in path {
            let heading = seg.heading();
            match seg {
                PathSegment::Horizontal { line, from, to } => {
                    let mut hits: Vec<_> = self
                        .crossings
                        .iter()
                        .filter(|c| c.line == line)
                        .map(|c| c.position)
                        .collect();
                    hits.sort_unstable();
                    if to < from {
                        hits.reverse();
                    }
                    for x in hits {
                        visits.push(CrossingVisit {
                            crossing: index[&(line, x)],
                            over: false,
                            heading,
                        });
                    }
                }
                PathSegment::Vertical { position, from, to } => {
                    let mut hits: Vec<_> = self
                        .crossings
                        .iter()
                        .filter(|c| c.position == position)
                        .map(|c| c.line)
                        .collect();
                    hits.sort_unstable();
                    if to < from {
                        hits.reverse();
                    }
                    for y in hits {
                        visits.push(CrossingVisit {
                            crossing: index[&(y, position)],
                            over: true,
                            heading,
                        });
                    }
                }
            }
        }
        Ok(visits)
    }
}

/// A step of the oriented closed curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathSegment {
    Horizontal { line: usize, from: usize, to: usize },
    Vertical { position: usize, from: usize, to: usize },
}

impl PathSegment {
    pub fn heading(&self) -> Heading {
        match *self {
            PathSegment::Horizontal { from, to, .. } if to > from => Heading::East,
            PathSegment::Horizontal { .. } => Heading::West,
            PathSegment::Vertical { from, to, .. } if to > from => Heading::South,
            PathSegment::Vertical { .. } => Heading::North,
        }
    }
}

/// Legendrian invariants of the reduced front of an annulus diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LegendrianInvariants {
    pub tb: i64,
    pub rot: i64,
    pub rot_abs: i64,
    pub p: usize,
    pub n: usize,
    pub r_c: usize,
    pub d_c: usize,
    pub u_c: usize,
}

impl fmt::Display for LegendrianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "tb={} rot={} rot_abs={} p={} n={} r_c={} d_c={} u_c={}",
            self.tb, self.rot, self.rot_abs, self.p, self.n, self.r_c, self.d_c, self.u_c
        )
    }
}

/// Invariants for the canonical orientation (top line eastward).
pub fn legendrian_invariants(f: &FenceDiagram) -> Result<LegendrianInvariants> {
    legendrian_invariants_oriented(f, false)
}

/// Invariants with the canonical orientation, or its reverse.
pub fn legendrian_invariants_oriented(
    f: &FenceDiagram,
    reversed: bool,
) -> Result<LegendrianInvariants> {
    if !f.is_quasipositive_annulus() {
        return Err(Error::NotAnnulus);
    }
    invariants_of(&reduce(f)?, reversed)
}

/// Invariants of a reduced closed curve.
pub fn invariants_of(r: &ReducedDiagram, reversed: bool) -> Result<LegendrianInvariants> {
    let path = r.walk()?;
    let orient = |h: Heading| if reversed { h.opposite() } else { h };
    let mut heading_of_line = HashMap::new();
    let mut heading_of_band = HashMap::new();
    let (mut d_c, mut u_c) = (0, 0);
    for seg in &path {
        let heading = orient(seg.heading());
        match *seg {
            PathSegment::Horizontal { line, .. } => {
                heading_of_line.insert(line, heading);
            }
            PathSegment::Vertical { position, from, to } => {
                heading_of_band.insert(position, heading);
                for line in [from, to] {
                    if r.corner_at(line, position).is_some_and(CornerShape::is_cusp) {
                        if heading == Heading::South {
                            d_c += 1;
                        } else {
                            u_c += 1;
                        }
                    }
                }
            }
        }
    }
    let (mut p, mut n) = (0, 0);
    for c in r.crossings() {
        match crossing_sign(heading_of_band[&c.position], heading_of_line[&c.line]) {
            1 => p += 1,
            _ => n += 1,
        }
    }
    let r_c = r
        .corners()
        .iter()
        .filter(|c| c.shape == CornerShape::RB)
        .count();
    debug_assert_eq!((d_c + u_c) % 2, 0);
    let rot = (d_c as i64 - u_c as i64) / 2;
    Ok(LegendrianInvariants {
        tb: p as i64 - n as i64 - r_c as i64,
        rot,
        rot_abs: rot.abs(),
        p,
        n,
        r_c,
        d_c,
        u_c,
    })
}

/// Writhe-normalised bracket of the core curve of an annulus diagram,
/// read with bands over lines. Equals 1 when the core is unknotted.
pub fn core_bracket(f: &FenceDiagram, crossing_bound: usize) -> Result<crate::Bracket> {
    if !f.is_quasipositive_annulus() {
        return Err(Error::NotAnnulus);
    }
    normalized_curve_bracket(&reduce(f)?.crossing_visits()?, crossing_bound)
}

/// Whether the closed curve of `r` has trivial normalised bracket. Curves
/// with fewer than three crossings are unknots outright.
pub fn has_trivial_core(r: &ReducedDiagram) -> Result<bool> {
    if r.crossings().len() < 3 {
        return Ok(r.is_closed_curve());
    }
    let visits = r.crossing_visits()?;
    Ok(normalized_curve_bracket(&visits, visits.len())? == crate::Bracket::one())
}

/// An axis-parallel segment of a front, traversed from its first to its
/// second coordinate. `y` grows downward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FrontSegment {
    Horizontal { y: i64, x1: i64, x2: i64 },
    Vertical { x: i64, y1: i64, y2: i64 },
}

impl FrontSegment {
    fn endpoints(&self) -> [(i64, i64); 2] {
        match *self {
            FrontSegment::Horizontal { y, x1, x2 } => [(x1, y), (x2, y)],
            FrontSegment::Vertical { x, y1, y2 } => [(x, y1), (x, y2)],
        }
    }

    fn is_horizontal(&self) -> bool {
        matches!(self, FrontSegment::Horizontal { .. })
    }
}

/// A closed rectilinear curve given as a cyclic list of segments.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RectilinearFront {
    pub segments: Vec<FrontSegment>,
}

impl RectilinearFront {
    pub fn new(segments: Vec<FrontSegment>) -> RectilinearFront {
        RectilinearFront { segments }
    }

    /// Checks alternation, closure, distinct heights and abscissae.
    pub fn validate(&self) -> Result<()> {
        let segs = &self.segments;
        let invalid = |m: String| Err(Error::InvalidFront(m));
        if segs.len() < 4 || segs.len() % 2 == 1 {
            return invalid(format!("{} segments cannot close up", segs.len()));
        }
        for (n, s) in segs.iter().enumerate() {
            let [a, b] = s.endpoints();
            if a == b {
                return invalid(format!("segment {} has zero length", n + 1));
            }
            let next = &segs[(n + 1) % segs.len()];
            if s.is_horizontal() == next.is_horizontal() {
                return invalid(format!("segments {} and {} are parallel", n + 1, n + 2));
            }
        }
        // each segment meets its successor at one end and its predecessor at the other
        let len = segs.len();
        for n in 0..len {
            let prev = segs[(n + len - 1) % len].endpoints();
            let next = segs[(n + 1) % len].endpoints();
            let ends = segs[n].endpoints();
            let meets = |e: (i64, i64), other: &[(i64, i64); 2]| other.contains(&e);
            let forward = meets(ends[0], &prev) && meets(ends[1], &next);
            let backward = meets(ends[1], &prev) && meets(ends[0], &next);
            if !forward && !backward {
                return invalid(format!("segment {} is not joined to its neighbours", n + 1));
            }
        }
        let mut heights: Vec<i64> = Vec::new();
        let mut abscissae: Vec<i64> = Vec::new();
        for s in segs {
            match *s {
                FrontSegment::Horizontal { y, .. } => heights.push(y),
                FrontSegment::Vertical { x, .. } => abscissae.push(x),
            }
        }
        for (name, mut values) in [("height", heights), ("abscissa", abscissae)] {
            values.sort_unstable();
            if let Some(w) = values.windows(2).find(|w| w[0] == w[1]) {
                return invalid(format!("two segments share the {name} {}", w[0]));
            }
        }
        Ok(())
    }
}

/// Fence diagram approximating a front: one line per horizontal segment,
/// top to bottom, one band per vertical segment, left to right.
pub fn fence_from_front(w: &RectilinearFront) -> Result<FenceDiagram> {
    w.validate()?;
    let mut heights: Vec<i64> = Vec::new();
    let mut verticals: Vec<(i64, i64, i64)> = Vec::new();
    for s in &w.segments {
        match *s {
            FrontSegment::Horizontal { y, .. } => heights.push(y),
            FrontSegment::Vertical { x, y1, y2 } => verticals.push((x, y1, y2)),
        }
    }
    heights.sort_unstable();
    verticals.sort_unstable();
    let line_of = |y: i64| -> Result<usize> {
        heights
            .binary_search(&y)
            .map(|i| i + 1)
            .map_err(|_| Error::InvalidFront(format!("no horizontal segment at height {y}")))
    };
    let word = verticals
        .into_iter()
        .map(|(_, y1, y2)| {
            let (a, b) = (line_of(y1)?, line_of(y2)?);
            Band::new(a.min(b), a.max(b))
        })
        .collect::<Result<Vec<_>>>()?;
    FenceDiagram::new(heights.len(), word)
}

/// A cusp mark replacing an LT or RB corner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CuspMark {
    pub line: usize,
    pub position: usize,
    pub shape: CornerShape,
}

/// Drawing instructions for a cusped reduced diagram.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CuspedRenderData {
    pub horizontals: Vec<HorizontalSegment>,
    pub verticals: Vec<VerticalSegment>,
    /// RT and LB corners, drawn as plain corners.
    pub corners: Vec<Corner>,
    pub cusps: Vec<CuspMark>,
    pub crossings: Vec<Crossing>,
}

pub fn cusped_render_data(r: &ReducedDiagram) -> CuspedRenderData {
    if r.is_empty() {
        return CuspedRenderData::default();
    }
    let (cusps, corners): (Vec<Corner>, Vec<Corner>) =
        r.corners().iter().partition(|c| c.shape.is_cusp());
    CuspedRenderData {
        horizontals: r.horizontals().to_vec(),
        verticals: r.verticals().to_vec(),
        corners,
        cusps: cusps
            .into_iter()
            .map(|c| CuspMark {
                line: c.line,
                position: c.position,
                shape: c.shape,
            })
            .collect(),
        crossings: r.crossings().to_vec(),
    }
}
