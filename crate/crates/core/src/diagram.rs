//! Band words, their braid expansion and the surface bookkeeping that goes
//! with them.
//!
//! Lines are numbered `1` (top) to `b` (bottom). A band `(i, j)` hangs from
//! line `i` down to line `j` and passes over every line strictly between.
//! Word order is drawing order: the first band is leftmost.

use std::fmt;

use crate::error::{Error, Result};

/// A positive band between lines `top < bottom`, the band generator
/// `(σ_top ⋯ σ_{bottom-2}) σ_{bottom-1} (σ_top ⋯ σ_{bottom-2})^{-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Band {
    top: usize,
    bottom: usize,
}

impl Band {
    pub fn new(top: usize, bottom: usize) -> Result<Self> {
        if top == 0 || top >= bottom {
            return Err(Error::BandRange {
                top,
                bottom,
                strands: bottom.max(top),
            });
        }
        Ok(Band { top, bottom })
    }

    /// Unchecked constructor for callers that already maintain `top < bottom`.
    pub(crate) fn raw(top: usize, bottom: usize) -> Self {
        debug_assert!(0 < top && top < bottom);
        Band { top, bottom }
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn touches(&self, line: usize) -> bool {
        self.top == line || self.bottom == line
    }

    /// The line at the other end of the band, if `line` is one of its ends.
    pub fn other_end(&self, line: usize) -> Option<usize> {
        if self.top == line {
            Some(self.bottom)
        } else if self.bottom == line {
            Some(self.top)
        } else {
            None
        }
    }

    /// True when the band passes over `line` without attaching to it.
    pub fn passes_over(&self, line: usize) -> bool {
        self.top < line && line < self.bottom
    }
}

impl fmt::Display for Band {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.top, self.bottom)
    }
}

/// `b` horizontal lines and an ordered word of positive bands.
///
/// Equality is syntactic: same strand count, same word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FenceDiagram {
    strands: usize,
    word: Vec<Band>,
}

impl FenceDiagram {
    pub fn new(strands: usize, word: Vec<Band>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::BandRange {
                top: 0,
                bottom: 0,
                strands,
            });
        }
        if let Some(bad) = word.iter().find(|band| band.bottom > strands) {
            return Err(Error::BandRange {
                top: bad.top,
                bottom: bad.bottom,
                strands,
            });
        }
        Ok(FenceDiagram { strands, word })
    }

    /// Builds a diagram from `(i, j)` pairs.
    pub fn from_pairs(strands: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let word = pairs
            .iter()
            .map(|&(i, j)| {
                if i == 0 || i >= j || j > strands {
                    Err(Error::BandRange {
                        top: i,
                        bottom: j,
                        strands,
                    })
                } else {
                    Ok(Band::raw(i, j))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        FenceDiagram::new(strands, word)
    }

    pub(crate) fn raw(strands: usize, word: Vec<Band>) -> Self {
        debug_assert!(word.iter().all(|b| b.bottom <= strands));
        FenceDiagram { strands, word }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[Band] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.word.iter().map(|b| (b.top, b.bottom)).collect()
    }

    /// Zero-based word indices of the bands attached to `line`, left to right.
    pub fn attachments(&self, line: usize) -> Vec<usize> {
        self.word
            .iter()
            .enumerate()
            .filter(|(_, band)| band.touches(line))
            .map(|(t, _)| t)
            .collect()
    }

    /// Braid word obtained by expanding every band generator.
    pub fn expand(&self) -> BraidWord {
        let mut letters = Vec::new();
        for band in &self.word {
            let (i, j) = (band.top, band.bottom);
            letters.extend((i..j - 1).map(Letter::pos));
            letters.push(Letter::pos(j - 1));
            letters.extend((i..j - 1).rev().map(Letter::neg));
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Product of the transpositions `(i j)`, leftmost band acting first.
    pub fn closure_permutation(&self) -> Permutation {
        let mut perm = Permutation::identity(self.strands);
        for band in &self.word {
            perm.then_transpose(band.top, band.bottom);
        }
        perm
    }

    /// True when the graph on lines with one edge per band is connected.
    pub fn is_connected(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.strands).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut joins = 0;
        for band in &self.word {
            let a = find(&mut parent, band.top - 1);
            let b = find(&mut parent, band.bottom - 1);
            if a != b {
                parent[a] = b;
                joins += 1;
            }
        }
        joins + 1 == self.strands
    }

    pub fn surface_summary(&self) -> SurfaceSummary {
        SurfaceSummary {
            euler_characteristic: self.strands as i64 - self.word.len() as i64,
            boundary_components: self.closure_permutation().cycle_count(),
            connected: self.is_connected(),
        }
    }

    /// Connected, Euler characteristic zero and two boundary components.
    pub fn is_quasipositive_annulus(&self) -> bool {
        self.surface_summary().is_annulus()
    }
}

impl fmt::Display for FenceDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b={} [", self.strands)?;
        for (n, band) in self.word.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{band}")?;
        }
        f.write_str("]")
    }
}

/// Euler characteristic, boundary count and connectivity of the
/// disk-and-band surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceSummary {
    pub euler_characteristic: i64,
    pub boundary_components: usize,
    pub connected: bool,
}

impl SurfaceSummary {
    pub fn is_annulus(&self) -> bool {
        self.connected && self.euler_characteristic == 0 && self.boundary_components == 2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// Artin letter `σ_index^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn pos(index: usize) -> Self {
        Letter {
            index,
            sign: Sign::Pos,
        }
    }

    pub fn neg(index: usize) -> Self {
        Letter {
            index,
            sign: Sign::Neg,
        }
    }

    pub fn inverse(self) -> Self {
        Letter {
            index: self.index,
            sign: self.sign.flip(),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "s{}", self.index),
            Sign::Neg => write!(f, "S{}", self.index),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if let Some(bad) = letters
            .iter()
            .find(|l| l.index == 0 || l.index >= strands)
        {
            return Err(Error::LetterRange {
                index: bad.index,
                strands,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.sign.value()).sum()
    }

    /// A word with the same closure and writhe: inverse pairs separated only
    /// by commuting letters are cancelled, also around the closure.
    pub fn reduced(&self) -> BraidWord {
        let mut letters = cancel_pairs(&self.letters);
        let mut stable = 0;
        while stable < letters.len() {
            letters.rotate_left(1);
            let next = cancel_pairs(&letters);
            if next.len() < letters.len() {
                stable = 0;
            } else {
                stable += 1;
            }
            letters = next;
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Each `σ_k` acting as the transposition `(k k+1)`, in word order.
    pub fn closure_permutation(&self) -> Permutation {
        let mut perm = Permutation::identity(self.strands);
        for letter in &self.letters {
            perm.then_transpose(letter.index, letter.index + 1);
        }
        perm
    }

    /// Component label of the strand starting at each position, found by
    /// following strands around the closure. Returns the labels and the
    /// number of components.
    pub fn trace_components(&self) -> (Vec<usize>, usize) {
        // occupant[p] = starting position of the strand now at position p
        let mut occupant: Vec<usize> = (0..self.strands).collect();
        for letter in &self.letters {
            occupant.swap(letter.index - 1, letter.index);
        }
        let mut next = vec![0; self.strands];
        for (end, &start) in occupant.iter().enumerate() {
            next[start] = end;
        }
        let mut label = vec![usize::MAX; self.strands];
        let mut count = 0;
        for s in 0..self.strands {
            if label[s] != usize::MAX {
                continue;
            }
            let mut x = s;
            while label[x] == usize::MAX {
                label[x] = count;
                x = next[x];
            }
            count += 1;
        }
        (label, count)
    }
}

fn cancel_pairs(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    'next: for &letter in letters {
        for j in (0..out.len()).rev() {
            let prev = out[j];
            if prev == letter.inverse() {
                out.remove(j);
                continue 'next;
            }
            if prev.index.abs_diff(letter.index) < 2 {
                break;
            }
        }
        out.push(letter);
    }
    out
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, l) in self.letters.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Permutation of `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        Permutation { images }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(n, &x)| x == n + 1)
    }

    /// Post-composes with the transposition `(a b)`.
    fn then_transpose(&mut self, a: usize, b: usize) {
        for x in self.images.iter_mut() {
            if *x == a {
                *x = b;
            } else if *x == b {
                *x = a;
            }
        }
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 1..=self.images.len() {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x - 1] {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }
}
