//! Brute-force checks that do not go through the Legendrian machinery:
//! linking numbers from strand tracing, Kauffman bracket state sums, and a
//! consistency gate comparing a diagram with its image under a move.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::diagram::{BraidWord, FenceDiagram};
use crate::error::{Error, Result};
use crate::moves::{apply_move, Move};

/// Default crossing bound for the bracket state sum (2^16 states).
pub const DEFAULT_CROSSING_BOUND: usize = 16;

/// Laurent polynomial in one variable `A`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial<C> {
    terms: BTreeMap<i64, C>,
}

impl<C> LaurentPolynomial<C>
where
    C: Clone + Zero + One + PartialEq,
{
    pub fn zero() -> Self {
        LaurentPolynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0)
    }

    pub fn monomial(coefficient: C, exponent: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(exponent, coefficient);
        }
        LaurentPolynomial { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exponent: i64, coefficient: C) {
        if coefficient.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_insert_with(C::zero);
        *slot = slot.clone() + coefficient;
        if slot.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn coefficient(&self, exponent: i64) -> C {
        self.terms.get(&exponent).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl<C> Zero for LaurentPolynomial<C>
where
    C: Clone + Zero + One + PartialEq,
{
    fn zero() -> Self {
        LaurentPolynomial::zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C> Add for LaurentPolynomial<C>
where
    C: Clone + Zero + One + PartialEq,
{
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<C> Neg for LaurentPolynomial<C>
where
    C: Clone + Zero + One + PartialEq + Neg<Output = C>,
{
    type Output = Self;

    fn neg(self) -> Self {
        LaurentPolynomial {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<C> Sub for LaurentPolynomial<C>
where
    C: Clone + Zero + One + PartialEq + Neg<Output = C>,
{
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C> Mul for &LaurentPolynomial<C>
where
    C: Clone + Zero + One + PartialEq,
{
    type Output = LaurentPolynomial<C>;

    fn mul(self, rhs: Self) -> LaurentPolynomial<C> {
        let mut out = LaurentPolynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C> Mul for LaurentPolynomial<C>
where
    C: Clone + Zero + One + PartialEq,
{
    type Output = LaurentPolynomial<C>;

    fn mul(self, rhs: Self) -> LaurentPolynomial<C> {
        &self * &rhs
    }
}

impl<C> fmt::Display for LaurentPolynomial<C>
where
    C: Clone + Zero + One + PartialEq + PartialOrd + Neg<Output = C> + fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // highest exponent first
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = *c < C::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = magnitude == C::one();
            match *e {
                0 => write!(f, "{magnitude}")?,
                1 if unit => f.write_str("A")?,
                1 => write!(f, "{magnitude}A")?,
                _ if unit => write!(f, "A^{e}")?,
                _ => write!(f, "{magnitude}A^{e}")?,
            }
        }
        Ok(())
    }
}

/// The loop value `-A^2 - A^-2`.
pub fn loop_value() -> crate::Bracket {
    LaurentPolynomial::from_terms([(2, -1), (-2, -1)])
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra as usize] = rb;
        true
    }
}

/// Assembles `Σ A^{exponent} δ^{loops-1}` from a histogram keyed by
/// `(exponent, loops)`.
fn assemble(histogram: &BTreeMap<(i64, usize), i64>) -> crate::Bracket {
    let delta = loop_value();
    let mut powers: Vec<crate::Bracket> = vec![LaurentPolynomial::one()];
    let mut out = LaurentPolynomial::zero();
    for (&(exponent, loops), &count) in histogram {
        while powers.len() < loops {
            let next = powers.last().unwrap() * &delta;
            powers.push(next);
        }
        out = out + &LaurentPolynomial::monomial(count, exponent) * &powers[loops - 1];
    }
    out
}

/// Kauffman bracket of the closure of `word`, by full state enumeration.
///
/// A crossing `σ_k^{ε}` contributes `A^{ε}` when smoothed to the identity and
/// `A^{-ε}` when smoothed to a cup-cap. Each closed loop beyond the first
/// carries `-A^2 - A^-2`.
pub fn kauffman_bracket(word: &BraidWord, crossing_bound: usize) -> Result<crate::Bracket> {
    let n = word.len();
    if n > crossing_bound || n > 30 {
        return Err(Error::TooLarge {
            crossings: n,
            bound: crossing_bound.min(30),
        });
    }
    let b = word.strands();
    if n == 0 {
        return Ok(loop_value().pow(b.saturating_sub(1) as u32));
    }
    let letters = word.letters();
    let node = |level: usize, p: usize| -> u32 { ((level % n) * b + p) as u32 };
    let count_state = |state: u32| -> (i64, usize) {
        let mut uf = UnionFind::new(n * b);
        let mut exponent = 0i64;
        let mut merges = 0usize;
        for (level, letter) in letters.iter().enumerate() {
            let k = letter.index - 1;
            let eps = letter.sign.value();
            for p in 0..b {
                if p != k && p != k + 1 && uf.union(node(level, p), node(level + 1, p)) {
                    merges += 1;
                }
            }
            if state >> level & 1 == 1 {
                exponent += eps;
                merges += uf.union(node(level, k), node(level + 1, k)) as usize;
                merges += uf.union(node(level, k + 1), node(level + 1, k + 1)) as usize;
            } else {
                exponent -= eps;
                merges += uf.union(node(level, k), node(level, k + 1)) as usize;
                merges += uf.union(node(level + 1, k), node(level + 1, k + 1)) as usize;
            }
        }
        (exponent, n * b - merges)
    };
    let total: u32 = 1 << n;
    let tally = |mut acc: BTreeMap<(i64, usize), i64>, state: u32| {
        *acc.entry(count_state(state)).or_insert(0) += 1;
        acc
    };
    let histogram = if n < 12 {
        (0..total).fold(BTreeMap::new(), tally)
    } else {
        (0..total)
            .into_par_iter()
            .with_min_len(1 << 10)
            .fold(BTreeMap::new, tally)
            .reduce(BTreeMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_insert(0) += v;
                }
                a
            })
    };
    Ok(assemble(&histogram))
}

/// `(-A^3)^{-writhe}` times the bracket: an invariant of the oriented
/// closure. Evaluated on [`BraidWord::reduced`]; the crossing bound applies
/// to the reduced word.
pub fn normalized_bracket(word: &BraidWord, crossing_bound: usize) -> Result<crate::Bracket> {
    let word = word.reduced();
    let bracket = kauffman_bracket(&word, crossing_bound)?;
    Ok(&bracket * &writhe_factor(word.writhe()))
}

fn writhe_factor(writhe: i64) -> crate::Bracket {
    let coefficient = if writhe.rem_euclid(2) == 0 { 1 } else { -1 };
    LaurentPolynomial::monomial(coefficient, -3 * writhe)
}

/// Linking number of the two boundary components of an annulus diagram,
/// from the crossings of its expanded closed braid.
pub fn linking_number(f: &FenceDiagram) -> Result<i64> {
    if !f.is_quasipositive_annulus() {
        return Err(Error::NotAnnulus);
    }
    Ok(braid_linking_number(&f.expand()))
}

/// Half the signed count of crossings between strands of different
/// components. Meaningful for two-component closures.
pub fn braid_linking_number(word: &BraidWord) -> i64 {
    let (label, _) = word.trace_components();
    let mut occupant: Vec<usize> = (0..word.strands()).collect();
    let mut total = 0;
    for letter in word.letters() {
        let (a, b) = (occupant[letter.index - 1], occupant[letter.index]);
        if label[a] != label[b] {
            total += letter.sign.value();
        }
        occupant.swap(letter.index - 1, letter.index);
    }
    debug_assert_eq!(total % 2, 0);
    total / 2
}

/// Compass heading used to describe crossing visits of a planar curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Heading {
    North,
    East,
    South,
    West,
}

impl Heading {
    fn vector(self) -> (i64, i64) {
        match self {
            Heading::North => (0, 1),
            Heading::East => (1, 0),
            Heading::South => (0, -1),
            Heading::West => (-1, 0),
        }
    }

    pub fn opposite(self) -> Heading {
        match self {
            Heading::North => Heading::South,
            Heading::East => Heading::West,
            Heading::South => Heading::North,
            Heading::West => Heading::East,
        }
    }

    pub fn clockwise(self) -> Heading {
        match self {
            Heading::North => Heading::East,
            Heading::East => Heading::South,
            Heading::South => Heading::West,
            Heading::West => Heading::North,
        }
    }

    fn slot(self) -> usize {
        self as usize
    }
}

/// One passage of a closed planar curve through a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingVisit {
    pub crossing: usize,
    pub over: bool,
    pub heading: Heading,
}

/// Sign of a crossing from the headings of its over and under strands.
pub fn crossing_sign(over: Heading, under: Heading) -> i64 {
    let (ox, oy) = over.vector();
    let (ux, uy) = under.vector();
    (ox * uy - oy * ux).signum()
}

/// Bracket of a one-component curve diagram given by the cyclic sequence of
/// its crossing visits (each crossing visited once over, once under).
pub fn curve_bracket(visits: &[CrossingVisit], crossing_bound: usize) -> Result<crate::Bracket> {
    let crossings = visits.len() / 2;
    if crossings > crossing_bound || crossings > 30 {
        return Err(Error::TooLarge {
            crossings,
            bound: crossing_bound.min(30),
        });
    }
    if crossings == 0 {
        return Ok(LaurentPolynomial::one());
    }
    let v = visits.len();
    // ends[crossing][compass slot] = arc-end node; arc a has start 2a, end 2a+1
    let mut ends = vec![[u32::MAX; 4]; crossings];
    let mut over_heading = vec![Heading::North; crossings];
    for (n, visit) in visits.iter().enumerate() {
        let incoming = (((n + v - 1) % v) * 2 + 1) as u32;
        let outgoing = (n * 2) as u32;
        ends[visit.crossing][visit.heading.opposite().slot()] = incoming;
        ends[visit.crossing][visit.heading.slot()] = outgoing;
        if visit.over {
            over_heading[visit.crossing] = visit.heading;
        }
    }
    let mut histogram = BTreeMap::new();
    for state in 0u64..(1 << crossings) {
        let mut uf = UnionFind::new(2 * v);
        let mut comps = 2 * v;
        for a in 0..v {
            comps -= uf.union(2 * a as u32, 2 * a as u32 + 1) as usize;
        }
        let mut exponent = 0;
        for (c, slots) in ends.iter().enumerate() {
            let o = over_heading[c];
            let a_smoothing = state >> c & 1 == 1;
            let (p, q) = if a_smoothing {
                exponent += 1;
                ((o, o.clockwise()), (o.opposite(), o.opposite().clockwise()))
            } else {
                exponent -= 1;
                let ccw = |h: Heading| h.clockwise().opposite();
                ((o, ccw(o)), (o.opposite(), ccw(o.opposite())))
            };
            comps -= uf.union(slots[p.0.slot()], slots[p.1.slot()]) as usize;
            comps -= uf.union(slots[q.0.slot()], slots[q.1.slot()]) as usize;
        }
        *histogram.entry((exponent, comps)).or_insert(0) += 1;
    }
    Ok(assemble(&histogram))
}

/// Writhe-normalised curve bracket; equals 1 for any diagram of the unknot.
pub fn normalized_curve_bracket(
    visits: &[CrossingVisit],
    crossing_bound: usize,
) -> Result<crate::Bracket> {
    let bracket = curve_bracket(visits, crossing_bound)?;
    let mut writhe = 0;
    for c in 0..visits.len() / 2 {
        let over = visits.iter().find(|x| x.crossing == c && x.over);
        let under = visits.iter().find(|x| x.crossing == c && !x.over);
        if let (Some(o), Some(u)) = (over, under) {
            writhe += crossing_sign(o.heading, u.heading);
        }
    }
    Ok(&bracket * &writhe_factor(writhe))
}

/// Quantity compared by the consistency gate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateCheck {
    EulerCharacteristic,
    BoundaryComponents,
    Connectedness,
    Bracket,
    LinkingNumber,
}

impl fmt::Display for GateCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GateCheck::EulerCharacteristic => "chi",
            GateCheck::BoundaryComponents => "components",
            GateCheck::Connectedness => "connected",
            GateCheck::Bracket => "bracket",
            GateCheck::LinkingNumber => "lk",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GateReport {
    /// All checks agreed. `bracket_compared` is false when either closure
    /// exceeded the crossing bound.
    Pass { bracket_compared: bool },
    Fail(GateCheck),
}

impl GateReport {
    pub fn passed(&self) -> bool {
        matches!(self, GateReport::Pass { .. })
    }
}

impl fmt::Display for GateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GateReport::Pass {
                bracket_compared: true,
            } => f.write_str("pass"),
            GateReport::Pass {
                bracket_compared: false,
            } => f.write_str("pass (bracket skipped: crossing bound)"),
            GateReport::Fail(check) => write!(f, "fail {check}"),
        }
    }
}

/// Compares two diagrams on every quantity an ambient isotopy of the surface
/// must preserve. Returns the first violated check.
pub fn compare_surfaces(before: &FenceDiagram, after: &FenceDiagram, crossing_bound: usize) -> GateReport {
    let (sa, sb) = (before.surface_summary(), after.surface_summary());
    if sa.euler_characteristic != sb.euler_characteristic {
        return GateReport::Fail(GateCheck::EulerCharacteristic);
    }
    if sa.boundary_components != sb.boundary_components {
        return GateReport::Fail(GateCheck::BoundaryComponents);
    }
    if sa.connected != sb.connected {
        return GateReport::Fail(GateCheck::Connectedness);
    }
    let mut bracket_compared = false;
    if let (Ok(x), Ok(y)) = (
        normalized_bracket(&before.expand(), crossing_bound),
        normalized_bracket(&after.expand(), crossing_bound),
    ) {
        if x != y {
            return GateReport::Fail(GateCheck::Bracket);
        }
        bracket_compared = true;
    }
    if sa.is_annulus() && linking_number(before).ok() != linking_number(after).ok() {
        return GateReport::Fail(GateCheck::LinkingNumber);
    }
    GateReport::Pass { bracket_compared }
}

/// Applies `m` to `f` and compares before against after.
pub fn consistency_gate(f: &FenceDiagram, m: &Move) -> Result<GateReport> {
    let after = apply_move(f, m)?;
    Ok(compare_surfaces(f, &after, DEFAULT_CROSSING_BOUND))
}
