//! Bounded exploration of the move graph.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::diagram::{Band, FenceDiagram};
use crate::legendrian::{has_trivial_core, invariants_of, legendrian_invariants, reduce};
use crate::moves::{applicable_moves, apply_move, apply_path, inverse_move, Move};
use crate::oracles::{linking_number, normalized_bracket, DEFAULT_CROSSING_BOUND};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SearchBudget {
    /// Longest path considered, counting both search directions.
    pub max_steps: usize,
    pub max_strands: usize,
    pub max_bands: usize,
    /// Diagrams stored on both sides before giving up.
    pub max_visited: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_steps: 12,
            max_strands: 6,
            max_bands: 8,
            max_visited: 1_000_000,
        }
    }
}

impl SearchBudget {
    fn admits(&self, f: &FenceDiagram) -> bool {
        f.strands() <= self.max_strands && f.len() <= self.max_bands
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Moves carrying the source to the target.
    Related(Vec<Move>),
    /// Name of a move-invariant quantity that differs.
    NotRelatedByInvariant(String),
    /// Budget exhausted without meeting.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub verdict: Verdict,
    pub visited: usize,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Related(path) => {
                write!(f, "related in {} moves", path.len())?;
                for m in path {
                    write!(f, "\n  {m}")?;
                }
                Ok(())
            }
            Verdict::NotRelatedByInvariant(name) => write!(f, "not related: {name} differs"),
            Verdict::Unknown => f.write_str("unknown: budget exhausted"),
        }
    }
}

/// First move-invariant quantity on which `a` and `b` differ.
pub fn distinguishing_invariant(a: &FenceDiagram, b: &FenceDiagram) -> Option<&'static str> {
    let (sa, sb) = (a.surface_summary(), b.surface_summary());
    if sa.euler_characteristic != sb.euler_characteristic {
        return Some("chi");
    }
    if sa.boundary_components != sb.boundary_components {
        return Some("components");
    }
    if sa.connected != sb.connected {
        return Some("connected");
    }
    let bracket = |f: &FenceDiagram| normalized_bracket(&f.expand(), DEFAULT_CROSSING_BOUND).ok();
    if let (Some(x), Some(y)) = (bracket(a), bracket(b)) {
        if x != y {
            return Some("bracket");
        }
    }
    if let (Ok(x), Ok(y)) = (legendrian_invariants(a), legendrian_invariants(b)) {
        if x.tb != y.tb {
            return Some("tb");
        }
        if x.rot_abs != y.rot_abs {
            return Some("rot_abs");
        }
    }
    None
}

/// `parent[h] = (g, m)` with `apply_move(g, m) = h` on the forward side and
/// `apply_move(h, m) = g` on the backward side.
type Parents = HashMap<FenceDiagram, Option<(FenceDiagram, Move)>>;

fn sort_key(f: &FenceDiagram) -> (usize, Vec<(usize, usize)>) {
    (f.strands(), f.pairs())
}

/// Neighbours of every frontier diagram, computed in parallel and returned
/// in frontier order.
fn expand(
    frontier: &[FenceDiagram],
    budget: &SearchBudget,
    backward: bool,
) -> Vec<(FenceDiagram, FenceDiagram, Move)> {
    frontier
        .par_iter()
        .map(|g| {
            applicable_moves(g)
                .into_iter()
                .filter_map(|m| {
                    let h = apply_move(g, &m).ok()?;
                    if !budget.admits(&h) {
                        return None;
                    }
                    let edge = if backward {
                        inverse_move(g, &m).ok()?
                    } else {
                        m
                    };
                    Some((h, g.clone(), edge))
                })
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn chain(parents: &Parents, mut at: FenceDiagram) -> Vec<Move> {
    let mut out = Vec::new();
    while let Some(Some((prev, m))) = parents.get(&at) {
        out.push(m.clone());
        at = prev.clone();
    }
    out
}

/// Invariant comparison followed by a bidirectional breadth-first search.
pub fn bfs_equivalence(a: &FenceDiagram, b: &FenceDiagram, budget: &SearchBudget) -> SearchResult {
    if let Some(name) = distinguishing_invariant(a, b) {
        return SearchResult {
            verdict: Verdict::NotRelatedByInvariant(name.into()),
            visited: 0,
        };
    }
    if a == b {
        return SearchResult {
            verdict: Verdict::Related(Vec::new()),
            visited: 1,
        };
    }
    let mut sides: [Parents; 2] = [
        HashMap::from([(a.clone(), None)]),
        HashMap::from([(b.clone(), None)]),
    ];
    let mut frontiers = [vec![a.clone()], vec![b.clone()]];
    let mut depth = 0;
    while depth < budget.max_steps {
        let side = usize::from(frontiers[1].len() < frontiers[0].len());
        if frontiers[side].is_empty() {
            break;
        }
        let edges = expand(&frontiers[side], budget, side == 1);
        let mut next = Vec::new();
        let mut meeting = None;
        for (h, g, m) in edges {
            if sides[side].contains_key(&h) {
                continue;
            }
            sides[side].insert(h.clone(), Some((g, m)));
            if meeting.is_none() && sides[1 - side].contains_key(&h) {
                meeting = Some(h.clone());
            }
            next.push(h);
        }
        depth += 1;
        if let Some(meet) = meeting {
            let mut path = chain(&sides[0], meet.clone());
            path.reverse();
            path.extend(chain(&sides[1], meet));
            debug_assert_eq!(apply_path(a, &path).as_ref(), Ok(b));
            return SearchResult {
                verdict: Verdict::Related(path),
                visited: sides[0].len() + sides[1].len(),
            };
        }
        if sides[0].len() + sides[1].len() > budget.max_visited {
            break;
        }
        next.sort_by_cached_key(sort_key);
        frontiers[side] = next;
    }
    SearchResult {
        verdict: Verdict::Unknown,
        visited: sides[0].len() + sides[1].len(),
    }
}

/// Band types on `b` lines in lexicographic order.
pub fn band_types(b: usize) -> Vec<Band> {
    (1..=b)
        .flat_map(|i| (i + 1..=b).map(move |j| Band::raw(i, j)))
        .collect()
}

/// The `index`-th word of length `m` over `types` in lexicographic order.
fn word_at(types: &[Band], m: usize, mut index: u64) -> Vec<Band> {
    let base = types.len() as u64;
    let mut word = vec![types[0]; m];
    for slot in word.iter_mut().rev() {
        *slot = types[(index % base) as usize];
        index /= base;
    }
    word
}

fn word_count(types: usize, m: usize) -> u64 {
    (types as u64).pow(m as u32)
}

/// All diagrams with `b` strands and `m` bands passing `filter`, in
/// lexicographic order of their band words.
pub fn enumerate_diagrams<'a, F>(b: usize, m: usize, filter: F) -> impl Iterator<Item = FenceDiagram> + 'a
where
    F: Fn(&FenceDiagram) -> bool + 'a,
{
    let types = band_types(b);
    let count = if types.is_empty() {
        u64::from(m == 0)
    } else {
        word_count(types.len(), m)
    };
    (0..count)
        .map(move |index| {
            let word = if m == 0 { Vec::new() } else { word_at(&types, m, index) };
            FenceDiagram::raw(b, word)
        })
        .filter(move |f| filter(f))
}

/// Parallel form of [`enumerate_diagrams`], collected in order.
pub fn enumerate_diagrams_par<F>(b: usize, m: usize, filter: F) -> Vec<FenceDiagram>
where
    F: Fn(&FenceDiagram) -> bool + Sync,
{
    let types = band_types(b);
    if types.is_empty() || m == 0 {
        return enumerate_diagrams(b, m, filter).collect();
    }
    (0..word_count(types.len(), m))
        .into_par_iter()
        .map(|index| FenceDiagram::raw(b, word_at(&types, m, index)))
        .filter(|f| filter(f))
        .collect()
}

/// Every connected annulus diagram within the strand and band limits.
pub fn enumerate_annuli(max_strands: usize, max_bands: usize) -> Vec<FenceDiagram> {
    (2..=max_strands.min(max_bands))
        .flat_map(|b| enumerate_diagrams_par(b, b, FenceDiagram::is_quasipositive_annulus))
        .collect()
}

/// One rotation class of annulus diagrams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnulusClass {
    pub linking: i64,
    pub rot_abs: i64,
    pub tb: i64,
    /// First diagram of the class in enumeration order.
    pub representative: FenceDiagram,
    pub members: usize,
}

/// Per class: (first enumeration index, member count, tb).
type Tally = BTreeMap<(i64, i64), (u64, usize, i64)>;

fn merge_tallies(mut a: Tally, b: Tally) -> Tally {
    for (key, (index, count, tb)) in b {
        a.entry(key)
            .and_modify(|e| {
                e.0 = e.0.min(index);
                e.1 += count;
            })
            .or_insert((index, count, tb));
    }
    a
}

/// Groups annulus diagrams with linking number `lk_target` and unknotted
/// core by `rot_abs`.
pub fn classify_annuli(lk_target: i64, budget: &SearchBudget) -> Vec<AnnulusClass> {
    classify_annuli_many(&[lk_target], budget, true)
}

/// Classes for several linking numbers from a single enumeration pass,
/// sorted by linking number then `rot_abs`. With `unknotted_core` only
/// diagrams whose core curve has trivial normalised bracket are kept.
///
/// Panics if some diagram has `tb ≠ -lk`.
pub fn classify_annuli_many(
    targets: &[i64],
    budget: &SearchBudget,
    unknotted_core: bool,
) -> Vec<AnnulusClass> {
    let mut classes = Vec::new();
    for b in 2..=budget.max_strands.min(budget.max_bands) {
        let types = band_types(b);
        let tally = (0..word_count(types.len(), b))
            .into_par_iter()
            .fold(Tally::new, |mut acc, index| {
                let f = FenceDiagram::raw(b, word_at(&types, b, index));
                if !f.is_quasipositive_annulus() {
                    return acc;
                }
                let lk = linking_number(&f).expect("annulus");
                if !targets.contains(&lk) {
                    return acc;
                }
                let r = reduce(&f).expect("connected");
                if unknotted_core && !has_trivial_core(&r).unwrap_or(false) {
                    return acc;
                }
                let inv = invariants_of(&r, false).expect("closed curve");
                assert_eq!(inv.tb, -lk, "tb differs from -lk on {f}");
                acc.entry((lk, inv.rot_abs))
                    .and_modify(|e| e.1 += 1)
                    .or_insert((index, 1, inv.tb));
                acc
            })
            .reduce(Tally::new, merge_tallies);
        for ((linking, rot_abs), (index, members, tb)) in tally {
            classes.push(AnnulusClass {
                linking,
                rot_abs,
                tb,
                representative: FenceDiagram::raw(b, word_at(&types, b, index)),
                members,
            });
        }
    }
    // keep the smallest representative per class, summing members
    classes.sort_by_key(|c| (c.linking, c.rot_abs, c.representative.strands()));
    let mut merged: Vec<AnnulusClass> = Vec::new();
    for c in classes {
        match merged.last_mut() {
            Some(last) if (last.linking, last.rot_abs) == (c.linking, c.rot_abs) => {
                last.members += c.members;
            }
            _ => merged.push(c),
        }
    }
    merged
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moves::End;

    fn fence(b: usize, pairs: &[(usize, usize)]) -> FenceDiagram {
        FenceDiagram::from_pairs(b, pairs).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        let all: Vec<_> = enumerate_diagrams(2, 2, |_| true).collect();
        assert_eq!(all, vec![fence(2, &[(1, 2), (1, 2)])]);
        assert_eq!(enumerate_diagrams(3, 2, FenceDiagram::is_connected).count(), 6);
        let annuli: Vec<_> = enumerate_diagrams(3, 3, FenceDiagram::is_quasipositive_annulus).collect();
        assert!(annuli.contains(&fence(3, &[(1, 3), (1, 2), (2, 3)])));
        assert_eq!(enumerate_diagrams(1, 0, |_| true).count(), 1);
        assert_eq!(enumerate_diagrams(1, 2, |_| true).count(), 0);
        let words: Vec<_> = enumerate_diagrams(3, 1, |_| true).map(|f| f.pairs()).collect();
        assert_eq!(words, vec![vec![(1, 2)], vec![(1, 3)], vec![(2, 3)]]);
    }

    #[test]
    fn identical_and_twirled() {
        let f = fence(3, &[(1, 3), (1, 2), (2, 3)]);
        let budget = SearchBudget::default();
        assert_eq!(bfs_equivalence(&f, &f, &budget).verdict, Verdict::Related(vec![]));
        let g = apply_move(&f, &Move::Twirl { end: End::Front }).unwrap();
        match bfs_equivalence(&f, &g, &budget).verdict {
            Verdict::Related(path) => {
                assert_eq!(path.len(), 1);
                assert_eq!(apply_path(&f, &path).unwrap(), g);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn invariant_mismatch() {
        let hopf = fence(2, &[(1, 2), (1, 2)]);
        let disk = fence(2, &[(1, 2)]);
        assert_eq!(
            bfs_equivalence(&hopf, &disk, &SearchBudget::default()).verdict,
            Verdict::NotRelatedByInvariant("chi".into())
        );
    }

    #[test]
    fn related_through_inflation() {
        let hopf = fence(2, &[(1, 2), (1, 2)]);
        let g = fence(3, &[(1, 2), (1, 2), (2, 3)]);
        match bfs_equivalence(&hopf, &g, &SearchBudget::default()).verdict {
            Verdict::Related(path) => assert_eq!(apply_path(&hopf, &path).unwrap(), g),
            other => panic!("{other:?}"),
        }
        match bfs_equivalence(&g, &hopf, &SearchBudget::default()).verdict {
            Verdict::Related(path) => assert_eq!(apply_path(&g, &path).unwrap(), hopf),
            other => panic!("{other:?}"),
        }
    }
}
