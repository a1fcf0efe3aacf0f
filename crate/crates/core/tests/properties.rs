use proptest::prelude::*;

use fence_core::format::{parse_fence, serialize_fence};
use fence_core::legendrian::{
    invariants_of, legendrian_invariants, legendrian_invariants_oriented, reduce, ReducedDiagram,
};
use fence_core::moves::{
    applicable_moves, apply_move, apply_path, can_deflate, deflate, inverse_move,
    macro_height_exchange, macro_new_zigzag,
};
use fence_core::oracles::{compare_surfaces, linking_number};
use fence_core::search::{bfs_equivalence, enumerate_annuli, SearchBudget, Verdict};
use fence_core::{Band, FenceDiagram};

fn any_diagram() -> impl Strategy<Value = FenceDiagram> {
    (1usize..=5).prop_flat_map(|b| {
        let band = (1..b.max(2)).prop_flat_map(move |i| (Just(i), i + 1..=b.max(2)));
        let word = if b == 1 {
            Just(Vec::new()).boxed()
        } else {
            prop::collection::vec(band, 0..=6).boxed()
        };
        word.prop_map(move |pairs| FenceDiagram::from_pairs(b, &pairs).expect("in range"))
    })
}

/// Random walk in the move graph starting from the Hopf annulus.
fn any_annulus() -> impl Strategy<Value = FenceDiagram> {
    prop::collection::vec(any::<prop::sample::Index>(), 0..12).prop_map(|choices| {
        let mut f = FenceDiagram::from_pairs(2, &[(1, 2), (1, 2)]).expect("valid");
        for choice in choices {
            let moves = applicable_moves(&f);
            let g = apply_move(&f, choice.get(&moves)).expect("applicable");
            if g.strands() <= 6 {
                f = g;
            }
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 200,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn moves_undo(f in any_diagram()) {
        for m in applicable_moves(&f) {
            let g = apply_move(&f, &m).unwrap();
            let back = inverse_move(&f, &m).unwrap();
            prop_assert_eq!(apply_move(&g, &back).unwrap(), f.clone(), "{}", m);
        }
    }

    #[test]
    fn moves_preserve_surface(f in any_diagram()) {
        for m in applicable_moves(&f) {
            let g = apply_move(&f, &m).unwrap();
            let report = compare_surfaces(&f, &g, 10);
            prop_assert!(report.passed(), "{} --{}--> {}: {}", f, m, g, report);
        }
    }

    #[test]
    fn fence_text_round_trips(f in any_diagram()) {
        let text = serialize_fence(&f);
        prop_assert_eq!(parse_fence(&text).unwrap(), f);
        prop_assert_eq!(serialize_fence(&parse_fence(&text).unwrap()), text);
    }

    #[test]
    fn walks_stay_annuli(f in any_annulus()) {
        prop_assert!(f.is_quasipositive_annulus());
    }

    #[test]
    fn tb_is_minus_lk(f in any_annulus()) {
        let inv = legendrian_invariants(&f).unwrap();
        prop_assert_eq!(inv.tb, -linking_number(&f).unwrap());
    }

    #[test]
    fn invariant_identities(f in any_annulus()) {
        let r = reduce(&f).unwrap();
        let inv = legendrian_invariants(&f).unwrap();
        prop_assert_eq!(inv.tb, inv.p as i64 - inv.n as i64 - inv.r_c as i64);
        prop_assert_eq!(2 * inv.rot, inv.d_c as i64 - inv.u_c as i64);
        prop_assert_eq!(inv.d_c + inv.u_c, r.cusp_corners().count());
        prop_assert!(r.trivalent_vertices().is_empty());
        for k in 1..=r.core().strands() {
            prop_assert_eq!(r.core().attachments(k).len(), 2);
        }
        let reversed = legendrian_invariants_oriented(&f, true).unwrap();
        prop_assert_eq!(reversed.tb, inv.tb);
        prop_assert_eq!(reversed.rot, -inv.rot);
    }

    #[test]
    fn moves_preserve_legendrian_invariants(f in any_annulus()) {
        let inv = legendrian_invariants(&f).unwrap();
        for m in applicable_moves(&f) {
            let g = apply_move(&f, &m).unwrap();
            let after = legendrian_invariants(&g).unwrap();
            prop_assert_eq!((after.tb, after.rot_abs), (inv.tb, inv.rot_abs), "{}", m);
        }
    }

    #[test]
    fn zigzag_traces_replay(f in any_annulus(), line in 1usize..6, after in 0usize..8) {
        if let Ok(r) = macro_new_zigzag(&f, line, after) {
            prop_assert_eq!(apply_path(&f, &r.trace).unwrap(), r.diagram.clone());
            let (a, b) = (legendrian_invariants(&f).unwrap(), legendrian_invariants(&r.diagram).unwrap());
            prop_assert_eq!((a.tb, a.rot_abs), (b.tb, b.rot_abs));
        }
    }
}

/// Deletes a one-ended line with its band.
fn prune(f: &FenceDiagram, line: usize) -> FenceDiagram {
    let shift = |x: usize| if x > line { x - 1 } else { x };
    let word = f
        .word()
        .iter()
        .filter(|b| !b.touches(line))
        .map(|b| Band::new(shift(b.top()), shift(b.bottom())).unwrap())
        .collect();
    FenceDiagram::new(f.strands() - 1, word).unwrap()
}

/// Reduction taking the rightmost deflation and the bottom leaf first.
fn reduce_rightmost(f: &FenceDiagram) -> ReducedDiagram {
    let mut g = f.clone();
    loop {
        if let Some(k) = (1..g.strands()).rev().find(|&k| can_deflate(&g, k)) {
            g = deflate(&g, k).unwrap();
        } else if let Some(k) = (1..=g.strands()).rev().find(|&k| g.attachments(k).len() == 1) {
            g = prune(&g, k);
        } else {
            return ReducedDiagram::from_core(g);
        }
    }
}

#[test]
fn reduction_order_does_not_change_invariants() {
    let mut differing_cores = 0;
    for f in enumerate_annuli(5, 5) {
        let (a, b) = (reduce(&f).unwrap(), reduce_rightmost(&f));
        let (x, y) = (invariants_of(&a, false).unwrap(), invariants_of(&b, false).unwrap());
        assert_eq!((x.tb, x.rot_abs), (y.tb, y.rot_abs), "{f}");
        differing_cores += usize::from(a.core() != b.core());
    }
    println!("{differing_cores} annuli reduce to different cores under the two orders");
}

#[test]
fn reduction_is_stable_under_front_round_trip() {
    for f in enumerate_annuli(5, 5).into_iter().step_by(7) {
        let r = reduce(&f).unwrap();
        let g = fence_core::fence_from_front(&r.to_front().unwrap()).unwrap();
        assert_eq!(g, *r.core());
        assert_eq!(reduce(&g).unwrap(), r);
    }
}

#[test]
fn search_paths_replay() {
    let budget = SearchBudget {
        max_steps: 6,
        max_strands: 4,
        max_bands: 4,
        max_visited: 50_000,
    };
    let annuli = enumerate_annuli(3, 3);
    let mut related = 0;
    for a in &annuli {
        for b in &annuli {
            match bfs_equivalence(a, b, &budget).verdict {
                Verdict::Related(path) => {
                    assert_eq!(apply_path(a, &path).unwrap(), *b);
                    related += 1;
                }
                Verdict::NotRelatedByInvariant(name) => {
                    assert!(["tb", "rot_abs", "bracket"].contains(&name.as_str()), "{name}");
                }
                Verdict::Unknown => {}
            }
        }
    }
    assert!(related >= annuli.len());
}

#[test]
fn height_exchange_traces_replay() {
    let mut found = 0;
    for f in enumerate_annuli(4, 4) {
        for k in 1..f.strands() {
            if let Ok(r) = macro_height_exchange(&f, k) {
                assert_eq!(apply_path(&f, &r.trace).unwrap(), r.diagram);
                let (a, b) = (legendrian_invariants(&f).unwrap(), legendrian_invariants(&r.diagram).unwrap());
                assert_eq!((a.tb, a.rot_abs), (b.tb, b.rot_abs));
                found += 1;
            }
        }
    }
    assert!(found > 0);
}
