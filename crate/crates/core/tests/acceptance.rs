//! Acceptance criteria, one pass/fail line each. Exits non-zero on failure.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fence_core::diagram::Letter;
use fence_core::format::{parse_fence, parse_front, serialize_fence, serialize_front};
use fence_core::legendrian::{fence_from_front, legendrian_invariants, reduce};
use fence_core::moves::{applicable_moves, apply_move, MoveKind};
use fence_core::oracles::{
    compare_surfaces, kauffman_bracket, linking_number, normalized_bracket, GateReport,
    DEFAULT_CROSSING_BOUND,
};
use fence_core::search::{
    bfs_equivalence, classify_annuli_many, enumerate_annuli, enumerate_diagrams, SearchBudget,
    Verdict,
};
use fence_core::{Bracket, BraidWord, FenceDiagram};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn data(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn tb_equals_minus_lk() -> Outcome {
    let annuli = enumerate_annuli(4, 6);
    for f in &annuli {
        let tb = legendrian_invariants(f).map_err(|e| format!("{f}: {e}"))?.tb;
        let lk = linking_number(f).map_err(|e| format!("{f}: {e}"))?;
        check(tb == -lk, || format!("{f}: tb={tb} lk={lk}"))?;
    }
    Ok(format!("{} annuli with b <= 4", annuli.len()))
}

fn move_invariance() -> Outcome {
    let mut counts: BTreeMap<MoveKind, usize> = BTreeMap::new();
    let mut test = |f: &FenceDiagram, m: &fence_core::Move| -> Result<(), String> {
        let g = apply_move(f, m).map_err(|e| format!("{f} {m}: {e}"))?;
        let (a, b) = (
            legendrian_invariants(f).map_err(|e| format!("{f}: {e}"))?,
            legendrian_invariants(&g).map_err(|e| format!("{f} {m} -> {g}: {e}"))?,
        );
        check(a.tb == b.tb && a.rot_abs == b.rot_abs, || {
            format!("{f} --{m}--> {g}: ({}, {}) vs ({}, {})", a.tb, a.rot_abs, b.tb, b.rot_abs)
        })?;
        *counts.entry(m.kind()).or_default() += 1;
        Ok(())
    };
    let mut exhaustive = 0;
    for f in enumerate_annuli(3, 3) {
        for m in applicable_moves(&f) {
            test(&f, &m)?;
            exhaustive += 1;
        }
    }
    let seeds = enumerate_annuli(5, 5);
    let mut rng = ChaCha8Rng::seed_from_u64(0x51de);
    let mut sampled = 0;
    while sampled < 12_000 {
        let mut f = seeds.choose(&mut rng).expect("non-empty").clone();
        // wander a few moves to reach diagrams outside the seed corpus
        for _ in 0..rng.gen_range(0..4) {
            let moves = applicable_moves(&f);
            let m = moves.choose(&mut rng).expect("turn always applies");
            let g = apply_move(&f, m).map_err(|e| e.to_string())?;
            if g.strands() <= 7 {
                f = g;
            }
        }
        // kind first, then instance, so rare kinds are not swamped by inflations
        let moves = applicable_moves(&f);
        let kind = *MoveKind::ALL.choose(&mut rng).expect("six kinds");
        let of_kind: Vec<_> = moves.iter().filter(|m| m.kind() == kind).collect();
        let Some(m) = of_kind.choose(&mut rng) else {
            continue;
        };
        test(&f, m)?;
        sampled += 1;
    }
    check(counts.len() == 6, || format!("move kinds exercised: {counts:?}"))?;
    Ok(format!(
        "{exhaustive} exhaustive + {sampled} sampled pairs; per kind {:?}",
        counts.values().collect::<Vec<_>>()
    ))
}

fn consistency_gate() -> Outcome {
    let mut brackets: HashMap<FenceDiagram, Option<Bracket>> = HashMap::new();
    let mut bracket = |f: &FenceDiagram| {
        brackets
            .entry(f.clone())
            .or_insert_with(|| normalized_bracket(&f.expand(), DEFAULT_CROSSING_BOUND).ok())
            .clone()
    };
    let (mut pairs, mut compared) = (0, 0);
    for b in 1..=4 {
        for m in 0..=4 {
            for f in enumerate_diagrams(b, m, |_| true).collect::<Vec<_>>() {
                let before = bracket(&f);
                for mv in applicable_moves(&f) {
                    let g = apply_move(&f, &mv).map_err(|e| format!("{f} {mv}: {e}"))?;
                    // bound 0: brackets are compared below through the cache
                    let report = compare_surfaces(&f, &g, 0);
                    check(report.passed(), || format!("{f} --{mv}--> {g}: {report}"))?;
                    if let (Some(x), Some(y)) = (&before, &bracket(&g)) {
                        check(x == y, || format!("{f} --{mv}--> {g}: bracket {x} vs {y}"))?;
                        compared += 1;
                    }
                    pairs += 1;
                }
            }
        }
    }
    check(
        matches!(compare_surfaces(&hopf(), &hopf(), 16), GateReport::Pass { bracket_compared: true }),
        || "gate does not compare brackets".into(),
    )?;
    Ok(format!("{pairs} moves, {compared} with bracket compared"))
}

fn rotation_separates() -> Outcome {
    let mut diagrams = Vec::new();
    for (name, rot_abs) in [("a3_rot0.front", 0), ("a3_rot2.front", 2)] {
        let front = parse_front(&data(name)).map_err(|e| e.to_string())?;
        let f = fence_from_front(&front).map_err(|e| e.to_string())?;
        let inv = legendrian_invariants(&f).map_err(|e| e.to_string())?;
        let lk = linking_number(&f).map_err(|e| e.to_string())?;
        check(lk == 3 && inv.tb == -3 && inv.rot_abs == rot_abs, || {
            format!("{name}: lk={lk} {inv}")
        })?;
        diagrams.push(f);
    }
    let verdict = bfs_equivalence(&diagrams[0], &diagrams[1], &SearchBudget::default()).verdict;
    check(verdict == Verdict::NotRelatedByInvariant("rot_abs".into()), || {
        format!("verdict {verdict:?}")
    })?;
    Ok(format!("{} vs {}: {verdict}", diagrams[0], diagrams[1]))
}

fn class_counts() -> Outcome {
    let classes = classify_annuli_many(&[1, 2, 3], &SearchBudget::default(), true);
    let mut found: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for c in &classes {
        check(c.tb == -c.linking, || format!("class {c:?}"))?;
        found.entry(c.linking).or_default().push(c.rot_abs);
    }
    let expected = BTreeMap::from([(1, vec![0]), (2, vec![1]), (3, vec![0, 2])]);
    check(found == expected, || format!("classes {found:?}"))?;
    Ok(format!("rot_abs classes {found:?}"))
}

fn hopf() -> FenceDiagram {
    FenceDiagram::from_pairs(2, &[(1, 2), (1, 2)]).expect("valid")
}

fn hopf_golden() -> Outcome {
    let f = parse_fence(&data("hopf.fence")).map_err(|e| e.to_string())?;
    check(f == hopf(), || format!("parsed {f}"))?;
    let s = f.surface_summary();
    let lk = linking_number(&f).map_err(|e| e.to_string())?;
    let inv = legendrian_invariants(&f).map_err(|e| e.to_string())?;
    let got = (
        s.euler_characteristic,
        s.boundary_components,
        lk,
        inv.tb,
        inv.rot,
        inv.r_c,
        inv.d_c,
        inv.u_c,
    );
    check(got == (0, 2, 1, -1, 0, 1, 1, 1), || format!("{got:?}"))?;
    Ok(format!("chi=0 components=2 lk=1 {inv}"))
}

fn oracle_self_checks() -> Outcome {
    let hopf_closure = BraidWord::new(2, vec![Letter::pos(1), Letter::pos(1)]).expect("valid");
    let value = kauffman_bracket(&hopf_closure, 16).map_err(|e| e.to_string())?;
    let expected = Bracket::from_terms([(4, -1), (-4, -1)]);
    check(value == expected, || format!("bracket {value}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(0xb7ac);
    for _ in 0..100 {
        let b = rng.gen_range(2..=5);
        let len = rng.gen_range(0..=8);
        let mut letters: Vec<Letter> = (0..len)
            .map(|_| {
                let k = rng.gen_range(1..b);
                if rng.gen() {
                    Letter::pos(k)
                } else {
                    Letter::neg(k)
                }
            })
            .collect();
        let before = BraidWord::new(b, letters.clone()).expect("valid");
        let k = rng.gen_range(1..b);
        let at = rng.gen_range(0..=len);
        let pair = if rng.gen() {
            [Letter::pos(k), Letter::neg(k)]
        } else {
            [Letter::neg(k), Letter::pos(k)]
        };
        letters.splice(at..at, pair);
        let after = BraidWord::new(b, letters).expect("valid");
        let (x, y) = (
            kauffman_bracket(&before, 16).map_err(|e| e.to_string())?,
            kauffman_bracket(&after, 16).map_err(|e| e.to_string())?,
        );
        check(x == y, || format!("{before} vs {after}: {x} vs {y}"))?;
    }
    Ok(format!("<hopf> = {value}; 100 random insertions"))
}

fn round_trips() -> Outcome {
    let annuli = enumerate_annuli(4, 4);
    for f in &annuli {
        let r = reduce(f).map_err(|e| e.to_string())?;
        let front = r.to_front().ok_or_else(|| format!("{f}: reduction is not a closed curve"))?;
        let g = fence_from_front(&front).map_err(|e| format!("{f}: {e}"))?;
        let again = reduce(&g).map_err(|e| e.to_string())?;
        check(again == r, || format!("{f}: {} vs {}", r.core(), again.core()))?;
    }
    let mut files = 0;
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data");
    let mut entries: Vec<_> = std::fs::read_dir(&dir)
        .map_err(|e| e.to_string())?
        .map(|e| e.expect("entry").path())
        .collect();
    entries.sort();
    for path in entries {
        let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
        let name = path.display().to_string();
        let round = match path.extension().and_then(|e| e.to_str()) {
            Some("fence") => serialize_fence(&parse_fence(&text).map_err(|e| format!("{name}: {e}"))?),
            Some("front") => serialize_front(&parse_front(&text).map_err(|e| format!("{name}: {e}"))?),
            _ => continue,
        };
        check(round == text, || format!("{name} does not round-trip"))?;
        files += 1;
    }
    Ok(format!("{} annuli reduce stably; {files} golden files byte-identical", annuli.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("tb equals -lk on every annulus with b <= 4", tb_equals_minus_lk),
        ("tb and rot_abs invariant under every move kind", move_invariance),
        ("moves preserve chi, components, connectedness, bracket, lk", consistency_gate),
        ("two tb = -3 fronts separated by rot_abs", rotation_separates),
        ("rot_abs class counts for lk = 1, 2, 3", class_counts),
        ("Hopf annulus golden values", hopf_golden),
        ("bracket oracle self-checks", oracle_self_checks),
        ("reduction and format round trips", round_trips),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} PASS ({secs:.1}s) {name}: {detail}", n + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL ({secs:.1}s) {name}: {detail}", n + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
