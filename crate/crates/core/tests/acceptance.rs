//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use cubelift::lift::{first_comparison_disagreement, tower_graphs};
use cubelift::type_b::{self, OrientationF};
use cubelift::verify::{cylindricity_report, inversion_order_report};
use cubelift::{
    augmented_pre_reeb, build_tower, build_tower_with, deletion_a, deletion_b, is_cubic_realization,
    is_order_embedding, minimal_heights, perms, signed_perms, type_a, uniqueness_check, CoordinateMap,
    CoxeterWord, CylindricityFailure, EdgeKind, Error, HeightChoice, HeightFunction, InversionSet, Poset,
    Projection, Report, Scalar, TowerKind, TowerRealization, Violation, WeakOrder,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every comparison below is exact integer or set equality.
const TOLERANCE: i64 = 0;
const RANDOM_HEIGHT_SEQUENCES: usize = 100;
const SEED: u64 = 0x5eed_cafe;
/// Budget for the rank-6 type-A tower.
const STRETCH_BUDGET: Duration = Duration::from_secs(120);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, witness: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(witness()) }
}

fn passed(r: Report) -> Result<usize, String> {
    match r.failures().next() {
        None => Ok(r.len()),
        Some(c) => Err(c.to_string()),
    }
}

fn criterion_1() -> Outcome {
    let mut pairs = 0;
    for n in 1..=5 {
        let order = WeakOrder::from_words(perms(n).unwrap()).unwrap();
        passed(inversion_order_report(&order, &format!("A{n}")))?;
        pairs += order.len() * order.len();
    }
    for n in 1..=4 {
        let order = WeakOrder::from_words(signed_perms(n).unwrap()).unwrap();
        passed(inversion_order_report(&order, &format!("B{n}")))?;
        pairs += order.len() * order.len();
    }
    Ok(format!("{pairs} ordered pairs, 0 mismatches"))
}

fn criterion_2() -> Outcome {
    for n in 2..=5 {
        passed(cylindricity_report(&deletion_a(n).unwrap(), &format!("A{n}"), n))?;
    }
    for n in 2..=4 {
        passed(cylindricity_report(&deletion_b(n).unwrap(), &format!("B{n}"), 2 * n))?;
    }
    Ok("A2..A5 fibers of size n, B2..B4 fibers of size 2n".into())
}

fn criterion_3() -> Outcome {
    for n in 2..=5 {
        passed(type_a::verify_boolean_iso(n).map_err(|e| e.to_string())?)?;
        let g = cubelift::pre_reeb(deletion_a(n).unwrap().projection()).unwrap();
        // Hasse diagram of B_{n-1}: 2^{n-1} vertices, (n-1) 2^{n-2} edges
        let (v, e) = (1usize << (n - 1), (n - 1) * (1usize << (n - 1)) / 2);
        ensure(g.class_count() == v && g.graph().edge_count() == e, || {
            format!("A{n}: {} vertices {} edges", g.class_count(), g.graph().edge_count())
        })?;
    }
    Ok("A5: 16 vertices, 32 edges".into())
}

fn criterion_4() -> Outcome {
    for n in 2..=5 {
        passed(type_a::verify_total_order_a(n).map_err(|e| e.to_string())?)?;
    }
    Ok("A2..A5 chains of length 2^(n-1) ordered by nu".into())
}

fn criterion_5() -> Outcome {
    for (n, count) in [(2, 6), (3, 18), (4, 54)] {
        passed(type_b::verify_gamma_iso(n).map_err(|e| e.to_string())?)?;
        let g = type_b::gamma_f(n).unwrap();
        ensure(g.vertices.len() == count, || format!("B{n}: {} vertices", g.vertices.len()))?;
    }
    let g = type_b::gamma_f(3).unwrap();
    let mut profile = vec![0; 6];
    for r in g.ranks() {
        profile[r] += 1;
    }
    ensure(profile == [1, 4, 4, 4, 4, 1], || format!("rank profile {profile:?}"))?;
    // brute force over all 2^5 orientations of F_3 by explicit cycle search
    let acyclic = (0..32u32)
        .filter(|&code| {
            let o = OrientationF { lr_reversed: code & 1 == 1, li: u64::from(code >> 1 & 3), ir: u64::from(code >> 3 & 3) };
            let mut g = cubelift::Digraph::new((0..4).map(|v| v.to_string()).collect());
            // vertices L=0, R=1, 1=2, 2=3
            let mut arc = |a, b| g.add_edge(a, b, EdgeKind::Plain);
            if o.lr_reversed { arc(1, 0) } else { arc(0, 1) };
            for i in 0..2 {
                if o.li >> i & 1 == 1 { arc(2 + i, 0) } else { arc(0, 2 + i) };
                if o.ir >> i & 1 == 1 { arc(1, 2 + i) } else { arc(2 + i, 1) };
            }
            g.is_acyclic()
        })
        .count();
    ensure(acyclic == 18, || format!("{acyclic} acyclic orientations by cycle search"))?;
    Ok("6, 18, 54 vertices; rank profile 1,4,4,4,4,1".into())
}

fn criterion_6() -> Outcome {
    for (n, top) in [(2, 7u64), (3, 31), (4, 127)] {
        passed(type_b::verify_total_order_b(n).map_err(|e| e.to_string())?)?;
        let x = type_b::ClassB::new(true, 0, 0).unwrap();
        ensure(type_b::nu_b(x, n) == top, || format!("B{n}: nu(-,{{}}) = {}", type_b::nu_b(x, n)))?;
    }
    Ok("B2..B4 chains; nu(-,{}) = 7, 31, 127".into())
}

/// The table as printed: class and 3-inversion symbols per line.
const REFERENCE_TABLE: [(&str, &[&str]); 18] = [
    ("(+,{})", &[]),
    ("(+,{-2})", &["(3,-2)"]),
    ("(+,{-1})", &["(3,-1)"]),
    ("(+,{-1,-2})", &["(3,-1)", "(3,-2)"]),
    ("(-,{-1,-2})", &["(-3)", "(3,-1)", "(3,-2)"]),
    ("(+,{+1})", &["(3,1)"]),
    ("(+,{+1,-2})", &["(3,1)", "(3,-2)"]),
    ("(-,{+1,-2})", &["(-3)", "(3,1)", "(3,-2)"]),
    ("(-,{-2})", &["(-3)", "(3,1)", "(3,-1)", "(3,-2)"]),
    ("(+,{+2})", &["(3,2)"]),
    ("(+,{-1,+2})", &["(3,2)", "(3,-1)"]),
    ("(-,{-1,+2})", &["(3,2)", "(-3)", "(3,-1)"]),
    ("(-,{-1})", &["(3,2)", "(-3)", "(3,-1)", "(3,-2)"]),
    ("(+,{+1,+2})", &["(3,2)", "(3,1)"]),
    ("(-,{+1,+2})", &["(3,2)", "(3,1)", "(-3)"]),
    ("(-,{+1})", &["(3,2)", "(3,1)", "(-3)", "(3,-2)"]),
    ("(-,{+2})", &["(3,2)", "(3,1)", "(-3)", "(3,-1)"]),
    ("(-,{})", &["(3,2)", "(3,1)", "(-3)", "(3,-1)", "(3,-2)"]),
];

fn criterion_7() -> Outcome {
    let rows = type_b::table_b(3).map_err(|e| e.to_string())?;
    ensure(rows.len() == 18, || format!("{} lines", rows.len()))?;
    for (row, (class, symbols)) in rows.iter().zip(REFERENCE_TABLE) {
        let got: BTreeSet<String> = row.symbols.iter().map(|s| s.to_string()).collect();
        let want: BTreeSet<String> = symbols.iter().map(|s| s.to_string()).collect();
        ensure(row.class.to_string() == class && got == want && row.minimal_height == row.index as u64, || {
            format!("line {}: {} {:?} at height {}", row.index, row.class, got, row.minimal_height)
        })?;
    }
    let golden = include_str!("data/type_b_rank3_table.txt");
    let rendered = type_b::render_table(&rows);
    ensure(rendered == golden, || {
        let line = rendered.lines().zip(golden.lines()).find(|(a, b)| a != b);
        format!("golden file differs at {line:?}")
    })?;
    Ok("18 lines match classes, inversion sets and positions".into())
}

fn criterion_8() -> Outcome {
    let (cx, r) = type_b::counterexample_weighted_sum().map_err(|e| e.to_string())?;
    passed(r)?;
    let weights: Vec<u64> = cx.weights.iter().map(|&(_, w, _)| w).collect();
    let lines: Vec<usize> = cx.weights.iter().map(|&(_, _, l)| l).collect();
    ensure(weights == [1, 2, 1, 5] && lines == [1, 2, 4, 5], || format!("weights {weights:?} from lines {lines:?}"))?;
    ensure(cx.consistent == [3, 6, 7], || format!("consistent lines {:?}", cx.consistent))?;
    let gap = cx.weighted_sum as i64 - cx.minimal_height as i64;
    ensure(cx.line == 8 && cx.weighted_sum == 9 && cx.minimal_height == 8 && gap.abs() > TOLERANCE, || {
        format!("line {}: sum {} vs height {}", cx.line, cx.weighted_sum, cx.minimal_height)
    })?;
    Ok("weights 1,2,1,5; lines 3,6,7 agree; line 8 sum 9 vs height 8".into())
}

/// Componentwise order against inversion containment on all pairs.
fn embedding_by_inversions<W: CoxeterWord, T: Scalar>(words: &[W], p: &Poset, c: &CoordinateMap<T>) -> Result<(), String> {
    let inv: Vec<W::Inversions> = words.iter().map(|w| w.inversions()).collect();
    let index: Vec<usize> = (0..p.len()).map(|x| words.iter().position(|w| w.label() == p.label(x)).unwrap()).collect();
    for x in 0..p.len() {
        for y in 0..p.len() {
            let le = c.get(x).iter().zip(c.get(y)).all(|(a, b)| a <= b);
            if le != inv[index[x]].is_subset(&inv[index[y]]) {
                return Err(format!("{} vs {}", p.label(x), p.label(y)));
            }
        }
    }
    Ok(())
}

fn check_tower<W: CoxeterWord>(kind: TowerKind, n: usize, words: &[W]) -> Result<(), String> {
    for choice in [HeightChoice::Nu, HeightChoice::Minimal] {
        let t: TowerRealization<i64> = build_tower(kind, n, choice).map_err(|e| format!("{kind}{n} {choice}: {e}"))?;
        let (p, c) = (t.poset(), t.coordinates());
        ensure(is_cubic_realization(p, c) && is_order_embedding(p, c), || format!("{kind}{n} {choice}: not an embedding"))?;
        embedding_by_inversions(words, p, c).map_err(|w| format!("{kind}{n} {choice}: {w}"))?;
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    for n in 1..=5 {
        check_tower(TowerKind::A, n, &perms(n).unwrap())?;
    }
    for n in 0..=4 {
        check_tower(TowerKind::B, n, &signed_perms(n).unwrap())?;
    }
    let start = Instant::now();
    check_tower(TowerKind::A, 6, &perms(6).unwrap())?;
    let elapsed = start.elapsed();
    ensure(elapsed < STRETCH_BUDGET, || format!("A6 took {elapsed:?}"))?;
    Ok(format!("A1..A6 and B0..B4, nu and minimal; A6 in {:.1}s", elapsed.as_secs_f64()))
}

/// Strictly increasing random values along the chain order of `g`.
fn random_heights(g: &cubelift::ReebGraph, rng: &mut ChaCha8Rng) -> HeightFunction<i64> {
    let positions = minimal_heights::<u64>(g.graph()).unwrap();
    let mut values = vec![rng.gen_range(-5..=5)];
    for _ in 1..g.class_count() {
        let last = *values.last().unwrap();
        values.push(last + rng.gen_range(1..=7));
    }
    HeightFunction::new(positions.values().iter().map(|&p| values[p as usize]).collect())
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut towers = 0;
    for (kind, n) in [(TowerKind::A, 5), (TowerKind::B, 4)] {
        let minimal: TowerRealization<i64> = build_tower(kind, n, HeightChoice::Minimal).map_err(|e| e.to_string())?;
        let (base, graphs) = tower_graphs(kind, n).map_err(|e| e.to_string())?;
        for trial in 0..RANDOM_HEIGHT_SEQUENCES {
            let t = build_tower_with(base.clone(), graphs.clone(), |_, g| Ok((random_heights(g, &mut rng), "random".into())))
                .map_err(|e| format!("{kind}{n} trial {trial}: {e}"))?;
            for (a, b) in t.levels().iter().zip(minimal.levels()) {
                let same = uniqueness_check(&a.graph, &a.heights, &b.heights);
                ensure(matches!(same, Ok(true)), || format!("{kind}{n} trial {trial}: {same:?}"))?;
            }
            if let Some((x, y, i)) = first_comparison_disagreement(t.coordinates(), minimal.coordinates()) {
                return Err(format!("{kind}{n} trial {trial}: {} vs {} on coordinate {i}", t.poset().label(x), t.poset().label(y)));
            }
            towers += 1;
        }
    }
    Ok(format!("{towers} random towers agree with the minimal realization on every comparison"))
}

fn criterion_11() -> Outcome {
    let mut checked = Vec::new();
    let cases: Vec<(TowerKind, usize)> = (2..=5).map(|n| (TowerKind::A, n)).chain((1..=4).map(|n| (TowerKind::B, n))).collect();
    for (kind, n) in cases {
        let t: TowerRealization<i64> = build_tower(kind, n, HeightChoice::Minimal).map_err(|e| e.to_string())?;
        let cert = t.dimension_certificate().map_err(|e| format!("{kind}{n}: {e}"))?;
        let d = t.dim();
        let p = t.poset();
        ensure(cert.corners.len() == 1 << d, || format!("{kind}{n}: {} corners", cert.corners.len()))?;
        for a in 0..1usize << d {
            for b in 0..1usize << d {
                ensure(p.leq(cert.corners[a], cert.corners[b]) == (a & !b == 0), || {
                    format!("{kind}{n}: corners {a} and {b}")
                })?;
            }
        }
        if (kind, n) == (TowerKind::B, 2) {
            let labels: Vec<&str> = cert.corners.iter().map(|&x| p.label(x)).collect();
            ensure(labels == ["1,2", "-1,2", "1,-2", "-1,-2"], || format!("B2 corners {labels:?}"))?;
        }
        checked.push(format!("{kind}{n}:{d}"));
    }
    Ok(format!("boxes of dimension {}", checked.join(" ")))
}

fn criterion_12() -> Outcome {
    // antichain of two elements over a point
    let labels = vec!["a".to_string(), "b".to_string()];
    let domain = Arc::new(Poset::from_relations(labels, []).unwrap());
    let point = Arc::new(Poset::from_relations(vec!["q".into()], []).unwrap());
    let pr = Projection::new(domain, point, vec![0, 0]).unwrap();
    let report = pr.validate_cylindrical();
    ensure(matches!(report.fiber_condition, Err(CylindricityFailure::FiberNotChain { .. })), || {
        format!("fiber condition {:?}", report.fiber_condition)
    })?;

    // lower one auxiliary edge's head to its tail's height
    let d = deletion_a(4).unwrap();
    let g = augmented_pre_reeb(d.projection()).unwrap();
    let nu = type_a::nu_heights::<i64>(&d, &g).values().to_vec();
    let lowered = |e: &cubelift::Edge| {
        let mut v = nu.clone();
        v[e.to] = v[e.from];
        v
    };
    let violated_by = |v: &[i64]| g.graph().edges().filter(|e| v[e.from] >= v[e.to]).copied().collect::<Vec<_>>();
    let edge = *g
        .graph()
        .edges()
        .find(|e| e.kind == EdgeKind::Auxiliary && violated_by(&lowered(e)) == [**e])
        .ok_or("no auxiliary edge can be violated alone")?;
    let values = lowered(&edge);
    let base: TowerRealization<i64> = build_tower(TowerKind::A, 3, HeightChoice::Nu).unwrap();
    match cubelift::extend_order_embedding(base.coordinates(), &g, &HeightFunction::new(values)) {
        Err(Error::HeightNotMonotone { from, to, kind }) if (from, to, kind) == (edge.from, edge.to, edge.kind) => {}
        other => return Err(format!("expected rejection at {}->{}, got {other:?}", edge.from, edge.to)),
    }

    // Lehmer codes on S_3
    let order = WeakOrder::from_words(perms(3).unwrap()).unwrap();
    let p = order.poset();
    let lehmer = CoordinateMap::new(2, (0..p.len()).map(|x| order.word(x).lehmer_code()).collect()).unwrap();
    ensure(is_cubic_realization(p, &lehmer), || "Lehmer codes are not cubic".into())?;
    let witness = match cubelift::check_order_embedding(p, &lehmer) {
        Err(Error::Violation(Violation::OrderNotReflected { x, y })) => (x, y),
        other => return Err(format!("expected a non-reflected pair, got {other:?}")),
    };
    let (x, y) = witness;
    ensure(lehmer.get(x).iter().zip(lehmer.get(y)).all(|(a, b)| a <= b) && !p.leq(x, y), || "witness does not hold".into())?;
    Ok(format!(
        "antichain fiber rejected; edge {}->{} rejected; Lehmer {} {:?} <= {} {:?} but not below",
        edge.from,
        edge.to,
        order.word(x),
        lehmer.get(x),
        order.word(y),
        lehmer.get(y)
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("inversion-order oracle equivalence", criterion_1),
        ("cylindricity of the deletions", criterion_2),
        ("type-A pre-Reeb graph is the Boolean lattice", criterion_3),
        ("type-A augmented graph is the nu chain", criterion_4),
        ("type-B pre-Reeb graph is the flip graph", criterion_5),
        ("type-B augmented graph is the nu chain", criterion_6),
        ("rank-3 type-B table", criterion_7),
        ("weighted-sum counterexample", criterion_8),
        ("order-embedding towers", criterion_9),
        ("combinatorial uniqueness", criterion_10),
        ("dimension certificate", criterion_11),
        ("negative controls", criterion_12),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.2}s)", i + 1),
            Err(witness) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {witness} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
