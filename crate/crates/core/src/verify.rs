//! Full check suites per tower type and rank, as line reports.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lift::{build_tower, first_comparison_disagreement, uniqueness_check, HeightChoice, TowerKind, TowerRealization};
use crate::report::Report;
use crate::tower::{deletion_a, deletion_b, Deletion};
use crate::weak::{CoxeterWord, InversionSet, WeakOrder};
use crate::{type_a, type_b};

pub const MAX_RANK_A: usize = 5;
pub const MAX_RANK_B: usize = 4;

pub fn check_rank(kind: TowerKind, n: usize) -> Result<()> {
    let max = match kind {
        TowerKind::A => MAX_RANK_A,
        TowerKind::B => MAX_RANK_B,
    };
    if n < 2 {
        return Err(Error::RankTooSmall { rank: n, min: 2 });
    }
    if n > max {
        return Err(Error::RankTooLarge { rank: n, max });
    }
    Ok(())
}

/// Inversion-set containment against the cover closure on every ordered pair.
pub fn inversion_order_report<W: CoxeterWord>(order: &WeakOrder<W>, tag: &str) -> Report {
    let inv = order.inversion_sets();
    let p = order.poset();
    let n = order.len();
    let mismatches: Vec<(usize, usize)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|x| {
            let inv = &inv;
            (0..n).filter(move |&y| p.leq(x, y) != inv[x].is_subset(&inv[y])).map(move |y| (x, y))
        })
        .collect();
    let mut r = Report::new();
    r.check(format!("{tag} inversion containment equals the weak order on {} pairs", n * n), mismatches.is_empty(), || {
        let (x, y) = mismatches[0];
        format!("{} mismatches, first {} vs {}", mismatches.len(), order.word(x), order.word(y))
    });
    r
}

/// The three cylindricity conditions and the common fiber size.
pub fn cylindricity_report<W: CoxeterWord>(d: &Deletion<W>, tag: &str, fiber_size: usize) -> Report {
    let pr = d.projection();
    let mut r = pr.validate_cylindrical().to_report(tag);
    let bad = (0..pr.codomain().len()).find(|&q| pr.fiber_members(q).len() != fiber_size);
    r.check(format!("{tag} every fiber has {fiber_size} elements"), bad.is_none(), || {
        let q = bad.unwrap();
        format!("fiber over {} has {}", d.lower().word(q), pr.fiber_members(q).len())
    });
    r
}

fn tower_report(t: &TowerRealization<i64>, tag: &str) -> Report {
    let mut r = Report::new();
    r.record(
        format!("{tag} is a cubic order embedding of {} elements in dimension {}", t.poset().len(), t.dim()),
        t.check().map_err(|e| e.to_string()),
    );
    match t.dimension_certificate() {
        Ok(c) => r.check(format!("{tag} section composites span a {}-box inducing B_{}", t.dim(), t.dim()), c.corners.len() == 1 << t.dim(), || {
            format!("{} corners", c.corners.len())
        }),
        Err(e) => r.record(format!("{tag} dimension certificate"), Err(e.to_string())),
    }
    r
}

/// Towers with `ν` and with minimal heights, their agreement on all
/// coordinate comparisons, and the box certificate.
pub fn lift_report(kind: TowerKind, n: usize) -> Result<Report> {
    let tag = format!("{kind}{n} lift:");
    let nu = build_tower::<i64>(kind, n, HeightChoice::Nu);
    let minimal = build_tower::<i64>(kind, n, HeightChoice::Minimal);
    let mut r = Report::new();
    let (nu, minimal) = match (nu, minimal) {
        (Ok(a), Ok(b)) => (a, b),
        (a, b) => {
            for (name, t) in [("nu", a.err()), ("minimal", b.err())] {
                if let Some(e) = t {
                    r.record(format!("{tag} tower with {name} heights builds"), Err(e.to_string()));
                }
            }
            return Ok(r);
        }
    };
    r.extend(tower_report(&nu, &format!("{tag} nu tower")));
    r.extend(tower_report(&minimal, &format!("{tag} minimal tower")));

    let mut unique = Ok(());
    for (k, (a, b)) in nu.levels().iter().zip(minimal.levels()).enumerate() {
        match uniqueness_check(&a.graph, &a.heights, &b.heights) {
            Ok(true) => {}
            Ok(false) => unique = unique.and(Err(format!("level {} orders differ", k + 1))),
            Err(e) => unique = unique.and(Err(format!("level {}: {e}", k + 1))),
        }
    }
    r.record(format!("{tag} nu and minimal heights induce the same order at every level"), unique);
    let diff = first_comparison_disagreement(nu.coordinates(), minimal.coordinates());
    r.check(format!("{tag} nu and minimal coordinates agree on every comparison"), diff.is_none(), || {
        let (x, y, i) = diff.unwrap();
        format!("{} vs {} on coordinate {i}", nu.poset().label(x), nu.poset().label(y))
    });
    if kind == TowerKind::A {
        r.check(format!("{tag} nu is the minimal height"), nu.coordinates() == minimal.coordinates(), || {
            "coordinates differ".into()
        });
    }
    Ok(r)
}

/// Every check for the deletion `rank n -> rank n - 1` and the tower up to
/// rank `n`.
pub fn suite(kind: TowerKind, n: usize) -> Result<Report> {
    check_rank(kind, n)?;
    let mut r = Report::new();
    match kind {
        TowerKind::A => {
            let d = deletion_a(n)?;
            r.extend(inversion_order_report(d.upper(), &format!("A{n} weak order:")));
            r.extend(cylindricity_report(&d, &format!("A{n} deletion:"), n));
            r.extend(type_a::verify_boolean_iso(n)?);
            r.extend(type_a::verify_total_order_a(n)?);
        }
        TowerKind::B => {
            let d = deletion_b(n)?;
            r.extend(inversion_order_report(d.upper(), &format!("B{n} weak order:")));
            r.extend(cylindricity_report(&d, &format!("B{n} deletion:"), 2 * n));
            r.extend(type_b::verify_gamma_iso(n)?);
            r.extend(type_b::verify_total_order_b(n)?);
            if n >= 3 {
                r.extend(type_b::counterexample_weighted_sum()?.1);
            }
        }
    }
    r.extend(lift_report(kind, n)?);
    Ok(r)
}
