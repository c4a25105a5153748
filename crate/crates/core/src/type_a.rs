//! Deletion `S_n -> S_{n-1}`: classes as subsets of `[n-1]`, the binary
//! valuation, its successor, and the checks on both Reeb graphs.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::lift::{minimal_heights, HeightFunction};
use crate::poset::{format_subset, EdgeKind};
use crate::reeb::{augmented_pre_reeb, augmented_pre_reeb_with, pre_reeb, ReebGraph};
use crate::report::Report;
use crate::scalar::Scalar;
use crate::tower::{deletion_a, Deletion};
use crate::weak::{CoxeterWord, InversionSet, Word};

pub const MAX_RANK_BOOLEAN: usize = 6;
pub const MAX_RANK_TOTAL: usize = 5;

/// A subset of `[n-1]`; bit `i - 1` stands for `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetClass(u64);

impl SubsetClass {
    pub fn from_mask(mask: u64) -> Self {
        SubsetClass(mask)
    }

    pub fn from_elements(elements: impl IntoIterator<Item = usize>) -> Self {
        SubsetClass(elements.into_iter().fold(0, |m, i| m | 1 << (i - 1)))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> (i - 1) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Members in increasing order.
    pub fn elements(self) -> Vec<usize> {
        (1..=64).filter(|&i| self.contains(i)).collect()
    }
}

impl fmt::Display for SubsetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_subset(self.0))
    }
}

fn full(n: usize) -> u64 {
    (1u64 << (n - 1)) - 1
}

/// Letters right of `n`.
pub fn class_subset(w: &Word) -> SubsetClass {
    let letters = w.letters();
    let n = letters.len() as u8;
    let p = letters.iter().position(|&l| l == n).expect("word contains its largest letter");
    SubsetClass::from_elements(letters[p + 1..].iter().map(|&l| l as usize))
}

/// `sum of 2^(i-1)` over the members.
pub fn nu_a(a: SubsetClass) -> u64 {
    a.0
}

/// `(A \ [m-1]) ∪ {m}` with `m = min([n-1] \ A)`.
pub fn successor_a(a: SubsetClass, n: usize) -> Result<SubsetClass> {
    if a.0 == full(n) {
        return Err(Error::SuccessorUndefined(a.to_string()));
    }
    let m = (!a.0).trailing_zeros() as usize + 1;
    let below_m = (1u64 << (m - 1)) - 1;
    Ok(SubsetClass((a.0 & !below_m) | 1 << (m - 1)))
}

fn word_of(letters: impl IntoIterator<Item = usize>) -> Word {
    Word::new(letters.into_iter().map(|l| l as u8).collect()).expect("template yields a permutation")
}

/// The representative pair `(v, w)`, `v` in `A` and `w` in `s(A)`, that makes
/// `A -> s(A)` an auxiliary edge when `1 ∈ A`:
/// `v = dec([n-1] \ A) n dec(A)` and `w = inc([n-1] \ B) n inc(B)`.
pub fn successor_witness(a: SubsetClass, n: usize) -> Result<(Word, Word)> {
    let b = successor_a(a, n)?;
    if !a.contains(1) {
        return Err(Error::NotAuxiliaryCase(a.to_string()));
    }
    let complement = |s: SubsetClass| SubsetClass(full(n) & !s.0).elements();
    let v = complement(a).into_iter().rev().chain([n]).chain(a.elements().into_iter().rev());
    let w = complement(b).into_iter().chain([n]).chain(b.elements());
    Ok((word_of(v), word_of(w)))
}

/// Class subset of each class representative.
pub fn class_subsets(d: &Deletion<Word>, g: &ReebGraph) -> Vec<SubsetClass> {
    (0..g.class_count())
        .map(|c| class_subset(d.upper().word(g.partition().representative(c))))
        .collect()
}

pub fn nu_heights<T: Scalar>(d: &Deletion<Word>, g: &ReebGraph) -> HeightFunction<T> {
    HeightFunction::new(class_subsets(d, g).into_iter().map(|a| T::from_count(nu_a(a))).collect())
}

/// Labels vertices by their subsets.
pub fn relabel(d: &Deletion<Word>, g: &mut ReebGraph) {
    let subsets = class_subsets(d, g);
    g.relabel(|c| subsets[c].to_string());
}

fn check_rank(n: usize, max: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::RankTooSmall { rank: n, min: 2 });
    }
    if n > max {
        return Err(Error::RankTooLarge { rank: n, max });
    }
    Ok(())
}

/// `class_subset` is constant on classes and separates them; returns the
/// inverse map subset -> class.
fn check_parameterization(d: &Deletion<Word>, g: &ReebGraph, r: &mut Report, tag: &str) -> HashMap<SubsetClass, usize> {
    let subsets = class_subsets(d, g);
    let mut inverse = HashMap::new();
    let mut witness = None;
    for (c, &a) in subsets.iter().enumerate() {
        if let Some(&x) = g.partition().members(c).iter().find(|&&x| class_subset(d.upper().word(x)) != a) {
            witness.get_or_insert(format!("class {c} contains {} with a different subset", d.upper().word(x)));
        }
        if let Some(other) = inverse.insert(a, c) {
            witness.get_or_insert(format!("classes {other} and {c} share {a}"));
        }
    }
    let n = d.rank();
    r.check(format!("{tag} classes biject onto subsets of [{}]", n - 1), witness.is_none() && inverse.len() == 1 << (n - 1), || {
        witness.clone().unwrap_or_else(|| format!("{} classes", inverse.len()))
    });
    inverse
}

/// `R(π)` for `S_n -> S_{n-1}` against the Hasse diagram of the Boolean
/// lattice on `[n-1]`.
pub fn verify_boolean_iso(n: usize) -> Result<Report> {
    check_rank(n, MAX_RANK_BOOLEAN)?;
    let d = deletion_a(n)?;
    let g = pre_reeb(d.projection())?;
    let mut r = Report::new();
    let tag = format!("A{n} pre-Reeb:");
    let subsets = class_subsets(&d, &g);
    check_parameterization(&d, &g, &mut r, &tag);

    let actual: BTreeSet<(u64, u64)> = g.graph().arcs().into_iter().map(|(a, b)| (subsets[a].0, subsets[b].0)).collect();
    let expected: BTreeSet<(u64, u64)> = (0..=full(n))
        .flat_map(|a| (0..n - 1).filter(move |i| a >> i & 1 == 0).map(move |i| (a, a | 1 << i)))
        .collect();
    r.check(format!("{tag} edges are exactly A -> A+{{a}}"), actual == expected, || {
        match actual.symmetric_difference(&expected).next() {
            Some(&(a, b)) => format!("edge {} -> {} differs", format_subset(a), format_subset(b)),
            None => String::new(),
        }
    });
    let (v, e) = (1usize << (n - 1), (n - 1) << (n - 1) >> 1);
    r.check(
        format!("{tag} {v} vertices and {e} edges"),
        g.class_count() == v && g.graph().edge_count() == e,
        || format!("{} vertices, {} edges", g.class_count(), g.graph().edge_count()),
    );
    Ok(r)
}

/// `R̂(π)` for `S_n -> S_{n-1}`: acyclic, increasing the valuation, containing
/// every successor edge with the expected kind, and reaching exactly the
/// valuation order.
pub fn verify_total_order_a(n: usize) -> Result<Report> {
    check_rank(n, MAX_RANK_TOTAL)?;
    let d = deletion_a(n)?;
    let g = augmented_pre_reeb(d.projection())?;
    let mut r = Report::new();
    let tag = format!("A{n} augmented:");
    let subsets = class_subsets(&d, &g);
    let class_of = check_parameterization(&d, &g, &mut r, &tag);
    let graph = g.graph();

    let cycle = graph.find_cycle();
    r.check(format!("{tag} acyclic"), cycle.is_none(), || format!("cycle {:?}", cycle));

    let bad = graph.edges().find(|e| nu_a(subsets[e.from]) >= nu_a(subsets[e.to]));
    r.check(format!("{tag} every edge increases nu"), bad.is_none(), || {
        let e = bad.unwrap();
        format!("{} edge {} -> {}", e.kind, subsets[e.from], subsets[e.to])
    });

    let oracle = d.upper().inversion_oracle();
    r.record(
        format!("{tag} auxiliary witnesses are incomparable and projection-decreasing"),
        g.check_auxiliary_witnesses(d.projection().domain().as_ref()).and(g.check_auxiliary_witnesses(&oracle)),
    );
    let by_inv = augmented_pre_reeb_with(d.projection(), &oracle)?;
    r.check(format!("{tag} reachability and inversion oracles give the same graph"), by_inv.graph() == graph, || {
        "auxiliary edge sets differ".into()
    });

    let mut missing = None;
    let mut wrong_kind = None;
    let mut bad_witness = None;
    for mask in 0..full(n) {
        let a = SubsetClass(mask);
        let b = successor_a(a, n)?;
        if nu_a(b) != nu_a(a) + 1 {
            missing.get_or_insert(format!("nu({b}) != nu({a}) + 1"));
        }
        let (ca, cb) = (class_of[&a], class_of[&b]);
        let kind = if a.contains(1) { EdgeKind::Auxiliary } else { EdgeKind::Vertical };
        if !graph.connects(ca, cb) {
            missing.get_or_insert(format!("{a} -> {b}"));
        } else if !graph.has_edge(ca, cb, kind) || (kind == EdgeKind::Auxiliary && graph.has_edge(ca, cb, EdgeKind::Vertical)) {
            wrong_kind.get_or_insert(format!("{a} -> {b} is not a {kind} edge only"));
        }
        if kind == EdgeKind::Auxiliary {
            let (v, w) = successor_witness(a, n)?;
            let (iv, iw) = (d.upper().index_of(&v).unwrap(), d.upper().index_of(&w).unwrap());
            let pr = d.projection();
            let ok = class_subset(&v) == a
                && class_subset(&w) == b
                && d.lower().poset().lt(pr.image(iw), pr.image(iv))
                && !pr.domain().comparable(iv, iw)
                && !d.upper().word(iv).inversions().is_subset(&d.upper().word(iw).inversions())
                && !d.upper().word(iw).inversions().is_subset(&d.upper().word(iv).inversions());
            if !ok {
                bad_witness.get_or_insert(format!("{a}: v={v} w={w}"));
            }
        }
    }
    r.check(format!("{tag} every successor edge A -> s(A) is present"), missing.is_none(), || missing.clone().unwrap());
    r.check(format!("{tag} successor edges are vertical iff 1 is not in A"), wrong_kind.is_none(), || {
        wrong_kind.clone().unwrap()
    });
    r.check(format!("{tag} explicit successor witnesses are auxiliary pairs"), bad_witness.is_none(), || {
        bad_witness.clone().unwrap()
    });

    match g.reachability_poset() {
        Ok(p) => {
            let size = 1usize << (n - 1);
            let mismatch = (0..p.len())
                .flat_map(|a| (0..p.len()).map(move |b| (a, b)))
                .find(|&(a, b)| p.leq(a, b) != (nu_a(subsets[a]) <= nu_a(subsets[b])));
            r.check(format!("{tag} reachability poset is the {size}-chain ordered by nu"), p.len() == size && mismatch.is_none(), || {
                match mismatch {
                    Some((a, b)) => format!("{} and {} disagree", subsets[a], subsets[b]),
                    None => format!("{} elements", p.len()),
                }
            });
        }
        Err(e) => r.record(format!("{tag} reachability poset"), Err(e.to_string())),
    }

    match minimal_heights::<u64>(graph) {
        Ok(h) => {
            let bad = (0..g.class_count()).find(|&c| *h.get(c) != nu_a(subsets[c]));
            r.check(format!("{tag} minimal heights equal nu"), bad.is_none(), || {
                let c = bad.unwrap();
                format!("{}: minimal {} vs nu {}", subsets[c], h.get(c), nu_a(subsets[c]))
            });
        }
        Err(e) => r.record(format!("{tag} minimal heights"), Err(e.to_string())),
    }
    Ok(r)
}
