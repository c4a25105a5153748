//! Deletion `W_n -> W_{n-1}`: classes `(ε, A)`, the flip graph of `F_n`, the
//! bit valuation, the four-case successor, and the `n = 3` table.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::lift::{minimal_heights, HeightFunction};
use crate::poset::{Digraph, EdgeKind};
use crate::reeb::{augmented_pre_reeb, augmented_pre_reeb_with, pre_reeb, ReebGraph};
use crate::report::Report;
use crate::scalar::Scalar;
use crate::tower::{deletion_b, Deletion};
use crate::weak::{inv_b, CoxeterWord, InvSetB, InversionSet, SignedWord, SymbolB};

pub const MAX_RANK_CLASSES: usize = 5;
pub const MAX_RANK_VERIFY: usize = 4;

fn bit(i: usize) -> u64 {
    1 << (i - 1)
}

fn full(n: usize) -> u64 {
    (1u64 << (n - 1)) - 1
}

fn elements(mask: u64) -> impl Iterator<Item = usize> {
    (1..=64).filter(move |&i| mask >> (i - 1) & 1 == 1)
}

/// A sign and a signed subset of `[n-1]` holding at most one of `±i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassB {
    negative: bool,
    pos: u64,
    neg: u64,
}

impl ClassB {
    /// `pos` and `neg` are the masks of `+i` and `-i` (bit `i - 1`).
    pub fn new(negative: bool, pos: u64, neg: u64) -> Result<Self> {
        if pos & neg != 0 {
            return Err(Error::InvalidWord(format!("signed set with both signs of {:?}", elements(pos & neg).collect::<Vec<_>>())));
        }
        Ok(ClassB { negative, pos, neg })
    }

    /// From `ε` and signed integers.
    pub fn from_signed(negative: bool, a: &[i64]) -> Result<Self> {
        let (mut pos, mut neg) = (0, 0);
        for &s in a {
            if s == 0 {
                return Err(Error::InvalidWord("0 in a signed set".into()));
            }
            let m = bit(s.unsigned_abs() as usize);
            if s > 0 { pos |= m } else { neg |= m }
        }
        ClassB::new(negative, pos, neg)
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn positives(&self) -> u64 {
        self.pos
    }

    pub fn negatives(&self) -> u64 {
        self.neg
    }

    /// `|A|` as a mask.
    pub fn support(&self) -> u64 {
        self.pos | self.neg
    }

    /// Members of `A` ordered by absolute value.
    pub fn signed_elements(&self) -> Vec<i64> {
        elements(self.support()).map(|i| if self.pos & bit(i) != 0 { i as i64 } else { -(i as i64) }).collect()
    }

    /// `A` as `-1,+2`, or `{}` when empty.
    pub fn set_csv(&self) -> String {
        let items: Vec<String> = self.signed_elements().iter().map(|s| format!("{s:+}")).collect();
        if items.is_empty() { "{}".into() } else { items.join(",") }
    }

    pub fn sign_char(&self) -> char {
        if self.negative { '-' } else { '+' }
    }
}

impl fmt::Display for ClassB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.signed_elements().iter().map(|s| format!("{s:+}")).collect();
        write!(f, "({},{{{}}})", self.sign_char(), items.join(","))
    }
}

/// Sign of `±n` and the signed letters to its right.
pub fn class_b(w: &SignedWord) -> ClassB {
    let letters = w.letters();
    let n = letters.len() as i8;
    let p = letters.iter().position(|&l| l.abs() == n).expect("word contains its largest letter");
    let (mut pos, mut neg) = (0, 0);
    for &l in &letters[p + 1..] {
        let m = bit(l.unsigned_abs() as usize);
        if l > 0 { pos |= m } else { neg |= m }
    }
    ClassB { negative: letters[p] < 0, pos, neg }
}

/// Symbols in bit order: `(n,n-1) ... (n,1) (-n) (n,-1) ... (n,-(n-1))`.
pub fn n_symbols(n: usize) -> Vec<SymbolB> {
    let mut out: Vec<SymbolB> = (1..n).rev().map(|i| SymbolB::Pair(n, i as i64)).collect();
    out.push(SymbolB::Neg(n));
    out.extend((1..n).map(|i| SymbolB::Pair(n, -(i as i64))));
    out
}

/// The bit string of `x`, most significant first.
pub fn bits_b(x: ClassB, n: usize) -> String {
    let free = |i: usize| x.negative && x.support() & bit(i) == 0;
    n_symbols(n)
        .into_iter()
        .map(|s| {
            let b = match s {
                SymbolB::Neg(_) => x.negative,
                SymbolB::Pair(_, i) if i > 0 => x.pos & bit(i as usize) != 0 || free(i as usize),
                SymbolB::Pair(_, i) => x.neg & bit(i.unsigned_abs() as usize) != 0 || free(i.unsigned_abs() as usize),
            };
            if b { '1' } else { '0' }
        })
        .collect()
}

pub fn nu_b(x: ClassB, n: usize) -> u64 {
    u64::from_str_radix(&bits_b(x, n), 2).expect("bit string of length at most 63")
}

/// Symbols of `Inv(w)` that involve `n`, in bit order.
pub fn n_inversions(w: &SignedWord) -> Vec<SymbolB> {
    let inv: InvSetB = inv_b(w);
    n_symbols(w.rank()).into_iter().filter(|&s| inv.contains(s)).collect()
}

/// Which rule of the successor map applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuccessorCase {
    /// `ε = +`, `|A| = [n-1]`.
    A1,
    /// `ε = +`, `m = max([n-1] \ |A|)`; `plain` iff no `-i` with `i > m` lies in `A`.
    A2 { m: usize, plain: bool },
    /// `ε = -`, `k` the largest `+k` in `A`; `plain` iff every `i > k` lies in `|A|`.
    B1 { k: usize, plain: bool },
    /// `ε = -`, no positive element, `s0 = min |A|`.
    B2 { s0: usize },
}

impl SuccessorCase {
    /// Whether `x -> s(x)` is an edge of the pre-Reeb graph itself.
    pub fn is_plain(&self) -> bool {
        match *self {
            SuccessorCase::A1 => true,
            SuccessorCase::A2 { plain, .. } | SuccessorCase::B1 { plain, .. } => plain,
            SuccessorCase::B2 { .. } => false,
        }
    }
}

impl fmt::Display for SuccessorCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuccessorCase::A1 => write!(f, "A1"),
            SuccessorCase::A2 { m, .. } => write!(f, "A2(m={m})"),
            SuccessorCase::B1 { k, .. } => write!(f, "B1(k={k})"),
            SuccessorCase::B2 { s0 } => write!(f, "B2(s0={s0})"),
        }
    }
}

fn above(i: usize, n: usize) -> u64 {
    full(n) & !((1u64 << i) - 1)
}

/// The successor of `x` and the case that produced it.
pub fn successor_b(x: ClassB, n: usize) -> Result<(ClassB, SuccessorCase)> {
    let all = full(n);
    let support = x.support();
    if !x.negative {
        if support == all {
            return Ok((ClassB { negative: true, ..x }, SuccessorCase::A1));
        }
        let m = 64 - (all & !support).leading_zeros() as usize;
        let dropped = x.neg & above(m, n);
        let y = ClassB { negative: false, pos: x.pos, neg: (x.neg & !dropped) | bit(m) };
        return Ok((y, SuccessorCase::A2 { m, plain: dropped == 0 }));
    }
    if x.pos != 0 {
        let k = 64 - x.pos.leading_zeros() as usize;
        let added = above(k, n) & !support;
        let y = ClassB { negative: true, pos: (x.pos & !bit(k)) | added, neg: x.neg };
        return Ok((y, SuccessorCase::B1 { k, plain: added == 0 }));
    }
    if support == 0 {
        return Err(Error::SuccessorUndefined(x.to_string()));
    }
    let s0 = support.trailing_zeros() as usize + 1;
    let y = ClassB { negative: false, pos: bit(s0) | (above(s0, n) & !support), neg: 0 };
    Ok((y, SuccessorCase::B2 { s0 }))
}

/// Every `(ε, A)` of rank `n`: `+` before `-`, then `A` by base-3 digits.
pub fn enumerate_classes(n: usize) -> Result<Vec<ClassB>> {
    check_rank(n, MAX_RANK_CLASSES)?;
    let count = 3usize.pow(n as u32 - 1);
    let mut out = Vec::with_capacity(2 * count);
    for negative in [false, true] {
        for mut code in 0..count {
            let (mut pos, mut neg) = (0, 0);
            for i in 1..n {
                match code % 3 {
                    1 => pos |= bit(i),
                    2 => neg |= bit(i),
                    _ => {}
                }
                code /= 3;
            }
            out.push(ClassB { negative, pos, neg });
        }
    }
    Ok(out)
}

/// The successor chain from `(+,∅)`.
pub fn successor_chain(n: usize) -> Result<Vec<ClassB>> {
    check_rank(n, MAX_RANK_CLASSES)?;
    let mut chain = vec![ClassB { negative: false, pos: 0, neg: 0 }];
    let cap = 2 * 3usize.pow(n as u32 - 1);
    while chain.len() <= cap {
        match successor_b(*chain.last().unwrap(), n) {
            Ok((y, _)) => chain.push(y),
            Err(Error::SuccessorUndefined(_)) => break,
            Err(e) => return Err(e),
        }
    }
    Ok(chain)
}

/// An orientation of `F_n` (edges `LR`, `Li`, `iR`). A set bit means the edge
/// is reversed from the base orientation `L -> R`, `L -> i`, `i -> R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientationF {
    pub lr_reversed: bool,
    /// bit `i - 1`: `i -> L`
    pub li: u64,
    /// bit `i - 1`: `R -> i`
    pub ir: u64,
}

impl OrientationF {
    pub fn base() -> Self {
        OrientationF { lr_reversed: false, li: 0, ir: 0 }
    }

    /// Number of edges reversed from the base orientation.
    pub fn rank(&self) -> usize {
        usize::from(self.lr_reversed) + (self.li.count_ones() + self.ir.count_ones()) as usize
    }

    /// Cyclic iff some `i` has `H -> i -> T`, where `T -> H` is the `LR` edge.
    pub fn is_acyclic(&self, n: usize) -> bool {
        let through = if self.lr_reversed { full(n) & !self.li & !self.ir } else { self.li & self.ir };
        through == 0
    }

    /// Orientations differing in one edge that is base-directed here.
    fn flips(&self, n: usize) -> Vec<OrientationF> {
        let mut out = Vec::new();
        if !self.lr_reversed {
            out.push(OrientationF { lr_reversed: true, ..*self });
        }
        for i in 1..n {
            if self.li & bit(i) == 0 {
                out.push(OrientationF { li: self.li | bit(i), ..*self });
            }
            if self.ir & bit(i) == 0 {
                out.push(OrientationF { ir: self.ir | bit(i), ..*self });
            }
        }
        out
    }
}

impl fmt::Display for OrientationF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.lr_reversed { "R>L" } else { "L>R" })?;
        let n = 64 - (self.li | self.ir).leading_zeros() as usize;
        for i in 1..=n {
            let li = if self.li & bit(i) != 0 { format!("{i}>L") } else { format!("L>{i}") };
            let ir = if self.ir & bit(i) != 0 { format!("R>{i}") } else { format!("{i}>R") };
            write!(f, " {li} {ir}")?;
        }
        Ok(())
    }
}

/// `T -> H` from `ε`; `i ∉ |A|` gives `T -> i -> H`, `+i` gives `T -> i <- H`,
/// `-i` gives `T <- i -> H`.
pub fn phi(x: ClassB, n: usize) -> OrientationF {
    let free = full(n) & !x.support();
    let (li, ir) = if x.negative { (x.neg | free, x.pos | free) } else { (x.neg, x.pos) };
    OrientationF { lr_reversed: x.negative, li, ir }
}

pub fn phi_inverse(o: OrientationF, n: usize) -> Result<ClassB> {
    if !o.is_acyclic(n) {
        return Err(Error::CyclicOrientation);
    }
    let (li, ir) = (o.li & full(n), o.ir & full(n));
    Ok(ClassB { negative: o.lr_reversed, pos: ir & !li, neg: li & !ir })
}

/// The directed flip graph of acyclic orientations of `F_n`.
#[derive(Debug, Clone)]
pub struct GammaF {
    pub vertices: Vec<OrientationF>,
    pub graph: Digraph,
}

impl GammaF {
    pub fn ranks(&self) -> Vec<usize> {
        self.vertices.iter().map(OrientationF::rank).collect()
    }

    pub fn index_of(&self, o: &OrientationF) -> Option<usize> {
        self.vertices.iter().position(|v| v == o)
    }

    pub fn to_dot(&self, name: &str) -> String {
        self.graph.to_dot(name, Some(&self.ranks()))
    }
}

pub fn gamma_f(n: usize) -> Result<GammaF> {
    check_rank(n, MAX_RANK_CLASSES)?;
    let all = full(n);
    let mut vertices = Vec::new();
    for lr_reversed in [false, true] {
        for li in 0..=all {
            for ir in 0..=all {
                let o = OrientationF { lr_reversed, li, ir };
                if o.is_acyclic(n) {
                    vertices.push(o);
                }
            }
        }
    }
    let index: HashMap<OrientationF, usize> = vertices.iter().enumerate().map(|(i, &o)| (o, i)).collect();
    let mut graph = Digraph::new(vertices.iter().map(|o| o.to_string()).collect());
    for (i, o) in vertices.iter().enumerate() {
        for p in o.flips(n) {
            if let Some(&j) = index.get(&p) {
                graph.add_edge(i, j, EdgeKind::Plain);
            }
        }
    }
    Ok(GammaF { vertices, graph })
}

fn word(letters: Vec<i64>) -> SignedWord {
    SignedWord::new(letters.into_iter().map(|l| l as i8).collect()).expect("template yields a signed permutation")
}

fn signed(mask: u64, sign: i64) -> Vec<i64> {
    elements(mask).map(|i| sign * i as i64).collect()
}

fn inc(mut v: Vec<i64>) -> Vec<i64> {
    v.sort_unstable();
    v
}

fn dec(mut v: Vec<i64>) -> Vec<i64> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Representatives `u` of `x` and `w` of `s(x)` with `π(w) < π(u)` and `u`,
/// `w` incomparable, for the successor steps that are not pre-Reeb edges.
pub fn witness_b(x: ClassB, n: usize) -> Result<(SignedWord, SignedWord)> {
    let (_, case) = successor_b(x, n)?;
    let ni = n as i64;
    let (u, w) = match case {
        c if c.is_plain() => return Err(Error::NotAuxiliaryCase(x.to_string())),
        SuccessorCase::A2 { m, .. } => {
            let mi = m as i64;
            let p = signed(x.pos, 1);
            let big = x.neg & above(m, n);
            let q = signed(x.neg & !big, -1);
            let c = signed(full(m) & !x.support(), 1);
            let u = [inc(c.clone()), vec![-mi, ni], inc(p.clone()), dec(signed(big, -1)), dec(q.clone())].concat();
            let w = [inc(c), inc(signed(big, 1)), vec![ni, -mi], inc(p), dec(q)].concat();
            (u, w)
        }
        SuccessorCase::B1 { k, .. } => {
            let ki = k as i64;
            let c = signed(full(k) & !x.support(), 1);
            let m = signed(above(k, n) & !x.support(), 1);
            let alpha = inc([signed(x.pos & !bit(k), 1), signed(x.neg, -1)].concat());
            let u = [inc(c.clone()), inc(m.clone()), vec![-ni, ki], alpha.clone()].concat();
            let w = [inc(c), vec![ki, -ni], inc(m), alpha].concat();
            (u, w)
        }
        SuccessorCase::B2 { s0 } => {
            let si = s0 as i64;
            let low: Vec<i64> = (1..si).collect();
            let c = signed(above(s0, n) & !x.support(), 1);
            let d = signed(x.neg & !bit(s0), -1);
            let u = [low.clone(), inc(c.clone()), vec![-ni, -si], inc(d.clone())].concat();
            let w = [inc(d), low, vec![ni, si], inc(c)].concat();
            (u, w)
        }
        SuccessorCase::A1 => unreachable!("A1 is plain"),
    };
    Ok((word(u), word(w)))
}

/// Class of each class representative.
pub fn class_params(d: &Deletion<SignedWord>, g: &ReebGraph) -> Vec<ClassB> {
    (0..g.class_count())
        .map(|c| class_b(d.upper().word(g.partition().representative(c))))
        .collect()
}

pub fn nu_heights<T: Scalar>(d: &Deletion<SignedWord>, g: &ReebGraph) -> HeightFunction<T> {
    let n = d.rank();
    HeightFunction::new(class_params(d, g).into_iter().map(|x| T::from_count(nu_b(x, n))).collect())
}

/// Labels vertices by `(ε, A)`.
pub fn relabel(d: &Deletion<SignedWord>, g: &mut ReebGraph) {
    let params = class_params(d, g);
    g.relabel(|c| params[c].to_string());
}

/// Flip counts under `Φ`, for layered drawings.
pub fn phi_ranks(d: &Deletion<SignedWord>, g: &ReebGraph) -> Vec<usize> {
    let n = d.rank();
    class_params(d, g).into_iter().map(|x| phi(x, n).rank()).collect()
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

fn check_parameterization(d: &Deletion<SignedWord>, g: &ReebGraph, r: &mut Report, tag: &str) -> HashMap<ClassB, usize> {
    let n = d.rank();
    let params = class_params(d, g);
    let mut inverse = HashMap::new();
    let mut witness = None;
    for (c, &x_c) in params.iter().enumerate() {
        if let Some(&x) = g.partition().members(c).iter().find(|&&x| class_b(d.upper().word(x)) != x_c) {
            witness.get_or_insert(format!("class {c} contains {} outside {x_c}", d.upper().word(x)));
        }
        if let Some(other) = inverse.insert(x_c, c) {
            witness.get_or_insert(format!("classes {other} and {c} share {x_c}"));
        }
    }
    let expected = 2 * 3usize.pow(n as u32 - 1);
    r.check(format!("{tag} classes biject onto the {expected} pairs (ε,A)"), witness.is_none() && inverse.len() == expected, || {
        witness.clone().unwrap_or_else(|| format!("{} classes", inverse.len()))
    });

    let bad = d.upper().words().iter().find(|w| {
        let bits = bits_b(class_b(w), n);
        let inv = n_inversions(w);
        n_symbols(n).iter().zip(bits.chars()).any(|(s, b)| inv.contains(s) != (b == '1'))
    });
    r.check(format!("{tag} bits agree with the n-inversions of every word"), bad.is_none(), || {
        let w = bad.unwrap();
        format!("{w}: bits {} vs {:?}", bits_b(class_b(w), n), n_inversions(w))
    });
    inverse
}

/// `R(π)` for `W_n -> W_{n-1}` against `Γ(F_n)` through `Φ`.
pub fn verify_gamma_iso(n: usize) -> Result<Report> {
    check_rank(n, MAX_RANK_VERIFY)?;
    let d = deletion_b(n)?;
    let g = pre_reeb(d.projection())?;
    let mut r = Report::new();
    let tag = format!("B{n} pre-Reeb:");
    let params = class_params(&d, &g);
    check_parameterization(&d, &g, &mut r, &tag);

    let classes = enumerate_classes(n)?;
    let roundtrip = classes.iter().find(|&&x| phi_inverse(phi(x, n), n).ok() != Some(x));
    r.check(format!("{tag} Φ inverse undoes Φ"), roundtrip.is_none(), || format!("at {}", roundtrip.unwrap()));

    let gamma = gamma_f(n)?;
    let images: BTreeSet<OrientationF> = params.iter().map(|&x| phi(x, n)).collect();
    let targets: BTreeSet<OrientationF> = gamma.vertices.iter().copied().collect();
    r.check(format!("{tag} Φ is a bijection onto the {} acyclic orientations", targets.len()), images == targets && images.len() == params.len(), || {
        format!("{} images for {} orientations", images.len(), targets.len())
    });

    let mapped: BTreeSet<(OrientationF, OrientationF)> =
        g.graph().arcs().into_iter().map(|(a, b)| (phi(params[a], n), phi(params[b], n))).collect();
    let flips: BTreeSet<(OrientationF, OrientationF)> =
        gamma.graph.arcs().into_iter().map(|(a, b)| (gamma.vertices[a], gamma.vertices[b])).collect();
    let diff = mapped.symmetric_difference(&flips).next().copied();
    r.check(format!("{tag} Φ maps edges onto flip edges ({} edges)", flips.len()), diff.is_none(), || {
        let (a, b) = diff.unwrap();
        format!("{a} -> {b} in only one graph")
    });

    let mut rules = BTreeSet::new();
    for &x in &classes {
        let free = full(n) & !x.support();
        if !x.negative {
            for i in elements(free) {
                rules.insert((x, ClassB { pos: x.pos | bit(i), ..x }));
                rules.insert((x, ClassB { neg: x.neg | bit(i), ..x }));
            }
            if free == 0 {
                rules.insert((x, ClassB { negative: true, ..x }));
            }
        } else {
            for i in elements(x.support()) {
                rules.insert((x, ClassB { pos: x.pos & !bit(i), neg: x.neg & !bit(i), ..x }));
            }
        }
    }
    let actual: BTreeSet<(ClassB, ClassB)> = g.graph().arcs().into_iter().map(|(a, b)| (params[a], params[b])).collect();
    let diff = actual.symmetric_difference(&rules).next().copied();
    r.check(format!("{tag} edges follow the three (ε,A) rules"), diff.is_none(), || {
        let (a, b) = diff.unwrap();
        format!("{a} -> {b}")
    });
    Ok(r)
}

/// `R̂(π)` for `W_n -> W_{n-1}` is the chain ordered by `ν`.
pub fn verify_total_order_b(n: usize) -> Result<Report> {
    check_rank(n, MAX_RANK_VERIFY)?;
    let d = deletion_b(n)?;
    let g = augmented_pre_reeb(d.projection())?;
    let mut r = Report::new();
    let tag = format!("B{n} augmented:");
    let params = class_params(&d, &g);
    let class_of = check_parameterization(&d, &g, &mut r, &tag);
    let graph = g.graph();

    let cycle = graph.find_cycle();
    r.check(format!("{tag} acyclic"), cycle.is_none(), || format!("cycle {:?}", cycle));
    let bad = graph.edges().find(|e| nu_b(params[e.from], n) >= nu_b(params[e.to], n));
    r.check(format!("{tag} every edge increases nu"), bad.is_none(), || {
        let e = bad.unwrap();
        format!("{} edge {} -> {}", e.kind, params[e.from], params[e.to])
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

    let chain = successor_chain(n)?;
    let count = 2 * 3usize.pow(n as u32 - 1);
    let distinct: BTreeSet<ClassB> = chain.iter().copied().collect();
    let last = *chain.last().unwrap();
    r.check(
        format!("{tag} successor chain visits all {count} classes from (+,{{}}) to (-,{{}})"),
        chain.len() == count && distinct.len() == count && last == ClassB { negative: true, pos: 0, neg: 0 },
        || format!("{} steps ending at {last}", chain.len()),
    );
    let top = (1u64 << (2 * n - 1)) - 1;
    r.check(format!("{tag} nu at (-,{{}}) is {top}"), nu_b(last, n) == top && params.iter().all(|&x| nu_b(x, n) <= top), || {
        format!("nu(-,{{}}) = {}", nu_b(last, n))
    });
    let decrease = chain.windows(2).find(|p| nu_b(p[1], n) <= nu_b(p[0], n));
    r.check(format!("{tag} nu increases along the successor chain"), decrease.is_none(), || {
        let p = decrease.unwrap();
        format!("{} -> {}", p[0], p[1])
    });

    let mut missing = None;
    let mut wrong_kind = None;
    let mut bad_witness = None;
    let pr = d.projection();
    for p in chain.windows(2) {
        let (x, y) = (p[0], p[1]);
        let (_, case) = successor_b(x, n)?;
        let (cx, cy) = (class_of[&x], class_of[&y]);
        if !graph.connects(cx, cy) {
            missing.get_or_insert(format!("{x} -> {y} ({case})"));
            continue;
        }
        if case.is_plain() != graph.has_edge(cx, cy, EdgeKind::Vertical) {
            wrong_kind.get_or_insert(format!("{x} -> {y} ({case})"));
        }
        if !case.is_plain() {
            let (u, w) = witness_b(x, n)?;
            let (iu, iw) = (d.upper().index_of(&u).unwrap(), d.upper().index_of(&w).unwrap());
            let ok = class_b(&u) == x
                && class_b(&w) == y
                && d.lower().poset().lt(pr.image(iw), pr.image(iu))
                && !pr.domain().comparable(iu, iw)
                && !u.inversions().is_subset(&w.inversions())
                && !w.inversions().is_subset(&u.inversions());
            if !ok {
                bad_witness.get_or_insert(format!("{x} ({case}): u={u} w={w}"));
            }
        }
    }
    r.check(format!("{tag} every successor edge x -> s(x) is present"), missing.is_none(), || missing.clone().unwrap());
    r.check(format!("{tag} successor edges are vertical exactly in the plain cases"), wrong_kind.is_none(), || {
        wrong_kind.clone().unwrap()
    });
    r.check(format!("{tag} explicit successor witnesses are auxiliary pairs"), bad_witness.is_none(), || {
        bad_witness.clone().unwrap()
    });

    match g.reachability_poset() {
        Ok(p) => {
            let mismatch = (0..p.len())
                .flat_map(|a| (0..p.len()).map(move |b| (a, b)))
                .find(|&(a, b)| p.leq(a, b) != (nu_b(params[a], n) <= nu_b(params[b], n)));
            r.check(format!("{tag} reachability poset is the {count}-chain ordered by nu"), p.len() == count && mismatch.is_none(), || {
                match mismatch {
                    Some((a, b)) => format!("{} and {} disagree", params[a], params[b]),
                    None => format!("{} elements", p.len()),
                }
            });
        }
        Err(e) => r.record(format!("{tag} reachability poset"), Err(e.to_string())),
    }
    Ok(r)
}

/// One line of the table of `R̂(π)` in chain order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub index: usize,
    pub class: ClassB,
    pub symbols: Vec<SymbolB>,
    pub nu: u64,
    pub minimal_height: u64,
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let symbols: Vec<String> = self.symbols.iter().map(|s| s.to_string()).collect();
        let symbols = if symbols.is_empty() { "{}".to_string() } else { symbols.join(",") };
        write!(f, "{} {} {} {} {} {}", self.index, self.class.sign_char(), self.class.set_csv(), symbols, self.nu, self.minimal_height)
    }
}

/// Classes of `R̂(π)` in reachability order, with the `n`-inversions of a
/// representative, `ν`, and the minimal height.
pub fn table_b(n: usize) -> Result<Vec<TableRow>> {
    check_rank(n, MAX_RANK_VERIFY)?;
    let d = deletion_b(n)?;
    let g = augmented_pre_reeb_with(d.projection(), &d.upper().inversion_oracle())?;
    let heights = minimal_heights::<u64>(g.graph())?;
    let order = g.graph().topological_order()?;
    let p = g.reachability_poset()?;
    if let Some((a, b)) = p.incomparable_pair() {
        return Err(Error::NotTotalOrder { a, b });
    }
    Ok(order
        .into_iter()
        .enumerate()
        .map(|(index, c)| {
            let rep = d.upper().word(g.partition().representative(c));
            let class = class_b(rep);
            TableRow { index, class, symbols: n_inversions(rep), nu: nu_b(class, n), minimal_height: *heights.get(c) }
        })
        .collect())
}

pub fn render_table(rows: &[TableRow]) -> String {
    rows.iter().map(|r| format!("{r}\n")).collect()
}

/// Weights solved line by line from the minimal heights of the `n = 3`
/// table, up to the first line where a weighted sum disagrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// Weight and the line it was solved from, in order of solving.
    pub weights: Vec<(SymbolB, u64, usize)>,
    /// Lines whose weighted sum matched before the disagreement.
    pub consistent: Vec<usize>,
    pub line: usize,
    pub weighted_sum: u64,
    pub minimal_height: u64,
}

/// Solves weights from the `n = 3` table: a line with one symbol of unknown
/// weight fixes it; a line with none is a consistency check.
pub fn solve_weighted_sum(rows: &[TableRow]) -> Option<Counterexample> {
    let mut known: BTreeMap<SymbolB, u64> = BTreeMap::new();
    let mut weights = Vec::new();
    let mut consistent = Vec::new();
    for row in rows {
        let unknown: Vec<SymbolB> = row.symbols.iter().copied().filter(|s| !known.contains_key(s)).collect();
        let sum: u64 = row.symbols.iter().filter_map(|s| known.get(s)).sum();
        match unknown.as_slice() {
            [] if row.symbols.is_empty() => {}
            [] if sum == row.minimal_height => consistent.push(row.index),
            [] => {
                return Some(Counterexample { weights, consistent, line: row.index, weighted_sum: sum, minimal_height: row.minimal_height })
            }
            [s] if row.minimal_height >= sum => {
                known.insert(*s, row.minimal_height - sum);
                weights.push((*s, row.minimal_height - sum, row.index));
            }
            _ => {}
        }
    }
    None
}

/// The `n = 3` minimal heights are not a weighted sum of `3`-inversions.
pub fn counterexample_weighted_sum() -> Result<(Counterexample, Report)> {
    let rows = table_b(3)?;
    let mut r = Report::new();
    let Some(cx) = solve_weighted_sum(&rows) else {
        r.record("B3 minimal heights contradict every weighted sum", Err("all lines consistent".into()));
        return Ok((
            Counterexample { weights: Vec::new(), consistent: Vec::new(), line: 0, weighted_sum: 0, minimal_height: 0 },
            r,
        ));
    };
    let expected = [
        (SymbolB::Pair(3, -2), 1, 1),
        (SymbolB::Pair(3, -1), 2, 2),
        (SymbolB::Neg(3), 1, 4),
        (SymbolB::Pair(3, 1), 5, 5),
    ];
    let shown: Vec<String> = cx.weights.iter().map(|(s, w, l)| format!("w{s}={w}@{l}")).collect();
    r.check("B3 weights w(3,-2)=1 w(3,-1)=2 w(-3)=1 w(3,1)=5 from lines 1,2,4,5", cx.weights == expected, || {
        shown.join(" ")
    });
    r.check("B3 weighted sums agree on lines 3,6,7", cx.consistent == [3, 6, 7], || format!("{:?}", cx.consistent));
    r.check("B3 line 8 weighted sum 9 differs from minimal height 8", (cx.line, cx.weighted_sum, cx.minimal_height) == (8, 9, 8), || {
        format!("line {} sum {} height {}", cx.line, cx.weighted_sum, cx.minimal_height)
    });
    Ok((cx, r))
}
