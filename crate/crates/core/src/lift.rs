//! Height functions on Reeb graphs, compatible cubic and order-embedding
//! extensions, tower realizations and the box certificate.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result, Violation};
use crate::poset::{
    boolean_lattice, check_cubic_realization, check_order_embedding, find_subposet_isomorphic, CoordinateMap,
    Digraph, Edge, EdgeKind, Poset,
};
use crate::reeb::{augmented_pre_reeb_with, ReebGraph};
use crate::scalar::Scalar;
use crate::tower::{tower_a, tower_b, Deletion};
use crate::weak::{perms, signed_perms, CoxeterWord, WeakOrder};
use crate::{type_a, type_b};

/// A value per vertex of a Reeb graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightFunction<T> {
    values: Vec<T>,
}

impl<T: Scalar> HeightFunction<T> {
    pub fn new(values: Vec<T>) -> Self {
        HeightFunction { values }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn get(&self, class: usize) -> &T {
        &self.values[class]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn check_edges<'a>(&self, vertex_count: usize, edges: impl Iterator<Item = &'a Edge>) -> Result<()> {
        if self.values.len() != vertex_count {
            return Err(Error::SizeMismatch { expected: vertex_count, found: self.values.len() });
        }
        for e in edges {
            if self.values[e.from] >= self.values[e.to] {
                return Err(Error::HeightNotMonotone { from: e.from, to: e.to, kind: e.kind });
            }
        }
        Ok(())
    }

    /// Fails with the first edge of `g` along which the height does not
    /// strictly increase.
    pub fn check_monotone(&self, g: &Digraph) -> Result<()> {
        self.check_edges(g.vertex_count(), g.edges())
    }

    pub fn is_monotone(&self, g: &Digraph) -> bool {
        self.check_monotone(g).is_ok()
    }

    fn check_vertical(&self, g: &Digraph) -> Result<()> {
        self.check_edges(g.vertex_count(), g.edges().filter(|e| e.kind != EdgeKind::Auxiliary))
    }
}

/// Longest-path ranks: `0` on sources, otherwise one more than the largest
/// value on an in-neighbor.
pub fn minimal_heights<T: Scalar>(g: &Digraph) -> Result<HeightFunction<T>> {
    let order = g.topological_order()?;
    let preds = g.predecessors();
    let mut rank = vec![0u64; g.vertex_count()];
    for v in order {
        rank[v] = preds[v].iter().map(|&u| rank[u] + 1).max().unwrap_or(0);
    }
    Ok(HeightFunction::new(rank.into_iter().map(T::from_count).collect()))
}

fn lift_coordinates<T: Scalar>(c_q: &CoordinateMap<T>, g: &ReebGraph, h: &HeightFunction<T>) -> Vec<Vec<T>> {
    let pr = g.projection();
    (0..pr.domain().len())
        .map(|x| {
            let mut v = c_q.get(pr.image(x)).to_vec();
            v.push(h.get(g.class_of(x)).clone());
            v
        })
        .collect()
}

/// `c_P(x) = (c_Q(π(x)), h([x]))`, checked to be a cubic realization.
/// Only the vertical edges of `g` constrain `h`.
pub fn extend_cubic<T: Scalar>(c_q: &CoordinateMap<T>, g: &ReebGraph, h: &HeightFunction<T>) -> Result<CoordinateMap<T>> {
    let pr = g.projection();
    pr.require_cylindrical()?;
    if c_q.len() != pr.codomain().len() {
        return Err(Error::SizeMismatch { expected: pr.codomain().len(), found: c_q.len() });
    }
    h.check_vertical(g.graph())?;
    let c = CoordinateMap::new(c_q.dim() + 1, lift_coordinates(c_q, g, h))?;
    check_cubic_realization(pr.domain(), &c)?;
    Ok(c)
}

/// As [`extend_cubic`], for an order-embedding base and a height increasing
/// along every edge of the augmented graph; the result is checked on all pairs.
pub fn extend_order_embedding<T: Scalar>(
    c_q: &CoordinateMap<T>,
    g: &ReebGraph,
    h: &HeightFunction<T>,
) -> Result<CoordinateMap<T>> {
    if !g.is_augmented() {
        return Err(Error::RequiresAugmented);
    }
    let pr = g.projection();
    if c_q.len() != pr.codomain().len() {
        return Err(Error::SizeMismatch { expected: pr.codomain().len(), found: c_q.len() });
    }
    check_order_embedding(pr.codomain(), c_q).map_err(|e| match e {
        Error::Violation(v) => Error::BaseNotEmbedding(v),
        e => e,
    })?;
    h.check_monotone(g.graph())?;
    let c = extend_cubic(c_q, g, h)?;
    check_order_embedding(pr.domain(), &c)?;
    Ok(c)
}

/// Splits a compatible realization into the base realization and the height.
pub fn decompose<T: Scalar>(c_p: &CoordinateMap<T>, g: &ReebGraph) -> Result<(CoordinateMap<T>, HeightFunction<T>)> {
    let pr = g.projection();
    if c_p.len() != pr.domain().len() {
        return Err(Error::SizeMismatch { expected: pr.domain().len(), found: c_p.len() });
    }
    let Some(d) = c_p.dim().checked_sub(1) else {
        return Err(Error::Violation(Violation::DimensionMismatch { index: 0, expected: 1, found: 0 }));
    };
    let partition = g.partition();
    let mut heights = Vec::with_capacity(partition.len());
    for c in 0..partition.len() {
        let members = partition.members(c);
        let first = members[0];
        if let Some(&other) = members.iter().find(|&&y| c_p.get(y)[d] != c_p.get(first)[d]) {
            return Err(Error::NotCompatible { first, second: other, part: "last coordinate" });
        }
        heights.push(c_p.get(first)[d].clone());
    }
    let mut base = Vec::with_capacity(pr.codomain().len());
    for q in 0..pr.codomain().len() {
        let members = pr.fiber_members(q);
        let first = *members.first().ok_or(Error::MissingElement { index: q })?;
        if let Some(&other) = members.iter().find(|&&y| c_p.get(y)[..d] != c_p.get(first)[..d]) {
            return Err(Error::NotCompatible { first, second: other, part: "base coordinates" });
        }
        base.push(c_p.get(first)[..d].to_vec());
    }
    let h = HeightFunction::new(heights);
    h.check_vertical(g.graph())?;
    Ok((CoordinateMap::new(d, base)?, h))
}

/// Compares two heights on an augmented graph whose reachability poset is a
/// total order: true iff every element pair is ordered the same way by both.
pub fn uniqueness_check<T: Scalar, U: Scalar>(g: &ReebGraph, h1: &HeightFunction<T>, h2: &HeightFunction<U>) -> Result<bool> {
    if !g.is_augmented() {
        return Err(Error::RequiresAugmented);
    }
    h1.check_monotone(g.graph())?;
    h2.check_monotone(g.graph())?;
    if let Some((a, b)) = g.reachability_poset()?.incomparable_pair() {
        return Err(Error::NotTotalOrder { a, b });
    }
    let n = g.projection().domain().len();
    let classes = g.partition().classes();
    Ok((0..n).into_par_iter().all(|x| {
        let (hx1, hx2) = (h1.get(classes[x]), h2.get(classes[x]));
        (0..n).all(|y| hx1.cmp(h1.get(classes[y])) == hx2.cmp(h2.get(classes[y])))
    }))
}

/// First `(x, y, i)` where `c1(x)_i <= c1(y)_i` and `c2(x)_i <= c2(y)_i`
/// disagree.
pub fn first_comparison_disagreement<T: Scalar, U: Scalar>(
    c1: &CoordinateMap<T>,
    c2: &CoordinateMap<U>,
) -> Option<(usize, usize, usize)> {
    let n = c1.len().min(c2.len());
    let d = c1.dim().min(c2.dim());
    (0..n).into_par_iter().find_map_first(|x| {
        (0..n).find_map(|y| {
            (0..d)
                .find(|&i| (c1.get(x)[i] <= c1.get(y)[i]) != (c2.get(x)[i] <= c2.get(y)[i]))
                .map(|i| (x, y, i))
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HeightChoice {
    Nu,
    Minimal,
}

impl fmt::Display for HeightChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HeightChoice::Nu => "nu",
            HeightChoice::Minimal => "minimal",
        })
    }
}

impl FromStr for HeightChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nu" => Ok(HeightChoice::Nu),
            "minimal" => Ok(HeightChoice::Minimal),
            _ => Err(Error::Parse { line: 0, message: format!("unknown height choice `{s}`") }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TowerKind {
    A,
    B,
}

impl fmt::Display for TowerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TowerKind::A => "A",
            TowerKind::B => "B",
        })
    }
}

/// One projection of a tower with its augmented graph and chosen height.
#[derive(Debug, Clone)]
pub struct TowerLevel<T> {
    pub graph: ReebGraph,
    pub heights: HeightFunction<T>,
    pub choice: String,
}

/// An order-embedding realization built one coordinate per level.
#[derive(Debug, Clone)]
pub struct TowerRealization<T> {
    base: Arc<Poset>,
    levels: Vec<TowerLevel<T>>,
    // coords[k] realizes the poset at level k; coords[0] is the point.
    coords: Vec<CoordinateMap<T>>,
}

/// Corners of the box spanned by the section composites: `corners[mask]`
/// takes the top section at level `k + 1` iff bit `k` of `mask` is set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionCertificate<T> {
    pub corners: Vec<usize>,
    pub low: Vec<T>,
    pub high: Vec<T>,
}

impl<T: Scalar> TowerRealization<T> {
    pub fn levels(&self) -> &[TowerLevel<T>] {
        &self.levels
    }

    pub fn dim(&self) -> usize {
        self.levels.len()
    }

    /// Poset at level `k`; level 0 is the point.
    pub fn poset_at(&self, k: usize) -> &Arc<Poset> {
        match k {
            0 => &self.base,
            _ => self.levels[k - 1].graph.projection().domain(),
        }
    }

    pub fn poset(&self) -> &Arc<Poset> {
        self.poset_at(self.dim())
    }

    pub fn coordinates_at(&self, k: usize) -> &CoordinateMap<T> {
        &self.coords[k]
    }

    pub fn coordinates(&self) -> &CoordinateMap<T> {
        &self.coords[self.dim()]
    }

    /// Image at level `k` of an element of the top poset.
    pub fn project(&self, mut x: usize, k: usize) -> usize {
        for level in self.levels[k..].iter().rev() {
            x = level.graph.projection().image(x);
        }
        x
    }

    pub fn check(&self) -> Result<()> {
        check_cubic_realization(self.poset(), self.coordinates())?;
        check_order_embedding(self.poset(), self.coordinates())
    }

    /// `level <k> heights <choice>` per level.
    pub fn metadata(&self) -> String {
        self.levels
            .iter()
            .enumerate()
            .map(|(k, l)| format!("level {} heights {}\n", k + 1, l.choice))
            .collect()
    }

    pub fn to_tsv(&self) -> String {
        self.coordinates().to_text(self.poset())
    }

    pub fn dimension_certificate(&self) -> Result<DimensionCertificate<T>> {
        let d = self.dim();
        let sections = self
            .levels
            .iter()
            .map(|l| Ok((l.graph.projection().bottom_section()?, l.graph.projection().top_section()?)))
            .collect::<Result<Vec<_>>>()?;
        let corners: Vec<usize> = (0..1usize << d)
            .map(|mask| {
                sections.iter().enumerate().fold(0, |x, (k, (b, t))| if mask >> k & 1 == 1 { t[x] } else { b[x] })
            })
            .collect();
        let c = self.coordinates();
        let mut low = Vec::with_capacity(d);
        let mut high = Vec::with_capacity(d);
        for i in 0..d {
            let values: BTreeSet<&T> = corners.iter().map(|&x| &c.get(x)[i]).collect();
            if values.len() != 2 {
                return Err(Error::NotABox(format!("coordinate {i} takes {} values on the composites", values.len())));
            }
            let mut it = values.into_iter();
            low.push(it.next().unwrap().clone());
            high.push(it.next().unwrap().clone());
        }
        for (mask, &x) in corners.iter().enumerate() {
            if let Some(i) = (0..d).find(|&i| (c.get(x)[i] == high[i]) != (mask >> i & 1 == 1)) {
                return Err(Error::NotABox(format!("composite {mask} has coordinate {i} equal to {}", c.get(x)[i])));
            }
        }
        let cube = boolean_lattice(d);
        let p = self.poset();
        if find_subposet_isomorphic(p, &cube, &corners)?.is_none() {
            let n = corners.len();
            let (a, b) = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .find(|&(a, b)| cube.leq(a, b) != p.leq(corners[a], corners[b]) || (a != b && corners[a] == corners[b]))
                .expect("a mismatch exists when the check fails");
            return Err(Error::NotBoolean { a, b });
        }
        Ok(DimensionCertificate { corners, low, high })
    }
}

/// Builds a tower realization from the point `base` through the augmented
/// graphs `graphs`, taking `heights(level, graph)` at each level (1-based).
pub fn build_tower_with<T, F>(base: Arc<Poset>, graphs: Vec<ReebGraph>, mut heights: F) -> Result<TowerRealization<T>>
where
    T: Scalar,
    F: FnMut(usize, &ReebGraph) -> Result<(HeightFunction<T>, String)>,
{
    if base.len() != 1 {
        return Err(Error::SizeMismatch { expected: 1, found: base.len() });
    }
    let mut coords = vec![CoordinateMap::point()];
    let mut levels: Vec<TowerLevel<T>> = Vec::with_capacity(graphs.len());
    for (k, graph) in graphs.into_iter().enumerate() {
        let prev = levels.last().map_or(&base, |l| l.graph.projection().domain());
        let codomain = graph.projection().codomain();
        if !Arc::ptr_eq(prev, codomain) && **prev != **codomain {
            return Err(Error::TowerMismatch { level: k + 1 });
        }
        let (h, choice) = heights(k + 1, &graph)?;
        coords.push(extend_order_embedding(&coords[k], &graph, &h)?);
        levels.push(TowerLevel { graph, heights: h, choice });
    }
    Ok(TowerRealization { base, levels, coords })
}

fn augmented_graphs<W: CoxeterWord>(tower: &[Deletion<W>]) -> Result<Vec<ReebGraph>> {
    tower
        .iter()
        .map(|d| augmented_pre_reeb_with(d.projection(), &d.upper().inversion_oracle()))
        .collect()
}

fn choose<T: Scalar>(
    choice: HeightChoice,
    graph: &ReebGraph,
    nu: impl FnOnce() -> HeightFunction<T>,
) -> Result<(HeightFunction<T>, String)> {
    let h = match choice {
        HeightChoice::Nu => nu(),
        HeightChoice::Minimal => minimal_heights(graph.graph())?,
    };
    Ok((h, choice.to_string()))
}

fn tower_base<W: CoxeterWord>(tower: &[Deletion<W>], point: Vec<W>) -> Result<Arc<Poset>> {
    match tower.first() {
        Some(d) => Ok(d.lower().poset().clone()),
        None => Ok(WeakOrder::from_words(point)?.poset().clone()),
    }
}

/// The point base and the augmented graphs of the deletion tower of `kind`.
pub fn tower_graphs(kind: TowerKind, n: usize) -> Result<(Arc<Poset>, Vec<ReebGraph>)> {
    match kind {
        TowerKind::A => {
            if n == 0 {
                return Err(Error::RankTooSmall { rank: n, min: 1 });
            }
            let tower = tower_a(n)?;
            Ok((tower_base(&tower, perms(1)?)?, augmented_graphs(&tower)?))
        }
        TowerKind::B => {
            let tower = tower_b(n)?;
            Ok((tower_base(&tower, signed_perms(0)?)?, augmented_graphs(&tower)?))
        }
    }
}

/// The deletion tower of type A (`S_1 <- ... <- S_n`, `n - 1` coordinates)
/// or type B (`W_0 <- ... <- W_n`, `n` coordinates).
pub fn build_tower<T: Scalar>(kind: TowerKind, n: usize, choice: HeightChoice) -> Result<TowerRealization<T>> {
    match kind {
        TowerKind::A => {
            if n == 0 {
                return Err(Error::RankTooSmall { rank: n, min: 1 });
            }
            let tower = tower_a(n)?;
            let base = tower_base(&tower, perms(1)?)?;
            let graphs = augmented_graphs(&tower)?;
            build_tower_with(base, graphs, |k, g| choose(choice, g, || type_a::nu_heights(&tower[k - 1], g)))
        }
        TowerKind::B => {
            let tower = tower_b(n)?;
            let base = tower_base(&tower, signed_perms(0)?)?;
            let graphs = augmented_graphs(&tower)?;
            build_tower_with(base, graphs, |k, g| choose(choice, g, || type_b::nu_heights(&tower[k - 1], g)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::is_order_embedding;
    use crate::reeb::{augmented_pre_reeb, pre_reeb};
    use crate::tower::{deletion_a, deletion_b};
    use crate::weak::Word;

    fn word_index(d: &Deletion<Word>, s: &str) -> usize {
        d.upper().index_of(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn point_base_and_two_chain() {
        let d = deletion_a(2).unwrap();
        let g = augmented_pre_reeb(d.projection()).unwrap();
        let h = HeightFunction::new(vec![0i64, 1]);
        let c = extend_order_embedding(&CoordinateMap::point(), &g, &h).unwrap();
        assert_eq!(c.vectors(), &[vec![0], vec![1]]);
    }

    #[test]
    fn nu_lift_of_s3() {
        let t: TowerRealization<i64> = build_tower(TowerKind::A, 3, HeightChoice::Nu).unwrap();
        let p = t.poset();
        let i = p.labels().iter().position(|l| l == "3,2,1").unwrap();
        assert_eq!(t.coordinates().get(i), &[1, 3]);
        let i = p.labels().iter().position(|l| l == "1,2,3").unwrap();
        assert_eq!(t.coordinates().get(i), &[0, 0]);
        assert!(t.check().is_ok());
        assert_eq!(t.metadata(), "level 1 heights nu\nlevel 2 heights nu\n");
    }

    #[test]
    fn trivial_towers() {
        let t: TowerRealization<i64> = build_tower(TowerKind::A, 1, HeightChoice::Minimal).unwrap();
        assert_eq!((t.poset().len(), t.dim()), (1, 0));
        assert_eq!(t.to_tsv(), "1\t\n");
        let t: TowerRealization<i64> = build_tower(TowerKind::B, 0, HeightChoice::Minimal).unwrap();
        assert_eq!(t.poset().len(), 1);
    }

    #[test]
    fn non_monotone_height_rejected() {
        let d = deletion_a(3).unwrap();
        let g = augmented_pre_reeb(d.projection()).unwrap();
        let base = build_tower::<i64>(TowerKind::A, 2, HeightChoice::Nu).unwrap();
        // classes ∅ and {1} get the same height
        let mut values = type_a::nu_heights::<i64>(&d, &g).values().to_vec();
        let c1 = g.class_of(word_index(&d, "1 3 2"));
        let c0 = g.class_of(word_index(&d, "1 2 3"));
        values[c1] = values[c0];
        let h = HeightFunction::new(values);
        let err = extend_order_embedding(base.coordinates(), &g, &h).unwrap_err();
        assert!(matches!(err, Error::HeightNotMonotone { from, to, .. } if from == c0 && to == c1));
    }

    #[test]
    fn decompose_inverts_extend() {
        let d = deletion_a(3).unwrap();
        let g = pre_reeb(d.projection()).unwrap();
        let base = build_tower::<i64>(TowerKind::A, 2, HeightChoice::Nu).unwrap();
        let h = minimal_heights::<i64>(g.graph()).unwrap();
        let c = extend_cubic(base.coordinates(), &g, &h).unwrap();
        let (c_q, h2) = decompose(&c, &g).unwrap();
        assert_eq!(&c_q, base.coordinates());
        assert_eq!(h2, h);

        let swapped = CoordinateMap::new(2, c.vectors().iter().map(|v| vec![v[1], v[0]]).collect()).unwrap();
        assert!(matches!(decompose(&swapped, &g), Err(Error::NotCompatible { .. })));
    }

    #[test]
    fn minimal_heights_on_boolean_reeb_graph() {
        let d = deletion_a(4).unwrap();
        let g = pre_reeb(d.projection()).unwrap();
        let h = minimal_heights::<i64>(g.graph()).unwrap();
        for c in 0..g.class_count() {
            let w = d.upper().word(g.partition().representative(c));
            assert_eq!(*h.get(c), type_a::class_subset(w).len() as i64);
        }
    }

    #[test]
    fn requires_augmented_graph() {
        let d = deletion_a(2).unwrap();
        let g = pre_reeb(d.projection()).unwrap();
        let h = HeightFunction::new(vec![0i64, 1]);
        assert!(matches!(extend_order_embedding(&CoordinateMap::point(), &g, &h), Err(Error::RequiresAugmented)));
        assert!(matches!(uniqueness_check(&g, &h, &h), Err(Error::RequiresAugmented)));
    }

    #[test]
    fn uniqueness_in_type_b() {
        let d = deletion_b(3).unwrap();
        let g = augmented_pre_reeb(d.projection()).unwrap();
        let nu = type_b::nu_heights::<i64>(&d, &g);
        let min = minimal_heights::<i64>(g.graph()).unwrap();
        assert_ne!(nu, min);
        assert!(uniqueness_check(&g, &nu, &min).unwrap());
    }

    #[test]
    fn certificate_for_small_towers() {
        let t: TowerRealization<i64> = build_tower(TowerKind::A, 3, HeightChoice::Minimal).unwrap();
        let cert = t.dimension_certificate().unwrap();
        assert_eq!(cert.corners.len(), 4);
        assert_eq!(cert.low, vec![0, 0]);
        let t: TowerRealization<i64> = build_tower(TowerKind::B, 2, HeightChoice::Minimal).unwrap();
        let cert = t.dimension_certificate().unwrap();
        let labels: Vec<&str> = cert.corners.iter().map(|&x| t.poset().label(x)).collect();
        assert_eq!(labels, ["1,2", "-1,2", "1,-2", "-1,-2"]);
        assert!(is_order_embedding(t.poset(), t.coordinates()));
    }

    #[test]
    fn wide_scalars() {
        let t: TowerRealization<i128> = build_tower(TowerKind::B, 2, HeightChoice::Nu).unwrap();
        assert!(t.check().is_ok());
    }
}
