//! Horizontal classes of a projection, the pre-Reeb graph and its augmented
//! version with auxiliary edges.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poset::{Digraph, EdgeKind, OrderOracle, Poset};
use crate::tower::Projection;

/// Domain covers split by whether their image is a cover or an equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverClassification {
    pub horizontal: Vec<(usize, usize)>,
    pub vertical: Vec<(usize, usize)>,
}

pub fn classify_covers(pr: &Projection) -> Result<CoverClassification> {
    let mut out = CoverClassification { horizontal: Vec::new(), vertical: Vec::new() };
    for &(a, b) in pr.domain().covers() {
        let (qa, qb) = (pr.image(a), pr.image(b));
        if qa == qb {
            out.vertical.push((a, b));
        } else if pr.codomain().is_cover(qa, qb) {
            out.horizontal.push((a, b));
        } else {
            return Err(Error::CoverConditionViolated { from: a, to: b });
        }
    }
    Ok(out)
}

/// Connected components of the horizontal covers. Class ids follow the
/// smallest member index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HorizontalPartition {
    class_of: Vec<usize>,
    members: Vec<Vec<usize>>,
}

impl HorizontalPartition {
    fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b) in edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            // keep the smaller index as root
            if ra < rb {
                parent[rb] = ra;
            } else if rb < ra {
                parent[ra] = rb;
            }
        }
        let mut members: Vec<Vec<usize>> = Vec::new();
        let mut root_class = vec![usize::MAX; n];
        let class_of = (0..n)
            .map(|x| {
                let r = find(&mut parent, x);
                if root_class[r] == usize::MAX {
                    root_class[r] = members.len();
                    members.push(Vec::new());
                }
                members[root_class[r]].push(x);
                root_class[r]
            })
            .collect();
        HorizontalPartition { class_of, members }
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn classes(&self) -> &[usize] {
        &self.class_of
    }

    pub fn members(&self, c: usize) -> &[usize] {
        &self.members[c]
    }

    /// Smallest member of class `c`.
    pub fn representative(&self, c: usize) -> usize {
        self.members[c][0]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn horizontal_classes(pr: &Projection) -> Result<HorizontalPartition> {
    let covers = classify_covers(pr)?;
    Ok(HorizontalPartition::from_edges(pr.domain().len(), &covers.horizontal))
}

/// A pre-Reeb graph, optionally augmented, with one witness per edge.
#[derive(Debug, Clone)]
pub struct ReebGraph {
    projection: Arc<Projection>,
    partition: HorizontalPartition,
    graph: Digraph,
    // class pair -> first vertical cover realizing it
    vertical: BTreeMap<(usize, usize), (usize, usize)>,
    // class pair -> first incomparable, strictly π-decreasing element pair
    auxiliary: BTreeMap<(usize, usize), (usize, usize)>,
    augmented: bool,
}

impl ReebGraph {
    pub fn projection(&self) -> &Arc<Projection> {
        &self.projection
    }

    pub fn partition(&self) -> &HorizontalPartition {
        &self.partition
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn is_augmented(&self) -> bool {
        self.augmented
    }

    pub fn class_count(&self) -> usize {
        self.partition.len()
    }

    /// Class of a domain element.
    pub fn class_of(&self, x: usize) -> usize {
        self.partition.class_of(x)
    }

    pub fn vertical_witnesses(&self) -> &BTreeMap<(usize, usize), (usize, usize)> {
        &self.vertical
    }

    pub fn auxiliary_witnesses(&self) -> &BTreeMap<(usize, usize), (usize, usize)> {
        &self.auxiliary
    }

    /// Replaces the vertex labels, e.g. by a class parameterization.
    pub fn relabel(&mut self, label: impl Fn(usize) -> String) {
        let labels = (0..self.class_count()).map(label).collect();
        self.graph.set_labels(labels);
    }

    pub fn reachability_poset(&self) -> Result<Poset> {
        self.graph.reachability_poset()
    }

    /// Re-checks every stored auxiliary witness against `oracle`.
    pub fn check_auxiliary_witnesses(&self, oracle: &dyn OrderOracle) -> Result<(), String> {
        let codomain = self.projection.codomain();
        for (&(a, b), &(v, w)) in &self.auxiliary {
            if self.class_of(v) != a || self.class_of(w) != b {
                return Err(format!("witness ({v},{w}) does not lie over edge {a}->{b}"));
            }
            if !codomain.lt(self.projection.image(w), self.projection.image(v)) {
                return Err(format!("witness ({v},{w}) is not strictly decreasing under the projection"));
            }
            if oracle.comparable(v, w) {
                return Err(format!("witness ({v},{w}) is comparable"));
            }
        }
        Ok(())
    }
}

fn vertical_edges(pr: &Projection, partition: &HorizontalPartition) -> Result<BTreeMap<(usize, usize), (usize, usize)>> {
    let covers = classify_covers(pr)?;
    let mut edges = BTreeMap::new();
    for (a, b) in covers.vertical {
        edges.entry((partition.class_of(a), partition.class_of(b))).or_insert((a, b));
    }
    Ok(edges)
}

/// Class pairs `[v] -> [w]` over all element pairs with `π(w) < π(v)` and
/// `v`, `w` incomparable according to `oracle`, with the lexicographically
/// first witness.
pub fn auxiliary_edges(
    pr: &Projection,
    partition: &HorizontalPartition,
    oracle: &dyn OrderOracle,
) -> BTreeMap<(usize, usize), (usize, usize)> {
    let n = pr.domain().len();
    let codomain = pr.codomain();
    type Row = Vec<((usize, usize), (usize, usize))>;
    let rows: Vec<Row> = (0..n)
        .into_par_iter()
        .map(|v| {
            let qv = pr.image(v);
            (0..n)
                .filter(|&w| codomain.lt(pr.image(w), qv) && !oracle.comparable(v, w))
                .map(|w| ((partition.class_of(v), partition.class_of(w)), (v, w)))
                .collect()
        })
        .collect();
    let mut edges = BTreeMap::new();
    for (pair, witness) in rows.into_iter().flatten() {
        edges.entry(pair).or_insert(witness);
    }
    edges
}

fn class_labels(partition: &HorizontalPartition) -> Vec<String> {
    (0..partition.len()).map(|c| c.to_string()).collect()
}

/// The pre-Reeb graph `R(π)`: vertical edges only.
pub fn pre_reeb(pr: &Arc<Projection>) -> Result<ReebGraph> {
    let partition = horizontal_classes(pr)?;
    let vertical = vertical_edges(pr, &partition)?;
    let mut graph = Digraph::new(class_labels(&partition));
    for &(a, b) in vertical.keys() {
        graph.add_edge(a, b, EdgeKind::Vertical);
    }
    Ok(ReebGraph {
        projection: pr.clone(),
        partition,
        graph,
        vertical,
        auxiliary: BTreeMap::new(),
        augmented: false,
    })
}

/// The augmented pre-Reeb graph using `oracle` for incomparability.
pub fn augmented_pre_reeb_with(pr: &Arc<Projection>, oracle: &dyn OrderOracle) -> Result<ReebGraph> {
    let mut g = pre_reeb(pr)?;
    g.auxiliary = auxiliary_edges(pr, &g.partition, oracle);
    for &(a, b) in g.auxiliary.keys() {
        g.graph.add_edge(a, b, EdgeKind::Auxiliary);
    }
    g.augmented = true;
    Ok(g)
}

/// The augmented pre-Reeb graph `R̂(π)`, using the domain reachability.
pub fn augmented_pre_reeb(pr: &Arc<Projection>) -> Result<ReebGraph> {
    let domain = pr.domain().clone();
    augmented_pre_reeb_with(pr, domain.as_ref())
}

pub fn reeb_poset(pr: &Arc<Projection>) -> Result<Poset> {
    pre_reeb(pr)?.reachability_poset()
}

pub fn augmented_reeb_poset(pr: &Arc<Projection>) -> Result<Poset> {
    augmented_pre_reeb(pr)?.reachability_poset()
}
