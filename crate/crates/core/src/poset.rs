//! Finite posets given by Hasse diagrams, directed graphs with tagged edges,
//! and integer coordinate maps together with the realization checks.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::error::{Error, Result, Violation};
use crate::scalar::{componentwise_le, Scalar};

/// Returns a topological order of the vertices `0..adj.len()`, or the vertex
/// list of some directed cycle.
pub(crate) fn topological_order(adj: &[Vec<usize>]) -> std::result::Result<Vec<usize>, Vec<usize>> {
    const NEW: u8 = 0;
    const OPEN: u8 = 1;
    const DONE: u8 = 2;
    let n = adj.len();
    let mut state = vec![NEW; n];
    let mut post = Vec::with_capacity(n);
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if state[root] != NEW {
            continue;
        }
        state[root] = OPEN;
        stack.push((root, 0));
        while let Some(top) = stack.len().checked_sub(1) {
            let (v, next) = stack[top];
            if next < adj[v].len() {
                stack[top].1 += 1;
                let w = adj[v][next];
                match state[w] {
                    NEW => {
                        state[w] = OPEN;
                        stack.push((w, 0));
                    }
                    OPEN => {
                        let start = stack.iter().position(|&(u, _)| u == w).unwrap();
                        return Err(stack[start..].iter().map(|&(u, _)| u).collect());
                    }
                    _ => {}
                }
            } else {
                state[v] = DONE;
                post.push(v);
                stack.pop();
            }
        }
    }
    post.reverse();
    Ok(post)
}

/// `{}` or `{1,3}` for a bitmask where bit `i - 1` stands for `i`.
pub(crate) fn format_subset(mask: u64) -> String {
    let items: Vec<String> = (0..64)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| (b + 1).to_string())
        .collect();
    format!("{{{}}}", items.join(","))
}

/// A finite poset stored as its Hasse diagram plus a precomputed reachability
/// matrix.
#[derive(Debug, Clone)]
pub struct Poset {
    ids: Vec<u64>,
    labels: Vec<String>,
    covers: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    // above[x] holds every y with x <= y.
    above: Vec<FixedBitSet>,
    id_index: HashMap<u64, usize>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.ids == other.ids && self.labels == other.labels && self.covers == other.covers
    }
}

impl Eq for Poset {}

/// Result of [`build_poset`]: the poset and the input pairs dropped as
/// transitively implied.
#[derive(Debug, Clone)]
pub struct BuiltPoset {
    pub poset: Poset,
    pub removed: Vec<(u64, u64)>,
}

/// Builds a poset from element ids with labels and a (possibly redundant)
/// cover relation.
pub fn build_poset(elements: &[(u64, String)], covers: &[(u64, u64)]) -> Result<BuiltPoset> {
    let mut id_index = HashMap::with_capacity(elements.len());
    for (i, (id, _)) in elements.iter().enumerate() {
        if id_index.insert(*id, i).is_some() {
            return Err(Error::DuplicateElement(*id));
        }
    }
    let lookup = |id: u64| {
        id_index
            .get(&id)
            .copied()
            .ok_or_else(|| Error::UnknownElement(id.to_string()))
    };
    let indexed = covers
        .iter()
        .map(|&(a, b)| Ok((lookup(a)?, lookup(b)?)))
        .collect::<Result<Vec<_>>>()?;
    let ids = elements.iter().map(|(id, _)| *id).collect();
    let labels = elements.iter().map(|(_, l)| l.clone()).collect();
    let (poset, removed) = Poset::assemble(ids, labels, indexed)?;
    let removed = removed
        .into_iter()
        .map(|(a, b)| (poset.ids[a], poset.ids[b]))
        .collect();
    Ok(BuiltPoset { poset, removed })
}

impl Poset {
    /// Builds a poset whose ids are the positions `0..labels.len()`.
    /// Transitively implied pairs are dropped silently.
    pub fn from_relations(
        labels: Vec<String>,
        relations: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let n = labels.len();
        let pairs: Vec<_> = relations.into_iter().collect();
        if let Some(&(a, b)) = pairs.iter().find(|&&(a, b)| a >= n || b >= n) {
            return Err(Error::UnknownElement(a.max(b).to_string()));
        }
        Ok(Self::assemble((0..n as u64).collect(), labels, pairs)?.0)
    }

    fn assemble(
        ids: Vec<u64>,
        labels: Vec<String>,
        pairs: Vec<(usize, usize)>,
    ) -> Result<(Self, Vec<(usize, usize)>)> {
        let n = labels.len();
        let pairs: BTreeSet<(usize, usize)> = pairs.into_iter().collect();
        let mut out = vec![Vec::new(); n];
        for &(a, b) in &pairs {
            out[a].push(b);
        }
        let order = topological_order(&out)
            .map_err(|cycle| Error::CycleDetected(cycle.iter().map(|&v| labels[v].clone()).collect()))?;

        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for &v in order.iter().rev() {
            let mut row = FixedBitSet::with_capacity(n);
            row.insert(v);
            for &w in &out[v] {
                row.union_with(&above[w]);
            }
            above[v] = row;
        }

        let mut covers = Vec::with_capacity(pairs.len());
        let mut removed = Vec::new();
        for &(a, b) in &pairs {
            if out[a].iter().any(|&z| z != b && above[z].contains(b)) {
                removed.push((a, b));
            } else {
                covers.push((a, b));
            }
        }

        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(a, b) in &covers {
            up[a].push(b);
            down[b].push(a);
        }
        for list in down.iter_mut() {
            list.sort_unstable();
        }
        let id_index = ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
        Ok((
            Poset { ids, labels, covers, up, down, above, id_index },
            removed,
        ))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn id(&self, x: usize) -> u64 {
        self.ids[x]
    }

    pub fn index_of_id(&self, id: u64) -> Option<usize> {
        self.id_index.get(&id).copied()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Cover pairs, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    pub fn is_cover(&self, x: usize, y: usize) -> bool {
        self.up[x].binary_search(&y).is_ok()
    }

    /// Reflexive reachability along covers.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    /// Number of `y` with `x <= y`.
    pub fn up_set_size(&self, x: usize) -> usize {
        self.above[x].count_ones(..)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `leq` addressed by element ids.
    pub fn leq_ids(&self, x: u64, y: u64) -> Result<bool> {
        let ix = self.index_of_id(x).ok_or_else(|| Error::UnknownElement(x.to_string()))?;
        let iy = self.index_of_id(y).ok_or_else(|| Error::UnknownElement(y.to_string()))?;
        Ok(self.leq(ix, iy))
    }

    /// First incomparable pair, if any.
    pub fn incomparable_pair(&self) -> Option<(usize, usize)> {
        (0..self.len())
            .flat_map(|x| (x + 1..self.len()).map(move |y| (x, y)))
            .find(|&(x, y)| !self.comparable(x, y))
    }

    pub fn is_total_order(&self) -> bool {
        self.incomparable_pair().is_none()
    }

    /// Elements with no lower cover.
    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.down[x].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.up[x].is_empty()).collect()
    }

    /// The Hasse diagram as a digraph with plain edges.
    pub fn hasse_digraph(&self) -> Digraph {
        let mut g = Digraph::new(self.labels.clone());
        for &(a, b) in &self.covers {
            g.add_edge(a, b, EdgeKind::Plain);
        }
        g
    }

    /// Line-based text form: `p <n> <m>`, then `e <id> <label>` and
    /// `c <src-id> <dst-id>` lines.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "p {} {}", self.len(), self.covers.len()).unwrap();
        for (id, label) in self.ids.iter().zip(&self.labels) {
            writeln!(s, "e {id} {label}").unwrap();
        }
        for &(a, b) in &self.covers {
            writeln!(s, "c {} {}", self.ids[a], self.ids[b]).unwrap();
        }
        s
    }

    /// Parses the text form written by [`Poset::to_text`].
    pub fn parse(text: &str) -> Result<BuiltPoset> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
        let (poset, rest) = parse_poset_block(&mut lines)?;
        if let Some((line, l)) = rest {
            return Err(Error::Parse { line, message: format!("unexpected trailing line `{l}`") });
        }
        Ok(poset)
    }
}

/// A source of `x <= y` answers over element indices.
pub trait OrderOracle: Sync {
    fn leq(&self, x: usize, y: usize) -> bool;

    fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }
}

impl OrderOracle for Poset {
    fn leq(&self, x: usize, y: usize) -> bool {
        Poset::leq(self, x, y)
    }
}

/// Parses one poset block; returns the first line after it that is not blank.
pub(crate) fn parse_poset_block<'t, I>(
    lines: &mut I,
) -> Result<(BuiltPoset, Option<(usize, &'t str)>)>
where
    I: Iterator<Item = (usize, &'t str)>,
{
    let mut header = None;
    for (line, l) in lines.by_ref() {
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        header = Some((line, l));
        break;
    }
    let (hline, h) = header.ok_or(Error::Parse { line: 0, message: "missing `p` header".into() })?;
    let fields: Vec<&str> = h.split_whitespace().collect();
    if fields.len() != 3 || fields[0] != "p" {
        return Err(Error::Parse { line: hline, message: format!("expected `p <n> <m>`, found `{h}`") });
    }
    let parse_num = |s: &str, line: usize| {
        s.parse::<u64>()
            .map_err(|_| Error::Parse { line, message: format!("invalid number `{s}`") })
    };
    let n = parse_num(fields[1], hline)? as usize;
    let m = parse_num(fields[2], hline)? as usize;
    let mut elements = Vec::with_capacity(n);
    let mut covers = Vec::with_capacity(m);
    let mut trailing = None;
    for (line, l) in lines.by_ref() {
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        if elements.len() == n && covers.len() == m {
            trailing = Some((line, l));
            break;
        }
        let fields: Vec<&str> = l.split_whitespace().collect();
        match fields.as_slice() {
            ["e", id, label] if elements.len() < n => {
                elements.push((parse_num(id, line)?, label.to_string()))
            }
            ["c", a, b] if covers.len() < m => covers.push((parse_num(a, line)?, parse_num(b, line)?)),
            _ => return Err(Error::Parse { line, message: format!("unexpected line `{l}`") }),
        }
    }
    if elements.len() != n || covers.len() != m {
        return Err(Error::Parse {
            line: hline,
            message: format!(
                "header announces {n} elements and {m} covers, found {} and {}",
                elements.len(),
                covers.len()
            ),
        });
    }
    Ok((build_poset(&elements, &covers)?, trailing))
}

/// The Boolean lattice of subsets of `[n]`; element `mask` is the subset with
/// bit `i - 1` set for each member `i`.
pub fn boolean_lattice(n: usize) -> Poset {
    assert!(n < 32, "Boolean lattice rank {n} is too large");
    let size = 1usize << n;
    let labels = (0..size).map(|m| format_subset(m as u64)).collect();
    let covers = (0..size).flat_map(|m| {
        (0..n).filter(move |b| m >> b & 1 == 0).map(move |b| (m, m | 1 << b))
    });
    Poset::from_relations(labels, covers.collect::<Vec<_>>()).expect("Boolean lattice is acyclic")
}

/// Checks that `candidates[i]` realizes element `i` of `q`, i.e. the order
/// induced on `candidates` is the order of `q` under this labeling.
/// Returns the mapping from `q` indices to `p` indices.
pub fn find_subposet_isomorphic(p: &Poset, q: &Poset, candidates: &[usize]) -> Result<Option<Vec<usize>>> {
    if candidates.len() != q.len() {
        return Err(Error::SizeMismatch { expected: q.len(), found: candidates.len() });
    }
    if let Some(&bad) = candidates.iter().find(|&&c| c >= p.len()) {
        return Err(Error::UnknownElement(bad.to_string()));
    }
    let distinct: BTreeSet<_> = candidates.iter().collect();
    if distinct.len() != candidates.len() {
        return Ok(None);
    }
    let agrees = (0..q.len()).all(|i| {
        (0..q.len()).all(|j| q.leq(i, j) == p.leq(candidates[i], candidates[j]))
    });
    Ok(agrees.then(|| candidates.to_vec()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    Plain,
    Vertical,
    Auxiliary,
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeKind::Plain => "plain",
            EdgeKind::Vertical => "vertical",
            EdgeKind::Auxiliary => "auxiliary",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub kind: EdgeKind,
}

/// Directed graph on labeled vertices `0..n` with kind-tagged edges. Parallel
/// edges of the same kind collapse; edges of different kinds coexist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    labels: Vec<String>,
    edges: BTreeSet<Edge>,
}

impl Digraph {
    pub fn new(labels: Vec<String>) -> Self {
        Digraph { labels, edges: BTreeSet::new() }
    }

    /// Adds an edge; returns false if an edge of the same kind was present.
    pub fn add_edge(&mut self, from: usize, to: usize, kind: EdgeKind) -> bool {
        assert!(
            from < self.labels.len() && to < self.labels.len(),
            "edge {from}->{to} out of range"
        );
        self.edges.insert(Edge { from, to, kind })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.labels.len());
        self.labels = labels;
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.iter()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, from: usize, to: usize, kind: EdgeKind) -> bool {
        self.edges.contains(&Edge { from, to, kind })
    }

    /// Edge present with any kind.
    pub fn connects(&self, from: usize, to: usize) -> bool {
        self.edges.range(Edge { from, to, kind: EdgeKind::Plain }..=Edge { from, to, kind: EdgeKind::Auxiliary }).next().is_some()
    }

    /// Distinct `(from, to)` pairs irrespective of kind.
    pub fn arcs(&self) -> BTreeSet<(usize, usize)> {
        self.edges.iter().map(|e| (e.from, e.to)).collect()
    }

    /// Out-neighbors per vertex, ignoring kinds.
    pub fn successors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.labels.len()];
        for (a, b) in self.arcs() {
            adj[a].push(b);
        }
        adj
    }

    pub fn predecessors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.labels.len()];
        for (a, b) in self.arcs() {
            adj[b].push(a);
        }
        adj
    }

    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        topological_order(&self.successors()).err()
    }

    pub fn is_acyclic(&self) -> bool {
        self.find_cycle().is_none()
    }

    pub fn topological_order(&self) -> Result<Vec<usize>> {
        topological_order(&self.successors()).map_err(|cycle| Error::NotAcyclic { cycle })
    }

    /// The poset of directed reachability; its covers are the transitive
    /// reduction of the graph.
    pub fn reachability_poset(&self) -> Result<Poset> {
        if let Some(cycle) = self.find_cycle() {
            return Err(Error::NotAcyclic { cycle });
        }
        Poset::from_relations(self.labels.clone(), self.arcs())
    }

    /// `v <id> <label>` and `g <src> <dst> <kind>` lines.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (i, label) in self.labels.iter().enumerate() {
            writeln!(s, "v {i} {label}").unwrap();
        }
        for e in &self.edges {
            writeln!(s, "g {} {} {}", e.from, e.to, e.kind).unwrap();
        }
        s
    }

    /// Graphviz rendering. Auxiliary edges are dashed. When `ranks` is given,
    /// vertices of equal rank are placed on one row.
    pub fn to_dot(&self, name: &str, ranks: Option<&[usize]>) -> String {
        let mut s = String::new();
        writeln!(s, "digraph {name} {{").unwrap();
        writeln!(s, "  rankdir=BT;").unwrap();
        for (i, label) in self.labels.iter().enumerate() {
            writeln!(s, "  n{i} [label=\"{}\"];", label.replace('"', "\\\"")).unwrap();
        }
        if let Some(ranks) = ranks {
            let max = ranks.iter().copied().max().unwrap_or(0);
            for r in 0..=max {
                let members: Vec<String> = (0..ranks.len())
                    .filter(|&i| ranks[i] == r)
                    .map(|i| format!("n{i}"))
                    .collect();
                if !members.is_empty() {
                    writeln!(s, "  {{ rank=same; {}; }}", members.join("; ")).unwrap();
                }
            }
        }
        for e in &self.edges {
            let style = match e.kind {
                EdgeKind::Auxiliary => " [style=dashed]",
                _ => "",
            };
            writeln!(s, "  n{} -> n{}{style};", e.from, e.to).unwrap();
        }
        s.push_str("}\n");
        s
    }
}

/// Assignment of a coordinate vector of fixed length to every element of a
/// poset, indexed like the poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateMap<T> {
    dim: usize,
    coords: Vec<Vec<T>>,
}

impl<T: Scalar> CoordinateMap<T> {
    pub fn new(dim: usize, coords: Vec<Vec<T>>) -> Result<Self> {
        if let Some((index, v)) = coords.iter().enumerate().find(|(_, v)| v.len() != dim) {
            return Err(Violation::DimensionMismatch { index, expected: dim, found: v.len() }.into());
        }
        Ok(CoordinateMap { dim, coords })
    }

    /// The realization of a one-point poset by the empty vector.
    pub fn point() -> Self {
        CoordinateMap { dim: 0, coords: vec![Vec::new()] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn get(&self, x: usize) -> &[T] {
        &self.coords[x]
    }

    pub fn vectors(&self) -> &[Vec<T>] {
        &self.coords
    }

    /// One line per element: `<label>\t<c1>,...,<cd>`.
    pub fn to_text(&self, p: &Poset) -> String {
        let mut s = String::new();
        for (x, v) in self.coords.iter().enumerate() {
            let cells: Vec<String> = v.iter().map(|c| c.to_string()).collect();
            writeln!(s, "{}\t{}", p.label(x), cells.join(",")).unwrap();
        }
        s
    }

    /// Parses the text form against the labels of `p`. Every element must be
    /// assigned exactly once.
    pub fn parse(p: &Poset, text: &str) -> Result<Self> {
        let by_label: HashMap<&str, usize> =
            p.labels().iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let mut coords: Vec<Option<Vec<T>>> = vec![None; p.len()];
        let mut dim = None;
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let (label, cells) = line
                .split_once('\t')
                .ok_or(Error::Parse { line: line_no, message: "missing tab".into() })?;
            let x = *by_label
                .get(label)
                .ok_or_else(|| Error::UnknownElement(label.to_string()))?;
            let v = if cells.trim().is_empty() {
                Vec::new()
            } else {
                cells
                    .split(',')
                    .map(|c| {
                        c.trim().parse::<T>().map_err(|_| Error::Parse {
                            line: line_no,
                            message: format!("invalid coordinate `{c}`"),
                        })
                    })
                    .collect::<Result<Vec<T>>>()?
            };
            let d = *dim.get_or_insert(v.len());
            if v.len() != d {
                return Err(Violation::DimensionMismatch { index: x, expected: d, found: v.len() }.into());
            }
            if coords[x].replace(v).is_some() {
                return Err(Error::Parse { line: line_no, message: format!("`{label}` assigned twice") });
            }
        }
        let coords = coords
            .into_iter()
            .enumerate()
            .map(|(index, v)| v.ok_or(Error::MissingElement { index }))
            .collect::<Result<Vec<_>>>()?;
        CoordinateMap::new(dim.unwrap_or(0), coords)
    }
}

fn check_assigned<T: Scalar>(p: &Poset, c: &CoordinateMap<T>) -> Result<()> {
    if c.len() < p.len() {
        return Err(Error::MissingElement { index: c.len() });
    }
    if c.len() > p.len() {
        return Err(Error::SizeMismatch { expected: p.len(), found: c.len() });
    }
    Ok(())
}

/// Checks injectivity and that every cover changes exactly one coordinate,
/// increasing it.
pub fn check_cubic_realization<T: Scalar>(p: &Poset, c: &CoordinateMap<T>) -> Result<()> {
    check_assigned(p, c)?;
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by(|&a, &b| c.get(a).cmp(c.get(b)).then(a.cmp(&b)));
    if let Some(w) = order.windows(2).find(|w| c.get(w[0]) == c.get(w[1])) {
        return Err(Violation::NotInjective { first: w[0].min(w[1]), second: w[0].max(w[1]) }.into());
    }
    for &(from, to) in p.covers() {
        let (a, b) = (c.get(from), c.get(to));
        let mut changed = (0..c.dim()).filter(|&i| a[i] != b[i]);
        match (changed.next(), changed.next()) {
            (None, _) => return Err(Violation::CoverUnchanged { from, to }.into()),
            (Some(i), Some(j)) => {
                return Err(Violation::CoverChangesSeveral { from, to, coords: (i, j) }.into())
            }
            (Some(coord), None) if a[coord] > b[coord] => {
                return Err(Violation::CoverDecreases { from, to, coord }.into())
            }
            _ => {}
        }
    }
    Ok(())
}

pub fn is_cubic_realization<T: Scalar>(p: &Poset, c: &CoordinateMap<T>) -> bool {
    check_cubic_realization(p, c).is_ok()
}

/// Checks `x <= y  <=>  c(x) <= c(y)` componentwise over all ordered pairs.
/// The reported witness has the smallest `x`, then the smallest `y`.
pub fn check_order_embedding<T: Scalar>(p: &Poset, c: &CoordinateMap<T>) -> Result<()> {
    check_assigned(p, c)?;
    let witness = (0..p.len()).into_par_iter().find_map_first(|x| {
        (0..p.len()).find_map(|y| {
            let in_poset = p.leq(x, y);
            let in_coords = componentwise_le(c.get(x), c.get(y));
            match (in_poset, in_coords) {
                (true, false) => Some(Violation::OrderNotPreserved { x, y }),
                (false, true) => Some(Violation::OrderNotReflected { x, y }),
                _ => None,
            }
        })
    });
    match witness {
        Some(v) => Err(v.into()),
        None => Ok(()),
    }
}

pub fn is_order_embedding<T: Scalar>(p: &Poset, c: &CoordinateMap<T>) -> bool {
    check_order_embedding(p, c).is_ok()
}
