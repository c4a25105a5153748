//! Projections between posets, the cylindricity conditions, fibers and
//! sections, and the deletion projections of the weak orders.

use std::fmt;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poset::{parse_poset_block, Poset};
use crate::report::Report;
use crate::weak::{signed_perms, perms, CoxeterWord, SignedWord, WeakOrder, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Section {
    Bottom,
    Top,
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Section::Bottom => "bottom",
            Section::Top => "top",
        })
    }
}

/// Witness for a failed cylindricity condition. Domain elements and codomain
/// elements are given by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CylindricityFailure {
    /// Domain cover whose image is neither an equality nor a cover.
    CoverNotPreserved { from: usize, to: usize },
    FiberTooSmall { base: usize, size: usize },
    FiberNotChain { base: usize, a: usize, b: usize },
    /// Codomain cover `from -> to` whose section image is not a domain cover.
    SectionNotCover { section: Section, from: usize, to: usize },
    /// Domain cover between section images over the codomain pair
    /// `from, to`, which is not a codomain cover.
    SectionNotInduced { section: Section, from: usize, to: usize },
    /// Sections need every fiber to be a chain.
    SectionsUndefined,
}

impl fmt::Display for CylindricityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::CoverNotPreserved { from, to } => {
                write!(f, "cover {from}->{to} maps to neither an equality nor a cover")
            }
            Self::FiberTooSmall { base, size } => write!(f, "fiber over {base} has {size} elements"),
            Self::FiberNotChain { base, a, b } => {
                write!(f, "fiber over {base} is not a chain: {a} and {b} are incomparable")
            }
            Self::SectionNotCover { section, from, to } => {
                write!(f, "{section} section does not send cover {from}->{to} to a cover")
            }
            Self::SectionNotInduced { section, from, to } => write!(
                f,
                "{section} section images over {from},{to} form a cover although {from}->{to} is not one"
            ),
            Self::SectionsUndefined => f.write_str("sections undefined since some fiber is not a chain"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CylindricityReport {
    pub cover_condition: Result<(), CylindricityFailure>,
    pub fiber_condition: Result<(), CylindricityFailure>,
    pub section_condition: Result<(), CylindricityFailure>,
}

impl CylindricityReport {
    pub fn passed(&self) -> bool {
        self.first_failure().is_none()
    }

    pub fn first_failure(&self) -> Option<&CylindricityFailure> {
        [&self.cover_condition, &self.fiber_condition, &self.section_condition]
            .into_iter()
            .find_map(|c| c.as_ref().err())
    }

    pub fn to_report(&self, prefix: &str) -> Report {
        let mut r = Report::new();
        for (name, cond) in [
            ("cover condition", &self.cover_condition),
            ("fiber condition", &self.fiber_condition),
            ("section condition", &self.section_condition),
        ] {
            r.record(format!("{prefix}{name}"), cond.clone().map_err(|e| e.to_string()));
        }
        r
    }
}

/// A map between finite posets, stored with its fibers.
#[derive(Debug, Clone)]
pub struct Projection {
    domain: Arc<Poset>,
    codomain: Arc<Poset>,
    map: Vec<usize>,
    // Fiber members in increasing index order.
    fibers: Vec<Vec<usize>>,
}

impl Projection {
    pub fn new(domain: Arc<Poset>, codomain: Arc<Poset>, map: Vec<usize>) -> Result<Self> {
        if map.len() != domain.len() {
            return Err(Error::SizeMismatch { expected: domain.len(), found: map.len() });
        }
        let mut fibers = vec![Vec::new(); codomain.len()];
        for (x, &q) in map.iter().enumerate() {
            fibers
                .get_mut(q)
                .ok_or_else(|| Error::UnknownElement(q.to_string()))?
                .push(x);
        }
        Ok(Projection { domain, codomain, map, fibers })
    }

    pub fn domain(&self) -> &Arc<Poset> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<Poset> {
        &self.codomain
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self, x: usize) -> usize {
        self.map[x]
    }

    /// Fiber members in index order, without any order check.
    pub fn fiber_members(&self, q: usize) -> &[usize] {
        &self.fibers[q]
    }

    /// The fiber over `q`, sorted from bottom to top.
    pub fn fiber(&self, q: usize) -> Result<Vec<usize>> {
        let mut chain = self.fibers[q].clone();
        // Along a chain the up-sets shrink strictly.
        chain.sort_by_key(|&x| std::cmp::Reverse(self.domain.up_set_size(x)));
        for pair in chain.windows(2) {
            if !self.domain.leq(pair[0], pair[1]) {
                return Err(Error::FiberNotChain { base: q, a: pair[0], b: pair[1] });
            }
        }
        Ok(chain)
    }

    fn section(&self, pick_top: bool) -> Result<Vec<usize>> {
        (0..self.codomain.len())
            .map(|q| {
                let chain = self.fiber(q)?;
                let end = if pick_top { chain.last() } else { chain.first() };
                end.copied().ok_or(Error::MissingElement { index: q })
            })
            .collect()
    }

    /// `b(q)`, the minimum of each fiber.
    pub fn bottom_section(&self) -> Result<Vec<usize>> {
        self.section(false)
    }

    /// `t(q)`, the maximum of each fiber.
    pub fn top_section(&self) -> Result<Vec<usize>> {
        self.section(true)
    }

    fn check_cover_condition(&self) -> Result<(), CylindricityFailure> {
        for &(a, b) in self.domain.covers() {
            let (qa, qb) = (self.map[a], self.map[b]);
            if qa != qb && !self.codomain.is_cover(qa, qb) {
                return Err(CylindricityFailure::CoverNotPreserved { from: a, to: b });
            }
        }
        Ok(())
    }

    fn check_fiber_condition(&self) -> Result<(), CylindricityFailure> {
        for q in 0..self.codomain.len() {
            let size = self.fibers[q].len();
            if size < 2 {
                return Err(CylindricityFailure::FiberTooSmall { base: q, size });
            }
            if let Err(Error::FiberNotChain { base, a, b }) = self.fiber(q) {
                return Err(CylindricityFailure::FiberNotChain { base, a, b });
            }
        }
        Ok(())
    }

    fn check_section(&self, section: Section, s: &[usize]) -> Result<(), CylindricityFailure> {
        for &(q, r) in self.codomain.covers() {
            if !self.domain.is_cover(s[q], s[r]) {
                return Err(CylindricityFailure::SectionNotCover { section, from: q, to: r });
            }
        }
        let mut preimage = vec![None; self.domain.len()];
        for (q, &x) in s.iter().enumerate() {
            preimage[x] = Some(q);
        }
        for (q, &x) in s.iter().enumerate() {
            for &y in self.domain.upper_covers(x) {
                if let Some(r) = preimage[y] {
                    if !self.codomain.is_cover(q, r) {
                        return Err(CylindricityFailure::SectionNotInduced { section, from: q, to: r });
                    }
                }
            }
        }
        Ok(())
    }

    fn check_section_condition(&self) -> Result<(), CylindricityFailure> {
        let (Ok(b), Ok(t)) = (self.bottom_section(), self.top_section()) else {
            return Err(CylindricityFailure::SectionsUndefined);
        };
        self.check_section(Section::Bottom, &b)?;
        self.check_section(Section::Top, &t)
    }

    /// Evaluates the three cylindricity conditions independently.
    pub fn validate_cylindrical(&self) -> CylindricityReport {
        CylindricityReport {
            cover_condition: self.check_cover_condition(),
            fiber_condition: self.check_fiber_condition(),
            section_condition: self.check_section_condition(),
        }
    }

    pub fn require_cylindrical(&self) -> Result<()> {
        match self.validate_cylindrical().first_failure() {
            None => Ok(()),
            Some(f) => Err(Error::NotCylindrical(f.clone())),
        }
    }

    /// A pair `x <= y` with `π(x) <= π(y)` failing, if any.
    pub fn order_violation(&self) -> Option<(usize, usize)> {
        let n = self.domain.len();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| self.domain.leq(x, y) && !self.codomain.leq(self.map[x], self.map[y]))
    }

    /// Domain block, codomain block, then `m <domain-id> <codomain-id>` lines.
    pub fn to_text(&self) -> String {
        let mut s = self.domain.to_text();
        s.push_str(&self.codomain.to_text());
        for (x, &q) in self.map.iter().enumerate() {
            writeln!(s, "m {} {}", self.domain.id(x), self.codomain.id(q)).unwrap();
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
        let (domain, first) = parse_poset_block(&mut lines)?;
        let mut rest = first.into_iter().chain(lines);
        let (codomain, first) = parse_poset_block(&mut rest)?;
        let (domain, codomain) = (domain.poset, codomain.poset);
        let mut map = vec![None; domain.len()];
        for (line, l) in first.into_iter().chain(rest) {
            if l.is_empty() || l.starts_with('#') {
                continue;
            }
            let bad = || Error::Parse { line, message: format!("expected `m <domain-id> <codomain-id>`, found `{l}`") };
            let fields: Vec<&str> = l.split_whitespace().collect();
            let ["m", d, c] = fields.as_slice() else { return Err(bad()) };
            let d = d.parse::<u64>().map_err(|_| bad())?;
            let c = c.parse::<u64>().map_err(|_| bad())?;
            let x = domain.index_of_id(d).ok_or_else(|| Error::UnknownElement(d.to_string()))?;
            let q = codomain.index_of_id(c).ok_or_else(|| Error::UnknownElement(c.to_string()))?;
            map[x] = Some(q);
        }
        let map = map
            .into_iter()
            .enumerate()
            .map(|(x, q)| q.ok_or(Error::MissingElement { index: x }))
            .collect::<Result<Vec<_>>>()?;
        Projection::new(Arc::new(domain), Arc::new(codomain), map)
    }
}

/// The projection of a weak order onto the next smaller rank erasing the
/// letter of largest absolute value.
#[derive(Debug, Clone)]
pub struct Deletion<W> {
    upper: Arc<WeakOrder<W>>,
    lower: Arc<WeakOrder<W>>,
    projection: Arc<Projection>,
}

impl<W: CoxeterWord> Deletion<W> {
    pub fn new(upper: Arc<WeakOrder<W>>, lower: Arc<WeakOrder<W>>) -> Result<Self> {
        let map = upper
            .words()
            .iter()
            .map(|w| {
                let v = w.delete_largest();
                lower.index_of(&v).ok_or_else(|| Error::UnknownElement(v.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        let projection = Projection::new(upper.poset().clone(), lower.poset().clone(), map)?;
        Ok(Deletion { upper, lower, projection: Arc::new(projection) })
    }

    pub fn rank(&self) -> usize {
        self.upper.word(0).rank()
    }

    pub fn upper(&self) -> &Arc<WeakOrder<W>> {
        &self.upper
    }

    pub fn lower(&self) -> &Arc<WeakOrder<W>> {
        &self.lower
    }

    pub fn projection(&self) -> &Arc<Projection> {
        &self.projection
    }

    /// Fiber over a word of the lower rank, as words from bottom to top.
    pub fn fiber_words(&self, v: &W) -> Result<Vec<W>> {
        let q = self.lower.index_of(v).ok_or_else(|| Error::UnknownElement(v.to_string()))?;
        Ok(self.projection.fiber(q)?.into_iter().map(|x| self.upper.word(x).clone()).collect())
    }
}

/// `S_n -> S_{n-1}`, for `n >= 2`.
pub fn deletion_a(n: usize) -> Result<Deletion<Word>> {
    if n < 2 {
        return Err(Error::RankTooSmall { rank: n, min: 2 });
    }
    let upper = Arc::new(WeakOrder::from_words(perms(n)?)?);
    let lower = Arc::new(WeakOrder::from_words(perms(n - 1)?)?);
    Deletion::new(upper, lower)
}

/// `W_n -> W_{n-1}`, for `n >= 1`; rank 1 projects onto the one-element
/// group `W_0`.
pub fn deletion_b(n: usize) -> Result<Deletion<SignedWord>> {
    if n < 1 {
        return Err(Error::RankTooSmall { rank: n, min: 1 });
    }
    let upper = Arc::new(WeakOrder::from_words(signed_perms(n)?)?);
    let lower = Arc::new(WeakOrder::from_words(signed_perms(n - 1)?)?);
    Deletion::new(upper, lower)
}

fn deletion_tower<W: CoxeterWord>(orders: Vec<Arc<WeakOrder<W>>>) -> Result<Vec<Deletion<W>>> {
    orders.windows(2).map(|pair| Deletion::new(pair[1].clone(), pair[0].clone())).collect()
}

/// The deletion projections of `pt = S_1 <- S_2 <- ... <- S_n`.
pub fn tower_a(n: usize) -> Result<Vec<Deletion<Word>>> {
    let orders = (1..=n)
        .map(|k| Ok(Arc::new(WeakOrder::from_words(perms(k)?)?)))
        .collect::<Result<Vec<_>>>()?;
    deletion_tower(orders)
}

/// The deletion projections of `pt = W_0 <- W_1 <- ... <- W_n`.
pub fn tower_b(n: usize) -> Result<Vec<Deletion<SignedWord>>> {
    let orders = (0..=n)
        .map(|k| Ok(Arc::new(WeakOrder::from_words(signed_perms(k)?)?)))
        .collect::<Result<Vec<_>>>()?;
    deletion_tower(orders)
}
