use thiserror::Error;

use crate::poset::EdgeKind;
use crate::tower::CylindricityFailure;

/// A concrete witness that a coordinate map is not a (cubic, order-embedding) realization.
///
/// Element positions are poset indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The vector of `index` has the wrong length.
    DimensionMismatch { index: usize, expected: usize, found: usize },
    /// Two distinct elements share a coordinate vector.
    NotInjective { first: usize, second: usize },
    /// A cover whose endpoints do not differ in any coordinate.
    CoverUnchanged { from: usize, to: usize },
    /// A cover whose endpoints differ in more than one coordinate.
    CoverChangesSeveral { from: usize, to: usize, coords: (usize, usize) },
    /// A cover along which the single changed coordinate decreases.
    CoverDecreases { from: usize, to: usize, coord: usize },
    /// `x <= y` holds in the poset but not componentwise.
    OrderNotPreserved { x: usize, y: usize },
    /// `c(x) <= c(y)` componentwise although `x <= y` fails in the poset.
    OrderNotReflected { x: usize, y: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::DimensionMismatch { index, expected, found } => {
                write!(f, "element {index} has {found} coordinates, expected {expected}")
            }
            Violation::NotInjective { first, second } => {
                write!(f, "elements {first} and {second} share a coordinate vector")
            }
            Violation::CoverUnchanged { from, to } => {
                write!(f, "cover {from}->{to} changes no coordinate")
            }
            Violation::CoverChangesSeveral { from, to, coords } => write!(
                f,
                "cover {from}->{to} changes coordinates {} and {}",
                coords.0, coords.1
            ),
            Violation::CoverDecreases { from, to, coord } => {
                write!(f, "cover {from}->{to} decreases coordinate {coord}")
            }
            Violation::OrderNotPreserved { x, y } => {
                write!(f, "{x} <= {y} in the poset but not componentwise")
            }
            Violation::OrderNotReflected { x, y } => {
                write!(f, "c({x}) <= c({y}) componentwise but {x} <= {y} fails")
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown element {0}")]
    UnknownElement(String),
    #[error("duplicate element id {0}")]
    DuplicateElement(u64),
    #[error("cover relation contains a directed cycle: {}", .0.join(" -> "))]
    CycleDetected(Vec<String>),
    #[error("graph is not acyclic; cycle through vertices {cycle:?}")]
    NotAcyclic { cycle: Vec<usize> },
    #[error("rank {rank} exceeds the cap {max}")]
    RankTooLarge { rank: usize, max: usize },
    #[error("rank {rank} is below the minimum {min}")]
    RankTooSmall { rank: usize, min: usize },
    #[error("words of different ranks {left} and {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("invalid word `{0}`")]
    InvalidWord(String),
    #[error("expected {expected} items, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("fiber over {base} is not a chain: {a} and {b} are incomparable")]
    FiberNotChain { base: usize, a: usize, b: usize },
    #[error("cover {from}->{to} maps to neither an equality nor a cover")]
    CoverConditionViolated { from: usize, to: usize },
    #[error("projection is not cylindrical: {0}")]
    NotCylindrical(CylindricityFailure),
    #[error("height does not strictly increase along {kind} edge {from}->{to}")]
    HeightNotMonotone { from: usize, to: usize, kind: EdgeKind },
    #[error("base realization is not an order embedding: {0}")]
    BaseNotEmbedding(Violation),
    #[error("operation requires the augmented pre-Reeb graph")]
    RequiresAugmented,
    #[error("realization is not compatible with the projection: elements {first} and {second} disagree on the {part}")]
    NotCompatible { first: usize, second: usize, part: &'static str },
    #[error("reachability poset is not a total order: {a} and {b} are incomparable")]
    NotTotalOrder { a: usize, b: usize },
    #[error("successor undefined at {0}")]
    SuccessorUndefined(String),
    #[error("{0} is not an auxiliary successor case")]
    NotAuxiliaryCase(String),
    #[error("coordinate vector of element {index} is missing")]
    MissingElement { index: usize },
    #[error("section composites do not form a box: {0}")]
    NotABox(String),
    #[error("section composites {a} and {b} do not compare as in the Boolean lattice")]
    NotBoolean { a: usize, b: usize },
    #[error("level {level} does not project onto the previous level of the tower")]
    TowerMismatch { level: usize },
    #[error("orientation is cyclic")]
    CyclicOrientation,
    #[error("{0}")]
    Violation(Violation),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Self {
        Error::Violation(v)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
