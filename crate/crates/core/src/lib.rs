//! Cubic coordinates for posets along towers of cylindrical projections,
//! with exhaustive checks for the weak-order deletion towers of types A and B.

pub mod error;
pub mod lift;
pub mod poset;
pub mod report;
pub mod reeb;
pub mod scalar;
pub mod tower;
pub mod type_a;
pub mod type_b;
pub mod verify;
pub mod weak;

pub use error::{Error, Result, Violation};
pub use poset::{
    boolean_lattice, build_poset, check_cubic_realization, check_order_embedding,
    find_subposet_isomorphic, is_cubic_realization, is_order_embedding, BuiltPoset, CoordinateMap,
    Digraph, Edge, EdgeKind, OrderOracle, Poset,
};
pub use reeb::{
    augmented_pre_reeb, augmented_pre_reeb_with, augmented_reeb_poset, classify_covers,
    horizontal_classes, pre_reeb, reeb_poset, HorizontalPartition, ReebGraph,
};
pub use lift::{
    build_tower, build_tower_with, decompose, tower_graphs, extend_cubic, extend_order_embedding, minimal_heights,
    uniqueness_check, DimensionCertificate, HeightChoice, HeightFunction, TowerKind, TowerRealization,
};
pub use report::{Check, Report};
pub use scalar::Scalar;
pub use tower::{deletion_a, deletion_b, tower_a, tower_b, CylindricityFailure, CylindricityReport, Deletion, Projection, Section};
pub use type_a::SubsetClass;
pub use type_b::{ClassB, OrientationF, SuccessorCase};
pub use weak::{
    covers_a, covers_b, inv_a, inv_b, perms, signed_perms, weak_leq_by_inversions, weak_poset_a,
    weak_poset_b, CoxeterWord, InvSetA, InvSetB, InversionSet, SignedWord, SymbolB, WeakOrder, Word,
};

/// Coordinate maps with machine integers, the default scalar.
pub type Coordinates = CoordinateMap<i64>;
/// Height functions with machine integers.
pub type Heights = HeightFunction<i64>;
