//! Error type shared by every module of the library.

use thiserror::Error;

/// Errors raised while building or querying the algebraic data.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    /// The type label could not be parsed or names an unsupported family.
    #[error("unknown root system type `{0}`")]
    UnknownType(String),

    /// The matrix is not the Cartan matrix of a finite root system.
    #[error("not a Cartan matrix of finite type: {0}")]
    NotFiniteType(String),

    /// A coordinate vector that does not belong to the root system.
    #[error("{0:?} is not a root of {1}")]
    NotARoot(Vec<i32>, String),

    /// A root string was requested along the root itself or its negative.
    #[error("root string of a root along itself or its negative is undefined")]
    DegenerateString,

    /// The operation needs an irreducible root system.
    #[error("root system {0} is reducible")]
    Reducible(String),

    /// The Weyl group is too large to enumerate element by element.
    #[error("Weyl group of {label} has {order} elements, above the enumeration limit {limit}")]
    WeylTooLarge {
        label: String,
        order: u128,
        limit: usize,
    },

    /// An index of a simple root is out of range.
    #[error("simple root index {0} out of range for rank {1}")]
    BadSimpleIndex(usize, usize),

    /// Structure constants failed an internal consistency check.
    #[error("structure constant inconsistency: {0}")]
    StructureConstants(String),

    /// The generators of a subsystem do not form a simple system.
    #[error("generators do not form a simple system: {0}")]
    NotSimpleSystem(String),

    /// A nilpotent orbit label is not registered for the given type.
    #[error("orbit `{orbit}` is not registered for type {type_label}; supported: {supported}")]
    UnknownOrbit {
        orbit: String,
        type_label: String,
        supported: String,
    },

    /// A Hessenberg ideal name is not registered.
    #[error("ideal `{name}` is unknown; supported: {supported}")]
    UnknownIdeal { name: String, supported: String },

    /// A Levi subset specification could not be parsed.
    #[error("invalid Levi subset `{0}`")]
    BadLevi(String),

    /// A Weyl group word could not be parsed.
    #[error("invalid Weyl group word `{0}`")]
    BadWord(String),

    /// The sl2 data of an orbit context failed verification.
    #[error("orbit context check failed: {0}")]
    OrbitCheck(String),

    /// The polynomial system falls outside the shapes the classifier handles.
    #[error("unsupported polynomial system: {0}")]
    UnsupportedSystem(String),

    /// A linear system for representation multiplicities has no admissible solution.
    #[error("linear system is infeasible: {0}")]
    Infeasible(String),

    /// A computation only defined for type G2 was asked for another type.
    #[error("operation requires type G2, got {0}")]
    RequiresG2(String),

    /// A character table failed a consistency check.
    #[error("character table check failed: {0}")]
    CharacterCheck(String),

    /// A linear system for representation multiplicities has free parameters.
    #[error("linear system is underdetermined: {0}")]
    Underdetermined(String),
}

/// Convenient result alias.
pub type Result<T> = std::result::Result<T, LieError>;
