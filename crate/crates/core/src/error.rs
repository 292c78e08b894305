use thiserror::Error;

/// Errors shared by every layer of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The zero covector cannot be canonicalized into a weight or a normal.
    #[error("zero covector cannot be used as a functional")]
    ZeroFunctional,

    /// A point or covector does not live in the declared ambient dimension.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A pair specification violates a family constraint or is malformed.
    #[error("invalid pair specification: {0}")]
    InvalidSpec(String),

    /// Subtracting h-weights from g-weights went negative, so h cannot embed
    /// in g as an a-module.
    #[error("not a submodule: weight {weight} has larger multiplicity in h than in g")]
    NotASubmodule { weight: String },

    /// Ray enumeration found more distinct rays than the cap allows. Carries
    /// the count at the moment the cap tripped; partial results are never
    /// returned.
    #[error("ray enumeration exceeded its resource cap: {examined} rays found (cap {cap})")]
    ResourceLimit { examined: u64, cap: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
