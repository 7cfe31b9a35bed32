use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition parts must be positive integers, got {0}")]
    NonPositivePart(i64),

    #[error("cannot parse {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("dimension d must be at least 1")]
    ZeroDimension,

    #[error("dimension d = {d} exceeds the supported cap of {cap}")]
    DimensionCap { d: usize, cap: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("weight mismatch: expected {expected}, got {got}")]
    WeightMismatch { expected: usize, got: usize },

    #[error("target {target} is smaller than the weight {weight}")]
    PadBelowWeight { target: usize, weight: usize },

    #[error("not a permutation of 1..{degree}: {images:?}")]
    InvalidPermutation { degree: usize, images: Vec<usize> },

    #[error("permutation degree {0} exceeds 255")]
    PermutationTooLarge(usize),

    #[error("tensor slot index out of range: ({i}, {j}) with {len} slots")]
    SlotOutOfRange { i: usize, j: usize, len: usize },

    #[error("element is not central: coefficient at {left} differs from coefficient at its conjugate {right}")]
    NotCentral { left: String, right: String },

    #[error("degree {degree} exceeds the group-algebra cap of {cap} ({degree}! terms would be stored)")]
    DegreeCap { degree: usize, cap: usize },

    #[error("{variables} variables exceed the enumeration budget of {cap}")]
    VariableBudget { variables: usize, cap: usize },

    #[error("ST({lambda}) is not a TPI for d = {d}")]
    NotATpi { lambda: String, d: usize },

    #[error("denominator {denominator} is not invertible mod {prime}; use a different prime")]
    DenominatorNotInvertible { denominator: String, prime: u64 },

    #[error("{0} is not an odd prime below 2^63")]
    InvalidPrime(u64),

    #[error("sign of C_{0} is undetermined within the enumeration budget")]
    SignUndetermined(usize),

    #[error("matrix shape mismatch: {0}")]
    Shape(String),
}

pub type Result<T> = std::result::Result<T, Error>;
