use thiserror::Error;

/// Errors produced by matrix, graph and verification operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not symmetric at ({i}, {j}): {a} vs {b}")]
    NotSymmetric { i: usize, j: usize, a: f64, b: f64 },

    #[error("Hermitian imaginary part is not antisymmetric at ({i}, {j})")]
    NotAntisymmetric { i: usize, j: usize },

    #[error("matrix order {n} outside supported range 1..={cap}")]
    OrderOutOfRange { n: usize, cap: usize },

    #[error("QL iteration failed to converge for eigenvalue {index} after {sweeps} sweeps")]
    IterationLimit { index: usize, sweeps: usize },

    #[error("exact inertia requires integer entries; found {value} at ({i}, {j})")]
    NonIntegerEntry { i: usize, j: usize, value: f64 },

    #[error("exact rational arithmetic overflowed i128 precision")]
    ExactOverflow,

    #[error("p-energy requires p >= 1, got {p}")]
    InvalidExponent { p: f64 },

    #[error("norm sandwich requires 1 <= q <= p, got q = {q}, p = {p}")]
    InvalidExponentPair { p: f64, q: f64 },

    #[error("scaling bounds require p >= q of the base report, got p = {p}, q = {q}")]
    ExponentNotAbove { p: f64, q: f64 },

    #[error("vertex set is empty")]
    EmptyVertexSet,

    #[error("index {index} out of range for order {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("block sizes sum to {sum} but the matrix has order {n}")]
    PartitionMismatch { sum: usize, n: usize },

    #[error("block partition must consist of positive sizes")]
    EmptyPartition,

    #[error("vertex groups do not partition 0..{n}")]
    NotAPartition { n: usize },

    #[error("invalid graph family spec: {0}")]
    InvalidFamily(String),

    #[error("graph order {n} invalid for family {family} (requires n >= {min})")]
    FamilyOrder { family: &'static str, n: usize, min: usize },

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("canonical form supports n <= {cap}, got {n}")]
    CanonOrderCap { n: usize, cap: usize },

    #[error("enumeration supports 1 <= n <= {cap}, got {n}")]
    EnumerationRange { n: usize, cap: usize },

    #[error("unknown theorem id: {0}")]
    UnknownTheorem(String),

    #[error("unknown conjecture id: {0}")]
    UnknownConjecture(String),

    #[error("malformed matrix file: {0}")]
    MatrixParse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
