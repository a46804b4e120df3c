use alloc::string::String;
use core::fmt;

/// Why a structure fails to be 2-spectrally monomorphic (its labels do not
/// share one nonzero modulus).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoMonoFailure {
    ZeroLabel { pair: (usize, usize) },
    UnequalModulus { first: (usize, usize), second: (usize, usize) },
}

impl fmt::Display for TwoMonoFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwoMonoFailure::ZeroLabel { pair: (i, j) } => write!(f, "label ({i}, {j}) is zero"),
            TwoMonoFailure::UnequalModulus { first, second } => write!(
                f,
                "labels ({}, {}) and ({}, {}) have different moduli",
                first.0, first.1, second.0, second.1
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} listed twice")]
    DuplicateVertex(usize),
    #[error("structures need at least one vertex")]
    NoVertices,
    #[error("at most {max} vertices are supported, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("expected a {n}x{n} matrix")]
    Shape { n: usize },
    #[error("diagonal entry at vertex {0} is nonzero")]
    NonZeroDiagonal(usize),
    #[error("labels ({i}, {j}) and ({j}, {i}) are not conjugate")]
    NotHermitian { i: usize, j: usize },
    #[error("pair ({i}, {j}) does not carry exactly one arc")]
    NotATournament { i: usize, j: usize },
    #[error("selector has {found} values for {n} vertices")]
    SelectorLength { found: usize, n: usize },
    #[error("selector value at vertex {0} is zero")]
    ZeroSelectorValue(usize),
    #[error("selector values at vertices {0} and {1} have different moduli")]
    UnequalSelectorModuli(usize, usize),
    #[error("selector scale must be positive")]
    NonPositiveScale,
    #[error("representation label {label} does not have modulus 1")]
    NonUnitLabel { label: String },
    #[error("structure is not 2-spectrally monomorphic: {0}")]
    NotTwoMonomorphic(TwoMonoFailure),
    #[error("common label modulus squared {modulus_sqr} is not the square of a rational")]
    IrrationalModulus { modulus_sqr: String },
    #[error("structures have {0} and {1} vertices")]
    VertexCountMismatch(usize, usize),
    #[error("{what} = {value} is outside {expected}")]
    OutOfRange { what: &'static str, value: usize, expected: String },
    #[error("polynomial scale factor must be positive")]
    NonPositivePolynomialScale,
    #[error("{theorem} needs {requirement}; got n = {n}, k = {k}")]
    OutsideTheoremRange { theorem: &'static str, requirement: &'static str, n: usize, k: usize },
    #[error("label ({i}, {j}) of the normalized structure is neither c nor conj(c)")]
    LabelOutsidePair { i: usize, j: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not congruent to 3 mod 4")]
    NotThreeModFour(u64),
    #[error("tournament is not doubly regular: pairs {first:?} and {second:?} have different common dominator counts")]
    NotDoublyRegular { first: (usize, usize), second: (usize, usize) },
    #[error("tournament of order {0} cannot be doubly regular")]
    DoublyRegularOrder(usize),
    #[error("sign matrix entry {0} is not -1, 0 or 1")]
    SignEntry(i64),
    #[error("matrix is not a valid {kind}: first violation at {at:?}")]
    InvalidSignMatrix { kind: &'static str, at: (usize, usize) },
    #[error("{0}")]
    Precondition(&'static str),
    #[error("table has {found} values, expected {expected}")]
    TableLength { found: usize, expected: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
