use thiserror::Error;

/// Errors raised across the library.
///
/// Variants that signal a bug rather than bad input are `ConstructionFailure`
/// and `SolveFailure`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("Galois index {k} is not coprime to the field order {n}")]
    NotCoprime { k: i64, n: u32 },
    #[error("scalar not representable in Q(zeta_{n}): {what}")]
    UnrepresentableScalar { n: u32, what: String },
    #[error("invalid field order {0}: must be a positive multiple of 4")]
    InvalidFieldOrder(u32),
    #[error("mixed field orders {0} and {1}")]
    FieldMismatch(u32, u32),

    #[error("invalid Cartan type: {0}")]
    InvalidType(String),
    #[error("Weyl group has {order} elements, above the guard {limit}")]
    WeylTooLarge { order: u128, limit: u128 },
    #[error("roots are linearly dependent")]
    DependentRoots,
    #[error("root system has {roots} roots, above the guard {limit}")]
    TooLarge { roots: usize, limit: usize },
    #[error("not a root: {0}")]
    NotARoot(String),

    #[error("construction failure: {0}")]
    ConstructionFailure(String),

    #[error("element is not ad-nilpotent")]
    NotNilpotent,
    #[error("torus value for simple root {0} is zero")]
    ZeroValue(usize),
    #[error("ad-spectrum is not integral or not diagonalizable")]
    NonIntegralSpectrum,
    #[error("permutation is not a Dynkin diagram symmetry")]
    NotASymmetry,
    #[error("graph automorphism extension failed")]
    ExtensionFailure,
    #[error("nilradical parameters must be keyed by the inversion set of w")]
    BadSupport,

    #[error("element does not lie in the Cartan subalgebra")]
    NotInCartan,
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("linear solve failed: {0}")]
    SolveFailure(String),

    #[error("element is not in normal form: {0}")]
    NotNormalForm(String),
    #[error("scalar must be nonzero")]
    ZeroScalar,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
