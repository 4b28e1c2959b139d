use thiserror::Error;

use crate::signature::Signature;

/// Errors raised by the algebra, representation and spinor routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CliffError {
    #[error("signature ({p},{q}) has {n} generators, above the cap of {cap}")]
    CapExceeded { p: u32, q: u32, n: u32, cap: u32 },

    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },

    #[error("generator index {index} out of range 1..={n}")]
    GeneratorOutOfRange { index: u32, n: u32 },

    #[error("cannot parse signature {0:?}, expected \"p,q\"")]
    BadSignature(String),

    #[error("cannot parse multivector {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("element is not invertible")]
    NotInvertible,

    #[error("expected a grade-{expected} element")]
    WrongGrade { expected: u32 },

    #[error("vector is null (square zero); inverse undefined")]
    NullVector,

    #[error("Cl(0,0) has no even-subalgebra signature")]
    NoEvenSubalgebra,

    #[error("dimension {0} out of the supported range")]
    DimensionOutOfRange(u32),

    #[error("{0}")]
    Precondition(String),

    #[error("power series did not converge within {terms} terms (residual {residual:e})")]
    NoConvergence { terms: usize, residual: f64 },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
}

pub type Result<T> = std::result::Result<T, CliffError>;
