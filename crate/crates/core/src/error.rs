//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two ring elements from incompatible rings were combined.
    #[error("incompatible rings: {0}")]
    IncompatibleRing(String),

    /// A ring embedding needs a divisibility that fails, e.g. the ambient
    /// variable cannot be expressed as a power of the Lagrangian one.
    #[error("not monotone-compatible: {0}")]
    NotMonotoneCompatible(String),

    /// A disk class with nonpositive Maslov index (other than the unit).
    #[error("positivity violation: {0}")]
    PositivityViolation(String),

    /// A Maslov value that is not a nonnegative multiple of the minimal one.
    #[error("invalid class: {0}")]
    InvalidClass(String),

    /// Support grew past the configured cap; almost certainly a modeling bug.
    #[error("element has {count} terms, exceeding the cap of {cap}")]
    TooManyTerms { count: usize, cap: usize },

    /// Splitting the differential into integer layers needs nonnegative
    /// exponents.
    #[error("split undefined: differential has negative exponents")]
    SplitUndefined,

    /// A generator name that is not part of the basis in use.
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    /// Vectors, matrices or bases of mismatched shape.
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),

    /// Operation requires a complex that passes differential validation.
    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    /// Operation requires a basis with exactly one top-degree generator.
    #[error("basis has no single maximum: {0}")]
    MissingSingleMaximum(String),

    /// Ring mode of the complex does not match the requested operation.
    #[error("wrong ring mode: {0}")]
    WrongRingMode(String),

    /// A class that is not certified invertible was used as one.
    #[error("class not certified invertible: {0}")]
    NotCertifiedInvertible(String),

    /// Enumeration would exceed the configured bit cap.
    #[error("enumeration too large: {bits} unknown bits exceeds cap {cap}")]
    EnumerationTooLarge { bits: u32, cap: u32 },

    /// Malformed textual input.
    #[error("parse error in `{input}`: {reason}")]
    Parse { input: String, reason: String },

    /// Anything the operation cannot meaningfully do with its input.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub fn parse(input: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.into(),
            reason: reason.into(),
        }
    }
}
