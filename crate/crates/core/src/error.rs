//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Everything that can go wrong while building invariants or running checks.
///
/// Variants are grouped by the stage that raises them; the CLI maps them to
/// process exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Semigroup generators must be positive with overall gcd 1.
    #[error("invalid generators: {0}")]
    InvalidGenerators(String),

    /// A Puiseux characteristic sequence failed its divisibility or
    /// monotonicity conditions.
    #[error("invalid characteristic sequence: {0}")]
    InvalidCharSequence(String),

    /// A gap set contained 0 (0 always belongs to the semigroup).
    #[error("invalid gap set: {0}")]
    InvalidGapSet(String),

    /// A semigroup built from generators or a characteristic sequence is not
    /// symmetric, so it cannot come from a plane-curve cusp. This usually
    /// means a transcription error in the input.
    #[error("semigroup is not symmetric: {0}")]
    NotSymmetric(String),

    /// A configuration needs at least one cusp (use the trivial cusp
    /// `generators = [1]` for a smooth point).
    #[error("configuration must contain at least one cusp")]
    EmptyConfiguration,

    /// Vector of multiplicities has the wrong length for the configuration.
    #[error("expected {expected} multiplicities, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    /// An argument violated a documented precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The surgery coefficient is not larger than twice the Seifert genus,
    /// so the closed-form d-invariant formula does not apply.
    #[error("surgery coefficient {q} is not large: requires q > 2g = {two_g}")]
    SurgeryNotLarge { q: i64, two_g: i64 },

    /// Spin-c index outside the admissible interval [-q/2, q/2).
    #[error("spin-c index {m} out of range for surgery coefficient {q}")]
    SpinCOutOfRange { q: i64, m: i64 },

    /// Intersection-lattice dimensions do not match.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A quantity that must be even came out odd; with a characteristic
    /// canonical class this cannot happen, so it signals an invalid K.
    #[error("parity violation: {0}")]
    ParityViolation(String),

    /// A surface failed a validation finding required by the requested mode.
    #[error("invalid surface: finding '{finding}' failed: {detail}")]
    InvalidSurface { finding: String, detail: String },

    /// Exact integer arithmetic would overflow 64 bits.
    #[error("integer overflow in {0}")]
    Overflow(String),

    /// A table or enumeration would exceed the configured resource cap.
    #[error("resource cap exceeded: {0}")]
    CapExceeded(String),
}
