use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input text is not a valid braid word. `offset` is the index of the
    /// offending token (non-whitespace character for the letter form, token
    /// number for the numeric form).
    #[error("malformed braid word at offset {offset}")]
    MalformedWord { offset: usize },

    /// Coefficient reduction requires a modulus of at least 2.
    #[error("modulus must be > 1, got {modulus}")]
    BadModulus { modulus: i64 },

    /// The operation is only defined for braids that fix all three punctures.
    #[error("braid does not induce the identity permutation on punctures")]
    NotPureBraid,

    /// A crossing-puncture number fell outside the admissible range; this
    /// signals a failure of the combinatorial arc model, not bad user input.
    #[error("crossing-puncture number {value} at index {index} violates 0 < |C| <= 3")]
    StructureViolation { index: usize, value: i64 },

    /// The word cannot be decomposed into alternating generator syllables.
    #[error("interior zero syllable ending at letter {position}")]
    MalformedSyllables { position: usize },

    /// The change of basis from the unreduced to the reduced representation
    /// left a nonzero residual. Indicates a convention bug in this crate.
    #[error("unreduced-to-reduced basis change has nonzero residual")]
    ReductionMismatch,

    /// A conjugacy witness failed its own verification. Indicates an
    /// implementation bug; surfaced rather than hidden.
    #[error("constructed conjugator failed verification")]
    WitnessVerificationFailed,

    /// Geometric arc tracing could not reach a clean configuration within
    /// its subdivision budget.
    #[error("arc tracing failed to stabilize within the subdivision budget")]
    SubdivisionLimit,
}
