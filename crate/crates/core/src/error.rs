//! Crate-wide error type.
//!
//! Every fallible operation returns [`Result`]. Variants carry enough context
//! to act as witnesses: a failed scheme verification names the offending pair
//! of points, a failed classification names the unmatched syndrome, and so on.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// All error conditions surfaced by this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter violated a documented precondition.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A binary polynomial failed the primitivity requirement.
    #[error("polynomial {poly:#b} is not primitive of odd degree >= 3 over GF(2): {reason}")]
    NotPrimitive { poly: u64, reason: String },

    /// Two words of different lengths were combined.
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    /// A coordinate position was outside the word length.
    #[error("position {position} out of range for length {length}")]
    PositionOutOfRange { position: usize, length: usize },

    /// A matrix expected to be symmetric was not.
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    /// A code failed the Kerdock-like parameter test.
    #[error("code is not Kerdock-like: {0}")]
    NotKerdockLike(String),

    /// An off-diagonal pair took a value outside the expected relation values.
    #[error("pair ({x}, {y}) has unexpected value {value}")]
    UnexpectedPairValue { x: usize, y: usize, value: String },

    /// Intersection counts were not constant on a relation class.
    ///
    /// The two pairs lie in the same class but produced different counts for
    /// the ordered class pair `(class_i, class_j)`.
    #[error(
        "intersection number p_{{{class_i},{class_j}}} not constant: \
         pair ({x_a},{y_a}) gives {count_a}, pair ({x_b},{y_b}) gives {count_b}"
    )]
    NonConstantIntersection {
        class_i: usize,
        class_j: usize,
        x_a: usize,
        y_a: usize,
        count_a: usize,
        x_b: usize,
        y_b: usize,
        count_b: usize,
    },

    /// Intersection matrices of a purported scheme failed to commute.
    #[error("intersection matrices B_{i} and B_{j} do not commute")]
    NonCommuting { i: usize, j: usize },

    /// An eigenvalue of an intersection matrix was not an integer.
    #[error("non-integer eigenvalue encountered: characteristic polynomial {0} has an irrational or non-integral root")]
    IrrationalEigenvalue(String),

    /// A Krein parameter came out negative, contradicting scheme validity.
    #[error("negative Krein parameter q_{{{i},{j}}}^{{{k}}} = {value}")]
    NegativeKrein {
        i: usize,
        j: usize,
        k: usize,
        value: String,
    },

    /// Parameters disagreed with a closed-form table.
    #[error("scheme parameters do not match the closed form: {0}")]
    ClosedFormMismatch(String),

    /// A maximal line set could not be split into orthogonal bases.
    #[error("line set does not partition into mutually unbiased bases: {0}")]
    NotMutuallyUnbiased(String),

    /// A lattice-level consistency check failed.
    #[error("lattice check failed: {0}")]
    LatticeCheckFailed(String),

    /// A structural invariant that the constructions guarantee was violated.
    ///
    /// This indicates a bug (or a falsified theorem), never bad user input.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    /// JSON (de)serialization failure.
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),

    /// Underlying I/O failure.
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}
