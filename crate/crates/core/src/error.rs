//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Truncation orders below 2 leave no room for a deformed oscillator.
    #[error("truncation order k must be at least 2, got {0}")]
    TruncationTooSmall(usize),

    /// Only the representation parameter s = 1/2 is implemented.
    #[error("unsupported representation parameter s = {0}; only s = 1/2 is implemented")]
    UnsupportedS(f64),

    /// A subspace expected to be invariant leaks under the operator.
    #[error("subspace not invariant: leakage {leakage:.3e} exceeds tolerance {tol:.3e}")]
    NonInvariantSubspace { leakage: f64, tol: f64 },

    /// Group closure generated more elements than the expected bound.
    #[error("group closure exceeded {limit} elements (phase convention bug?)")]
    ClosureOverflow { limit: usize },

    /// An analytic criterion and its direct matrix check disagree.
    #[error("analytic criterion and matrix check disagree: {0}")]
    CriterionMismatch(String),

    /// Two operands live on spaces of different dimension.
    #[error("operands live on different spaces: dimension {left} vs {right}")]
    SpaceMismatch { left: usize, right: usize },

    /// A complete MUB set requires a prime dimension.
    #[error("dimension {0} is not prime; a complete MUB set of this form needs a prime dimension")]
    NotPrime(u64),

    /// A parameter fell outside its valid range.
    #[error("{what} = {got} outside valid range {range}")]
    RangeError {
        what: &'static str,
        got: i64,
        range: String,
    },

    /// No closed form is implemented for this j.
    #[error("no closed form implemented for 2j = {0}; available: 2j in {{1, 2, 3}}")]
    UnsupportedJ(i32),

    /// (two_j, two_m) must describe a half-integer pair with |m| ≤ j and
    /// j + m integral.
    #[error("(2j, 2m) = ({two_j}, {two_m}) is not a valid angular momentum pair")]
    InvalidHalfInteger { two_j: i32, two_m: i32 },

    /// Doubled angular momenta violating the triangle rule.
    #[error("(2j1, 2j2, 2j3) = ({two_j1}, {two_j2}, {two_j3}) violates the triangle rule")]
    TriangleViolation {
        two_j1: i32,
        two_j2: i32,
        two_j3: i32,
    },

    /// An identity was requested outside its domain of validity.
    #[error("identity not applicable: {0}")]
    Inapplicable(String),

    /// Gauss sums require w ≠ 0, u ≠ 0 and u·w + v even.
    #[error("Gauss sum needs w != 0, u != 0 and u*w + v even; got (u, v, w) = ({u}, {v}, {w})")]
    ParityViolation { u: i64, v: i64, w: i64 },

    /// A matrix or vector had an unexpected dimension.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Input text could not be parsed.
    #[error("could not parse {what}: {detail}")]
    ParseError { what: &'static str, detail: String },
}
