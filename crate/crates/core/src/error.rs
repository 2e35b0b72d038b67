//! Crate-wide error type.
//!
//! Every fallible operation in the library returns [`Error`]. Variants are
//! grouped by origin: input parsing, domain preconditions (degree / step
//! ranges, index sets), and algorithmic guards that fire when an exact
//! computation cannot proceed (zero leading coefficients, degenerate
//! continued-fraction pairs, oversized brute-force minors).

use num_rational::BigRational;
use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A coefficient token could not be parsed as an exact rational.
    #[error("malformed coefficient {token:?}: {reason}")]
    MalformedCoefficient { token: String, reason: String },

    /// Repeating decimals (`0.111...`) have no exact finite form; the caller
    /// must supply a fraction such as `1/9` instead.
    #[error(
        "repeating decimals are unsupported; write {token:?} as an exact fraction such as \"1/9\""
    )]
    RepeatingDecimal { token: String },

    /// A fraction token had denominator zero.
    #[error("zero denominator in coefficient {token:?}")]
    ZeroDenominator { token: String },

    /// The coefficient list was empty.
    #[error("empty coefficient list")]
    EmptyCoefficients,

    /// The leading coefficient was zero. Coefficient lists are taken at face
    /// value: a leading zero is rejected, not stripped.
    #[error("leading coefficient is zero; drop it from the list instead")]
    LeadingZero,

    /// The zero polynomial was supplied where a nonzero one is required.
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    /// Polynomial division by the zero polynomial.
    #[error("polynomial division by zero")]
    DivisionByZeroPolynomial,

    /// The step parameter M lies outside the range an operation supports.
    #[error("step M = {m} out of range for this operation (expected {min} <= M <= {max})")]
    StepOutOfRange { m: usize, min: usize, max: usize },

    /// The polynomial degree is too small for the requested operation.
    #[error("degree {degree} too small (need degree >= {min})")]
    DegreeTooSmall { degree: usize, min: usize },

    /// A row/column index set was empty, non-increasing, mismatched in
    /// length, or contained an index below 1.
    #[error("invalid index set: {reason}")]
    InvalidIndexSet { reason: String },

    /// A pair index (i, j) violated 0 <= i < j <= M-1, or the selected parts
    /// were zero where nonzero parts are required.
    #[error("invalid part pair (i, j) = ({i}, {j}): {reason}")]
    InvalidPair { i: usize, j: usize, reason: String },

    /// A continued-fraction expansion left the generic degree pattern: the
    /// remainder at `step` skipped past the expected degree, so the exponent
    /// alternation cannot continue. The coefficients extracted so far are
    /// reported as-is.
    #[error("degenerate pair expansion at step {step}: remainder degree broke the exponent alternation ({} coefficients extracted)", partial.len())]
    DegeneratePairExpansion {
        step: usize,
        partial: Vec<BigRational>,
    },

    /// The factorization requires every leading coefficient h_0..h_n to be
    /// nonzero; `index` is the first offender.
    #[error("factorization undefined: h_{index} = 0")]
    ZeroLeadingCoefficient { index: usize },

    /// Brute-force determinant expansion is capped to keep the oracle honest
    /// about its cost.
    #[error("brute-force minor of order {order} exceeds the cap of {max}")]
    MinorOrderTooLarge { order: usize, max: usize },

    /// A matrix/grid passed to a determinant routine was not square.
    #[error("non-square grid: {rows} rows, {cols} columns")]
    NonSquareGrid { rows: usize, cols: usize },

    /// Sector certification requires a positive leading coefficient
    /// (normalize by -1 first).
    #[error("leading coefficient must be positive; multiply the polynomial by -1 first")]
    NonPositiveLeadingCoefficient,

    /// Evaluation hit a magnitude too small to divide by in f64.
    #[error("numeric guard: division by near-zero magnitude {magnitude:e}")]
    NearZeroDivision { magnitude: f64 },

    /// The argument-sum bound only applies when every Euclid leading
    /// coefficient h_0..h_n is strictly positive; `index` is the first
    /// offender.
    #[error("argument bound requires every h_i > 0, but h_{index} is not positive")]
    LeadingChainNotPositive { index: usize },

    /// Evaluation point violated a precondition (e.g. z = 0, or z outside
    /// the closed cone required by a bound check).
    #[error("invalid evaluation point: {reason}")]
    InvalidEvaluationPoint { reason: String },

    /// The root oracle needs degree >= 1.
    #[error("root finding requires degree >= 1")]
    RootsOfConstant,

    /// Reading a polynomial file failed.
    #[error("cannot read polynomial file: {reason}")]
    PolyFile { reason: String },
}
