//! Crate-wide error type.

use num_bigint::BigInt;
use thiserror::Error;

/// Errors reported by the fallible operations of this crate.
///
/// Internal invariant violations (a value that a theorem guarantees to be an
/// integer coming out fractional, say) are not represented here; those panic,
/// because they mean the arithmetic itself is broken.
#[derive(Debug, Error)]
pub enum Error {
    /// Two irrational operands live in different quadratic extensions.
    #[error("incompatible radicands: sqrt({0}) and sqrt({1})")]
    RadicandMismatch(BigInt, BigInt),

    /// A sequence method was asked for a kind it cannot produce.
    #[error("method `{method}` does not apply to kind {kind}")]
    InapplicableMethod { method: String, kind: String },

    /// The Chebyshev bridge needs both p and q nonzero.
    #[error("Chebyshev evaluation requires p != 0 and q != 0 (got p={p}, q={q})")]
    ChebyshevZeroParam { p: BigInt, q: BigInt },

    /// Floating trig evaluation is only defined for q < 0 and p^2 + 4q <= 0.
    #[error("trig evaluation requires q < 0 and p^2 + 4q <= 0 (got p={p}, q={q})")]
    TrigDomain { p: BigInt, q: BigInt },

    /// The closed form for generalized Fibonacci numbers needs distinct roots.
    #[error("discriminant is zero (repeated root); use the recurrence instead")]
    RepeatedRoot,

    /// An operation that divides by x - y was given x = y.
    #[error("inputs must be distinct")]
    EqualInputs,

    /// prime_witness asked for a pair where z does not divide x - y;
    /// exponent 1 already refutes integrality there.
    #[error("z does not divide x - y; n = 1 is already a witness")]
    WitnessAtOne,

    /// Surd expression did not match the grammar.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// Malformed b-file content.
    #[error("b-file line {line}: {msg}")]
    BFile { line: usize, msg: String },

    /// Identity id not present in the catalog.
    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
