//! Trace-function calculus on SL2 character varieties of punctured surfaces.
//!
//! The character ring of a surface group has a linear basis indexed by
//! multicurves (multisets of disjoint simple closed curves). This crate
//! expands products of trace functions into that basis, computes Goldman
//! Poisson brackets, evaluates measured-lamination valuations, and extracts
//! certified Newton sets — all in exact arithmetic.
//!
//! Modules mirror the pipeline:
//! - [`surface`]: free-group words, canonical conjugacy classes, surface
//!   presentations with a fat-graph structure at the basepoint.
//! - [`intersect`]: minimal-position intersection combinatorics decided by
//!   the cyclic order of boundary rays of axes in the Cayley tree.
//! - [`skein`]: multicurve-basis expansion, products, Goldman bracket,
//!   and trace evaluation.
//! - [`valuation`]: rational laminations as simple valuations, Newton-set
//!   certification, Luo products.
//! - [`oracle`]: independent ground truth via hyperbolic axis linking with
//!   exact quadratic-surd arithmetic.
//! - [`verify`]: seeded property sweeps used by the CLI and the acceptance
//!   suite.

pub mod cli;
pub mod intersect;
pub mod oracle;
pub mod skein;
pub mod surface;
pub mod valuation;
pub mod verify;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("unknown letter `{token}` at position {position}")]
    UnknownLetter { token: String, position: usize },
    #[error("trivial class not allowed here: {context}")]
    TrivialClass { context: String },
    #[error("classes are equal; use the self-intersection variant")]
    SameClass,
    #[error("stale intersection datum: {0}")]
    StaleDatum(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error("bad surface data: {0}")]
    BadSurface(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("representation error: {0}")]
    Representation(String),
    #[error("oracle not applicable: {0}")]
    NotApplicable(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
