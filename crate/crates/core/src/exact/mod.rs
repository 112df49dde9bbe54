//! Exact rational scalar and dense matrix arithmetic.
//!
//! Everything here is arbitrary precision and fully reduced after every
//! operation. There is no floating point anywhere in this crate: the
//! identities we certify are exact, so equality is structural.

mod matrix;
mod rational;

pub use matrix::{MatrixFormatError, RationalMatrix, SolveError};
pub use rational::{
    format_rational, integer, parse_rational, rational, ParseRationalError, Rational,
};
