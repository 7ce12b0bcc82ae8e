//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("alphabet must be strictly increasing with at least {0} elements")]
    NonIncreasingAlphabet(usize),
    #[error("interference probabilities must be positive and sum to one (sum = {0})")]
    BadPmf(f64),
    #[error("noise power must be nonnegative (got {0})")]
    NegativeNoise(f64),
    #[error("operation requires positive noise power")]
    ZeroNoise,
    #[error("probability assignment is invalid: {0}")]
    InvalidJointPmf(String),
    #[error("quadrature did not converge within {0} subdivisions")]
    QuadratureNoConvergence(usize),
    #[error("second-derivative root not bracketed in [{0}, {1}]")]
    RootNotBracketed(f64, f64),
    #[error("iteration did not converge within {0} iterations")]
    NoConvergence(usize),
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
    #[error("input alphabet is not an arithmetic progression")]
    NotArithmeticProgression,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("channel output does not belong to any message multiset")]
    UnknownOutput,
    #[error("output multisets are not mutually disjoint")]
    MultisetsNotDisjoint,
    #[error("value is not a finite decimal number: {0}")]
    BadDecimal(String),
    #[error("invalid channel configuration: {0}")]
    BadConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
