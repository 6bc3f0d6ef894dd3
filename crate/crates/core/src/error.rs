use thiserror::Error;

use crate::exact::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("inadmissible algebra {label}: admissible are A_l (l>=1), B_l (l>=2), C_l (l>=2), D_l (l>=3), E6, E7, E8, F4, G2")]
    InadmissibleAlgebra { label: String },

    #[error("invalid root table: {0}")]
    InvalidRootTable(String),

    #[error("root {root} has level {level} against the highest root; expected one of -1, -1/2, 0, 1/2, 1")]
    InconsistentGrading { root: String, level: Rational },

    #[error("weight is not dominant: <lambda + rho, {simple_root}> = {pairing}")]
    NonDominantWeight { simple_root: String, pairing: Rational },

    #[error("Weyl dimension {0} is not an integer")]
    NonIntegralDimension(Rational),

    #[error("polynomial has degree {found:?}, expected {expected}")]
    DegreeMismatch { expected: usize, found: Option<usize> },

    #[error("polynomial violates P(r) = -P(-r-n-1); residual {residual}")]
    SymmetryViolated { residual: String },

    #[error("product formula disagrees with the Weyl dimension formula at r = {r}: {product} vs {weyl}")]
    OracleMismatch { r: i64, product: String, weyl: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("linear map of {maps} is rank deficient: rank {rank}, expected {expected}")]
    RankDeficient { maps: String, rank: usize, expected: usize },

    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
}
