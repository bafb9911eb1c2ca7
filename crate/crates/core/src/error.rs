use num_bigint::BigInt;
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Error)]
pub enum TiltError {
    #[error("dimension mismatch: expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("class must have positive rank, found rank {0}")]
    NonPositiveRank(Rational),

    #[error("alpha must be positive, found {0}")]
    NonPositiveAlpha(Rational),

    #[error("Z(v) = {0} is not a negative real number on the vertical wall")]
    ChargeNotNegative(Rational),

    #[error("curve in |{a}H| has negative genus {genus}")]
    NegativeGenus { a: u32, genus: BigInt },

    #[error("2g - 2 = {0} is odd; surface data fails the parity check")]
    OddCanonicalDegree(Rational),

    #[error("{name} must be at least 1")]
    ZeroMultiple { name: &'static str },

    #[error("no integral degree for rank {rank}: d = {solution} (rank of F does not divide r deg F)")]
    NonIntegralDegree { rank: u64, solution: Rational },

    #[error("curve class F must have positive rank, found {0}")]
    NonPositiveCurveRank(Rational),

    #[error("empty region: {0}")]
    EmptyRegion(String),

    #[error("search bounds must be positive")]
    InvalidBounds,

    #[error("wall membership disagrees with the slope equality at {0}")]
    InconsistentWall(String),

    #[error("closed-form and Riemann-Roch pairings disagree: {closed} vs {hrr}")]
    PairingMismatch { closed: String, hrr: String },

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = TiltError> = std::result::Result<T, E>;
