//! Error type shared by all engine modules.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("evaluation point is at or too close to a pole (distance {distance:e})")]
    Pole { distance: f64 },

    #[error("requested accuracy cannot be certified: {0}")]
    PrecisionUnachievable(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("prime {0} divides the conductor; point counting needs good reduction")]
    BadReductionPrime(u64),

    #[error("prime {0} exceeds the point-counting ceiling {1}")]
    OverflowLimit(u64, u64),

    #[error("reduction classification at p = {0} is only implemented for p >= 5")]
    UnsupportedPrime(u64),

    #[error("additive local factor is identically 1 and has no poles")]
    AdditiveFactorHasNoPoles,

    #[error("evaluation point within {distance:e} of an included pole (separation {separation:e})")]
    TooCloseToPole { distance: f64, separation: f64 },

    #[error("pole collision of order {order} at ({re}, {im}); only the expected order-2 collision at -1/2 is supported")]
    UnhandledHigherOrderPole { order: usize, re: f64, im: f64 },

    #[error("truncation horizon {needed} exceeds ceiling {ceiling}; this conductor is beyond desk scale")]
    HorizonCeilingExceeded { needed: u64, ceiling: u64 },

    #[error("coefficient table covers n <= {have} but horizon {needed} is required")]
    CoefficientTableTooSmall { needed: u64, have: u64 },

    #[error("a zero sits on the counting contour after {0} radius nudges")]
    ZeroOnContour(usize),

    #[error("phase continuation failed (refinement depth exhausted)")]
    PhaseTrackingFailed,

    #[error("subdivision floor {floor:e} reached with {count} zeros still clustered near ({re}, {im})")]
    SubdivisionFloorReached { floor: f64, count: i64, re: f64, im: f64 },

    #[error("no Taylor coefficient cleared the noise floor before k = {0}")]
    RankIndeterminate(usize),

    #[error("a_p = 0 at p = {0}: polygon scaling undefined, this level is skipped")]
    ZeroCoefficientScaling(u64),

    #[error("invalid curve data: {0}")]
    InvalidCurve(String),

    #[error("zero count in disk is {found}, expected {expected}")]
    ZeroCountMismatch { expected: i64, found: i64 },

    #[error("non-finite value produced in {0}")]
    NonFinite(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
