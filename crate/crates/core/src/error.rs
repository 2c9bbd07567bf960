use thiserror::Error;

use crate::ptfn::Kind;

/// Everything that can go wrong when building or combining pseudo fuzzy values.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} must be finite, got {value}")]
    NonFinite { what: &'static str, value: f64 },

    #[error("positive membership {0} is outside [0, 1]")]
    MuOutOfRange(f64),

    #[error("negative membership {0} is outside [-1, 0]")]
    LambdaOutOfRange(f64),

    #[error("tolerance must be a positive finite number, got {0}")]
    InvalidTolerance(f64),

    #[error("support point {index} is smaller than its predecessor")]
    UnsortedSupport { index: usize },

    #[error("support point {index} repeats its predecessor")]
    DuplicateSupportPoint { index: usize },

    #[error("element {index}: {source}")]
    InvalidElement {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("triangle vertices must satisfy a <= b <= c, got ({a}, {b}, {c})")]
    UnorderedShape { a: f64, b: f64, c: f64 },

    #[error("triangle has zero width (a = b = c = {0})")]
    ZeroWidth(f64),

    #[error("interval bounds are reversed: [{lo}, {hi}]")]
    ReversedInterval { lo: f64, hi: f64 },

    #[error("alpha level {0} is outside [0, 1]")]
    AlphaOutOfRange(f64),

    #[error("beta level {0} is outside [-1, 0]")]
    BetaOutOfRange(f64),

    #[error("parameter {0} is outside [0, 1]")]
    ParamOutOfRange(f64),

    #[error("range [{min}, {max}] is empty or not finite")]
    BadRange { min: f64, max: f64 },

    #[error("{what} must be at least {min}, got {got}")]
    BadCount {
        what: &'static str,
        min: usize,
        got: usize,
    },

    #[error("cannot combine {left} and {right} numbers")]
    KindMismatch { left: Kind, right: Kind },

    #[error("scaling by zero collapses the triangle")]
    ZeroScale,

    #[error("divisor support [{lo}, {hi}] contains zero")]
    DivisorStraddlesZero { lo: f64, hi: f64 },

    #[error("cut table levels must increase strictly from 0 to 1 (row {row})")]
    BadLevels { row: usize },

    #[error("cut table row {row} is not contained in the row below it")]
    NotNested { row: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn finite(what: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite { what, value })
    }
}
