//! Closed real intervals with endpoint arithmetic.

use std::fmt;

use crate::error::{finite, Error, Result};

/// A closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        finite("interval lower bound", lo)?;
        finite("interval upper bound", hi)?;
        if lo > hi {
            return Err(Error::ReversedInterval { lo, hi });
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(x: f64) -> Result<Self> {
        Self::new(x, x)
    }

    pub(crate) fn from_bounds_unchecked(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi, "[{lo}, {hi}]");
        Interval { lo, hi }
    }

    #[inline]
    pub fn lo(&self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        self.lo + 0.5 * (self.hi - self.lo)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(0.0)
    }

    /// Exact containment, no tolerance.
    pub fn is_subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// Largest endpoint distance to `other`.
    pub fn distance(&self, other: &Interval) -> f64 {
        (self.lo - other.lo).abs().max((self.hi - other.hi).abs())
    }

    pub fn add(&self, rhs: &Interval) -> Interval {
        Interval::from_bounds_unchecked(self.lo + rhs.lo, self.hi + rhs.hi)
    }

    pub fn sub(&self, rhs: &Interval) -> Interval {
        Interval::from_bounds_unchecked(self.lo - rhs.hi, self.hi - rhs.lo)
    }

    pub fn scale(&self, k: f64) -> Interval {
        if k >= 0.0 {
            Interval::from_bounds_unchecked(k * self.lo, k * self.hi)
        } else {
            Interval::from_bounds_unchecked(k * self.hi, k * self.lo)
        }
    }

    /// Hull of the four endpoint products.
    pub fn mul(&self, rhs: &Interval) -> Interval {
        hull4([
            self.lo * rhs.lo,
            self.lo * rhs.hi,
            self.hi * rhs.lo,
            self.hi * rhs.hi,
        ])
    }

    /// `self * [1/rhs.hi, 1/rhs.lo]`; the divisor must exclude zero.
    ///
    /// The endpoint quotients are taken directly rather than through the
    /// reciprocal so that each corner is rounded once.
    pub fn div(&self, rhs: &Interval) -> Result<Interval> {
        if rhs.contains_zero() {
            return Err(Error::DivisorStraddlesZero {
                lo: rhs.lo,
                hi: rhs.hi,
            });
        }
        Ok(hull4([
            self.lo / rhs.lo,
            self.lo / rhs.hi,
            self.hi / rhs.lo,
            self.hi / rhs.hi,
        ]))
    }
}

fn hull4(v: [f64; 4]) -> Interval {
    let lo = v.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    // -0.0 and 0.0 compare equal; keep the sign-free zero
    Interval::from_bounds_unchecked(lo + 0.0, hi + 0.0)
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}
