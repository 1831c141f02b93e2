//! Trapezoidal fuzzy numbers and the interval numbers they reduce to.

use crate::error::{check_unit, Error, Result};

/// A trapezoidal fuzzy number `(y1, y2, y3, y4)` with `y1 <= y2 <= y3 <= y4`.
///
/// `[y2, y3]` is the core (membership 1) and `[y1, y4]` the support. A crisp
/// value is the degenerate trapezoid with all four points equal.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TrapezoidalFuzzy {
    points: [f64; 4],
}

impl TrapezoidalFuzzy {
    pub fn new(y1: f64, y2: f64, y3: f64, y4: f64) -> Result<Self> {
        let points = [y1, y2, y3, y4];
        if points.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("trapezoid"));
        }
        if !(y1 <= y2 && y2 <= y3 && y3 <= y4) {
            return Err(Error::MalformedTrapezoid(y1, y2, y3, y4));
        }
        Ok(Self { points })
    }

    pub fn crisp(value: f64) -> Result<Self> {
        Self::new(value, value, value, value)
    }

    pub fn points(&self) -> [f64; 4] {
        self.points
    }

    pub fn is_crisp(&self) -> bool {
        self.points.iter().all(|&v| v == self.points[0])
    }

    /// Reduces the number to the interval of values with membership at least `alpha`.
    pub fn alpha_cut(&self, alpha: f64) -> Result<Interval> {
        alpha_cut(self, alpha)
    }
}

/// A closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() {
            return Err(Error::NonFinite("interval"));
        }
        if lo > hi {
            return Err(Error::MalformedInterval(lo, hi));
        }
        Ok(Self { lo, hi })
    }

    /// Zero-width interval.
    pub fn point(value: f64) -> Result<Self> {
        Self::new(value, value)
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub(crate) fn from_ordered(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi, "interval [{lo}, {hi}]");
        Self { lo, hi }
    }
}

/// `[α·y2 + (1−α)·y1, α·y3 + (1−α)·y4]`.
pub fn alpha_cut(f: &TrapezoidalFuzzy, alpha: f64) -> Result<Interval> {
    check_unit("alpha", alpha)?;
    let [y1, y2, y3, y4] = f.points;
    let lo = alpha * y2 + (1.0 - alpha) * y1;
    let hi = alpha * y3 + (1.0 - alpha) * y4;
    // Rounding can cross the endpoints of a zero-width core by one ulp.
    Ok(if lo <= hi {
        Interval::from_ordered(lo, hi)
    } else {
        Interval::from_ordered(hi, hi)
    })
}

/// Chebyshev distance between endpoint pairs: `max(|a.lo − b.lo|, |a.hi − b.hi|)`.
pub fn interval_distance(a: &Interval, b: &Interval) -> f64 {
    let d_lo = (a.lo - b.lo).abs();
    let d_hi = (a.hi - b.hi).abs();
    if d_lo >= d_hi {
        d_lo
    } else {
        d_hi
    }
}
