//! Outward-rounded interval arithmetic.
//!
//! An [`Interval`] `[lo, hi]` is a set of reals. Every operation returns an
//! interval that contains the exact image of its inputs, so a strict sign
//! read off an enclosure is a proof about every point of the input.

mod boxes;
mod decimal;
mod elementary;
pub(crate) mod round;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use boxes::IntervalBox;
pub use decimal::dec;

use round::{add_down, add_up, div_down, div_up, mul_down, mul_up, sub_down, sub_up};

/// A closed interval of reals with `lo <= hi`.
#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    /// Builds `[lo, hi]`.
    ///
    /// Panics if either endpoint is NaN or `lo > hi`.
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(
            lo <= hi,
            "invalid interval endpoints [{lo}, {hi}]"
        );
        Self { lo, hi }
    }

    pub fn try_new(lo: f64, hi: f64) -> Option<Self> {
        (lo <= hi).then_some(Self { lo, hi })
    }

    /// The degenerate interval `[v, v]`. The value is taken as exact.
    pub const fn point(v: f64) -> Self {
        Self { lo: v, hi: v }
    }

    pub const ZERO: Interval = Interval::point(0.0);
    pub const ONE: Interval = Interval::point(1.0);

    /// Tightest double interval around pi.
    pub fn pi() -> Self {
        // fl(pi) is below pi by about 1.2e-16.
        let p = std::f64::consts::PI;
        Self { lo: p, hi: p.next_up() }
    }

    pub fn two_pi() -> Self {
        Self::pi() * Self::point(2.0)
    }

    pub fn four_pi() -> Self {
        Self::pi() * Self::point(4.0)
    }

    #[inline]
    pub fn lo(&self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> f64 {
        self.hi
    }

    /// Upper bound on the width, rounded up.
    pub fn width(&self) -> f64 {
        sub_up(self.hi, self.lo)
    }

    /// A double inside the interval, near its center.
    pub fn mid(&self) -> f64 {
        if self.lo == self.hi {
            return self.lo;
        }
        let m = 0.5 * self.lo + 0.5 * self.hi;
        m.clamp(self.lo, self.hi)
    }

    /// Largest absolute value of a member.
    pub fn mag(&self) -> f64 {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn contains(&self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(0.0)
    }

    pub fn is_subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    /// Certainly `> 0` on the whole interval.
    pub fn is_positive(&self) -> bool {
        self.lo > 0.0
    }

    /// Certainly `< 0` on the whole interval.
    pub fn is_negative(&self) -> bool {
        self.hi < 0.0
    }

    /// Certainly `self < other` for every pair of members.
    pub fn certainly_lt(&self, other: &Interval) -> bool {
        self.hi < other.lo
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        Interval::try_new(self.lo.max(other.lo), self.hi.min(other.hi))
    }

    /// Splits at the midpoint; the two halves share the split point.
    pub fn bisect(&self) -> (Interval, Interval) {
        let m = self.mid();
        (Interval::new(self.lo, m), Interval::new(m, self.hi))
    }

    pub fn abs(&self) -> Interval {
        if self.lo >= 0.0 {
            *self
        } else if self.hi <= 0.0 {
            -*self
        } else {
            Interval {
                lo: 0.0,
                hi: self.mag(),
            }
        }
    }

    pub fn min(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.min(other.hi),
        }
    }

    pub fn max(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.max(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    /// `x^2`, without the dependency overestimate of `x * x`.
    pub fn sqr(&self) -> Interval {
        let a = self.abs();
        Interval {
            lo: mul_down(a.lo, a.lo),
            hi: mul_up(a.hi, a.hi),
        }
    }

    pub fn powi(&self, k: u32) -> Interval {
        match k {
            0 => Interval::ONE,
            1 => *self,
            _ if k % 2 == 0 => {
                let a = self.abs();
                Interval {
                    lo: pow_down(a.lo, k),
                    hi: pow_up(a.hi, k),
                }
            }
            _ => Interval {
                lo: odd_pow_down(self.lo, k),
                hi: odd_pow_up(self.hi, k),
            },
        }
    }

    /// Quotient; an error when the divisor contains zero.
    pub fn try_div(&self, rhs: &Interval) -> Result<Interval> {
        if rhs.contains_zero() {
            return Err(Error::DivisionByZero {
                lo: rhs.lo,
                hi: rhs.hi,
            });
        }
        let (a, b) = (self, rhs);
        let cands_lo = [
            div_down(a.lo, b.lo),
            div_down(a.lo, b.hi),
            div_down(a.hi, b.lo),
            div_down(a.hi, b.hi),
        ];
        let cands_hi = [
            div_up(a.lo, b.lo),
            div_up(a.lo, b.hi),
            div_up(a.hi, b.lo),
            div_up(a.hi, b.hi),
        ];
        Ok(Interval {
            lo: cands_lo.into_iter().fold(f64::INFINITY, f64::min),
            hi: cands_hi.into_iter().fold(f64::NEG_INFINITY, f64::max),
        })
    }

    /// Multiplication by an exactly representable scalar.
    pub fn scale(&self, k: f64) -> Interval {
        *self * Interval::point(k)
    }
}

fn pow_down(a: f64, k: u32) -> f64 {
    (1..k).fold(a, |acc, _| mul_down(acc, a))
}

fn pow_up(a: f64, k: u32) -> f64 {
    (1..k).fold(a, |acc, _| mul_up(acc, a))
}

fn odd_pow_down(a: f64, k: u32) -> f64 {
    if a >= 0.0 {
        pow_down(a, k)
    } else {
        -pow_up(-a, k)
    }
}

fn odd_pow_up(a: f64, k: u32) -> f64 {
    if a >= 0.0 {
        pow_up(a, k)
    } else {
        -pow_down(-a, k)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:e}, {:e}]", self.lo, self.hi)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = f.precision() {
            write!(f, "[{:.*}, {:.*}]", p, self.lo, p, self.hi)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

impl From<f64> for Interval {
    fn from(v: f64) -> Self {
        Interval::point(v)
    }
}

impl From<[f64; 2]> for Interval {
    fn from([lo, hi]: [f64; 2]) -> Self {
        Interval::new(lo, hi)
    }
}

impl Add for Interval {
    type Output = Interval;
    #[inline]
    fn add(self, rhs: Interval) -> Interval {
        Interval {
            lo: add_down(self.lo, rhs.lo),
            hi: add_up(self.hi, rhs.hi),
        }
    }
}

impl Sub for Interval {
    type Output = Interval;
    #[inline]
    fn sub(self, rhs: Interval) -> Interval {
        Interval {
            lo: sub_down(self.lo, rhs.hi),
            hi: sub_up(self.hi, rhs.lo),
        }
    }
}

impl Neg for Interval {
    type Output = Interval;
    #[inline]
    fn neg(self) -> Interval {
        Interval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, rhs: Interval) -> Interval {
        let (a, b) = (self, rhs);
        // Sign-case split keeps the common all-positive case to two products.
        if a.lo >= 0.0 && b.lo >= 0.0 {
            return Interval {
                lo: mul_down(a.lo, b.lo),
                hi: mul_up(a.hi, b.hi),
            };
        }
        let lo = mul_down(a.lo, b.lo)
            .min(mul_down(a.lo, b.hi))
            .min(mul_down(a.hi, b.lo))
            .min(mul_down(a.hi, b.hi));
        let hi = mul_up(a.lo, b.lo)
            .max(mul_up(a.lo, b.hi))
            .max(mul_up(a.hi, b.lo))
            .max(mul_up(a.hi, b.hi));
        Interval { lo, hi }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoint_arithmetic() {
        let a = Interval::new(1.0, 2.0);
        let b = Interval::new(3.0, 4.0);
        assert_eq!(a + b, Interval::new(4.0, 6.0));
        assert_eq!(b - a, Interval::new(1.0, 3.0));
        let c = Interval::new(-1.0, 2.0);
        assert_eq!(c * c, Interval::new(-2.0, 4.0));
        assert_eq!(c.sqr(), Interval::new(0.0, 4.0));
        assert_eq!(Interval::new(-0.5, 0.3).abs(), Interval::new(0.0, 0.5));
        assert_eq!(Interval::new(-2.0, 1.0).powi(3), Interval::new(-8.0, 1.0));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let a = Interval::new(1.0, 2.0);
        assert!(matches!(
            a.try_div(&Interval::new(-1.0, 1.0)),
            Err(Error::DivisionByZero { .. })
        ));
        assert_eq!(
            a.try_div(&Interval::new(2.0, 4.0)).unwrap(),
            Interval::new(0.25, 1.0)
        );
    }

    #[test]
    fn pi_is_tight() {
        let p = Interval::pi();
        assert!(p.width() < 1e-15);
        assert!(p.contains(std::f64::consts::PI));
        assert!(p.lo() < p.hi());
    }

    #[test]
    #[should_panic]
    fn reversed_endpoints_panic() {
        let _ = Interval::new(2.0, 1.0);
    }
}
