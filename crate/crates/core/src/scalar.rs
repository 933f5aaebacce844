//! Numeric types the geometry is written against.
//!
//! Every formula in the crate is generic over [`Scalar`], so the same source
//! evaluates as plain doubles (the floating-point oracle), as intervals
//! (enclosures) and as interval jets (derivative enclosures).

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::jet::Jet2;

pub trait Scalar:
    Copy
    + Send
    + Sync
    + std::fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Lift a constant. Doubles take the midpoint of the enclosure.
    fn constant(c: Interval) -> Self;

    /// Enclosure of the value (a point for doubles).
    fn value(&self) -> Interval;

    fn try_div(&self, rhs: &Self) -> Result<Self>;
    fn sqr(&self) -> Self;
    fn sqrt(&self) -> Result<Self>;
    fn sin(&self) -> Self;
    fn cos(&self) -> Self;
    fn acos(&self) -> Result<Self>;
    /// `atan2(self, x)`.
    fn atan2(&self, x: &Self) -> Result<Self>;
    fn abs(&self) -> Result<Self>;

    fn pi() -> Self {
        Self::constant(Interval::pi())
    }

    /// Exactly representable constant.
    fn exact(v: f64) -> Self {
        Self::constant(Interval::point(v))
    }
}

/// Tolerance used by the double oracle when a rounded argument strays just
/// outside the natural domain of sqrt or acos.
const F64_DOMAIN_SLACK: f64 = 1e-12;

impl Scalar for f64 {
    fn constant(c: Interval) -> Self {
        c.mid()
    }

    fn value(&self) -> Interval {
        Interval::point(*self)
    }

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        if *rhs == 0.0 {
            return Err(Error::DivisionByZero { lo: 0.0, hi: 0.0 });
        }
        Ok(self / rhs)
    }

    fn sqr(&self) -> Self {
        self * self
    }

    fn sqrt(&self) -> Result<Self> {
        if *self < -F64_DOMAIN_SLACK {
            return Err(Error::Domain {
                op: "sqrt",
                lo: *self,
                hi: *self,
            });
        }
        Ok(self.max(0.0).sqrt())
    }

    fn sin(&self) -> Self {
        f64::sin(*self)
    }

    fn cos(&self) -> Self {
        f64::cos(*self)
    }

    fn acos(&self) -> Result<Self> {
        if f64::abs(*self) > 1.0 + F64_DOMAIN_SLACK {
            return Err(Error::Domain {
                op: "acos",
                lo: *self,
                hi: *self,
            });
        }
        Ok(self.clamp(-1.0, 1.0).acos())
    }

    fn atan2(&self, x: &Self) -> Result<Self> {
        Ok(f64::atan2(*self, *x))
    }

    fn abs(&self) -> Result<Self> {
        Ok(f64::abs(*self))
    }
}

impl Scalar for Interval {
    fn constant(c: Interval) -> Self {
        c
    }

    fn value(&self) -> Interval {
        *self
    }

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        Interval::try_div(self, rhs)
    }

    fn sqr(&self) -> Self {
        Interval::sqr(self)
    }

    fn sqrt(&self) -> Result<Self> {
        Interval::sqrt(self)
    }

    fn sin(&self) -> Self {
        Interval::sin(self)
    }

    fn cos(&self) -> Self {
        Interval::cos(self)
    }

    fn acos(&self) -> Result<Self> {
        Interval::acos(self)
    }

    fn atan2(&self, x: &Self) -> Result<Self> {
        Interval::atan2(self, x)
    }

    fn abs(&self) -> Result<Self> {
        Ok(Interval::abs(self))
    }
}

impl Scalar for Jet2 {
    fn constant(c: Interval) -> Self {
        Jet2::constant(c)
    }

    fn value(&self) -> Interval {
        self.val
    }

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        Jet2::try_div(self, rhs)
    }

    fn sqr(&self) -> Self {
        Jet2::sqr(self)
    }

    fn sqrt(&self) -> Result<Self> {
        Jet2::sqrt(self)
    }

    fn sin(&self) -> Self {
        Jet2::sin(self)
    }

    fn cos(&self) -> Self {
        Jet2::cos(self)
    }

    fn acos(&self) -> Result<Self> {
        Jet2::acos(self)
    }

    fn atan2(&self, x: &Self) -> Result<Self> {
        Jet2::atan2(self, x)
    }

    fn abs(&self) -> Result<Self> {
        Jet2::abs(self)
    }
}
