//! Second-order forward-mode differentiation over intervals.
//!
//! A [`Jet2`] carries enclosures of `f`, `f'` and `f''` with respect to one
//! real variable. Evaluating an expression on the jet of an interval `X`
//! yields enclosures of the value and both derivatives valid at every point
//! of `X`, which is what monotonicity and convexity certificates need.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::interval::Interval;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet2 {
    pub val: Interval,
    pub d1: Interval,
    pub d2: Interval,
}

fn not_differentiable(op: &'static str, x: &Interval) -> Error {
    Error::NotDifferentiable {
        op,
        lo: x.lo(),
        hi: x.hi(),
    }
}

impl Jet2 {
    pub fn new(val: Interval, d1: Interval, d2: Interval) -> Self {
        Self { val, d1, d2 }
    }

    pub fn constant(c: Interval) -> Self {
        Self::new(c, Interval::ZERO, Interval::ZERO)
    }

    /// The independent variable ranging over `x`.
    pub fn variable(x: Interval) -> Self {
        Self::new(x, Interval::ONE, Interval::ZERO)
    }

    /// Apply a scalar function given the enclosures `g(a), g'(a), g''(a)`
    /// of its value and derivatives over the value range of `self`.
    fn chain(&self, g0: Interval, g1: Interval, g2: Interval) -> Jet2 {
        Jet2 {
            val: g0,
            d1: g1 * self.d1,
            d2: g2 * self.d1.sqr() + g1 * self.d2,
        }
    }

    pub fn sqr(&self) -> Jet2 {
        let two = Interval::point(2.0);
        Jet2 {
            val: self.val.sqr(),
            d1: two * self.val * self.d1,
            d2: two * (self.d1.sqr() + self.val * self.d2),
        }
    }

    pub fn try_div(&self, rhs: &Jet2) -> Result<Jet2> {
        let q = self.val.try_div(&rhs.val)?;
        let q1 = (self.d1 - q * rhs.d1).try_div(&rhs.val)?;
        let q2 = (self.d2 - Interval::point(2.0) * q1 * rhs.d1 - q * rhs.d2).try_div(&rhs.val)?;
        Ok(Jet2::new(q, q1, q2))
    }

    pub fn sqrt(&self) -> Result<Jet2> {
        if self.val.lo() <= 0.0 {
            return Err(not_differentiable("sqrt", &self.val));
        }
        let s = self.val.sqrt()?;
        let two_s = s.scale(2.0);
        let s1 = self.d1.try_div(&two_s)?;
        let s2 = (self.d2 - Interval::point(2.0) * s1.sqr()).try_div(&two_s)?;
        Ok(Jet2::new(s, s1, s2))
    }

    pub fn sin(&self) -> Jet2 {
        let (s, c) = (self.val.sin(), self.val.cos());
        self.chain(s, c, -s)
    }

    pub fn cos(&self) -> Jet2 {
        let (s, c) = (self.val.sin(), self.val.cos());
        self.chain(c, -s, -c)
    }

    pub fn acos(&self) -> Result<Jet2> {
        let q = Interval::ONE - self.val.sqr();
        if q.lo() <= 0.0 {
            return Err(not_differentiable("acos", &self.val));
        }
        let sq = q.sqrt()?;
        let g1 = -(Interval::ONE.try_div(&sq)?);
        let g2 = -(self.val.try_div(&(q * sq))?);
        Ok(self.chain(self.val.acos()?, g1, g2))
    }

    /// `atan2(self, x)`.
    pub fn atan2(&self, x: &Jet2) -> Result<Jet2> {
        let y = self;
        let val = y.val.atan2(&x.val)?;
        let r2 = x.val.sqr() + y.val.sqr();
        let n = x.val * y.d1 - y.val * x.d1;
        let n1 = x.val * y.d2 - y.val * x.d2;
        let r2d = Interval::point(2.0) * (x.val * x.d1 + y.val * y.d1);
        let d1 = n.try_div(&r2)?;
        let d2 = (n1 * r2 - n * r2d).try_div(&r2.sqr())?;
        Ok(Jet2::new(val, d1, d2))
    }

    pub fn abs(&self) -> Result<Jet2> {
        if self.val.lo() > 0.0 {
            Ok(*self)
        } else if self.val.hi() < 0.0 {
            Ok(-*self)
        } else {
            Err(not_differentiable("abs", &self.val))
        }
    }
}

impl Add for Jet2 {
    type Output = Jet2;
    fn add(self, r: Jet2) -> Jet2 {
        Jet2::new(self.val + r.val, self.d1 + r.d1, self.d2 + r.d2)
    }
}

impl Sub for Jet2 {
    type Output = Jet2;
    fn sub(self, r: Jet2) -> Jet2 {
        Jet2::new(self.val - r.val, self.d1 - r.d1, self.d2 - r.d2)
    }
}

impl Neg for Jet2 {
    type Output = Jet2;
    fn neg(self) -> Jet2 {
        Jet2::new(-self.val, -self.d1, -self.d2)
    }
}

impl Mul for Jet2 {
    type Output = Jet2;
    fn mul(self, r: Jet2) -> Jet2 {
        let two = Interval::point(2.0);
        Jet2::new(
            self.val * r.val,
            self.d1 * r.val + self.val * r.d1,
            self.d2 * r.val + two * self.d1 * r.d1 + self.val * r.d2,
        )
    }
}
