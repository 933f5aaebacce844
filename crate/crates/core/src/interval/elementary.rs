use super::round::{sqrt_down, sqrt_up, widen_down, widen_up, LIBM_ULPS};
use super::Interval;
use crate::error::{Error, Result};

fn domain(op: &'static str, x: &Interval) -> Error {
    Error::Domain {
        op,
        lo: x.lo,
        hi: x.hi,
    }
}

fn libm(lo: f64, hi: f64) -> Interval {
    Interval {
        lo: widen_down(lo, LIBM_ULPS),
        hi: widen_up(hi, LIBM_ULPS),
    }
}

/// Does `[lo, hi]` possibly contain `(2k + offset) * pi` for some integer k?
/// `offset` is a multiple of 1/2 so every test point is exact before the
/// multiplication by the pi enclosure.
fn hits_critical_point(x: &Interval, offset: f64) -> bool {
    let two_pi = std::f64::consts::TAU;
    let k0 = ((x.lo / two_pi) - offset / 2.0).floor() - 1.0;
    let k1 = ((x.hi / two_pi) - offset / 2.0).ceil() + 1.0;
    let mut k = k0;
    while k <= k1 {
        let c = Interval::pi().scale(2.0 * k + offset);
        if c.lo <= x.hi && x.lo <= c.hi {
            return true;
        }
        k += 1.0;
    }
    false
}

fn periodic(x: &Interval, f: fn(f64) -> f64, max_offset: f64, min_offset: f64) -> Interval {
    if x.width() >= 2.0 * std::f64::consts::PI {
        return Interval::new(-1.0, 1.0);
    }
    let (a, b) = (f(x.lo), f(x.hi));
    let mut r = libm(a.min(b), a.max(b));
    if hits_critical_point(x, max_offset) {
        r.hi = 1.0;
    }
    if hits_critical_point(x, min_offset) {
        r.lo = -1.0;
    }
    Interval {
        lo: r.lo.max(-1.0),
        hi: r.hi.min(1.0),
    }
}

impl Interval {
    /// Square root over `self ∩ [0, ∞)`.
    pub fn sqrt(&self) -> Result<Interval> {
        if self.hi < 0.0 {
            return Err(domain("sqrt", self));
        }
        let lo = self.lo.max(0.0);
        Ok(Interval {
            lo: sqrt_down(lo),
            hi: sqrt_up(self.hi),
        })
    }

    pub fn sin(&self) -> Interval {
        periodic(self, f64::sin, 0.5, 1.5)
    }

    pub fn cos(&self) -> Interval {
        periodic(self, f64::cos, 0.0, 1.0)
    }

    /// Arc cosine over `self ∩ [-1, 1]`.
    pub fn acos(&self) -> Result<Interval> {
        if self.hi < -1.0 || self.lo > 1.0 {
            return Err(domain("acos", self));
        }
        let lo = self.lo.max(-1.0);
        let hi = self.hi.min(1.0);
        let r = libm(hi.acos(), lo.acos());
        Ok(Interval {
            lo: r.lo.max(0.0),
            hi: r.hi.min(Interval::pi().hi),
        })
    }

    /// Two-argument arc tangent `atan2(self, x)` with values in `(-pi, pi]`.
    ///
    /// Boxes that touch the origin or straddle the negative real axis (the
    /// branch cut) are rejected.
    pub fn atan2(&self, x: &Interval) -> Result<Interval> {
        let y = self;
        let (lo, hi) = if x.lo > 0.0 {
            // atan2 increases with y; in x it decreases when y > 0.
            let xl = if y.lo >= 0.0 { x.hi } else { x.lo };
            let xh = if y.hi >= 0.0 { x.lo } else { x.hi };
            (y.lo.atan2(xl), y.hi.atan2(xh))
        } else if y.lo > 0.0 {
            let yl = if x.hi >= 0.0 { y.lo } else { y.hi };
            let yh = if x.lo >= 0.0 { y.hi } else { y.lo };
            (yl.atan2(x.hi), yh.atan2(x.lo))
        } else if y.hi < 0.0 {
            let yl = if x.lo >= 0.0 { y.lo } else { y.hi };
            let yh = if x.hi >= 0.0 { y.hi } else { y.lo };
            (yl.atan2(x.lo), yh.atan2(x.hi))
        } else if y.lo == 0.0 && y.hi == 0.0 && x.hi < 0.0 {
            let p = Interval::pi();
            return Ok(p);
        } else {
            return Err(Error::Domain {
                op: "atan2",
                lo: x.lo,
                hi: x.hi,
            });
        };
        let r = libm(lo, hi);
        let p = Interval::pi().hi;
        Ok(Interval {
            lo: r.lo.max(-p),
            hi: r.hi.min(p),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn trig_ranges() {
        let c = Interval::new(0.0, PI).cos();
        assert_eq!((c.lo(), c.hi()), (-1.0, 1.0));
        let s = Interval::new(0.0, PI).sin();
        assert_eq!(s.hi(), 1.0);
        assert!(s.lo() <= 0.0 && s.lo() > -1e-15);
        let wide = Interval::new(-10.0, 10.0).sin();
        assert_eq!(wide, Interval::new(-1.0, 1.0));
        let mono = Interval::new(0.1, 0.2).cos();
        assert!(mono.contains(0.15f64.cos()));
        assert!(mono.hi() < 1.0);
    }

    #[test]
    fn acos_and_sqrt() {
        let a = Interval::ONE.acos().unwrap();
        assert_eq!(a.lo(), 0.0);
        assert!(a.hi() < 1e-300);
        let clipped = Interval::new(0.5, 1.5).acos().unwrap();
        assert_eq!(clipped.lo(), 0.0);
        assert!(Interval::new(1.1, 2.0).acos().is_err());
        assert_eq!(
            Interval::new(4.0, 9.0).sqrt().unwrap(),
            Interval::new(2.0, 3.0)
        );
        assert!(Interval::new(-2.0, -1.0).sqrt().is_err());
        assert_eq!(Interval::new(-1.0, 4.0).sqrt().unwrap(), Interval::new(0.0, 2.0));
    }

    #[test]
    fn atan2_quadrants() {
        let up = Interval::new(1.0, 2.0).atan2(&Interval::new(-1.0, 1.0)).unwrap();
        assert!(up.contains(FRAC_PI_2));
        assert!(up.contains(2f64.atan2(-1.0)) && up.contains(1f64.atan2(1.0)));
        let right = Interval::new(-1.0, 1.0).atan2(&Interval::new(1.0, 2.0)).unwrap();
        assert!(right.contains(0.0) && right.contains((-1f64).atan2(1.0)));
        assert!(Interval::new(-1.0, 1.0)
            .atan2(&Interval::new(-2.0, -1.0))
            .is_err());
        assert!(Interval::ZERO
            .atan2(&Interval::new(-2.0, -1.0))
            .unwrap()
            .contains(PI));
    }
}
