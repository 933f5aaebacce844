//! Reduced real-variable quantities: area representatives, truncation,
//! the area threshold `a(N)`, the area fraction and the deficit functional.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Constants;
use crate::interval::{dec, Interval};
use crate::scalar::Scalar;

/// Low part of π: `PI + PI_LO` is π to about 32 significant digits.
const PI_LO: f64 = 1.2246467991473532e-16;

/// An area class modulo 4π, given by any real representative.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum AreaMod4Pi {
    /// Representative in steradians.
    Radians(f64),
    /// Representative as a multiple of π, so boundary values are exact.
    PiMultiple(f64),
}

impl AreaMod4Pi {
    pub fn raw(&self) -> Interval {
        match *self {
            AreaMod4Pi::Radians(r) => Interval::point(r),
            AreaMod4Pi::PiMultiple(m) => Interval::pi() * Interval::point(m),
        }
    }
}

/// Sign of `r - c·π` for an integer-valued `c`, decided in double-double.
fn cmp_pi_multiple(r: f64, c: f64) -> std::cmp::Ordering {
    let p = c * PI;
    let e = c.mul_add(PI, -p);
    let d = (r - p) - e - c * PI_LO;
    d.partial_cmp(&0.0).unwrap_or(std::cmp::Ordering::Equal)
}

/// Minimal real representative: the member of the class in `[-2π, 2π)`.
pub fn mrr(a: AreaMod4Pi) -> Interval {
    match a {
        AreaMod4Pi::PiMultiple(m) => {
            let k = ((m + 2.0) / 4.0).floor();
            let reduced = m - 4.0 * k;
            Interval::pi() * Interval::point(reduced)
        }
        AreaMod4Pi::Radians(r) => {
            // Number of turns `k` with (4k-2)π ≤ r < (4k+2)π.
            let mut k = ((r / PI + 2.0) / 4.0).floor();
            while cmp_pi_multiple(r, 4.0 * k - 2.0).is_lt() {
                k -= 1.0;
            }
            while cmp_pi_multiple(r, 4.0 * k + 2.0).is_ge() {
                k += 1.0;
            }
            let v = Interval::point(r) - Interval::four_pi() * Interval::point(k);
            let two_pi = Interval::two_pi();
            // Clip rounding spill past the half-open range.
            Interval::new(v.lo().max(-two_pi.hi()), v.hi().min(two_pi.hi()))
        }
    }
}

/// Truncation threshold τ₀ = 0.32.
pub fn tau0() -> Interval {
    dec("0.32")
}

/// `mrr(a)` clamped to `[-τ₀, τ₀]`.
pub fn tau(a: AreaMod4Pi) -> Interval {
    clamp_tau(mrr(a))
}

/// Clamp an area representative to `[-τ₀, τ₀]`.
pub fn clamp_tau(m: Interval) -> Interval {
    let t0 = tau0();
    m.min(&t0).max(&-t0)
}

/// Area threshold `min(3.75/n², 0.1)`.
pub fn a_of(n: u32) -> Interval {
    let n2 = Interval::point(f64::from(n)).sqr();
    let q = dec("3.75").try_div(&n2).expect("n ≥ 1");
    q.min(&dec("0.1"))
}

/// Area fraction: `3|mrr(a)|/π`, capped at 1.
pub fn rho_of_area(a: AreaMod4Pi) -> Interval {
    let m = mrr(a).abs();
    let r = (m * Interval::point(3.0)).try_div(&Interval::pi()).expect("π > 0");
    r.min(&Interval::ONE)
}

/// Smallest area fraction allowed by the hypothesis `mrr(area) > a(n)`.
pub fn rho_floor(n: u32) -> Interval {
    (a_of(n) * Interval::point(3.0))
        .try_div(&Interval::pi())
        .expect("π > 0")
}

/// Deficit functional `l - t·B′ + (5 - n)·p5′ - rho·p5`.
///
/// Zero exactly for the regular pentagon of area π/3.
pub fn i_functional<S: Scalar>(l: S, n: S, t: S, rho: S) -> S {
    let c = Constants::get();
    l - t * S::constant(c.b_prime) + (S::exact(5.0) - n) * S::constant(c.p5_prime)
        - rho * S::constant(c.p5)
}

/// The aggregates of a cell the inequalities range over.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ReducedConfig {
    /// Number of marked points on the boundary.
    pub n: u32,
    /// Sum of truncated edge areas.
    pub t: Interval,
    /// Area fraction.
    pub rho: Interval,
    /// Sum of absolute truncated edge areas.
    pub t_abs: Interval,
}

impl ReducedConfig {
    pub fn new(n: u32, t: Interval, rho: Interval, t_abs: Interval) -> Result<Self> {
        if n < 2 {
            return Err(Error::Geometry(format!("marked-point count {n} below 2")));
        }
        if rho.lo() < 0.0 || rho.hi() > 1.0 {
            return Err(Error::Geometry(format!("area fraction {rho} outside [0, 1]")));
        }
        if t.abs().lo() > t_abs.hi() {
            return Err(Error::Geometry(format!("|t| = {} exceeds t_abs = {t_abs}", t.abs())));
        }
        Ok(Self { n, t, rho, t_abs })
    }

    /// Whether the area fraction can satisfy the hypothesis `mrr(area) > a(n)`.
    pub fn meets_area_hypothesis(&self) -> bool {
        self.rho.hi() > rho_floor(self.n).lo()
    }

    /// Deficit for a boundary of length `l`.
    pub fn deficit(&self, l: Interval) -> Interval {
        i_functional(l, Interval::point(f64::from(self.n)), self.t, self.rho)
    }
}
