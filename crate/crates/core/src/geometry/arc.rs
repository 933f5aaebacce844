//! Circular arcs through the two endpoints of a geodesic chord.
//!
//! Fix a chord of length `l = 2h`. Every circle through its endpoints is
//! labelled by a signed parameter `s ∈ (-π, π)`: the circle's center sits on
//! the perpendicular bisector at arclength `π/2 - s` from the chord midpoint,
//! so `s = 0` is the great circle carrying the chord, `s = π/2` puts the
//! center on the chord (a half circle of radius `h`), and `s → π` wraps the arc
//! around the far side of the great circle. Negative `s` bulges to the other
//! side. With `cos r = cos h · sin s` (`r` the spherical radius),
//!
//! ```text
//! φ(s)      = atan2(sin h, cos h · cos s)          half central angle
//! length(s) = 2 · sin r · φ(s)
//! area(s)   = 2 · atan2(sin h · sin s, cos s) - 2 · cos r · φ(s)
//! ```
//!
//! `area` is the cap sector minus the isosceles triangle on the chord (its
//! first term is twice the angle between arc and chord), it is odd and
//! increasing in `s`, and `length` is even, so both are smooth through the
//! flat arc.

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::jet::Jet2;
use crate::scalar::Scalar;

/// Signed segment area and arc length for parameter `s` on chord half-length `h`.
pub fn segment<S: Scalar>(half_chord: S, s: S) -> Result<(S, S)> {
    let (sh, ch) = (half_chord.sin(), half_chord.cos());
    let (ss, cs) = (s.sin(), s.cos());
    let cos_r = ch * ss;
    let sin_r = (S::exact(1.0) - cos_r.sqr()).sqrt()?;
    let phi = sh.atan2(&(ch * cs))?;
    let two = S::exact(2.0);
    let length = two * sin_r * phi;
    let area = two * (sh * ss).atan2(&cs)? - two * cos_r * phi;
    Ok((area, length))
}

/// Scalars that can evaluate the implicitly defined arc length
/// `circ_perim(l, x)`.
pub trait GeomScalar: Scalar {
    /// Length of the circular arc through the endpoints of a geodesic chord
    /// of length `l` that bounds signed area `x` together with the chord.
    fn circ_perim(l: Self, x: Self) -> Result<Self>;
}

fn check_chord(l: &Interval) -> Result<()> {
    if l.lo() < 0.0 || l.hi() >= Interval::two_pi().lo() {
        return Err(Error::Geometry(format!(
            "chord length {l} outside [0, 2π)"
        )));
    }
    Ok(())
}

fn check_area(x: &Interval) -> Result<()> {
    let two_pi = Interval::two_pi().lo();
    if x.lo() <= -two_pi || x.hi() >= two_pi {
        return Err(Error::Geometry(format!(
            "segment area {x} is not realizable on a chord (needs |x| < 2π)"
        )));
    }
    Ok(())
}

/// Floating-point root of `area(s) = target` by Newton's method kept
/// inside a shrinking bracket, using `area'(s) = 2 sin h - 2 cos h cos s φ`.
fn solve_f64(h: f64, target: f64) -> f64 {
    let pi = std::f64::consts::PI;
    let (sh, ch) = h.sin_cos();
    let (mut a, mut b) = (-pi, pi);
    let mut s = (target / (2.0 * (sh - ch * h))).clamp(-3.0, 3.0);
    if !s.is_finite() {
        s = 0.0;
    }
    for _ in 0..100 {
        let (ss, cs) = s.sin_cos();
        let phi = sh.atan2(ch * cs);
        let f = 2.0 * (sh * ss).atan2(cs) - 2.0 * ch * ss * phi - target;
        if f == 0.0 {
            return s;
        }
        if f < 0.0 {
            a = s;
        } else {
            b = s;
        }
        let slope = 2.0 * sh - 2.0 * ch * cs * phi;
        let mut next = s - f / slope;
        if !(next > a && next < b) {
            next = 0.5 * (a + b);
        }
        if (next - s).abs() <= 2.0 * f64::EPSILON * (1.0 + s.abs()) {
            return next;
        }
        s = next;
    }
    s
}

/// Interval of parameters `s` containing every solution of
/// `area(h, s) = x` for `h ∈ half_chord`, `x ∈ target`.
///
/// The bracket is certified at its endpoints and the area is certified
/// increasing on it, so the solution set lies inside.
pub fn bracket_parameter(half_chord: Interval, target: Interval) -> Result<Interval> {
    if target.is_point() && target.lo() == 0.0 {
        return Ok(Interval::ZERO);
    }
    let h = half_chord.mid();
    let pi = std::f64::consts::PI;
    let below = |s: f64| -> bool {
        segment(half_chord, Interval::point(s))
            .map(|(a, _)| a.hi() < target.lo())
            .unwrap_or(false)
    };
    let above = |s: f64| -> bool {
        segment(half_chord, Interval::point(s))
            .map(|(a, _)| a.lo() > target.hi())
            .unwrap_or(false)
    };

    let guess_lo = solve_f64(h, target.lo());
    let guess_hi = solve_f64(h, target.hi());
    let mut step = 4.0 * f64::EPSILON * (1.0 + guess_lo.abs());
    let mut s_lo = guess_lo - step;
    while !below(s_lo) {
        step *= 4.0;
        s_lo = guess_lo - step;
        if s_lo <= -pi {
            return Err(Error::Precision(format!(
                "cannot bracket the lower end of area {target}"
            )));
        }
    }
    let mut step = 4.0 * f64::EPSILON * (1.0 + guess_hi.abs());
    let mut s_hi = guess_hi + step;
    while !above(s_hi) {
        step *= 4.0;
        s_hi = guess_hi + step;
        if s_hi >= pi {
            return Err(Error::Precision(format!(
                "cannot bracket the upper end of area {target}"
            )));
        }
    }
    let bracket = Interval::new(s_lo, s_hi);
    // Monotonicity on the bracket rules out stray solutions inside it.
    if !certified_increasing(half_chord, bracket, 16) {
        return Err(Error::Precision(format!(
            "segment area not certified increasing on {bracket}"
        )));
    }
    Ok(bracket)
}

fn certified_increasing(half_chord: Interval, s: Interval, depth: u32) -> bool {
    let slope = segment(Jet2::constant(half_chord), Jet2::variable(s)).map(|(a, _)| a.d1);
    if matches!(slope, Ok(d) if d.lo() > 0.0) {
        return true;
    }
    if depth == 0 {
        return false;
    }
    if half_chord.width() > s.width() {
        let (left, right) = half_chord.bisect();
        certified_increasing(left, s, depth - 1) && certified_increasing(right, s, depth - 1)
    } else {
        let (left, right) = s.bisect();
        certified_increasing(half_chord, left, depth - 1) && certified_increasing(half_chord, right, depth - 1)
    }
}

impl GeomScalar for f64 {
    fn circ_perim(l: f64, x: f64) -> Result<f64> {
        check_chord(&Interval::point(l))?;
        if l == 0.0 {
            return super::circ_perim0(x.abs());
        }
        check_area(&Interval::point(x))?;
        if x == 0.0 {
            return Ok(l);
        }
        let h = 0.5 * l;
        let s = solve_f64(h, x);
        Ok(segment(h, s)?.1)
    }
}

impl GeomScalar for Interval {
    fn circ_perim(l: Interval, x: Interval) -> Result<Interval> {
        check_chord(&l)?;
        if l == Interval::ZERO {
            return super::circ_perim0(x.abs());
        }
        check_area(&x)?;
        if x == Interval::ZERO {
            return Ok(l);
        }
        let h = l.scale(0.5);
        let s = bracket_parameter(h, x)?;
        Ok(segment(h, s)?.1)
    }
}

impl GeomScalar for Jet2 {
    fn circ_perim(l: Jet2, x: Jet2) -> Result<Jet2> {
        if l.d1 != Interval::ZERO || l.d2 != Interval::ZERO {
            return Err(Error::NotDifferentiable {
                op: "circ_perim (variable chord)",
                lo: l.val.lo(),
                hi: l.val.hi(),
            });
        }
        check_chord(&l.val)?;
        if l.val == Interval::ZERO {
            return super::circ_perim0(x.abs()?);
        }
        check_area(&x.val)?;
        let h = l.val.scale(0.5);
        let s = bracket_parameter(h, x.val)?;
        let (area, length) = segment(Jet2::constant(h), Jet2::variable(s))?;
        // Implicit differentiation of area(s(t)) = x(t).
        let s1 = x.d1.try_div(&area.d1)?;
        let s2 = (x.d2 - area.d2 * s1.sqr()).try_div(&area.d1)?;
        let val = if x.val == Interval::ZERO {
            l.val
        } else {
            length.val
        };
        Ok(Jet2::new(
            val,
            length.d1 * s1,
            length.d2 * s1.sqr() + length.d1 * s2,
        ))
    }
}
