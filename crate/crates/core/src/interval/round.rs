//! Directed rounding on top of round-to-nearest.
//!
//! Every basic operation is computed in the default rounding mode and its
//! exact rounding error is recovered with an error-free transformation
//! (TwoSum / FMA). The result is then nudged one ulp in the requested
//! direction only when the rounded value lies on the wrong side of the exact
//! one. This gives true directed rounding without touching the FPU control
//! word, so it is thread safe.

#[inline]
fn two_sum_err(a: f64, b: f64, s: f64) -> f64 {
    let bb = s - a;
    (a - (s - bb)) + (b - bb)
}

#[inline]
pub(crate) fn add_down(a: f64, b: f64) -> f64 {
    let s = a + b;
    if !s.is_finite() {
        return s;
    }
    if two_sum_err(a, b, s) < 0.0 {
        s.next_down()
    } else {
        s
    }
}

#[inline]
pub(crate) fn add_up(a: f64, b: f64) -> f64 {
    let s = a + b;
    if !s.is_finite() {
        return s;
    }
    if two_sum_err(a, b, s) > 0.0 {
        s.next_up()
    } else {
        s
    }
}

#[inline]
pub(crate) fn sub_down(a: f64, b: f64) -> f64 {
    add_down(a, -b)
}

#[inline]
pub(crate) fn sub_up(a: f64, b: f64) -> f64 {
    add_up(a, -b)
}

#[inline]
pub(crate) fn mul_down(a: f64, b: f64) -> f64 {
    let p = a * b;
    if !p.is_finite() {
        return p;
    }
    let e = a.mul_add(b, -p);
    // Below the subnormal range the FMA residual is not exact.
    if e < 0.0 || p.abs() < f64::MIN_POSITIVE && a != 0.0 && b != 0.0 {
        p.next_down()
    } else {
        p
    }
}

#[inline]
pub(crate) fn mul_up(a: f64, b: f64) -> f64 {
    let p = a * b;
    if !p.is_finite() {
        return p;
    }
    let e = a.mul_add(b, -p);
    if e > 0.0 || p.abs() < f64::MIN_POSITIVE && a != 0.0 && b != 0.0 {
        p.next_up()
    } else {
        p
    }
}

/// Sign of `a / b - fl(a / b)`: -1, 0 or 1.
#[inline]
fn div_residual_sign(a: f64, b: f64, q: f64) -> i8 {
    if q.abs() < f64::MIN_POSITIVE * 4.0 && a != 0.0 {
        // Residual unreliable near underflow; report "unknown" as both.
        return 2;
    }
    let r = (-q).mul_add(b, a);
    if r == 0.0 {
        0
    } else if (r > 0.0) == (b > 0.0) {
        1
    } else {
        -1
    }
}

#[inline]
pub(crate) fn div_down(a: f64, b: f64) -> f64 {
    let q = a / b;
    if !q.is_finite() {
        return q;
    }
    match div_residual_sign(a, b, q) {
        -1 | 2 => q.next_down(),
        _ => q,
    }
}

#[inline]
pub(crate) fn div_up(a: f64, b: f64) -> f64 {
    let q = a / b;
    if !q.is_finite() {
        return q;
    }
    match div_residual_sign(a, b, q) {
        1 | 2 => q.next_up(),
        _ => q,
    }
}

#[inline]
pub(crate) fn sqrt_down(a: f64) -> f64 {
    let s = a.sqrt();
    if s == 0.0 || !s.is_finite() {
        return s;
    }
    if (-s).mul_add(s, a) < 0.0 {
        s.next_down()
    } else {
        s
    }
}

#[inline]
pub(crate) fn sqrt_up(a: f64) -> f64 {
    let s = a.sqrt();
    if !s.is_finite() {
        return s;
    }
    if (-s).mul_add(s, a) > 0.0 {
        s.next_up()
    } else {
        s
    }
}

/// Ulps of slack applied to libm results (sin, cos, acos, atan2). glibc
/// documents at most one ulp of error for these on x86_64 and aarch64.
pub(crate) const LIBM_ULPS: u32 = 2;

#[inline]
pub(crate) fn widen_down(mut v: f64, ulps: u32) -> f64 {
    for _ in 0..ulps {
        v = v.next_down();
    }
    v
}

#[inline]
pub(crate) fn widen_up(mut v: f64, ulps: u32) -> f64 {
    for _ in 0..ulps {
        v = v.next_up();
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_operations_are_not_widened() {
        assert_eq!(add_down(1.0, 3.0), 4.0);
        assert_eq!(add_up(2.0, 4.0), 6.0);
        assert_eq!(mul_down(-1.0, 2.0), -2.0);
        assert_eq!(div_up(1.0, 4.0), 0.25);
        assert_eq!(sqrt_down(9.0), 3.0);
    }

    #[test]
    fn inexact_operations_bracket_the_true_value() {
        let lo = div_down(1.0, 3.0);
        let hi = div_up(1.0, 3.0);
        assert!(lo < hi);
        assert_eq!(hi, lo.next_up());
        assert!(add_down(0.1, 0.2) < add_up(0.1, 0.2));
        assert!(sqrt_down(2.0) < sqrt_up(2.0));
        assert!(mul_down(0.1, 0.1) < mul_up(0.1, 0.1));
    }
}
