//! Floating-point cross-checks. Nothing here is rigorous; it is the
//! independent referee the certified results are compared against.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::interval::IntervalBox;
use crate::prover::{par_map, Objective};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleResult {
    pub min_value: f64,
    pub argmin: Vec<f64>,
    pub samples: u64,
    /// Whether `min_value` is at least the certified lower bound it was
    /// compared with, if any.
    pub consistent_with: Option<bool>,
}

impl OracleResult {
    /// Record the comparison with a certified lower bound.
    pub fn compare(mut self, certified_lo: f64) -> Self {
        self.consistent_with = Some(self.min_value >= certified_lo);
        self
    }
}

fn axis_points(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if lo == hi || n < 2 {
        return vec![lo];
    }
    (0..n)
        .map(|i| {
            let t = i as f64 / (n - 1) as f64;
            if i == n - 1 {
                hi
            } else {
                lo + t * (hi - lo)
            }
        })
        .collect()
}

/// Evaluate `f` on the tensor grid and return the best point.
fn scan<F: Objective + ?Sized>(f: &F, axes: &[Vec<f64>]) -> (f64, Vec<f64>, u64) {
    let first = &axes[0];
    let rest = &axes[1..];
    let rows = par_map(first, cfg!(feature = "parallel"), |&x0| {
        let mut best = (f64::INFINITY, Vec::new());
        let mut count = 0u64;
        let mut idx = vec![0usize; rest.len()];
        let mut p = vec![x0; axes.len()];
        loop {
            for (k, &i) in idx.iter().enumerate() {
                p[k + 1] = rest[k][i];
            }
            count += 1;
            if let Ok(v) = f.eval::<f64>(&p) {
                if v < best.0 {
                    best = (v, p.clone());
                }
            }
            // Odometer increment over the remaining axes.
            let mut k = rest.len();
            loop {
                if k == 0 {
                    return (best.0, best.1, count);
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < rest[k].len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    });
    let mut best = (f64::INFINITY, Vec::new(), 0u64);
    for (v, p, c) in rows {
        best.2 += c;
        if v < best.0 || best.1.is_empty() {
            best.0 = v;
            best.1 = p;
        }
    }
    best
}

/// Minimum of `f` over a grid of `resolution` points per axis, refined
/// by repeated finer grids around the best point.
pub fn grid_min<F: Objective + ?Sized>(f: &F, domain: &IntervalBox, resolution: usize) -> OracleResult {
    assert!(resolution >= 2, "grid resolution must be at least 2");
    let coords = domain.coords();
    if coords.is_empty() {
        let v = f.eval::<f64>(&[]).unwrap_or(f64::NAN);
        return OracleResult {
            min_value: v,
            argmin: Vec::new(),
            samples: 1,
            consistent_with: None,
        };
    }
    let axes: Vec<Vec<f64>> = coords
        .iter()
        .map(|c| axis_points(c.lo(), c.hi(), resolution))
        .collect();
    let (mut min_value, mut argmin, mut samples) = scan(f, &axes);

    let mut step: Vec<f64> = coords
        .iter()
        .map(|c| c.width() / (resolution - 1) as f64)
        .collect();
    for _ in 0..30 {
        if argmin.is_empty() {
            break;
        }
        let local: Vec<Vec<f64>> = coords
            .iter()
            .zip(&argmin)
            .zip(&step)
            .map(|((c, &m), &h)| axis_points((m - h).max(c.lo()), (m + h).min(c.hi()), 9))
            .collect();
        let (v, p, n) = scan(f, &local);
        samples += n;
        if v < min_value {
            min_value = v;
            argmin = p;
        }
        step.iter_mut().for_each(|h| *h /= 4.0);
    }
    OracleResult {
        min_value,
        argmin,
        samples,
        consistent_with: None,
    }
}

/// Central finite difference, step `1e-5` for order 1 and `1e-4` for order 2.
pub fn fd_derivative(f: impl Fn(f64) -> f64, x: f64, order: u8) -> f64 {
    if order == 1 {
        let h = 1e-5;
        (f(x + h) - f(x - h)) / (2.0 * h)
    } else {
        let h = 1e-4;
        (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)
    }
}

/// One-sided difference quotient `(f(x ± h) - f(x)) / ±h`.
pub fn one_sided_derivative(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x)) / h
}

/// Adaptive Simpson quadrature of `f` over `[a, b]`.
pub fn integrate(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(fa: f64, fm: f64, fb: f64, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        f: &impl Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = simpson(fa, flm, fm, a, m);
        let right = simpson(fm, frm, fb, m, b);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            left + right + delta / 15.0
        } else {
            recurse(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
                + recurse(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
        }
    }
    let (fa, fb, fm) = (f(a), f(b), f(0.5 * (a + b)));
    recurse(f, a, b, fa, fm, fb, simpson(fa, fm, fb, a, b), tol, 50)
}

/// Area cut off a circle of spherical radius `r` by a great circle at
/// distance `d ∈ [0, r]` from its center, integrated in polar coordinates
/// about the center.
fn minor_segment(d: f64, r: f64) -> f64 {
    let half_angle = (d.tan() / r.tan()).clamp(-1.0, 1.0).acos();
    let (td, cr) = (d.tan(), r.cos());
    let integrand = |phi: f64| {
        let c = phi.cos();
        c / (c * c + td * td).sqrt() - cr
    };
    integrate(&integrand, -half_angle, half_angle, 1e-14)
}

/// Signed area between a chord of half-length `h` and the circular arc
/// through its endpoints with family parameter `s ∈ (-π, π)`, by numerical
/// quadrature. The circle's center lies at distance `π/2 - s` from the
/// chord midpoint on the far side of the bulge.
pub fn segment_area_quadrature(h: f64, s: f64) -> f64 {
    if s == 0.0 {
        return 0.0;
    }
    if s < 0.0 {
        return -segment_area_quadrature(h, -s);
    }
    let cos_r = (h.cos() * s.sin()).clamp(-1.0, 1.0);
    let r = cos_r.acos();
    let d = PI / 2.0 - s;
    if d >= 0.0 {
        minor_segment(d, r)
    } else {
        2.0 * PI * (1.0 - cos_r) - minor_segment(-d, r)
    }
}

/// Regular-polygon perimeter in the original form
/// `n·arccos((cos(2π/n) + cos²(α/2)) / sin²(α/2))`, `α = π - (2π - area)/n`.
pub fn reg_perim_literal(area: f64, n: f64) -> f64 {
    let alpha = PI - (2.0 * PI - area) / n;
    let (c, s) = ((alpha / 2.0).cos(), (alpha / 2.0).sin());
    let cos_gamma = ((2.0 * PI / n).cos() + c * c) / (s * s);
    n * cos_gamma.clamp(-1.0, 1.0).acos()
}

type V3 = [f64; 3];

fn dot(a: &V3, b: &V3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: &V3, b: &V3) -> V3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Area of the spherical triangle with unit-vector corners.
pub fn triangle_excess(a: &V3, b: &V3, c: &V3) -> f64 {
    let num = dot(a, &cross(b, c)).abs();
    let den = 1.0 + dot(a, b) + dot(b, c) + dot(c, a);
    2.0 * num.atan2(den)
}

/// Perimeter and area of the pentagon with edges 1, u, u, u, u inscribed
/// in a circle of radius `x`, built from explicit vertices.
pub fn long_edge_pentagon(x: f64) -> (f64, f64) {
    let alpha = 2.0 * ((0.5f64).sin() / x.sin()).asin();
    let beta = (2.0 * PI - alpha) / 4.0;
    let mut angle = 0.0f64;
    let mut verts = Vec::with_capacity(5);
    for step in [alpha, beta, beta, beta, beta] {
        verts.push([x.sin() * angle.cos(), x.sin() * angle.sin(), x.cos()]);
        angle += step;
    }
    let pole = [0.0, 0.0, 1.0];
    let mut area = 0.0;
    let mut perim = 0.0;
    for i in 0..5 {
        let (a, b) = (&verts[i], &verts[(i + 1) % 5]);
        area += triangle_excess(&pole, a, b);
        perim += dot(a, b).clamp(-1.0, 1.0).acos();
    }
    (perim, area)
}
