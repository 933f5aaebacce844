//! Enclosures of the spherical quantities the inequalities are built from.
//!
//! All functions take and return points on the unit sphere measured in
//! radians (lengths) and steradians (areas).

mod arc;
mod dodecahedron;
mod long_edge;

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::{dec, Interval};
use crate::jet::Jet2;
use crate::scalar::Scalar;

pub use arc::{bracket_parameter, segment, GeomScalar};
pub use dodecahedron::{dodecahedral_total, DodecahedralTiling};
pub use long_edge::{perim_area, PerimAreaPoint};

/// A regular spherical polygon described by its area and (real) side count.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RegPolygonSpec {
    pub area: Interval,
    pub n: Interval,
}

impl RegPolygonSpec {
    pub fn new(area: Interval, n: Interval) -> Result<Self> {
        if n.lo() < 2.0 {
            return Err(Error::Geometry(format!("side count {n} below 2")));
        }
        if area.lo() < 0.0 || area.hi() > Interval::four_pi().hi() {
            return Err(Error::Geometry(format!("area {area} outside [0, 4π]")));
        }
        Ok(Self { area, n })
    }

    pub fn perimeter(&self) -> Result<Interval> {
        reg_perim(self.area, self.n)
    }
}

/// Perimeter of the regular spherical `n`-gon of area `area`.
///
/// With interior angle `α = π - (2π - area)/n`, each side subtends
/// `γ = arccos((cos(2π/n) + cos²(α/2)) / sin²(α/2))` at the center. Using
/// `cos²(α/2) = 1 - sin²(α/2)` this is `2·arccos(cos(π/n) / sin(α/2))`,
/// which mentions the area once and keeps interval evaluation tight.
/// `n` is a real number so the perimeter can be differentiated in it.
pub fn reg_perim<S: Scalar>(area: S, n: S) -> Result<S> {
    let pi = S::pi();
    let two = S::exact(2.0);
    let half_alpha = pi * S::exact(0.5) - (two * pi - area).try_div(&(two * n))?;
    let ratio = pi.try_div(&n)?.cos().try_div(&half_alpha.sin())?;
    Ok(two * n * ratio.acos()?)
}

/// Perimeter of a circle (spherical cap) of area `x`: `sqrt(4πx - x²)`.
pub fn circ_perim0<S: Scalar>(x: S) -> Result<S> {
    let four_pi = S::constant(Interval::four_pi());
    (x * (four_pi - x)).sqrt()
}

/// Arc length of the circle through the ends of a chord of length `l`
/// bounding signed area `x` with it.
pub fn circ_perim<S: GeomScalar>(l: S, x: S) -> Result<S> {
    S::circ_perim(l, x)
}

/// Shortest curve cutting area `x` off a hemisphere against its great
/// circle: half of a circle of area `2x`.
pub fn dido_min_length<S: Scalar>(x: S) -> Result<S> {
    Ok(circ_perim0(S::exact(2.0) * x)? * S::exact(0.5))
}

/// Perimeter of a regular pentagon of area π/3 whose edges are replaced by
/// circular arcs, each cutting signed area `x/5` off the geodesic core of
/// area `π/3 - x`.
pub fn pent<S: GeomScalar>(x: S) -> Result<S> {
    let five = S::exact(5.0);
    let core = S::pi().try_div(&S::exact(3.0))? - x;
    let edge = reg_perim(core, five)?.try_div(&five)?;
    let bulge = x.abs()?.try_div(&five)?;
    Ok(five * S::circ_perim(edge, bulge)?)
}

fn pi_over_3() -> Interval {
    Interval::pi().try_div(&Interval::point(3.0)).expect("nonzero")
}

/// Area derivative of `reg_perim` at `(π/3, 5)`, negated.
///
/// This is the slope of `pent` at zero bulge.
pub fn b_prime() -> Result<Interval> {
    let j = reg_perim(Jet2::variable(pi_over_3()), Jet2::constant(Interval::point(5.0)))?;
    Ok(-j.d1)
}

/// Derivative of `reg_perim(π/3, n)` in `n` at `n = 5`.
pub fn p5_prime() -> Result<Interval> {
    let j = reg_perim(Jet2::constant(pi_over_3()), Jet2::variable(Interval::point(5.0)))?;
    Ok(j.d1)
}

/// The numbers every inequality is expressed in.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Constants {
    /// Perimeter of the regular pentagon of area π/3.
    pub p5: Interval,
    /// `∂_n reg_perim(π/3, 5)`.
    pub p5_prime: Interval,
    /// `-∂_area reg_perim(π/3, 5)`.
    pub b_prime: Interval,
    /// Truncation threshold for edge areas, 0.32.
    pub tau0: Interval,
    /// Total edge length of the dodecahedral tiling, `6 p5`.
    pub dodec_total: Interval,
}

impl Constants {
    fn compute() -> Result<Self> {
        let p5 = reg_perim(pi_over_3(), Interval::point(5.0))?;
        Ok(Self {
            p5,
            p5_prime: p5_prime()?,
            b_prime: b_prime()?,
            tau0: dec("0.32"),
            dodec_total: p5 * Interval::point(6.0),
        })
    }

    /// Shared, lazily computed instance.
    pub fn get() -> &'static Constants {
        static CONSTANTS: OnceLock<Constants> = OnceLock::new();
        CONSTANTS.get_or_init(|| Constants::compute().expect("constants evaluate"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn regular_pentagon_of_the_tiling() {
        let c = Constants::get();
        assert!(c.p5.contains(3.64864) || (c.p5.lo() - 3.64864).abs() < 5e-6);
        assert!(c.p5.width() < 1e-12);
        assert!((c.b_prime.mid() + 1.51).abs() < 0.01);
        assert!(c.p5_prime.is_negative());
        assert_eq!(c.tau0, dec("0.32"));
    }

    #[test]
    fn degenerate_and_hemisphere_polygons() {
        for n in 3..=8 {
            let p = reg_perim(0.0, n as f64).unwrap();
            assert!(p.abs() < 1e-6, "n={n}: {p}");
            let hemi = reg_perim(Interval::two_pi(), Interval::point(n as f64)).unwrap();
            assert!(hemi.contains(2.0 * PI), "n={n}: {hemi}");
        }
    }

    #[test]
    fn circle_perimeters() {
        let c = circ_perim0(Interval::two_pi()).unwrap();
        assert!(c.contains(2.0 * PI));
        assert!(dido_min_length(Interval::ZERO).unwrap().contains(0.0));
        assert!(dido_min_length(Interval::pi()).unwrap().contains(PI));
    }

    #[test]
    fn polygon_spec_validation() {
        assert!(RegPolygonSpec::new(Interval::point(1.0), Interval::point(1.0)).is_err());
        let spec = RegPolygonSpec::new(pi_over_3(), Interval::point(5.0)).unwrap();
        assert_eq!(spec.perimeter().unwrap(), Constants::get().p5);
    }
}
