//! Pentagon inscribed in a circle with one edge of length 1 and four
//! equal edges of length `u`, parametrized by the circumradius `x`.
//!
//! `alpha` and `beta` are the central angles over the long and short edges,
//! `gamma` and `delta` the base angles of the isosceles triangles on them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PerimAreaPoint<S> {
    pub x: S,
    pub perim: S,
    pub area: S,
    pub alpha: S,
    pub beta: S,
    pub u: S,
    pub gamma: S,
    pub delta: S,
}

/// Perimeter and area of the long-edge pentagon with circumradius `x`.
///
/// Requires `x > 0.5`: a unit chord does not fit a smaller circle.
pub fn perim_area<S: Scalar>(x: S) -> Result<PerimAreaPoint<S>> {
    let xv = x.value();
    if xv.hi() < 0.5 {
        return Err(Error::Domain {
            op: "perim_area",
            lo: xv.lo(),
            hi: xv.hi(),
        });
    }
    let one = S::exact(1.0);
    let (cos1, sin1) = (one.cos(), one.sin());
    let (cx, sx) = (x.cos(), x.sin());
    let (cx2, sx2) = (cx.sqr(), sx.sqr());
    let pi = S::pi();

    let alpha = (cos1 - cx2).try_div(&sx2)?.acos()?;
    let beta = (S::exact(2.0) * pi - alpha) * S::exact(0.25);
    let u = (sx2 * beta.cos() + cx2).acos()?;
    let gamma = (cx - cx * cos1).try_div(&(sx * sin1))?.acos()?;
    let delta = (cx - cx * u.cos()).try_div(&(sx * u.sin()))?.acos()?;
    let perim = one + S::exact(4.0) * u;
    let two = S::exact(2.0);
    let area = (alpha + two * gamma - pi) + S::exact(4.0) * (beta + two * delta - pi);
    Ok(PerimAreaPoint {
        x,
        perim,
        area,
        alpha,
        beta,
        u,
        gamma,
        delta,
    })
}
