//! The spherical dodecahedral tiling built from coordinates.
//!
//! Vertices are the regular dodecahedron `(±1, ±1, ±1)` together with the
//! cyclic permutations of `(0, ±1/φ, ±φ)`, projected to the unit sphere.
//! Face centers are the icosahedron vertices `(0, ±φ, ±1)` and their cyclic
//! permutations. Every coordinate is an interval built from `√5`.

use crate::error::Result;
use crate::interval::Interval;

type Vec3 = [Interval; 3];

fn dot(a: &Vec3, b: &Vec3) -> Interval {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn normalize(v: Vec3) -> Result<Vec3> {
    let n = dot(&v, &v).sqrt()?;
    Ok([v[0].try_div(&n)?, v[1].try_div(&n)?, v[2].try_div(&n)?])
}

fn mids(v: &Vec3) -> [f64; 3] {
    [v[0].mid(), v[1].mid(), v[2].mid()]
}

fn cyclic(a: Interval, b: Interval, c: Interval) -> [Vec3; 3] {
    [[a, b, c], [c, a, b], [b, c, a]]
}

fn signs(k: usize) -> impl Iterator<Item = (f64, f64)> {
    (0..k).map(|i| {
        (
            if i & 1 == 0 { 1.0 } else { -1.0 },
            if i & 2 == 0 { 1.0 } else { -1.0 },
        )
    })
}

/// Interior area of the spherical triangle with unit-vector corners.
fn triangle_area(a: &Vec3, b: &Vec3, c: &Vec3) -> Result<Interval> {
    let num = dot(a, &cross(b, c)).abs();
    let den = Interval::ONE + dot(a, b) + dot(b, c) + dot(c, a);
    Ok(num.atan2(&den)?.scale(2.0))
}

/// Geometric data of the tiling, every number an enclosure.
#[derive(Clone, Debug)]
pub struct DodecahedralTiling {
    pub vertices: Vec<Vec3>,
    /// Index pairs of adjacent vertices.
    pub edges: Vec<(usize, usize)>,
    pub edge_lengths: Vec<Interval>,
    pub face_areas: Vec<Interval>,
}

impl DodecahedralTiling {
    pub fn build() -> Result<Self> {
        let sqrt5 = Interval::point(5.0).sqrt()?;
        let phi = (Interval::ONE + sqrt5).scale(0.5);
        let inv_phi = phi - Interval::ONE;
        let one = Interval::ONE;
        let zero = Interval::ZERO;

        let mut raw: Vec<Vec3> = Vec::with_capacity(20);
        for i in 0..8 {
            let s = |bit: usize| if i & bit == 0 { one } else { -one };
            raw.push([s(1), s(2), s(4)]);
        }
        for (sa, sb) in signs(4) {
            raw.extend(cyclic(zero, inv_phi.scale(sa), phi.scale(sb)));
        }
        let vertices = raw.into_iter().map(normalize).collect::<Result<Vec<_>>>()?;

        let mut centers: Vec<Vec3> = Vec::with_capacity(12);
        for (sa, sb) in signs(4) {
            for c in cyclic(zero, phi.scale(sa), one.scale(sb)) {
                centers.push(normalize(c)?);
            }
        }

        // Adjacent vertices have the largest inner product below 1.
        let fv: Vec<[f64; 3]> = vertices.iter().map(mids).collect();
        let fdot = |a: &[f64; 3], b: &[f64; 3]| a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
        let edge_cos = 5f64.sqrt() / 3.0;
        let mut edges = Vec::with_capacity(30);
        for i in 0..fv.len() {
            for j in i + 1..fv.len() {
                if (fdot(&fv[i], &fv[j]) - edge_cos).abs() < 1e-9 {
                    edges.push((i, j));
                }
            }
        }
        let edge_lengths = edges
            .iter()
            .map(|&(i, j)| dot(&vertices[i], &vertices[j]).acos())
            .collect::<Result<Vec<_>>>()?;

        // A face consists of the five vertices closest to its center, and is
        // triangulated as a fan of the center over its five edges.
        let mut face_areas = Vec::with_capacity(12);
        for c in &centers {
            let fc = mids(c);
            let best = fv.iter().map(|v| fdot(v, &fc)).fold(f64::MIN, f64::max);
            let on_face = |k: usize| (fdot(&fv[k], &fc) - best).abs() < 1e-9;
            let mut area = Interval::ZERO;
            for &(i, j) in edges.iter().filter(|&&(i, j)| on_face(i) && on_face(j)) {
                area = area + triangle_area(c, &vertices[i], &vertices[j])?;
            }
            face_areas.push(area);
        }

        Ok(Self {
            vertices,
            edges,
            edge_lengths,
            face_areas,
        })
    }

    pub fn total_length(&self) -> Interval {
        self.edge_lengths
            .iter()
            .fold(Interval::ZERO, |acc, &l| acc + l)
    }

    pub fn total_area(&self) -> Interval {
        self.face_areas.iter().fold(Interval::ZERO, |acc, &a| acc + a)
    }
}

/// Sum of the 30 edge lengths of the spherical dodecahedral tiling.
pub fn dodecahedral_total() -> Result<Interval> {
    Ok(DodecahedralTiling::build()?.total_length())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn combinatorics_and_areas() {
        let t = DodecahedralTiling::build().unwrap();
        assert_eq!(t.vertices.len(), 20);
        assert_eq!(t.edges.len(), 30);
        assert_eq!(t.face_areas.len(), 12);
        for a in &t.face_areas {
            assert!(a.contains(PI / 3.0), "{a}");
        }
        assert!(t.total_area().contains(4.0 * PI));
        assert!(t.total_length().contains(21.8918) || (t.total_length().mid() - 21.8918).abs() < 1e-4);
    }
}
