use std::f64::consts::PI;

use honeycomb_verify::geometry::{
    b_prime, circ_perim, circ_perim0, dido_min_length, dodecahedral_total, pent, perim_area, reg_perim, segment,
    Constants, DodecahedralTiling, RegPolygonSpec,
};
use honeycomb_verify::oracle::{long_edge_pentagon, reg_perim_literal, segment_area_quadrature};
use honeycomb_verify::{dec, Interval};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pt(v: f64) -> Interval {
    Interval::point(v)
}

fn pi_over_3() -> Interval {
    Interval::pi().try_div(&pt(3.0)).unwrap()
}

#[test]
fn regular_perimeter_landmarks() {
    let p5 = reg_perim(pi_over_3(), pt(5.0)).unwrap();
    assert!((p5.mid() - 3.64864).abs() < 5e-6 && p5.width() < 1e-12);
    for n in 3..=8 {
        let zero = reg_perim(Interval::ZERO, pt(f64::from(n))).unwrap();
        assert!(zero.contains(0.0) && zero.hi() < 1e-6, "n = {n}: {zero}");
    }
    let hemi = reg_perim(Interval::two_pi(), pt(5.0)).unwrap();
    assert!(hemi.contains(2.0 * PI) || (hemi.mid() - 2.0 * PI).abs() < 1e-12);
    assert!(RegPolygonSpec::new(pi_over_3(), pt(1.0)).is_err());
    assert!(RegPolygonSpec::new(pt(-1.0), pt(5.0)).is_err());
    assert_eq!(RegPolygonSpec::new(pi_over_3(), pt(5.0)).unwrap().perimeter().unwrap(), p5);
}

#[test]
fn simplified_form_matches_literal_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..1000 {
        let n = rng.gen_range(3.0..9.0);
        let area = rng.gen_range(0.01..6.0);
        let r = reg_perim(pt(area), pt(n)).unwrap();
        let lit = reg_perim_literal(area, n);
        assert!((r.mid() - lit).abs() < 1e-9, "area {area}, n {n}: {r} vs {lit}");
        assert!((reg_perim(area, n).unwrap() - lit).abs() < 1e-9);
    }
}

#[test]
fn regular_perimeter_is_even_under_representative_negation() {
    // Area -x represents the complement 4π - x, whose boundary is the same.
    for x in [0.2, 1.0, PI / 3.0, 2.5] {
        let direct = reg_perim(x, 5.0).unwrap();
        let negated = reg_perim(4.0 * PI - x, 5.0);
        if let Ok(neg) = negated {
            assert!((direct - neg).abs() < 1e-9, "x = {x}");
        }
    }
}

#[test]
fn circle_perimeter_landmarks() {
    let hemi = circ_perim0(Interval::two_pi()).unwrap();
    assert!(hemi.contains(2.0 * PI) && hemi.width() < 1e-14);
    let small = circ_perim0(dec("0.1")).unwrap();
    assert!((small.mid() - 1.11653).abs() < 5e-6);
    let big = circ_perim0(dec("3.474")).unwrap();
    assert!((big.mid() - 5.62022).abs() < 5e-6);
}

#[test]
fn circle_perimeter_per_area_decreases() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..10_000 {
        let a = rng.gen_range(1e-6..4.0 * PI - 1e-6);
        let b = rng.gen_range(1e-6..4.0 * PI - 1e-6);
        let (x, y) = (a.min(b), a.max(b));
        if x == y {
            continue;
        }
        let (cx, cy) = (circ_perim0(x).unwrap(), circ_perim0(y).unwrap());
        assert!(y * cx >= x * cy, "{x} {y}");
        assert!(((4.0 * PI / x - 1.0).sqrt() - cx / x).abs() < 1e-9 * (1.0 + cx / x));
    }
}

#[test]
fn arc_length_landmarks() {
    let l = dec("1.3");
    assert_eq!(circ_perim(l, Interval::ZERO).unwrap(), l);
    let x = dec("0.7");
    let from_zero = circ_perim(Interval::ZERO, x).unwrap();
    let closed = circ_perim0(x).unwrap();
    assert!(from_zero.intersect(&closed).is_some());
    let antipodal = circ_perim(Interval::pi(), x).unwrap();
    assert!(antipodal.contains(PI) || (antipodal.mid() - PI).abs() < 1e-9, "{antipodal}");
    assert!(circ_perim(pt(1.0), pt(7.0)).is_err());
}

#[test]
fn arc_length_increases_with_area() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..2000 {
        let l = rng.gen_range(0.05..3.0);
        let x = rng.gen_range(0.0..5.0);
        let a = circ_perim(l, x).unwrap();
        let b = circ_perim(l, x + 0.01).unwrap();
        assert!(b > a, "l {l}, x {x}");
    }
}

#[test]
fn arc_enclosures_contain_float_values() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..500 {
        let l = rng.gen_range(0.05..3.0);
        let x = rng.gen_range(-5.0..5.0);
        let w = rng.gen_range(0.0..1e-3);
        let enclosure = circ_perim(Interval::new(l, l + w), Interval::new(x, x + w)).unwrap_or_else(|e| panic!("{l} {x} {w}: {e}"));
        for t in [0.0, 0.5, 1.0] {
            let v = circ_perim(l + t * w, x + t * w).unwrap();
            assert!(
                enclosure.lo() - 1e-12 <= v && v <= enclosure.hi() + 1e-12,
                "{l} {x}: {v} outside {enclosure}"
            );
        }
    }
}

#[test]
fn closed_form_segment_area_matches_quadrature() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..1000 {
        let h = rng.gen_range(1e-3..PI / 2.0);
        let s = rng.gen_range(-(PI - 1e-3)..(PI - 1e-3));
        let (area, _) = segment(h, s).unwrap();
        assert!((area - segment_area_quadrature(h, s)).abs() < 1e-8, "h {h}, s {s}");
    }
}

#[test]
fn quadrature_recovers_circles_and_lunes() {
    for x in [0.1, 1.0, 3.0, 6.0, 10.0] {
        // Cap of area x: radius r with 2π(1 - cos r) = x, centered on a
        // degenerate chord, i.e. s = π/2 + r.
        let r = (1.0 - x / (2.0 * PI)).acos();
        let area = segment_area_quadrature(0.0, PI / 2.0 + r);
        assert!((area - x).abs() < 1e-9, "x = {x}: {area}");
        assert!((2.0 * PI * r.sin() - circ_perim0(x).unwrap()).abs() < 1e-9);
    }
    for s in [0.1, 0.9, 2.0, 3.0] {
        assert!((segment_area_quadrature(PI / 2.0, s) - 2.0 * s).abs() < 1e-9);
    }
}

#[test]
fn dido_landmarks() {
    assert_eq!(dido_min_length(Interval::ZERO).unwrap(), Interval::ZERO);
    let t = dido_min_length(dec("0.32")).unwrap();
    assert!((t.mid() - 1.38138).abs() < 5e-6);
    assert!(t.intersect(&(circ_perim0(dec("0.64")).unwrap() * pt(0.5))).is_some());
    let half = dido_min_length(Interval::pi()).unwrap();
    assert!(half.contains(PI));
}

#[test]
fn bulged_pentagon() {
    let c = Constants::get();
    let at_zero = pent(Interval::ZERO).unwrap();
    assert!(at_zero.intersect(&c.p5).is_some());
    let b = b_prime().unwrap();
    assert!(b.lo() >= -1.52 && b.hi() <= -1.50);
    let bulged = pent(dec("0.01")).unwrap();
    assert!(bulged.hi() < at_zero.hi());
    assert!((pent(0.01).unwrap() - (c.p5.mid() + 0.01 * b.mid())).abs() < 1e-3);
}

#[test]
fn long_edge_pentagon_vertices() {
    let above = perim_area(dec("0.7001")).unwrap();
    assert!(above.perim.lo() > 3.8);
    let below = perim_area(dec("0.5999")).unwrap();
    assert!(below.area.hi() < 0.82);
    for i in 0..=20 {
        let x = 0.6 + 0.005 * f64::from(i);
        let p = perim_area(pt(x)).unwrap();
        let (perim, area) = long_edge_pentagon(x);
        assert!((p.area.mid() - area).abs() < 1e-9, "x = {x}");
        assert!((p.perim.mid() - perim).abs() < 1e-9, "x = {x}");
        let sum = p.alpha + pt(4.0) * p.beta;
        assert!(sum.contains(2.0 * PI) || (sum.mid() - 2.0 * PI).abs() < 1e-12);
        let identity = pt(1.0) + pt(4.0) * p.u;
        assert!(identity.intersect(&p.perim).is_some());
    }
}

#[test]
fn dodecahedral_tiling() {
    let t = DodecahedralTiling::build().unwrap();
    assert_eq!((t.vertices.len(), t.edges.len(), t.face_areas.len()), (20, 30, 12));
    let p5 = Constants::get().p5;
    let per_edge = p5.try_div(&pt(5.0)).unwrap();
    for l in &t.edge_lengths {
        assert!((l.mid() - 0.72973).abs() < 5e-6);
        assert!(l.intersect(&per_edge).is_some());
    }
    assert!(t.total_area().contains(4.0 * PI));
    let total = dodecahedral_total().unwrap();
    assert!((total.mid() - 21.8918).abs() < 5e-5);
    let diff = total - p5 * pt(6.0);
    assert!(diff.contains(0.0) && diff.width() < 1e-8);
}

proptest! {
    #[test]
    fn regular_perimeter_enclosure_contains_points(area in 0.05f64..6.0, n in 3f64..9.0, w in 0f64..0.01) {
        let e = reg_perim(Interval::new(area, area + w), Interval::new(n, n + w)).unwrap();
        let v = reg_perim(area + w / 2.0, n + w / 2.0).unwrap();
        prop_assert!(e.lo() - 1e-12 <= v && v <= e.hi() + 1e-12);
    }
}
