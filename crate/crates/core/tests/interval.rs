mod common;

use std::f64::consts::PI;

use common::{containment_trial, monotonicity_trial, Op, OPS};
use honeycomb_verify::{dec, Interval, IntervalBox};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn iv(lo: f64, hi: f64) -> Interval {
    Interval::new(lo, hi)
}

#[test]
fn arithmetic_examples() {
    assert_eq!(iv(1.0, 2.0) + iv(3.0, 4.0), iv(4.0, 6.0));
    assert_eq!(iv(-1.0, 2.0) * iv(-1.0, 2.0), iv(-2.0, 4.0));
    assert_eq!(iv(-0.5, 0.3).abs(), iv(0.0, 0.5));
    assert_eq!(iv(-1.0, 2.0).sqr(), iv(0.0, 4.0));
    assert_eq!(iv(-2.0, 1.0).powi(3), iv(-8.0, 1.0));
    assert_eq!(iv(1.0, 2.0).min(&iv(0.0, 3.0)), iv(0.0, 2.0));
    assert!(iv(1.0, 2.0).try_div(&iv(-1.0, 1.0)).is_err());
}

#[test]
fn elementary_examples() {
    let c = iv(0.0, PI).cos();
    assert!(c.lo() <= -1.0 + 1e-15 && c.hi() >= 1.0 - 1e-15);
    let a = iv(1.0, 1.0).acos().unwrap();
    assert!(a.contains(0.0) && a.width() < 1e-15);
    let r = iv(4.0, 9.0).sqrt().unwrap();
    assert!(r.contains(2.0) && r.contains(3.0) && r.width() < 1.0 + 1e-14);
    // Inputs grazing the domain are clipped, disjoint ones are errors.
    assert!(iv(0.5, 1.0 + 1e-15).acos().is_ok());
    assert!(iv(1.5, 2.0).acos().is_err());
    assert!(iv(-2.0, -1.0).sqrt().is_err());
}

#[test]
fn pi_enclosure_is_tight() {
    let p = Interval::pi();
    assert!(p.contains(PI));
    assert!(p.width() < 1e-15);
}

#[test]
fn box_examples() {
    let (a, b) = iv(0.0, 1.0).bisect();
    assert_eq!((a, b), (iv(0.0, 0.5), iv(0.5, 1.0)));
    let bx = IntervalBox::new(vec![iv(0.0, 1.0), iv(0.0, 3.0)]);
    assert_eq!(bx.widest().0, 1);
    assert_eq!(IntervalBox::new(vec![iv(2.0, 4.0)]).midpoint(), vec![3.0]);
    assert!(bx.contains(&[0.5, 2.9]));
    let (lo, hi) = bx.bisect();
    assert_eq!(lo.coords()[1], iv(0.0, 1.5));
    assert_eq!(hi.coords()[1], iv(1.5, 3.0));
}

#[test]
fn decimal_literals_are_enclosed_not_rounded() {
    for s in ["0.32", "1.301", "3.474", "0.9957", "0.1", "-0.0711", "0.000000001"] {
        let x = dec(s);
        let nearest: f64 = s.parse().unwrap();
        assert!(x.contains(nearest), "{s}");
        assert!(!x.is_point(), "{s} is not a binary fraction");
        assert!(x.width() <= 2.0 * f64::EPSILON * nearest.abs(), "{s}");
    }
    assert!(dec("0.5").is_point());
    assert!(Interval::from_decimal("1e5x").is_err());
}

#[test]
fn containment_per_operation() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for op in OPS {
        let mut done = 0;
        while done < 1_000_000 {
            if let Some(ok) = containment_trial(&mut rng, op) {
                assert!(ok, "{op:?} lost a point");
                done += 1;
            }
        }
    }
}

#[test]
fn monotonicity_per_operation() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for op in OPS {
        let mut done = 0;
        while done < 100_000 {
            if let Some(ok) = monotonicity_trial(&mut rng, op) {
                assert!(ok, "{op:?} not inclusion monotone");
                done += 1;
            }
        }
    }
}

fn interval_strategy() -> impl Strategy<Value = Interval> {
    (-1e3f64..1e3, 0f64..10.0).prop_map(|(lo, w)| Interval::new(lo, lo + w))
}

proptest! {
    #[test]
    fn sums_contain_exact_results(a in -1e6f64..1e6, b in -1e6f64..1e6) {
        // Error-free transform: a + b = s + e exactly.
        let s = a + b;
        let bb = s - a;
        let e = (a - (s - bb)) + (b - bb);
        let x = Interval::point(a) + Interval::point(b);
        prop_assert!(x.contains(s));
        if e > 0.0 { prop_assert!(x.hi() > s); }
        if e < 0.0 { prop_assert!(x.lo() < s); }
    }

    #[test]
    fn endpoints_stay_ordered(x in interval_strategy(), y in interval_strategy()) {
        for op in [Op::Add, Op::Sub, Op::Mul, Op::Div, Op::Sin, Op::Cos, Op::Atan2] {
            if let Some(r) = op.interval(x, y) {
                prop_assert!(r.lo() <= r.hi());
            }
        }
    }

    #[test]
    fn hull_and_intersection(x in interval_strategy(), y in interval_strategy()) {
        let h = x.hull(&y);
        prop_assert!(x.is_subset_of(&h) && y.is_subset_of(&h));
        if let Some(i) = x.intersect(&y) {
            prop_assert!(i.is_subset_of(&x) && i.is_subset_of(&y));
        }
    }
}
