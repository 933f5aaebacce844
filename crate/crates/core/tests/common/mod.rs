//! Random intervals and the operation table shared by the soundness checks.
#![allow(dead_code)]

use honeycomb_verify::Interval;
use rand::Rng;

/// Interval with endpoints drawn at a random scale, sometimes degenerate.
pub fn random_interval<R: Rng>(rng: &mut R) -> Interval {
    let scale = [1e-6, 1e-2, 1.0, 3.0, 10.0, 1e3][rng.gen_range(0..6)];
    let center = rng.gen_range(-scale..=scale);
    let width = match rng.gen_range(0..4) {
        0 => 0.0,
        1 => scale * 1e-12 * rng.gen::<f64>(),
        _ => scale * rng.gen::<f64>(),
    };
    Interval::new(center - width / 2.0, center + width / 2.0)
}

/// Interval inside `[-1, 1]`.
pub fn random_unit_interval<R: Rng>(rng: &mut R) -> Interval {
    let a: f64 = rng.gen_range(-1.0..=1.0);
    let b: f64 = if rng.gen_bool(0.2) { a } else { rng.gen_range(-1.0..=1.0) };
    Interval::new(a.min(b), a.max(b))
}

/// Point of `x`, biased towards the endpoints.
pub fn random_point<R: Rng>(rng: &mut R, x: &Interval) -> f64 {
    match rng.gen_range(0..8) {
        0 => x.lo(),
        1 => x.hi(),
        _ => (x.lo() + rng.gen::<f64>() * (x.hi() - x.lo())).clamp(x.lo(), x.hi()),
    }
}

/// Random sub-interval of `y`.
pub fn random_subinterval<R: Rng>(rng: &mut R, y: &Interval) -> Interval {
    let a = random_point(rng, y);
    let b = random_point(rng, y);
    Interval::new(a.min(b), a.max(b))
}

#[derive(Clone, Copy, Debug)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Abs,
    Min,
    Max,
    Sqr,
    Cube,
    Sqrt,
    Sin,
    Cos,
    Acos,
    Atan2,
}

pub const OPS: [Op; 15] = [
    Op::Add,
    Op::Sub,
    Op::Mul,
    Op::Div,
    Op::Neg,
    Op::Abs,
    Op::Min,
    Op::Max,
    Op::Sqr,
    Op::Cube,
    Op::Sqrt,
    Op::Sin,
    Op::Cos,
    Op::Acos,
    Op::Atan2,
];

impl Op {
    /// Arguments in the operation's domain.
    pub fn arguments<R: Rng>(self, rng: &mut R) -> (Interval, Interval) {
        match self {
            Op::Sqrt => (random_interval(rng).abs(), Interval::ZERO),
            Op::Acos => (random_unit_interval(rng), Interval::ZERO),
            _ => (random_interval(rng), random_interval(rng)),
        }
    }

    /// Interval extension; `None` where it declines (division by an
    /// interval containing zero, boxes on the atan2 branch cut).
    pub fn interval(self, x: Interval, y: Interval) -> Option<Interval> {
        Some(match self {
            Op::Add => x + y,
            Op::Sub => x - y,
            Op::Mul => x * y,
            Op::Div => x.try_div(&y).ok()?,
            Op::Neg => -x,
            Op::Abs => x.abs(),
            Op::Min => x.min(&y),
            Op::Max => x.max(&y),
            Op::Sqr => x.sqr(),
            Op::Cube => x.powi(3),
            Op::Sqrt => x.sqrt().ok()?,
            Op::Sin => x.sin(),
            Op::Cos => x.cos(),
            Op::Acos => x.acos().ok()?,
            Op::Atan2 => x.atan2(&y).ok()?,
        })
    }

    pub fn point(self, x: f64, y: f64) -> f64 {
        match self {
            Op::Add => x + y,
            Op::Sub => x - y,
            Op::Mul => x * y,
            Op::Div => x / y,
            Op::Neg => -x,
            Op::Abs => x.abs(),
            Op::Min => x.min(y),
            Op::Max => x.max(y),
            Op::Sqr => x * x,
            Op::Cube => x * x * x,
            Op::Sqrt => x.sqrt(),
            Op::Sin => x.sin(),
            Op::Cos => x.cos(),
            Op::Acos => x.acos(),
            Op::Atan2 => x.atan2(y),
        }
    }
}

/// One containment trial: `Some(true)` if the float result at a random
/// point lies in the enclosure, `None` if the extension declined.
pub fn containment_trial<R: Rng>(rng: &mut R, op: Op) -> Option<bool> {
    let (x, y) = op.arguments(rng);
    let enclosure = op.interval(x, y)?;
    let (px, py) = (random_point(rng, &x), random_point(rng, &y));
    Some(enclosure.contains(op.point(px, py)))
}

/// One monotonicity trial on a nested pair `x' ⊆ x`, `y' ⊆ y`.
pub fn monotonicity_trial<R: Rng>(rng: &mut R, op: Op) -> Option<bool> {
    let (x, y) = op.arguments(rng);
    let (xs, ys) = (random_subinterval(rng, &x), random_subinterval(rng, &y));
    let outer = op.interval(x, y)?;
    let inner = op.interval(xs, ys)?;
    Some(inner.is_subset_of(&outer))
}
