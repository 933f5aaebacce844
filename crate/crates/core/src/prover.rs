//! Branch-and-bound certificates over interval boxes.
//!
//! Boxes are processed one bisection level at a time. Each level is mapped
//! in parallel (with the `parallel` feature and more than one job) or
//! sequentially, and results are merged in box order, so the outcome and
//! the statistics never depend on scheduling.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::geometry::GeomScalar;
use crate::interval::{Interval, IntervalBox};
use crate::jet::Jet2;

/// A real function of a few variables that can be evaluated as doubles,
/// intervals and interval jets from a single definition.
pub trait Objective: Sync {
    fn eval<S: GeomScalar>(&self, x: &[S]) -> Result<S>;
}

impl Objective for Expr {
    fn eval<S: GeomScalar>(&self, x: &[S]) -> Result<S> {
        Expr::eval(self, x)
    }
}

/// Jet of `f` along coordinate `which`, the other coordinates held as
/// interval constants.
pub fn partial_jet<F: Objective + ?Sized>(f: &F, which: usize, at: &IntervalBox) -> Result<Jet2> {
    let x: Vec<Jet2> = at
        .coords()
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            if i == which {
                Jet2::variable(c)
            } else {
                Jet2::constant(c)
            }
        })
        .collect();
    f.eval(&x)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProverConfig {
    /// Grid width for second-derivative scans.
    pub initial_width: f64,
    /// Bisection depth after which a box is given up as unknown.
    pub max_depth: u32,
    /// Boxes narrower than this are not split further.
    pub min_box_width: f64,
    /// Worker threads; 1 runs sequentially.
    pub parallel_jobs: usize,
}

impl Default for ProverConfig {
    fn default() -> Self {
        Self {
            initial_width: 0.001,
            max_depth: 40,
            min_box_width: 1e-12,
            parallel_jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

impl ProverConfig {
    pub fn validate(&self) -> Result<()> {
        let ok = self.initial_width > 0.0
            && self.max_depth > 0
            && self.min_box_width > 0.0
            && self.parallel_jobs > 0
            && self.min_box_width < self.initial_width;
        if ok {
            Ok(())
        } else {
            Err(Error::Precision(format!("invalid prover configuration {self:?}")))
        }
    }

    pub fn is_parallel(&self) -> bool {
        cfg!(feature = "parallel") && self.parallel_jobs > 1
    }

    /// Run `op` on a worker pool of `parallel_jobs` threads.
    pub fn install<R: Send>(&self, op: impl FnOnce() -> R + Send) -> R {
        #[cfg(feature = "parallel")]
        if self.parallel_jobs > 1 {
            if let Ok(pool) = rayon::ThreadPoolBuilder::new()
                .num_threads(self.parallel_jobs)
                .build()
            {
                return pool.install(op);
            }
        }
        op()
    }
}

/// Map over `items`, keeping their order.
pub fn par_map<T, R, F>(items: &[T], parallel: bool, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = parallel;
    items.iter().map(f).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Proved,
    /// A box on which the claim is certified false, with a point where the
    /// floating-point value violates it too.
    Failed {
        domain: IntervalBox,
        witness: Vec<f64>,
        value: f64,
    },
    Unknown,
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Proved => "PROVED",
            Status::Failed { .. } => "FAILED",
            Status::Unknown => "UNKNOWN",
        }
    }

    pub fn is_proved(&self) -> bool {
        matches!(self, Status::Proved)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProofResult {
    pub status: Status,
    /// Enclosure of the smallest value of the certified quantity: the
    /// function for positivity goals, the signed derivative for sign goals,
    /// the margin for chains.
    pub bound: Interval,
    pub boxes_processed: u64,
    pub max_depth_reached: u32,
    pub elapsed: Duration,
}

impl ProofResult {
    fn single(status: Status, bound: Interval, started: Instant) -> Self {
        Self {
            status,
            bound,
            boxes_processed: 1,
            max_depth_reached: 0,
            elapsed: started.elapsed(),
        }
    }
}

/// Per-box verdict of a goal.
enum Verdict {
    Proved(Interval),
    Failed {
        witness: Vec<f64>,
        value: f64,
        bound: Interval,
    },
    Split(Option<Interval>),
}

/// Frontier larger than this is abandoned as unknown.
const MAX_FRONTIER: usize = 1 << 22;

fn branch_and_bound<A>(domain: &IntervalBox, cfg: &ProverConfig, assess: A) -> ProofResult
where
    A: Fn(&IntervalBox) -> Verdict + Sync + Send,
{
    let started = Instant::now();
    let parallel = cfg.is_parallel();
    let mut frontier = vec![domain.clone()];
    let mut depth = 0u32;
    let mut boxes = 0u64;
    let (mut lo, mut hi) = (f64::INFINITY, f64::INFINITY);
    let mut unknown = false;
    let mut failure = None;

    while !frontier.is_empty() {
        let verdicts = par_map(&frontier, parallel, &assess);
        let mut next = Vec::new();
        for (b, v) in frontier.iter().zip(verdicts) {
            boxes += 1;
            match v {
                Verdict::Proved(e) => {
                    lo = lo.min(e.lo());
                    hi = hi.min(e.hi());
                }
                Verdict::Failed {
                    witness,
                    value,
                    bound,
                } => {
                    lo = lo.min(bound.lo());
                    hi = hi.min(bound.hi());
                    if failure.is_none() {
                        failure = Some(Status::Failed {
                            domain: b.clone(),
                            witness,
                            value,
                        });
                    }
                }
                Verdict::Split(e) => {
                    if let Some(e) = e {
                        hi = hi.min(e.hi());
                    }
                    if depth >= cfg.max_depth || b.width() <= cfg.min_box_width {
                        unknown = true;
                        lo = lo.min(e.map_or(f64::NEG_INFINITY, |e| e.lo()));
                    } else {
                        let (l, u) = b.bisect();
                        next.push(l);
                        next.push(u);
                    }
                }
            }
        }
        if failure.is_some() {
            break;
        }
        if next.len() > MAX_FRONTIER {
            unknown = true;
            lo = f64::NEG_INFINITY;
            break;
        }
        frontier = next;
        if !frontier.is_empty() {
            depth += 1;
        }
    }

    let status = match failure {
        Some(f) => f,
        None if unknown => Status::Unknown,
        None => Status::Proved,
    };
    let hi = if hi.is_finite() { hi.max(lo) } else { f64::INFINITY };
    ProofResult {
        status,
        bound: Interval::new(lo, hi),
        boxes_processed: boxes,
        max_depth_reached: depth,
        elapsed: started.elapsed(),
    }
}

fn point_box(p: &[f64]) -> Vec<Interval> {
    p.iter().map(|&v| Interval::point(v)).collect()
}

/// Lower bound of `f` over `b` from gradient information: coordinates
/// with a certain slope sign are pinned to the lower face, then the
/// mean-value form is applied around the center of what remains.
fn gradient_bound<F: Objective + ?Sized>(f: &F, b: &IntervalBox) -> Option<Interval> {
    let mut grads = Vec::with_capacity(b.dim());
    for (i, c) in b.coords().iter().enumerate() {
        if c.is_point() {
            grads.push(Interval::ZERO);
        } else {
            grads.push(partial_jet(f, i, b).ok()?.d1);
        }
    }
    let reduced: Vec<Interval> = b
        .coords()
        .iter()
        .zip(&grads)
        .map(|(c, g)| {
            if g.lo() >= 0.0 {
                Interval::point(c.lo())
            } else if g.hi() <= 0.0 {
                Interval::point(c.hi())
            } else {
                *c
            }
        })
        .collect();
    let mut best: Option<Interval> = None;
    let mut consider = |e: Interval| {
        if best.map_or(true, |b| e.lo() > b.lo()) {
            best = Some(e);
        }
    };
    if reduced != b.coords() {
        if let Ok(e) = f.eval(&reduced) {
            consider(e);
        }
    }
    let mid: Vec<f64> = reduced.iter().map(Interval::mid).collect();
    if let Ok(fm) = f.eval(&point_box(&mid)) {
        let spread = reduced
            .iter()
            .zip(&grads)
            .zip(&mid)
            .fold(Interval::ZERO, |acc, ((c, g), &m)| {
                if c.is_point() {
                    acc
                } else {
                    acc + *g * (*c - Interval::point(m))
                }
            });
        consider(fm + spread);
    }
    best
}

fn assess_positive<F: Objective + ?Sized>(f: &F, b: &IntervalBox) -> Verdict {
    let natural = f.eval(b.coords()).ok();
    if let Some(e) = natural {
        if e.lo() > 0.0 {
            return Verdict::Proved(e);
        }
    }
    let mid = b.midpoint();
    if let Ok(pm) = f.eval(&point_box(&mid)) {
        if pm.hi() <= 0.0 {
            if let Ok(v) = f.eval(&mid) {
                if v <= 0.0 {
                    return Verdict::Failed {
                        witness: mid,
                        value: v,
                        bound: natural.unwrap_or(pm),
                    };
                }
            }
        }
    }
    match gradient_bound(f, b) {
        Some(e) if e.lo() > 0.0 => Verdict::Proved(e),
        other => Verdict::Split(match (natural, other) {
            (Some(n), Some(g)) if g.lo() > n.lo() => Some(g),
            (Some(n), _) => Some(n),
            (None, g) => g,
        }),
    }
}

/// Certify `f > 0` on `domain`.
pub fn prove_positive<F: Objective + ?Sized>(f: &F, domain: &IntervalBox, cfg: &ProverConfig) -> ProofResult {
    branch_and_bound(domain, cfg, |b| assess_positive(f, b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    fn factor(self) -> Interval {
        match self {
            Sign::Positive => Interval::ONE,
            Sign::Negative => -Interval::ONE,
        }
    }
}

/// Central finite difference of `f` along `coord` at `x`; step `1e-5` for
/// the first derivative and `1e-4` for the second.
pub fn finite_difference<F: Objective + ?Sized>(f: &F, x: &[f64], coord: usize, order: u8) -> Option<f64> {
    let at = |dx: f64| {
        let mut p = x.to_vec();
        p[coord] += dx;
        f.eval(&p).ok()
    };
    match order {
        1 => {
            let h = 1e-5;
            Some((at(h)? - at(-h)?) / (2.0 * h))
        }
        _ => {
            let h = 1e-4;
            Some((at(h)? - 2.0 * at(0.0)? + at(-h)?) / (h * h))
        }
    }
}

fn derivative(j: &Jet2, order: u8) -> Interval {
    if order == 1 {
        j.d1
    } else {
        j.d2
    }
}

fn assess_derivative<F: Objective + ?Sized>(
    f: &F,
    b: &IntervalBox,
    coord: usize,
    order: u8,
    sign: Sign,
) -> Verdict {
    let s = sign.factor();
    let jet = partial_jet(f, coord, b).ok();
    let natural = jet.map(|j| s * derivative(&j, order));
    if let Some(e) = natural {
        if e.lo() > 0.0 {
            return Verdict::Proved(e);
        }
    }
    let mid = b.midpoint();
    if let Ok(jm) = partial_jet(f, coord, &IntervalBox::point(&mid)) {
        let dm = s * derivative(&jm, order);
        if dm.hi() <= 0.0 {
            if let Some(v) = finite_difference(f, &mid, coord, order) {
                if s.mid() * v <= 0.0 {
                    return Verdict::Failed {
                        witness: mid,
                        value: v,
                        bound: natural.unwrap_or(dm),
                    };
                }
            }
        }
    }
    // Mean-value form of the first derivative along `coord`.
    if order == 1 {
        if let Some(j) = jet {
            let c = b.coords()[coord];
            let m = c.mid();
            let mut pinned = b.clone();
            pinned.0[coord] = Interval::point(m);
            if let Ok(jm) = partial_jet(f, coord, &pinned) {
                let e = s * (jm.d1 + j.d2 * (c - Interval::point(m)));
                if e.lo() > 0.0 {
                    return Verdict::Proved(e);
                }
            }
        }
    }
    Verdict::Split(natural)
}

/// Certify that the `order`-th derivative of `f` along coordinate `coord`
/// has the given strict sign on `domain`.
pub fn prove_derivative_sign<F: Objective + ?Sized>(
    f: &F,
    domain: &IntervalBox,
    coord: usize,
    order: u8,
    sign: Sign,
    cfg: &ProverConfig,
) -> ProofResult {
    branch_and_bound(domain, cfg, |b| assess_derivative(f, b, coord, order, sign))
}

/// Enclosure of the largest second derivative of a one-variable `f` over
/// the grid `[a + i·w, a + (i+1)·w]`, `i = 0..n`. Cell endpoints are
/// rounded outward so the cells cover `[a, a + n·w]`.
pub fn max_second<F: Objective + ?Sized>(f: &F, a: Interval, n: usize, w: Interval, cfg: &ProverConfig) -> Result<Interval> {
    let cells: Vec<usize> = (0..n).collect();
    let d2 = par_map(&cells, cfg.is_parallel(), |&i| {
        let lo = a + w * Interval::point(i as f64);
        let hi = a + w * Interval::point((i + 1) as f64);
        let cell = Interval::new(lo.lo(), hi.hi());
        f.eval(&[Jet2::variable(cell)]).map(|j| j.d2)
    });
    let mut best: Option<Interval> = None;
    for r in d2 {
        let r = r?;
        best = Some(match best {
            None => r,
            Some(b) => b.max(&r),
        });
    }
    best.ok_or_else(|| Error::Precision("empty grid".into()))
}

/// A strict inequality `lhs < rhs` between closed expressions.
#[derive(Clone, Debug, PartialEq)]
pub struct Inequality {
    pub label: String,
    pub lhs: Expr,
    pub rhs: Expr,
}

impl Inequality {
    pub fn new(label: impl Into<String>, lhs: Expr, rhs: Expr) -> Self {
        Self {
            label: label.into(),
            lhs,
            rhs,
        }
    }

    /// Enclosure of `rhs - lhs`.
    pub fn margin(&self) -> Result<Interval> {
        Ok(self.rhs.value()? - self.lhs.value()?)
    }
}

/// Certify every inequality of `chain` by comparing endpoints.
pub fn prove_constant_chain(chain: &[Inequality]) -> ProofResult {
    let started = Instant::now();
    let mut bound: Option<Interval> = None;
    let mut status = Status::Proved;
    for q in chain {
        let m = match q.margin() {
            Ok(m) => m,
            Err(_) => {
                status = Status::Unknown;
                bound = Some(Interval::new(f64::NEG_INFINITY, f64::INFINITY));
                continue;
            }
        };
        if bound.map_or(true, |b| m.lo() < b.lo()) {
            bound = Some(m);
        }
        if m.hi() <= 0.0 {
            let value = q.rhs.eval::<f64>(&[]).unwrap_or(f64::NAN)
                - q.lhs.eval::<f64>(&[]).unwrap_or(f64::NAN);
            if value <= 0.0 && !matches!(status, Status::Failed { .. }) {
                status = Status::Failed {
                    domain: IntervalBox::new(Vec::new()),
                    witness: Vec::new(),
                    value,
                };
            }
        } else if m.lo() <= 0.0 && status.is_proved() {
            status = Status::Unknown;
        }
    }
    let mut r = ProofResult::single(status, bound.unwrap_or(Interval::ZERO), started);
    r.boxes_processed = chain.len() as u64;
    r
}

/// Certify that a closed expression encloses 0 with width below `max_width`.
pub fn prove_enclosure(value: &Expr, max_width: f64) -> ProofResult {
    let started = Instant::now();
    match value.value() {
        Ok(v) if v.contains(0.0) && v.width() < max_width => ProofResult::single(Status::Proved, v, started),
        Ok(v) => ProofResult::single(Status::Unknown, v, started),
        Err(_) => ProofResult::single(
            Status::Unknown,
            Interval::new(f64::NEG_INFINITY, f64::INFINITY),
            started,
        ),
    }
}
