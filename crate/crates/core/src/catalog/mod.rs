//! Named inventory of every inequality to certify, compiled to prover goals.

mod cases;
mod params;

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::interval::{Interval, IntervalBox};
use crate::prover::{
    self, finite_difference, partial_jet, Inequality, ProofResult, ProverConfig, Sign, Status,
};

pub use cases::{bulged_deficit, list_cases, small_polygon_goals, CASE_IDS};
pub use params::{ParamTables, SmallPolygonParams};

/// What a goal certifies.
#[derive(Clone, Debug, PartialEq)]
pub enum GoalKind {
    /// `f > 0` on the box.
    Positive { f: Expr, domain: IntervalBox },
    /// The `order`-th partial derivative along `coord` has a strict sign.
    DerivativeSign {
        f: Expr,
        domain: IntervalBox,
        coord: usize,
        order: u8,
        sign: Sign,
    },
    /// The second derivative of the one-variable `f` is negative on
    /// `[start, end]`, checked on a grid of the configured width.
    MaxSecond { f: Expr, start: Interval, end: Interval },
    /// Strict inequalities between closed expressions.
    Chain(Vec<Inequality>),
    /// The value (`order` 0) or first partial derivative along `coord`
    /// (`order` 1) of `f` at `at` encloses 0 tightly.
    Vanishes {
        f: Expr,
        at: Vec<Interval>,
        order: u8,
        coord: usize,
        max_width: f64,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Goal {
    pub label: String,
    pub kind: GoalKind,
}

impl Goal {
    pub fn positive(label: impl Into<String>, f: Expr, domain: Vec<Interval>) -> Self {
        Self {
            label: label.into(),
            kind: GoalKind::Positive {
                f,
                domain: IntervalBox::new(domain),
            },
        }
    }

    pub fn derivative_sign(
        label: impl Into<String>,
        f: Expr,
        domain: Vec<Interval>,
        coord: usize,
        order: u8,
        sign: Sign,
    ) -> Self {
        Self {
            label: label.into(),
            kind: GoalKind::DerivativeSign {
                f,
                domain: IntervalBox::new(domain),
                coord,
                order,
                sign,
            },
        }
    }

    pub fn chain(label: impl Into<String>, chain: Vec<Inequality>) -> Self {
        Self {
            label: label.into(),
            kind: GoalKind::Chain(chain),
        }
    }

    pub fn vanishes(label: impl Into<String>, f: Expr, at: Vec<Interval>, order: u8, coord: usize, max_width: f64) -> Self {
        Self {
            label: label.into(),
            kind: GoalKind::Vanishes {
                f,
                at,
                order,
                coord,
                max_width,
            },
        }
    }

    /// Every expression the goal mentions.
    pub fn expressions(&self) -> Vec<&Expr> {
        match &self.kind {
            GoalKind::Positive { f, .. }
            | GoalKind::DerivativeSign { f, .. }
            | GoalKind::MaxSecond { f, .. }
            | GoalKind::Vanishes { f, .. } => vec![f],
            GoalKind::Chain(c) => c.iter().flat_map(|q| [&q.lhs, &q.rhs]).collect(),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            GoalKind::Positive { .. } => "positive",
            GoalKind::DerivativeSign { .. } => "derivative_sign",
            GoalKind::MaxSecond { .. } => "max_second",
            GoalKind::Chain(_) => "chain",
            GoalKind::Vanishes { .. } => "vanishes",
        }
    }

    pub fn verify(&self, cfg: &ProverConfig) -> ProofResult {
        match &self.kind {
            GoalKind::Positive { f, domain } => prover::prove_positive(f, domain, cfg),
            GoalKind::DerivativeSign {
                f,
                domain,
                coord,
                order,
                sign,
            } => prover::prove_derivative_sign(f, domain, *coord, *order, *sign, cfg),
            GoalKind::MaxSecond { f, start, end } => verify_max_second(f, *start, *end, cfg),
            GoalKind::Chain(c) => prover::prove_constant_chain(c),
            GoalKind::Vanishes {
                f,
                at,
                order,
                coord,
                max_width,
            } => verify_vanishes(f, at, *order, *coord, *max_width),
        }
    }
}

fn unbounded() -> Interval {
    Interval::new(f64::NEG_INFINITY, f64::INFINITY)
}

fn verify_max_second(f: &Expr, start: Interval, end: Interval, cfg: &ProverConfig) -> ProofResult {
    let started = Instant::now();
    let w = Interval::point(cfg.initial_width);
    let cells = ((end.hi() - start.lo()) / cfg.initial_width).ceil().max(1.0) as usize;
    // Extend by one cell if rounding left the right end uncovered.
    let covered = (start + w * Interval::point(cells as f64)).lo() >= end.hi();
    let cells = if covered { cells } else { cells + 1 };
    let (status, bound) = match prover::max_second(f, start, cells, w, cfg) {
        Ok(m) if m.hi() < 0.0 => (Status::Proved, -m),
        Ok(m) if m.lo() >= 0.0 => {
            // Some cell has a certified non-negative second derivative.
            let hit = (0..cells).find_map(|i| {
                let lo = (start + w * Interval::point(i as f64)).lo();
                let hi = (start + w * Interval::point((i + 1) as f64)).hi();
                let cell = Interval::new(lo, hi);
                let j = partial_jet(f, 0, &IntervalBox::new(vec![cell])).ok()?;
                (j.d2.lo() >= 0.0).then_some(cell)
            });
            let witness = hit.and_then(|c| finite_difference(f, &[c.mid()], 0, 2).map(|v| (c, v)));
            match witness {
                Some((c, v)) if v >= 0.0 => (
                    Status::Failed {
                        domain: IntervalBox::new(vec![c]),
                        witness: vec![c.mid()],
                        value: v,
                    },
                    -m,
                ),
                _ => (Status::Unknown, -m),
            }
        }
        Ok(m) => (Status::Unknown, -m),
        Err(_) => (Status::Unknown, unbounded()),
    };
    ProofResult {
        status,
        bound,
        boxes_processed: cells as u64,
        max_depth_reached: 0,
        elapsed: started.elapsed(),
    }
}

fn verify_vanishes(f: &Expr, at: &[Interval], order: u8, coord: usize, max_width: f64) -> ProofResult {
    let started = Instant::now();
    let value = if order == 0 {
        f.eval::<Interval>(at)
    } else {
        partial_jet(f, coord, &IntervalBox::new(at.to_vec())).map(|j| j.d1)
    };
    let (status, bound) = match value {
        Ok(v) if v.contains(0.0) && v.width() < max_width => (Status::Proved, v),
        Ok(v) => (Status::Unknown, v),
        Err(_) => (Status::Unknown, unbounded()),
    };
    ProofResult {
        status,
        bound,
        boxes_processed: 1,
        max_depth_reached: 0,
        elapsed: started.elapsed(),
    }
}

/// A catalog entry.
#[derive(Clone, Debug, PartialEq)]
pub struct CaseSpec {
    pub id: &'static str,
    /// Which step of the argument the case covers.
    pub section: &'static str,
    pub description: String,
    pub goals: Vec<Goal>,
    /// Named constants the goals are built from.
    pub params: BTreeMap<String, String>,
}

impl CaseSpec {
    /// Every decimal literal used by the goals.
    pub fn decimals(&self) -> Vec<String> {
        self.goals
            .iter()
            .flat_map(|g| g.expressions())
            .flat_map(|e| e.decimals())
            .collect()
    }
}

/// Outcome of one goal.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GoalOutcome {
    pub label: String,
    pub kind: &'static str,
    pub result: ProofResult,
}

/// Outcome of one case: the merged result and the per-goal results.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseOutcome {
    pub id: String,
    pub section: String,
    pub result: ProofResult,
    pub goals: Vec<GoalOutcome>,
}

fn merge(goals: &[GoalOutcome], started: Instant) -> ProofResult {
    let status = goals
        .iter()
        .find(|g| matches!(g.result.status, Status::Failed { .. }))
        .map(|g| g.result.status.clone())
        .or_else(|| {
            goals
                .iter()
                .any(|g| g.result.status == Status::Unknown)
                .then_some(Status::Unknown)
        })
        .unwrap_or(Status::Proved);
    // Vanishing checks enclose zero by design; they carry no margin.
    let margins: Vec<&GoalOutcome> = goals.iter().filter(|g| g.kind != "vanishes").collect();
    let pool = if margins.is_empty() { goals.iter().collect() } else { margins };
    let bound = pool
        .iter()
        .map(|g| g.result.bound)
        .min_by(|a, b| a.lo().total_cmp(&b.lo()))
        .unwrap_or(Interval::ZERO);
    ProofResult {
        status,
        bound,
        boxes_processed: goals.iter().map(|g| g.result.boxes_processed).sum(),
        max_depth_reached: goals.iter().map(|g| g.result.max_depth_reached).max().unwrap_or(0),
        elapsed: started.elapsed(),
    }
}

/// Run every goal of `case`.
pub fn run_case(case: &CaseSpec, cfg: &ProverConfig) -> CaseOutcome {
    let started = Instant::now();
    let goals: Vec<GoalOutcome> = case
        .goals
        .iter()
        .map(|g| GoalOutcome {
            label: g.label.clone(),
            kind: g.kind_name(),
            result: g.verify(cfg),
        })
        .collect();
    CaseOutcome {
        id: case.id.to_string(),
        section: case.section.to_string(),
        result: merge(&goals, started),
        goals,
    }
}

/// Look up a case by id.
pub fn find_case(id: &str) -> Result<CaseSpec> {
    list_cases()
        .into_iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCase(id.to_string()))
}

/// Run the case `id`.
pub fn verify_case(id: &str, cfg: &ProverConfig) -> Result<CaseOutcome> {
    let case = find_case(id)?;
    Ok(cfg.install(|| run_case(&case, cfg)))
}

/// Run the cases `ids` (all cases if empty), in catalog order.
pub fn verify_cases(ids: &[String], cfg: &ProverConfig) -> Result<Vec<CaseOutcome>> {
    let cases = if ids.is_empty() {
        list_cases()
    } else {
        ids.iter().map(|id| find_case(id)).collect::<Result<Vec<_>>>()?
    };
    Ok(cfg.install(|| prover::par_map(&cases, cfg.is_parallel(), |c| run_case(c, cfg))))
}

/// Whether a box over `(rho, ...)` reaches the hypothesis region
/// `rho > 3a(n)/π` of an `n`-gon.
pub fn meets_area_hypothesis(rho: Interval, n: u32) -> bool {
    rho.hi() > crate::functional::rho_floor(n).lo()
}
