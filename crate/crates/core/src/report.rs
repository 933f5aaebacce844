//! Machine-readable record of a verification run.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::catalog::{CaseOutcome, GoalKind, GoalOutcome};
use crate::oracle::grid_min;
use crate::prover::{ProverConfig, Status};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Proved,
    Failed,
    Unknown,
}

impl Verdict {
    pub fn of(status: &Status) -> Self {
        match status {
            Status::Proved => Verdict::Proved,
            Status::Failed { .. } => Verdict::Failed,
            Status::Unknown => Verdict::Unknown,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Verdict::Proved => "PROVED",
            Verdict::Failed => "FAILED",
            Verdict::Unknown => "UNKNOWN",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Overall {
    Proved,
    Incomplete,
    Failed,
}

impl Overall {
    pub fn label(self) -> &'static str {
        match self {
            Overall::Proved => "PROVED",
            Overall::Incomplete => "INCOMPLETE",
            Overall::Failed => "FAILED",
        }
    }
}

/// Non-finite bounds are recorded as absent so the JSON stays valid.
fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GoalLine {
    pub label: String,
    pub kind: String,
    pub status: Verdict,
    pub bound_lo: Option<f64>,
    pub bound_hi: Option<f64>,
    pub boxes_processed: u64,
    pub elapsed_ms: f64,
    /// Point where a failed goal is violated.
    pub witness: Option<Vec<f64>>,
    pub oracle_min: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseLine {
    pub id: String,
    pub section: String,
    pub status: Verdict,
    pub bound_lo: Option<f64>,
    pub bound_hi: Option<f64>,
    pub boxes_processed: u64,
    pub elapsed_ms: f64,
    pub oracle_min: Option<f64>,
    pub goals: Vec<GoalLine>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub config: ProverConfig,
    pub cases: Vec<CaseLine>,
    pub overall: Overall,
}

fn goal_line(g: &GoalOutcome, oracle_min: Option<f64>) -> GoalLine {
    let r = &g.result;
    GoalLine {
        label: g.label.clone(),
        kind: g.kind.to_string(),
        status: Verdict::of(&r.status),
        bound_lo: finite(r.bound.lo()),
        bound_hi: finite(r.bound.hi()),
        boxes_processed: r.boxes_processed,
        elapsed_ms: r.elapsed.as_secs_f64() * 1e3,
        witness: match &r.status {
            Status::Failed { witness, .. } => Some(witness.clone()),
            _ => None,
        },
        oracle_min,
    }
}

impl Report {
    /// Assemble a report. With `oracle_resolution`, every positivity goal
    /// is also sampled on a grid of that many points per axis.
    pub fn build(cfg: &ProverConfig, outcomes: &[CaseOutcome], oracle_resolution: Option<usize>) -> Self {
        let cases: Vec<CaseLine> = outcomes
            .iter()
            .map(|o| {
                let specs = crate::catalog::find_case(&o.id).ok();
                let goals: Vec<GoalLine> = o
                    .goals
                    .iter()
                    .enumerate()
                    .map(|(i, g)| {
                        let sampled = oracle_resolution.and_then(|res| {
                            match &specs.as_ref()?.goals.get(i)?.kind {
                                GoalKind::Positive { f, domain } => Some(grid_min(f, domain, res).min_value),
                                _ => None,
                            }
                        });
                        goal_line(g, sampled)
                    })
                    .collect();
                let oracle_min = goals
                    .iter()
                    .filter_map(|g| g.oracle_min)
                    .min_by(f64::total_cmp);
                CaseLine {
                    id: o.id.clone(),
                    section: o.section.clone(),
                    status: Verdict::of(&o.result.status),
                    bound_lo: finite(o.result.bound.lo()),
                    bound_hi: finite(o.result.bound.hi()),
                    boxes_processed: o.result.boxes_processed,
                    elapsed_ms: o.result.elapsed.as_secs_f64() * 1e3,
                    oracle_min,
                    goals,
                }
            })
            .collect();
        let overall = if cases.iter().any(|c| c.status == Verdict::Failed) {
            Overall::Failed
        } else if cases.iter().all(|c| c.status == Verdict::Proved) {
            Overall::Proved
        } else {
            Overall::Incomplete
        };
        Self {
            tool_version: TOOL_VERSION.to_string(),
            config: cfg.clone(),
            cases,
            overall,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// One line per case, optionally followed by indented goal lines.
    pub fn to_text(&self, goals: bool) -> String {
        let fmt = |x: Option<f64>| x.map_or_else(|| "-inf".to_string(), |v| format!("{v:.6e}"));
        let mut out = String::new();
        let c = &self.config;
        let _ = writeln!(
            out,
            "honeycomb-verify {}  width={} max_depth={} min_box_width={} jobs={}",
            self.tool_version, c.initial_width, c.max_depth, c.min_box_width, c.parallel_jobs
        );
        for case in &self.cases {
            let _ = write!(
                out,
                "{:<18} {:<8} bound_lo={:<14} boxes={:<10} {:>10.1} ms",
                case.id,
                case.status.label(),
                fmt(case.bound_lo),
                case.boxes_processed,
                case.elapsed_ms
            );
            if let Some(m) = case.oracle_min {
                let _ = write!(out, "  oracle_min={m:.6e}");
            }
            let _ = writeln!(out, "  {}", case.section);
            if goals {
                for g in &case.goals {
                    let _ = writeln!(
                        out,
                        "    {:<8} bound_lo={:<14} boxes={:<10} {}",
                        g.status.label(),
                        fmt(g.bound_lo),
                        g.boxes_processed,
                        g.label
                    );
                }
            }
        }
        let _ = writeln!(out, "overall {}", self.overall.label());
        out
    }
}
