//! Acceptance run: one PASS/FAIL line per criterion.

mod common;

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use honeycomb_verify::catalog::{find_case, list_cases, run_case, verify_cases, GoalKind, CASE_IDS};
use honeycomb_verify::geometry::{b_prime, circ_perim0, reg_perim, segment, DodecahedralTiling};
use honeycomb_verify::oracle::{grid_min, segment_area_quadrature};
use honeycomb_verify::prover::{ProverConfig, Sign, Status};
use honeycomb_verify::{dec, Interval};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const P5_REFERENCE: f64 = 3.64864;
/// Half a unit in the last printed digit of the reference value.
const P5_REFERENCE_TOL: f64 = 5e-6;
const P5_MAX_WIDTH: f64 = 1e-6;
const B_PRIME_REFERENCE: f64 = -1.51;
const B_PRIME_TOL: f64 = 0.01;
const CONSTANTS_BUDGET: Duration = Duration::from_secs(1);

const DODEC_MAX_WIDTH: f64 = 1e-8;
const DODEC_REFERENCE: f64 = 21.8918;
const DODEC_REFERENCE_TOL: f64 = 5e-5;
const DODEC_BUDGET: Duration = Duration::from_secs(1);

const SECOND_DERIV_WIDTH: f64 = 1e-3;
const SECOND_DERIV_BUDGET: Duration = Duration::from_secs(30);

const SUITE_CASES: usize = 18;
const SUITE_BUDGET: Duration = Duration::from_secs(600);

const EQUALITY_MAX_WIDTH: f64 = 1e-10;

const SMALL_AREA_MARGIN: f64 = 0.4;

const ORACLE_RESOLUTION: usize = 10_000;
const QUADRATURE_SAMPLES: usize = 1_000;
const QUADRATURE_TOL: f64 = 1e-8;

const CONTAINMENT_TRIALS: usize = 1_000_000;
const NESTED_PAIRS: usize = 100_000;

fn pi_over_3() -> Interval {
    Interval::pi().try_div(&Interval::point(3.0)).expect("nonzero divisor")
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn constants() -> Outcome {
    let started = Instant::now();
    let p5 = reg_perim(pi_over_3(), Interval::point(5.0));
    let bp = b_prime();
    let elapsed = started.elapsed();
    let (Ok(p5), Ok(bp)) = (p5, bp) else {
        return outcome(false, "constant evaluation raised an error".into());
    };
    let p5_ok = (p5.lo() - P5_REFERENCE).abs() < P5_REFERENCE_TOL
        && (p5.hi() - P5_REFERENCE).abs() < P5_REFERENCE_TOL
        && p5.width() < P5_MAX_WIDTH;
    let bp_ok = bp.lo() >= B_PRIME_REFERENCE - B_PRIME_TOL && bp.hi() <= B_PRIME_REFERENCE + B_PRIME_TOL;
    outcome(
        p5_ok && bp_ok && elapsed < CONSTANTS_BUDGET,
        format!("p5 {p5} width {:.1e}, B' {bp}, {elapsed:.2?}", p5.width()),
    )
}

fn dodecahedron() -> Outcome {
    let started = Instant::now();
    let total = DodecahedralTiling::build().map(|t| t.total_length());
    let p5 = reg_perim(pi_over_3(), Interval::point(5.0));
    let elapsed = started.elapsed();
    let (Ok(total), Ok(p5)) = (total, p5) else {
        return outcome(false, "dodecahedral construction raised an error".into());
    };
    let diff = total - p5 * Interval::point(6.0);
    let pass = diff.contains(0.0)
        && diff.width() < DODEC_MAX_WIDTH
        && (total.mid() - DODEC_REFERENCE).abs() < DODEC_REFERENCE_TOL
        && elapsed < DODEC_BUDGET;
    outcome(
        pass,
        format!("total {total}, difference {diff} width {:.1e}, {elapsed:.2?}", diff.width()),
    )
}

fn second_derivative() -> Outcome {
    let cfg = ProverConfig {
        initial_width: SECOND_DERIV_WIDTH,
        ..ProverConfig::default()
    };
    let case = find_case("AUX-SECOND-DERIV").expect("catalog case");
    let started = Instant::now();
    let out = cfg.install(|| run_case(&case, &cfg));
    let elapsed = started.elapsed();
    let sides: Vec<String> = out
        .goals
        .iter()
        .map(|g| format!("{} max d2 <= {:.4}", g.label, -g.result.bound.lo()))
        .collect();
    outcome(
        out.goals.len() == 5 && out.result.status.is_proved() && elapsed < SECOND_DERIV_BUDGET,
        format!("{}; {elapsed:.2?}", sides.join(", ")),
    )
}

fn full_suite() -> Outcome {
    let cfg = ProverConfig::default();
    let started = Instant::now();
    let outcomes = verify_cases(&[], &cfg).expect("catalog ids");
    let elapsed = started.elapsed();
    let proved = outcomes.iter().filter(|o| o.result.status.is_proved()).count();
    let first = outcomes.iter().find(|o| o.id == "N5-A").map(|o| o.result.bound);
    let margin_ok = first.is_some_and(|b| b.lo() > 0.0);
    outcome(
        outcomes.len() == SUITE_CASES && proved == SUITE_CASES && margin_ok && elapsed < SUITE_BUDGET,
        format!(
            "{proved}/{} cases proved in {elapsed:.2?}, N5-A margin {}",
            outcomes.len(),
            first.map_or("missing".into(), |b| b.to_string())
        ),
    )
}

fn equality() -> Outcome {
    let cfg = ProverConfig::default();
    let mut pass = true;
    let mut notes = Vec::new();
    for id in ["AUX-EQUALITY", "N5-E"] {
        let case = find_case(id).expect("catalog case");
        for goal in &case.goals {
            match &goal.kind {
                GoalKind::Vanishes { .. } => {
                    let r = goal.verify(&cfg);
                    let ok = r.status.is_proved() && r.bound.contains(0.0) && r.bound.width() < EQUALITY_MAX_WIDTH;
                    pass &= ok;
                    notes.push(format!("{id} {}: width {:.1e}", goal.label, r.bound.width()));
                }
                GoalKind::DerivativeSign {
                    order: 2,
                    sign: Sign::Positive,
                    domain,
                    ..
                } => {
                    let r = goal.verify(&cfg);
                    let covers = domain.coords()[1].lo() <= -0.005 && domain.coords()[1].hi() >= 0.005;
                    pass &= r.status.is_proved() && r.bound.lo() > 0.0 && covers;
                    notes.push(format!("{id} convexity: d2 >= {:.4}", r.bound.lo()));
                }
                _ => {}
            }
        }
    }
    pass &= notes.len() == 4;
    outcome(pass, notes.join(", "))
}

fn small_area() -> Outcome {
    let x = dec("0.1");
    let (Ok(c), Ok(p5)) = (
        circ_perim0(x),
        reg_perim(pi_over_3(), Interval::point(5.0)),
    ) else {
        return outcome(false, "evaluation raised an error".into());
    };
    let lhs = Interval::point(20.0) * c;
    let rhs = Interval::point(6.0) * p5;
    let margin = lhs - rhs;
    let case = run_case(&find_case("AUX-SMALL-AREA").expect("catalog case"), &ProverConfig::default());
    outcome(
        margin.lo() > SMALL_AREA_MARGIN && case.result.status.is_proved(),
        format!("20·circ_perim0(0.1) = {lhs}, 6·p5 = {rhs}, margin >= {:.4}", margin.lo()),
    )
}

fn oracle_consistency() -> Outcome {
    let cfg = ProverConfig::default();
    let started = Instant::now();
    let mut checked = 0usize;
    let mut failures = Vec::new();
    let mut tightest = f64::INFINITY;
    for case in list_cases() {
        for goal in &case.goals {
            let GoalKind::Positive { f, domain } = &goal.kind else {
                continue;
            };
            let certified = goal.verify(&cfg);
            let sampled = grid_min(f, domain, ORACLE_RESOLUTION);
            checked += 1;
            let lo = certified.bound.lo();
            tightest = tightest.min(sampled.min_value - lo);
            let ok = matches!(certified.status, Status::Proved) && sampled.min_value >= lo && sampled.min_value > 0.0;
            if !ok {
                failures.push(format!("{} {}: min {} vs bound {lo}", case.id, goal.label, sampled.min_value));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = 0.0f64;
    for _ in 0..QUADRATURE_SAMPLES {
        let h = rng.gen_range(1e-3..PI / 2.0);
        let s = rng.gen_range(-(PI - 1e-3)..(PI - 1e-3));
        let closed = segment(h, s).expect("realizable parameters").0;
        worst = worst.max((closed - segment_area_quadrature(h, s)).abs());
    }
    let pass = failures.is_empty() && checked > 0 && worst < QUADRATURE_TOL;
    let mut detail = format!(
        "{checked} positivity goals sampled at {ORACLE_RESOLUTION}/axis, smallest gap {tightest:.2e}; \
         quadrature max error {worst:.1e} over {QUADRATURE_SAMPLES} draws; {:.1?}",
        started.elapsed()
    );
    if !failures.is_empty() {
        detail.push_str(&format!("; violations: {}", failures.join("; ")));
    }
    outcome(pass, detail)
}

fn interval_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let ops = common::OPS;
    let (mut contained, mut done, mut i) = (0usize, 0usize, 0usize);
    while done < CONTAINMENT_TRIALS {
        let op = ops[i % ops.len()];
        i += 1;
        if let Some(ok) = common::containment_trial(&mut rng, op) {
            done += 1;
            contained += usize::from(ok);
        }
    }
    let (mut nested, mut pairs) = (0usize, 0usize);
    while pairs < NESTED_PAIRS {
        let op = ops[i % ops.len()];
        i += 1;
        if let Some(ok) = common::monotonicity_trial(&mut rng, op) {
            pairs += 1;
            nested += usize::from(ok);
        }
    }
    outcome(
        contained == CONTAINMENT_TRIALS && nested == NESTED_PAIRS,
        format!("{contained}/{CONTAINMENT_TRIALS} containments, {nested}/{NESTED_PAIRS} nested pairs"),
    )
}

fn main() -> ExitCode {
    let checks: [(&str, fn() -> Outcome); 8] = [
        ("constants", constants),
        ("dodecahedral identity", dodecahedron),
        ("second-derivative lemma", second_derivative),
        ("full case suite", full_suite),
        ("equality characterization", equality),
        ("small-area lemma", small_area),
        ("oracle consistency", oracle_consistency),
        ("interval soundness", interval_soundness),
    ];
    let mut all = true;
    for (i, (name, check)) in checks.iter().enumerate() {
        let o = check();
        all &= o.pass;
        println!("criterion {} {}: {name}: {}", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    // The optimality theorem over measurable partitions rests on regularity
    // theory outside this tool; its computational content is criteria 1-8.
    let scope = all && CASE_IDS.len() == SUITE_CASES;
    println!(
        "criterion 9 {}: scope: inequality suite complete ({} cases), measure-theoretic regularity not machine-checked",
        if scope { "PASS" } else { "FAIL" },
        CASE_IDS.len()
    );
    if all && scope {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
