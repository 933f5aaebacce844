use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use honeycomb_verify::catalog::{verify_cases, CASE_IDS};
use honeycomb_verify::functional::{a_of, i_functional, mrr, rho_of_area, tau, AreaMod4Pi};
use honeycomb_verify::geometry::{circ_perim, circ_perim0, pent, perim_area, reg_perim, Constants};
use honeycomb_verify::prover::ProverConfig;
use honeycomb_verify::report::{Overall, Report};
use honeycomb_verify::{Error, Interval};

#[derive(Parser)]
#[command(name = "honeycomb", version, about = "Certify the inequalities of the spherical honeycomb problem")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run catalog cases and print a report.
    Verify {
        /// Case id; repeat for several. Runs every case when omitted.
        #[arg(long = "case")]
        cases: Vec<String>,
        /// Grid width for second-derivative scans.
        #[arg(long, default_value_t = 0.001)]
        width: f64,
        #[arg(long, default_value_t = 40)]
        max_depth: u32,
        /// Worker threads.
        #[arg(long, env = "HONEYCOMB_JOBS")]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Also sample every positivity goal on a grid.
        #[arg(long)]
        with_oracle: bool,
        /// Grid points per axis for the oracle.
        #[arg(long, default_value_t = 200)]
        oracle_resolution: usize,
        /// Print one line per goal under each case.
        #[arg(long)]
        goals: bool,
    },
    /// Print enclosures of the fixed constants.
    Constants,
    /// Evaluate a function on decimal arguments (angles in radians).
    Eval {
        #[arg(value_enum)]
        function: Function,
        #[arg(allow_negative_numbers = true)]
        args: Vec<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Function {
    #[value(name = "reg_perim")]
    RegPerim,
    #[value(name = "circ_perim0")]
    CircPerim0,
    #[value(name = "circ_perim")]
    CircPerim,
    #[value(name = "pent")]
    Pent,
    #[value(name = "perim_area")]
    PerimArea,
    #[value(name = "tau")]
    Tau,
    #[value(name = "mrr")]
    Mrr,
    #[value(name = "rho")]
    Rho,
    #[value(name = "I")]
    Deficit,
}

impl Function {
    fn arity(self) -> usize {
        match self {
            Function::RegPerim | Function::CircPerim => 2,
            Function::Deficit => 4,
            _ => 1,
        }
    }
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn line(name: &str, v: Interval) {
    println!("{name:<14} [{:.17e}, {:.17e}]  width {:.3e}", v.lo(), v.hi(), v.width());
}

fn constants() -> ExitCode {
    let c = Constants::get();
    line("p5", c.p5);
    line("p5'", c.p5_prime);
    line("B'", c.b_prime);
    line("tau0", c.tau0);
    for n in 2..=8 {
        line(&format!("a({n})"), a_of(n));
    }
    line("dodec_total", c.dodec_total);
    ExitCode::SUCCESS
}

fn eval(function: Function, args: &[String]) -> ExitCode {
    if args.len() != function.arity() {
        return usage(&format!("expected {} argument(s), got {}", function.arity(), args.len()));
    }
    let parsed: Result<Vec<Interval>, Error> = args.iter().map(|a| Interval::from_decimal(a)).collect();
    let x = match parsed {
        Ok(x) => x,
        Err(e) => return usage(&e.to_string()),
    };
    // Area classes take the nearest double as representative.
    let area = || AreaMod4Pi::Radians(x[0].mid());
    let result = match function {
        Function::RegPerim => reg_perim(x[0], x[1]).map(|v| vec![("reg_perim", v)]),
        Function::CircPerim0 => circ_perim0(x[0]).map(|v| vec![("circ_perim0", v)]),
        Function::CircPerim => circ_perim(x[0], x[1]).map(|v| vec![("circ_perim", v)]),
        Function::Pent => pent(x[0]).map(|v| vec![("pent", v)]),
        Function::PerimArea => perim_area(x[0]).map(|p| vec![("perim", p.perim), ("area", p.area)]),
        Function::Tau => Ok(vec![("tau", tau(area()))]),
        Function::Mrr => Ok(vec![("mrr", mrr(area()))]),
        Function::Rho => Ok(vec![("rho", rho_of_area(area()))]),
        Function::Deficit => Ok(vec![("I", i_functional(x[0], x[1], x[2], x[3]))]),
    };
    match result {
        Ok(values) => {
            for (name, v) in values {
                line(name, v);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn verify(
    cases: Vec<String>,
    width: f64,
    max_depth: u32,
    jobs: Option<usize>,
    format: Format,
    with_oracle: bool,
    oracle_resolution: usize,
    goals: bool,
) -> ExitCode {
    if let Some(bad) = cases.iter().find(|c| !CASE_IDS.contains(&c.as_str())) {
        return usage(&format!("unknown case {bad:?}; valid ids: {}", CASE_IDS.join(", ")));
    }
    let mut cfg = ProverConfig {
        initial_width: width,
        max_depth,
        ..ProverConfig::default()
    };
    if let Some(j) = jobs {
        cfg.parallel_jobs = j;
    }
    if let Err(e) = cfg.validate() {
        return usage(&e.to_string());
    }
    if with_oracle && oracle_resolution < 2 {
        return usage("oracle resolution must be at least 2");
    }
    let outcomes = match verify_cases(&cases, &cfg) {
        Ok(o) => o,
        Err(e) => return usage(&e.to_string()),
    };
    let report = Report::build(&cfg, &outcomes, with_oracle.then_some(oracle_resolution));
    let text = match format {
        Format::Text => report.to_text(goals),
        Format::Json => report.to_json() + "\n",
    };
    // A closed pipe downstream is not an error of the run.
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    if report.overall == Overall::Proved {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            cases,
            width,
            max_depth,
            jobs,
            format,
            with_oracle,
            oracle_resolution,
            goals,
        } => verify(cases, width, max_depth, jobs, format, with_oracle, oracle_resolution, goals),
        Command::Constants => constants(),
        Command::Eval { function, args } => eval(function, &args),
    }
}
