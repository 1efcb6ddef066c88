use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use conereg::barrier::{
    alpha0, build_barrier, m1_coefficient, m2_coefficient, max_admissible_tilt, RotatedCoefficients,
};
use conereg::exponent::{
    boundary_mismatch, classify_regime, critical_exponent, neumann_exponent, neumann_mismatch,
    ConeGeometry, ObliqueBC, RegimeReport,
};
use conereg::verify::{run_suite, Suite, VerifyOptions};
use conereg::Error;
use serde::Serialize;

mod sweep;

use sweep::{PhaseMapRow, SRange, SweepConfig};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "conereg", version, about = "Regularity regimes of oblique-derivative problems on circular cones")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the regime of one (θ₀, s) pair.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        theta0: f64,
        #[arg(long, allow_hyphen_values = true)]
        s: f64,
        #[arg(long)]
        json: bool,
        /// Read angles in degrees.
        #[arg(long)]
        degrees: bool,
    },
    /// Tabulate the regime over a (θ₀, s) grid.
    PhaseMap(PhaseMapArgs),
    /// Critical exponent for an oblique angle, or the Neumann exponent.
    Exponent {
        #[arg(long, allow_hyphen_values = true)]
        theta0: f64,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "neumann", conflicts_with = "neumann")]
        s: Option<f64>,
        /// First azimuthal mode with the normal-derivative condition.
        #[arg(long)]
        neumann: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        degrees: bool,
    },
    /// Build the isotropic barrier and evaluate the boundary operators on it.
    BarrierCheck {
        #[arg(long, allow_hyphen_values = true)]
        theta0: f64,
        #[arg(long, default_value_t = 0.05)]
        alpha: f64,
        /// Oblique angles to test; defaults to points spread over the barrier regime.
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        s: Vec<f64>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        degrees: bool,
    },
    /// Run an invariant suite.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long)]
        json: bool,
        #[arg(long, hide = true)]
        poison: bool,
    },
}

#[derive(clap::Args)]
struct PhaseMapArgs {
    #[arg(long, allow_hyphen_values = true)]
    theta0_lo: f64,
    #[arg(long, allow_hyphen_values = true)]
    theta0_hi: f64,
    #[arg(long, default_value_t = 10)]
    theta0_count: usize,
    #[arg(long, value_enum, default_value_t = SMode::Fractions)]
    s_mode: SMode,
    /// Lower end: a fraction of (-π+θ₀, θ₀), or an angle in absolute mode.
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.05)]
    s_lo: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.95)]
    s_hi: f64,
    #[arg(long, default_value_t = 10)]
    s_count: usize,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    degrees: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SMode {
    Fractions,
    Absolute,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Special,
    Exponent,
    Barrier,
    Solver,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Special => Suite::Special,
            SuiteArg::Exponent => Suite::Exponent,
            SuiteArg::Barrier => Suite::Barrier,
            SuiteArg::Solver => Suite::Solver,
            SuiteArg::All => Suite::All,
        }
    }
}

/// Outcome of a command other than success.
enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.command {
        Command::Classify { theta0, s, json, degrees } => classify(angle(theta0, degrees), angle(s, degrees), json),
        Command::PhaseMap(args) => phase_map(args),
        Command::Exponent { theta0, s, neumann, json, degrees } => {
            exponent(angle(theta0, degrees), s.map(|s| angle(s, degrees)), neumann, json)
        }
        Command::BarrierCheck { theta0, alpha, s, json, degrees } => barrier_check(
            angle(theta0, degrees),
            alpha,
            s.into_iter().map(|s| angle(s, degrees)).collect(),
            json,
        ),
        Command::Verify { suite, json, poison } => verify(suite.into(), json, poison),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(EXIT_FAILED)
        }
    }
}

fn angle(v: f64, degrees: bool) -> f64 {
    if degrees {
        v.to_radians()
    } else {
        v
    }
}

fn print_json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string_pretty(v).expect("report serializes"));
}

#[derive(Serialize)]
struct Versioned<'a, T: Serialize> {
    schema_version: u32,
    #[serde(flatten)]
    body: &'a T,
}

fn versioned<T: Serialize>(body: &T) -> Versioned<'_, T> {
    Versioned { schema_version: 1, body }
}

fn opt(v: Option<f64>) -> String {
    v.map(sweep::float).unwrap_or_else(|| "none".into())
}

fn classify(theta0: f64, s: f64, json: bool) -> Outcome {
    let g = ConeGeometry::with_opening(theta0)?;
    let bc = ObliqueBC::new(&g, s)?;
    let rep = classify_regime(&g, &bc);
    if json {
        print_json(&versioned(&rep));
    } else {
        print_report(&rep);
    }
    Ok(())
}

fn print_report(rep: &RegimeReport) {
    println!("label: {}", rep.label);
    println!("theta0: {}", sweep::float(rep.theta0));
    println!("s: {}", sweep::float(rep.s));
    println!("s0: {}", sweep::float(rep.s0));
    println!("critical_exponent: {}", opt(rep.critical_exponent));
    for w in &rep.witnesses {
        match w.tolerance {
            Some(t) => println!("witness {}: {} (tol {})", w.name, sweep::float(w.value), sweep::float(t)),
            None => println!("witness {}: {}", w.name, sweep::float(w.value)),
        }
    }
    for n in &rep.notes {
        println!("note: {n}");
    }
}

fn phase_map(a: PhaseMapArgs) -> Outcome {
    let (lo, hi) = match a.s_mode {
        SMode::Fractions => (a.s_lo, a.s_hi),
        SMode::Absolute => (angle(a.s_lo, a.degrees), angle(a.s_hi, a.degrees)),
    };
    let s = match a.s_mode {
        SMode::Fractions => SRange::Fractions { lo, hi, count: a.s_count },
        SMode::Absolute => SRange::Absolute { lo, hi, count: a.s_count },
    };
    let config = SweepConfig {
        theta0: (angle(a.theta0_lo, a.degrees), angle(a.theta0_hi, a.degrees), a.theta0_count),
        s,
    };
    let rows: Vec<PhaseMapRow> = sweep::run(&config)?;
    let text = match a.format {
        Format::Csv => sweep::to_csv(&rows),
        Format::Json => sweep::to_json(&rows),
    };
    match a.out {
        Some(path) => fs::write(&path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(format!("cannot write output: {e}"))),
    }
}

#[derive(Serialize)]
struct ExponentReport {
    theta0: f64,
    s: Option<f64>,
    condition: &'static str,
    exponent: Option<f64>,
    mismatch_at_root: Option<f64>,
}

fn exponent(theta0: f64, s: Option<f64>, neumann: bool, json: bool) -> Outcome {
    let g = ConeGeometry::with_opening(theta0)?;
    let (alpha, residual) = if neumann {
        let a = neumann_exponent(&g)?;
        (Some(a), Some(neumann_mismatch(&g, a)?))
    } else {
        let s = s.ok_or_else(|| Failure::Usage("--s is required without --neumann".into()))?;
        let bc = ObliqueBC::new(&g, s)?;
        match critical_exponent(&g, &bc)? {
            Some(a) => (Some(a), Some(boundary_mismatch(&g, a, s)?)),
            None => (None, None),
        }
    };
    let rep = ExponentReport {
        theta0,
        s: if neumann { None } else { s },
        condition: if neumann { "neumann" } else { "oblique" },
        exponent: alpha,
        mismatch_at_root: residual,
    };
    if json {
        print_json(&versioned(&rep));
    } else {
        println!("condition: {}", rep.condition);
        println!("theta0: {}", sweep::float(theta0));
        if let Some(s) = rep.s {
            println!("s: {}", sweep::float(s));
        }
        println!("exponent: {}", opt(alpha));
        println!("mismatch_at_root: {}", opt(residual));
    }
    Ok(())
}

#[derive(Serialize)]
struct BarrierPoint {
    s: f64,
    m1: f64,
    tilt: Option<f64>,
    m2: Option<f64>,
    passed: bool,
}

#[derive(Serialize)]
struct BarrierReport {
    theta0: f64,
    alpha: f64,
    alpha0: f64,
    cstar: f64,
    points: Vec<BarrierPoint>,
    passed: bool,
}

fn barrier_check(theta0: f64, alpha: f64, s: Vec<f64>, json: bool) -> Outcome {
    let g = ConeGeometry::with_opening(theta0)?;
    let barrier = build_barrier(&g, alpha)?;
    let s = if s.is_empty() { conereg::verify::barrier_regime_s(theta0) } else { s };
    let mut points = Vec::with_capacity(s.len());
    for s in s {
        let bc = ObliqueBC::new(&g, s)?;
        let rc = RotatedCoefficients::laplacian(&bc)?;
        let m1 = m1_coefficient(&barrier, &bc, &rc)?;
        let (tilt, m2) = match max_admissible_tilt(&bc, &barrier, &rc) {
            Ok(t) => (Some(t), Some(m2_coefficient(&barrier, &bc, &rc, t)?)),
            Err(Error::NoAdmissibleTilt { .. }) => (None, None),
            Err(e) => return Err(e.into()),
        };
        points.push(BarrierPoint {
            s,
            m1,
            tilt,
            m2,
            passed: m1 < 0.0 && m2.is_some_and(|v| v < 0.0),
        });
    }
    let rep = BarrierReport {
        theta0,
        alpha,
        alpha0: alpha0(&g)?,
        cstar: barrier.cstar(),
        passed: points.iter().all(|p| p.passed),
        points,
    };
    if json {
        print_json(&versioned(&rep));
    } else {
        println!("theta0: {}", sweep::float(theta0));
        println!("alpha: {}  alpha0: {}  cstar: {}", sweep::float(alpha), sweep::float(rep.alpha0), sweep::float(rep.cstar));
        for p in &rep.points {
            println!(
                "[{}] s={} m1={} tilt={} m2={}",
                if p.passed { "PASS" } else { "FAIL" },
                sweep::float(p.s),
                sweep::float(p.m1),
                opt(p.tilt),
                opt(p.m2)
            );
        }
    }
    if rep.passed {
        Ok(())
    } else {
        Err(Failure::Check("barrier check failed".into()))
    }
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    suite: Suite,
    passed: bool,
    checks: &'a [conereg::verify::CheckOutcome],
}

fn verify(suite: Suite, json: bool, poison: bool) -> Outcome {
    let checks = run_suite(suite, &VerifyOptions { poison });
    let failed = checks.iter().filter(|c| !c.passed).count();
    if json {
        print_json(&versioned(&VerifyReport { suite, passed: failed == 0, checks: &checks }));
    } else {
        for c in &checks {
            println!(
                "[{}] {}/{} ({:.3} s) {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.suite,
                c.name,
                c.elapsed.as_secs_f64(),
                c.detail
            );
        }
        println!("{} of {} checks passed", checks.len() - failed, checks.len());
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Check(format!("{failed} check(s) failed")))
    }
}
