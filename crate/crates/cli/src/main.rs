//! `petal`: traces, verification reports, conformality sweeps and M-function
//! samples for the one-petal and two-petal growth patterns.
//!
//! Exit codes: 0 success, 1 a check failed, 2 runtime error, 64 usage error.

mod angle;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use petal_core::maps::boundary_trace;
use petal_core::verify::{
    conformality_check, estimate_a, harmonic_moments, m_plus_expected, m_plus_sample, run_suite,
    sweep, SweepOptions, DEFAULT_CONFORMALITY_SAMPLES, DEFAULT_EPSILON,
};
use petal_core::{BoundaryTrace, Complex64, Error, FamilyKind, MapFamily, TimeState, Tolerances};
use serde_json::{json, Value};

use crate::angle::{parse_angle, parse_grid, parse_override, parse_point, Grid};
use crate::output::{read_sidecar, read_trace_csv, sidecar_path, trace_csv, trace_svg, write_file, TraceMeta};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_RUNTIME: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "petal", version, about = "Self-similar Laplacian-growth petals in the half plane")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write the boundary trace as CSV, with an optional SVG drawing.
    Trace(TraceArgs),
    /// Run the verification suite and write a JSON report.
    Verify(VerifyArgs),
    /// Two-petal conformality and degeneracy over an (alpha, beta) grid.
    Sweep(SweepArgs),
    /// M-function samples and harmonic moments.
    Moments(MomentsArgs),
}

#[derive(Args, Debug, Clone)]
struct FamilyArgs {
    /// one-petal or two-petal.
    #[arg(long, default_value = "one-petal", value_parser = parse_kind)]
    family: FamilyKind,
    /// Petal base angle: radians, `pi/8`, `3pi/16`, `3*pi/16`.
    #[arg(long, value_parser = parse_angle)]
    alpha: Option<f64>,
    /// Half the opening between the two petals (two-petal only).
    #[arg(long, value_parser = parse_angle)]
    beta: Option<f64>,
    /// Time; defaults to A, i.e. conformal radius 1.
    #[arg(long = "T")]
    t: Option<f64>,
    /// Normalization constant; estimated from the map when absent.
    #[arg(long = "A")]
    a: Option<f64>,
}

#[derive(Args, Debug)]
struct TraceArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, default_value_t = 2048)]
    n: usize,
    /// CSV path; stdout when absent. A `<out>.meta.json` sidecar is written next to it.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// JSON report path; stdout when absent.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Replace a default tolerance, e.g. `ode=1e-8`. Repeatable.
    #[arg(long = "tol-override", value_parser = parse_override)]
    tol_override: Vec<(String, f64)>,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// `lo:hi:count`, ends included.
    #[arg(long = "alpha-grid", value_parser = parse_grid)]
    alpha_grid: Grid,
    #[arg(long = "beta-grid", value_parser = parse_grid)]
    beta_grid: Grid,
    /// CSV path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct MomentsArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Read the boundary from a `phi,x,y` CSV instead of a family.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Interior point `x,y` at which to evaluate M₊. Repeatable.
    #[arg(long = "point", value_parser = parse_point, allow_hyphen_values = true)]
    points: Vec<(f64, f64)>,
    /// Largest harmonic moment index.
    #[arg(long, visible_alias = "tk")]
    kmax: Option<u32>,
    #[arg(long, default_value_t = 2048)]
    n: usize,
    /// JSON path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_kind(s: &str) -> Result<FamilyKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    Runtime(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Runtime(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Runtime(e.into())
    }
}

type Outcome = Result<u8, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn build_family(args: &FamilyArgs) -> Result<MapFamily, Failure> {
    let alpha = args.alpha.ok_or_else(|| usage("--alpha is required"))?;
    let family = match (args.family, args.beta) {
        (FamilyKind::OnePetal, None) => MapFamily::one_petal(alpha),
        (FamilyKind::OnePetal, Some(_)) => return Err(usage("--beta only applies to --family two-petal")),
        (FamilyKind::TwoPetal, Some(beta)) => MapFamily::two_petal(alpha, beta),
        (FamilyKind::TwoPetal, None) => return Err(usage("--family two-petal needs --beta")),
    };
    family.map_err(|e| usage(e.to_string()))
}

fn build_state(args: &FamilyArgs, family: &MapFamily) -> Result<TimeState, Failure> {
    let a = match args.a {
        Some(a) => a,
        None => estimate_a(family)?.value,
    };
    TimeState::new(args.t.unwrap_or(a), a).map_err(|e| usage(e.to_string()))
}

fn emit(path: Option<&PathBuf>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => write_file(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_trace(args: &TraceArgs) -> Outcome {
    let family = build_family(&args.family)?;
    let state = build_state(&args.family, &family)?;
    let trace = boundary_trace(&family, state, args.n).map_err(|e| match e {
        Error::InvalidParameter { .. } => usage(e.to_string()),
        e => e.into(),
    })?;
    emit(args.out.as_ref(), &trace_csv(trace.samples()))?;

    let conformal = conformality_check(&family, DEFAULT_EPSILON, DEFAULT_CONFORMALITY_SAMPLES)
        .map(|c| c.ok)
        .ok();
    let warning = match conformal {
        Some(true) => None,
        Some(false) => Some("the map is not conformal; the trace does not bound a physical domain".to_string()),
        None => Some("conformality could not be determined".to_string()),
    };
    if let Some(w) = &warning {
        eprintln!("warning: {} ({})", w, family.label());
    }
    if let Some(out) = &args.out {
        let meta = TraceMeta {
            family: family.kind().name().to_string(),
            alpha: family.alpha(),
            beta: family.beta(),
            t: state.time(),
            a: state.normalization(),
            n: args.n,
            conformal,
            warning,
        };
        write_file(&sidecar_path(out), &(serde_json::to_string_pretty(&meta).map_err(anyhow::Error::from)? + "\n"))?;
    }
    if let Some(svg) = &args.svg {
        write_file(svg, &trace_svg(&trace.points(), &family.label()))?;
    }
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs) -> Outcome {
    let mut tol = Tolerances::default();
    for (name, value) in &args.tol_override {
        tol.set(name, *value).map_err(|e| usage(e.to_string()))?;
    }
    let family = build_family(&args.family)?;
    let state = build_state(&args.family, &family)?;
    let report = run_suite(&family, state, &tol);
    emit(args.report.as_ref(), &(report.to_json() + "\n"))?;
    for (name, check) in &report.checks {
        let status = match (&check.error, check.pass) {
            (Some(_), _) => "ERROR",
            (None, true) => "PASS",
            (None, false) => "FAIL",
        };
        eprintln!("{status:5} {name}: residual {:.3e} (tolerance {:.1e})", check.residual, check.tolerance);
    }
    // A non-conformal map makes downstream fits meaningless; report that as
    // the check failure it is rather than as a runtime error.
    let not_conformal = report
        .checks
        .get("conformality")
        .is_some_and(|c| c.error.is_none() && !c.pass);
    Ok(if not_conformal {
        EXIT_CHECK_FAILED
    } else if report.has_errors() {
        EXIT_RUNTIME
    } else if report.all_pass() {
        0
    } else {
        EXIT_CHECK_FAILED
    })
}

fn cmd_sweep(args: &SweepArgs) -> Outcome {
    let open = |g: &Grid| g.0.iter().all(|&x| x > 0.0 && x < std::f64::consts::FRAC_PI_2);
    if !open(&args.alpha_grid) || !open(&args.beta_grid) {
        return Err(usage("grid angles must lie strictly between 0 and pi/2"));
    }
    let res = sweep(&args.alpha_grid.0, &args.beta_grid.0, SweepOptions::default())?;
    for e in res.entries.iter().filter(|e| e.error.is_some()) {
        eprintln!("node alpha={:.6} beta={:.6}: {}", e.alpha, e.beta, e.error.as_deref().unwrap_or(""));
    }
    emit(args.out.as_ref(), &res.to_csv())?;
    Ok(0)
}

fn cmd_moments(args: &MomentsArgs) -> Outcome {
    let (trace, source, family, petal_boundary) = match &args.trace {
        Some(path) => {
            let samples = read_trace_csv(path)?;
            // A sidecar marks a trace written by `petal trace`: a petal boundary
            // through the origin, for which the moments do not exist.
            let meta = read_sidecar(path)?;
            let trace = BoundaryTrace::from_points(samples.into_iter().map(|(_, z)| z).collect())?;
            let petal = meta.is_some();
            (trace, json!({ "trace": path.display().to_string(), "meta": meta }), None, petal)
        }
        None => {
            let family = build_family(&args.family)?;
            let state = build_state(&args.family, &family)?;
            let trace = boundary_trace(&family, state, args.n).map_err(|e| match e {
                Error::InvalidParameter { .. } => usage(e.to_string()),
                e => e.into(),
            })?;
            let src = json!({ "family": family.label(), "T": state.time(), "A": state.normalization(), "n": args.n });
            (trace, src, Some((family, state.time())), true)
        }
    };

    let mut samples = Vec::new();
    for &(x, y) in &args.points {
        let z = Complex64::new(x, y);
        let s = m_plus_sample(&trace, z)?;
        let mut v = serde_json::to_value(s).map_err(anyhow::Error::from)?;
        if let Some((f, t)) = &family {
            if f.kind() == FamilyKind::OnePetal {
                let (m, _) = m_plus_expected(f, *t, z)?;
                v["expected_re"] = json!(m.re);
                v["expected_im"] = json!(m.im);
            }
        }
        samples.push(v);
    }

    let mut moments = Vec::new();
    if let Some(kmax) = args.kmax {
        if kmax < 2 {
            return Err(usage("--kmax must be at least 2"));
        }
        if petal_boundary {
            return Err(Error::MomentsIllDefined.into());
        }
        for k in 2..=kmax {
            moments.push(serde_json::to_value(harmonic_moments(&trace, k)?).map_err(anyhow::Error::from)?);
        }
    }
    let doc: Value = json!({ "source": source, "m_plus": samples, "moments": moments });
    emit(args.out.as_ref(), &(serde_json::to_string_pretty(&doc).map_err(anyhow::Error::from)? + "\n"))?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match &cli.command {
        Command::Trace(a) => cmd_trace(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Moments(a) => cmd_moments(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\nFor more information, try '--help'.");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_RUNTIME)
        }
    }
}
