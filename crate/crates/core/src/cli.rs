//! The `rieszdrop` command line.
//!
//! Exit codes: `0` success or ledger pass, `1` usage, domain or solver
//! error, `2` ledger failure, `3` sweep finished with failed rows.
//!
//! JSON numbers use the shortest round-trip form (`null` for failures);
//! CSV numbers use 15 significant digits (`nan` for failures).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::par::{init_threads, map_indexed, Execution};
use crate::roots::RootSolveConfig;
use crate::specfun::Alpha;
use crate::splitting::{envelope, split_cost};
use crate::thresholds::{
    convexity_threshold, critical_mass, crossing_exponent, mass_of_eps, nonexistence_mass,
    rigidity_threshold, threshold_report, ThresholdSample,
};
use crate::verify::{run_ledger_with, LedgerParams};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_LEDGER_FAIL: i32 = 2;
pub const EXIT_PARTIAL: i32 = 3;

/// Environment variable capping the worker count; `0` means automatic.
pub const THREADS_ENV: &str = "RIESZDROP_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "rieszdrop",
    version,
    about = "Mass thresholds for the planar liquid drop with Riesz repulsion"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every threshold at one alpha, as JSON.
    Eval(EvalArgs),
    /// The four mass curves over an alpha grid.
    Sweep(SweepArgs),
    /// Per-area splitting costs rho_1..rho_3 and their envelope against R.
    Envelope(EnvelopeArgs),
    /// The crossing exponent alpha0, as JSON.
    Alpha0(Alpha0Args),
    /// The inequality ledger, as JSON; exit 2 if any check fails.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Relative tolerance of every root solve.
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[command(flatten)]
    pub output: Output,
}

/// Alpha grid of a sweep: `steps` points from `alpha_min` to `alpha_max`,
/// both included.
#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 0.005, allow_negative_numbers = true)]
    pub alpha_min: f64,
    #[arg(long, default_value_t = 0.045)]
    pub alpha_max: f64,
    #[arg(long, default_value_t = 81)]
    pub steps: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct EnvelopeArgs {
    #[arg(long, default_value_t = 0.1, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = 2.5)]
    pub r_max: f64,
    #[arg(long, default_value_t = 500)]
    pub steps: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct Alpha0Args {
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 0.034)]
    pub alpha_max: f64,
    #[arg(long, default_value_t = 1000)]
    pub grid: usize,
    #[arg(long, default_value_t = 0.846)]
    pub eps_probe: f64,
    #[arg(long, default_value_t = 0.945)]
    pub r_probe: f64,
    #[command(flatten)]
    pub output: Output,
}

/// A command's output and the exit code it asks for.
#[derive(Debug, Clone, PartialEq)]
pub struct Emitted {
    pub body: String,
    pub code: i32,
}

impl Emitted {
    fn ok(body: String) -> Self {
        Self {
            body,
            code: EXIT_OK,
        }
    }
}

/// Formats `x` with 15 significant digits, `%.15g` style.
pub fn format_sig15(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.14e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..15).contains(&exp) {
        let decimals = (14 - exp) as usize;
        trim_fraction(&format!("{x:.decimals$}")).to_string()
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_fraction(mantissa), exp.abs())
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn solve_config(tol: f64) -> Result<RootSolveConfig> {
    let cfg = RootSolveConfig::with_rel_tol(tol);
    cfg.validate()?;
    Ok(cfg)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

/// `eval`: every threshold quantity at one alpha.
pub fn eval(args: &EvalArgs) -> Result<Emitted> {
    let alpha = Alpha::new(args.alpha)?;
    alpha.require_positive()?;
    alpha.require_at_most(0.5, "0 < alpha <= 1/2")?;
    let report = threshold_report(alpha, &solve_config(args.tol)?)?;
    Ok(Emitted::ok(to_json(&report)))
}

/// Validated alpha grid of a sweep.
pub fn sweep_alphas(alpha_min: f64, alpha_max: f64, steps: usize) -> Result<Vec<f64>> {
    if alpha_min.is_nan() || alpha_min < 0.0 {
        return Err(Error::domain("alpha_min", alpha_min, "alpha_min >= 0"));
    }
    if !(alpha_max > alpha_min && alpha_max <= 0.5) {
        return Err(Error::domain(
            "alpha_max",
            alpha_max,
            "alpha_min < alpha_max <= 1/2",
        ));
    }
    if steps < 2 {
        return Err(Error::Config(format!(
            "steps must be at least 2, got {steps}"
        )));
    }
    let last = (steps - 1) as f64;
    Ok((0..steps)
        .map(|i| {
            if i + 1 == steps {
                alpha_max
            } else {
                alpha_min + (alpha_max - alpha_min) * i as f64 / last
            }
        })
        .collect())
}

/// One sweep row; each field fails to `NaN` on its own.
pub fn sweep_row(a: f64, cfg: &RootSolveConfig) -> ThresholdSample {
    let nan = |r: Result<f64>| r.unwrap_or(f64::NAN);
    let Ok(alpha) = Alpha::new(a) else {
        return ThresholdSample {
            alpha: a,
            m_c1: f64::NAN,
            m_2: f64::NAN,
            m_eps0: f64::NAN,
            m_eps1: f64::NAN,
        };
    };
    ThresholdSample {
        alpha: a,
        m_c1: critical_mass(alpha),
        m_2: nan(nonexistence_mass(alpha, cfg)),
        m_eps0: nan(convexity_threshold(alpha, cfg).and_then(|e| mass_of_eps(e, alpha))),
        m_eps1: nan(rigidity_threshold(alpha, cfg).and_then(|e| mass_of_eps(e, alpha))),
    }
}

/// `sweep`: the mass curves on the grid, rows computed in parallel and
/// emitted in grid order. Exit code 3 if any field failed.
pub fn sweep(args: &SweepArgs, exec: Execution) -> Result<Emitted> {
    let alphas = sweep_alphas(args.alpha_min, args.alpha_max, args.steps)?;
    let cfg = solve_config(args.tol)?;
    let rows = map_indexed(alphas.len(), exec, |i| sweep_row(alphas[i], &cfg));
    let partial = rows.iter().any(|r| {
        [r.m_c1, r.m_2, r.m_eps0, r.m_eps1]
            .iter()
            .any(|v| v.is_nan())
    });
    let body = match args.format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut s = String::from("alpha,m_c1,m_2,m_eps0,m_eps1\n");
            for r in &rows {
                let fields = [r.alpha, r.m_c1, r.m_2, r.m_eps0, r.m_eps1].map(format_sig15);
                s.push_str(&fields.join(","));
                s.push('\n');
            }
            s
        }
    };
    Ok(Emitted {
        body,
        code: if partial { EXIT_PARTIAL } else { EXIT_OK },
    })
}

/// One row of the `envelope` table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnvelopeRow {
    #[serde(rename = "R")]
    pub r: f64,
    pub rho_1: f64,
    pub rho_2: f64,
    pub rho_3: f64,
    pub rho_min: f64,
    pub n_opt: u64,
}

/// `R_i = r_max·i/steps` for `i = 1..=steps`.
pub fn envelope_rows(
    alpha: f64,
    r_max: f64,
    steps: usize,
    exec: Execution,
) -> Result<Vec<EnvelopeRow>> {
    let alpha = Alpha::new(alpha)?;
    alpha.require_positive()?;
    alpha.require_at_most(1.0, "0 < alpha <= 1")?;
    if !(r_max > 0.0 && r_max.is_finite()) {
        return Err(Error::domain("r_max", r_max, "r_max > 0"));
    }
    if steps < 1 {
        return Err(Error::Config("steps must be at least 1".into()));
    }
    let rows = map_indexed(steps, exec, |i| -> Result<EnvelopeRow> {
        let r = if i + 1 == steps {
            r_max
        } else {
            r_max * (i + 1) as f64 / steps as f64
        };
        let best = envelope(r, alpha)?;
        Ok(EnvelopeRow {
            r,
            rho_1: split_cost(1, r, alpha)?,
            rho_2: split_cost(2, r, alpha)?,
            rho_3: split_cost(3, r, alpha)?,
            rho_min: best.rho,
            n_opt: best.n,
        })
    });
    rows.into_iter().collect()
}

/// `envelope`: the splitting costs against `R`, ready to plot.
pub fn envelope_table(args: &EnvelopeArgs, exec: Execution) -> Result<Emitted> {
    let rows = envelope_rows(args.alpha, args.r_max, args.steps, exec)?;
    let body = match args.format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut s = String::from("R,rho_1,rho_2,rho_3,rho_min,n_opt\n");
            for r in &rows {
                let fields = [r.r, r.rho_1, r.rho_2, r.rho_3, r.rho_min].map(format_sig15);
                let _ = writeln!(s, "{},{}", fields.join(","), r.n_opt);
            }
            s
        }
    };
    Ok(Emitted::ok(body))
}

/// `alpha0`: the crossing exponent.
pub fn alpha0(args: &Alpha0Args) -> Result<Emitted> {
    let result = crossing_exponent(&solve_config(args.tol)?)?;
    Ok(Emitted::ok(to_json(&result)))
}

/// `verify`: the ledger; exit code 2 if any check fails.
pub fn verify(args: &VerifyArgs, exec: Execution) -> Result<Emitted> {
    let params = LedgerParams {
        alpha_max: args.alpha_max,
        eps_probe: args.eps_probe,
        r_probe: args.r_probe,
        grid: args.grid,
    };
    let report = run_ledger_with(&params, exec)?;
    Ok(Emitted {
        body: to_json(&report),
        code: if report.pass {
            EXIT_OK
        } else {
            EXIT_LEDGER_FAIL
        },
    })
}

impl Command {
    fn out(&self) -> Option<&PathBuf> {
        match self {
            Command::Eval(a) => a.output.out.as_ref(),
            Command::Sweep(a) => a.output.out.as_ref(),
            Command::Envelope(a) => a.output.out.as_ref(),
            Command::Alpha0(a) => a.output.out.as_ref(),
            Command::Verify(a) => a.output.out.as_ref(),
        }
    }

    /// Runs the command without touching the filesystem or standard streams.
    pub fn execute(&self, exec: Execution) -> Result<Emitted> {
        match self {
            Command::Eval(a) => eval(a),
            Command::Sweep(a) => sweep(a, exec),
            Command::Envelope(a) => envelope_table(a, exec),
            Command::Alpha0(a) => alpha0(a),
            Command::Verify(a) => verify(a, exec),
        }
    }
}

fn threads_from_env(value: Option<OsString>) -> std::result::Result<usize, String> {
    match value {
        None => Ok(0),
        Some(v) => v
            .to_str()
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| format!("{THREADS_ENV} must be a nonnegative integer, got {v:?}")),
    }
}

/// Parses `args`, runs the command and writes its output. Returns the
/// process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                EXIT_ERROR
            } else {
                let _ = write!(stdout, "{rendered}");
                EXIT_OK
            };
        }
    };
    let threads = match threads_from_env(std::env::var_os(THREADS_ENV)) {
        Ok(t) => t,
        Err(msg) => {
            let _ = writeln!(stderr, "rieszdrop: error: {msg}");
            return EXIT_ERROR;
        }
    };
    init_threads(threads);

    let emitted = match cli.command.execute(Execution::Parallel) {
        Ok(e) => e,
        Err(e) => {
            let _ = writeln!(stderr, "rieszdrop: error: {e}");
            return EXIT_ERROR;
        }
    };
    let written = match cli.command.out() {
        Some(path) => std::fs::write(path, &emitted.body)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => stdout
            .write_all(emitted.body.as_bytes())
            .and_then(|_| stdout.flush())
            .map_err(|e| format!("cannot write output: {e}")),
    };
    if let Err(msg) = written {
        let _ = writeln!(stderr, "rieszdrop: error: {msg}");
        return EXIT_ERROR;
    }
    if emitted.code == EXIT_PARTIAL {
        let _ = writeln!(
            stderr,
            "rieszdrop: warning: some rows failed and were written as nan"
        );
    }
    emitted.code
}
