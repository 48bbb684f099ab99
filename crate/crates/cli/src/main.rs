//! `buchwald`: solve boundary-value problems, sample fields on grids, check
//! residuals and evaluate Bessel functions.
//!
//! Exit status: 0 on success, 1 on input errors, 2 when a verification check
//! fails or a boundary system is resonant.

mod grid;
mod input;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use buchwald::bvp::{BvpError, ProblemId, VerifyOptions};
use buchwald::catalog::sample_points;
use buchwald::fields::{sample_grid, write_csv, write_json, GridError};
use buchwald::specfun::{bessel, BesselError, BesselKind, BesselOrder};
use buchwald::verify::{nl_residual_solution, potential_residual, ResidualReport, StepRule, VerifyError};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use input::{solution_doc, Source};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    /// `line` is 0 when the parser cannot attribute a position.
    #[error("{}{}: {message}", path.display(), position(*line, *column))]
    Parse {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Bvp(#[from] BvpError),
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Bessel(#[from] BesselError),
    #[error("residual check failed: {0}")]
    Residual(String),
}

fn position(line: usize, column: usize) -> String {
    if line == 0 {
        String::new()
    } else {
        format!(":{line}:{column}")
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Bvp(BvpError::Verification { .. } | BvpError::Resonance { .. } | BvpError::Verify(_))
            | CliError::Residual(_) => 2,
            _ => 1,
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        CliError::Residual(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "buchwald",
    version,
    about = "Separable aperiodic Navier-Lame solutions in cylindrical coordinates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    J,
    Y,
    I,
    K,
}

impl From<Kind> for BesselKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::J => BesselKind::J,
            Kind::Y => BesselKind::Y,
            Kind::I => BesselKind::I,
            Kind::K => BesselKind::K,
        }
    }
}

#[derive(Args)]
struct Io {
    /// JSON input document.
    #[arg(long, short)]
    input: PathBuf,
    /// Output file (standard output when omitted).
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct Verification {
    /// Relative tolerance for boundary conditions.
    #[arg(long)]
    tol: Option<f64>,
    /// Relative tolerance for the Navier-Lame residual.
    #[arg(long)]
    residual_tol: Option<f64>,
    /// Random points per boundary condition.
    #[arg(long)]
    boundary_points: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl Verification {
    fn options(&self, problem: Option<ProblemId>) -> Result<VerifyOptions, CliError> {
        let mut o = problem.map(VerifyOptions::for_problem).unwrap_or_default();
        if let Some(t) = self.tol {
            o.boundary_tol = positive("--tol", t)?;
        }
        if let Some(t) = self.residual_tol {
            o.residual_tol = positive("--residual-tol", t)?;
        }
        if let Some(n) = self.boundary_points {
            if n == 0 {
                return Err(CliError::Input("--boundary-points must be at least 1".into()));
            }
            o.boundary_points = n;
        }
        o.seed = self.seed;
        Ok(o)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Solve and verify a boundary-value problem; writes the solution as JSON.
    Solve {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        verify: Verification,
    },
    /// Sample displacement and stress on a grid.
    Eval {
        #[command(flatten)]
        io: Io,
        /// Axes r,theta,z,t, each start:end:count or a single value.
        #[arg(long)]
        grid: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[command(flatten)]
        verify: Verification,
    },
    /// Navier-Lame and potential-system residuals at sample points.
    Residual {
        #[command(flatten)]
        io: Io,
        /// Sample on this grid instead of random interior points.
        #[arg(long)]
        grid: Option<String>,
        /// Number of random interior points.
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest acceptable relative residual.
        #[arg(long, default_value_t = 1e-5)]
        tol: f64,
    },
    /// Evaluate one Bessel function and its derivative.
    Bessel {
        #[arg(long, value_enum, ignore_case = true)]
        kind: Kind,
        /// Order magnitude ν.
        #[arg(long)]
        nu: f64,
        /// Use the imaginary order iν.
        #[arg(long)]
        imaginary: bool,
        #[arg(long)]
        x: f64,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

fn positive(flag: &str, v: f64) -> Result<f64, CliError> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(CliError::Input(format!("{flag} must be positive (got {v})")))
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("BUCHWALD_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Input(format!("BUCHWALD_THREADS must be a positive integer (got '{value}')")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Input(e.to_string()))
}

fn emit(output: &Option<PathBuf>, write: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> Result<(), CliError> {
    let (result, path) = match output {
        Some(path) => {
            let file = File::create(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            let mut w = BufWriter::new(file);
            (write(&mut w).and_then(|_| w.flush()), path.clone())
        }
        None => {
            let mut w = io::stdout().lock();
            (write(&mut w).and_then(|_| w.flush()), PathBuf::from("<stdout>"))
        }
    };
    result.map_err(|source| CliError::Io { path, source })
}

fn emit_json<T: Serialize>(output: &Option<PathBuf>, value: &T) -> Result<(), CliError> {
    emit(output, |w| {
        serde_json::to_writer_pretty(&mut *w, value)?;
        w.write_all(b"\n")
    })
}

#[derive(Serialize)]
struct ResidualOutput {
    points: usize,
    tol: f64,
    pass: bool,
    navier_lame: ResidualReport,
    potential: ResidualReport,
}

#[derive(Serialize)]
struct BesselOutput {
    kind: BesselKind,
    order: BesselOrder,
    x: f64,
    value: f64,
    derivative: f64,
    est_abs_error: f64,
}

fn run(cli: Cli) -> Result<(), CliError> {
    configure_threads()?;
    match cli.command {
        Command::Solve { io, verify } => {
            let spec: buchwald::bvp::ProblemSpec = Source::read(&io.input)?.parse()?;
            let solved = spec.solve(&verify.options(Some(spec.id()))?)?;
            emit_json(&io.output, &solved)
        }
        Command::Eval {
            io,
            grid,
            format,
            verify,
        } => {
            let grid = grid::parse_grid(&grid).map_err(|e| CliError::Input(format!("--grid: {e}")))?;
            let doc = solution_doc(&Source::read(&io.input)?)?;
            let problem = match &doc {
                input::SolutionDoc::Problem(p) => Some(p.id()),
                _ => None,
            };
            let sol = doc.into_solution(&verify.options(problem)?)?;
            let rows = sample_grid(&sol, &grid)?;
            emit(&io.output, |w| match format {
                Format::Csv => write_csv(&rows, w),
                Format::Json => write_json(&rows, w),
            })
        }
        Command::Residual {
            io,
            grid,
            samples,
            seed,
            tol,
        } => {
            let tol = positive("--tol", tol)?;
            let sol = solution_doc(&Source::read(&io.input)?)?.into_solution(&VerifyOptions::default())?;
            let points = match grid {
                Some(g) => {
                    let g = grid::parse_grid(&g).map_err(|e| CliError::Input(format!("--grid: {e}")))?;
                    (0..g.len()).map(|i| g.point(i)).collect()
                }
                None => {
                    if samples == 0 {
                        return Err(CliError::Input("--samples must be at least 1".into()));
                    }
                    sample_points(&sol, samples, &mut ChaCha8Rng::seed_from_u64(seed))
                }
            };
            let nl = nl_residual_solution(&sol, &points, StepRule::default())?;
            let pot = potential_residual(&sol, &points, StepRule::default())?;
            let out = ResidualOutput {
                points: points.len(),
                tol,
                pass: nl.max_rel <= tol && pot.max_rel <= tol,
                navier_lame: nl,
                potential: pot,
            };
            emit_json(&io.output, &out)?;
            if out.pass {
                Ok(())
            } else {
                Err(CliError::Residual(format!(
                    "max relative residual {:e} (Navier-Lame), {:e} (potentials) exceeds {tol:e}",
                    out.navier_lame.max_rel, out.potential.max_rel
                )))
            }
        }
        Command::Bessel {
            kind,
            nu,
            imaginary,
            x,
            output,
        } => {
            let order = if imaginary {
                BesselOrder::imaginary(nu)
            } else {
                BesselOrder::real(nu)
            };
            let kind = BesselKind::from(kind);
            let e = bessel(kind, order, x)?;
            emit_json(
                &output,
                &BesselOutput {
                    kind,
                    order,
                    x,
                    value: e.value,
                    derivative: e.derivative,
                    est_abs_error: e.est_abs_error,
                },
            )
        }
    }
}

fn main() -> ExitCode {
    // clap reports usage errors with status 2, which is reserved here
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
