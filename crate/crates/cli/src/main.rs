use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use biharm_cli::commands::{self, KernelKind};
use biharm_cli::{parse_case, CliResult};
use biharm_core::solver::GridSpec;
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

#[derive(Parser)]
#[command(name = "biharm", version, about = "Biharmonic Dirichlet problem on the unit disk")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the kernel identities and integral bounds.
    Identities {
        #[arg(long, default_value_t = biharm_core::verify::IDENTITY_TOLERANCE)]
        tol: f64,
        /// Also write the results as JSON.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Evaluate the solution on a polar grid and write a field file.
    Solve {
        #[arg(long)]
        case: PathBuf,
        /// Radii and angles, as NR,NT.
        #[arg(long, value_parser = parse_grid)]
        grid: (usize, usize),
        #[arg(long)]
        gradient: bool,
        #[arg(long)]
        out: PathBuf,
        /// Radii run over r_max·i/NR.
        #[arg(long, default_value_t = 1.0)]
        rmax: f64,
        /// Evaluate radii the circle rule does not resolve.
        #[arg(long)]
        allow_near_boundary: bool,
    },
    /// Residual, gradient and boundary-trace checks for a case.
    Verify {
        #[arg(long)]
        case: PathBuf,
        #[arg(long, default_value_t = commands::DEFAULT_FD_SPACING)]
        fd_h: f64,
        #[arg(long, default_value_t = commands::DEFAULT_FD_TOLERANCE)]
        fd_tol: f64,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Lipschitz constants and the bi-Lipschitz criterion for a case.
    Lipschitz {
        #[arg(long)]
        case: PathBuf,
        #[arg(long, value_parser = parse_grid, default_value = "64,64")]
        grid: (usize, usize),
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Evaluate a single kernel.
    Kernel {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z: Complex64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        zeta: Option<Complex64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    #[value(name = "F0")]
    F0,
    #[value(name = "H0")]
    H0,
    #[value(name = "G")]
    G,
}

fn parse_pair<T: std::str::FromStr>(s: &str) -> Result<(T, T), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected two comma-separated values, got {s:?}"))?;
    let parse = |t: &str| t.trim().parse::<T>().map_err(|_| format!("cannot parse {t:?}"));
    Ok((parse(a)?, parse(b)?))
}

fn parse_grid(s: &str) -> Result<(usize, usize), String> {
    parse_pair(s)
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    parse_pair::<f64>(s).map(|(re, im)| Complex64::new(re, im))
}

fn run(cli: Cli) -> CliResult<()> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Identities { tol, report } => {
            commands::cmd_identities(tol, report.as_deref(), &mut out)?;
        }
        Command::Solve {
            case,
            grid,
            gradient,
            out: path,
            rmax,
            allow_near_boundary,
        } => {
            let loaded = parse_case(&case)?;
            let spec = GridSpec::with_r_max(grid.0, grid.1, rmax).allow_near_boundary(allow_near_boundary);
            commands::cmd_solve(&loaded, &spec, gradient, &path, &mut out)?;
        }
        Command::Verify {
            case,
            fd_h,
            fd_tol,
            report,
        } => {
            let loaded = parse_case(&case)?;
            commands::cmd_verify(&loaded, fd_h, fd_tol, report.as_deref(), &mut out)?;
        }
        Command::Lipschitz { case, grid, report } => {
            let loaded = parse_case(&case)?;
            commands::cmd_lipschitz(&loaded, &GridSpec::new(grid.0, grid.1), report.as_deref(), &mut out)?;
        }
        Command::Kernel { which, z, zeta } => {
            let kind = match which {
                Which::F0 => KernelKind::F0,
                Which::H0 => KernelKind::H0,
                Which::G => KernelKind::G,
            };
            commands::cmd_kernel(kind, z, zeta, &mut out)?;
        }
    }
    out.flush().ok();
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
