//! Command-line front end of graetzkit.
//!
//! Subcommands: `figure`, `solve`, `compare` and `fdm-dump`. Exit codes are 0 on
//! success, 1 for usage errors, 2 for numerical failures, 3 for physically
//! invalid regimes and 4 when `compare` exceeds a declared tolerance.

use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub mod compare;
pub mod config;
pub mod error;
pub mod figures;
pub mod output;
pub mod profiles;

use config::{FileConfig, GridArgs, Method, OutputArgs, ProblemArgs, ProfileArgs};
use error::{CliError, CliResult};
use figures::{FigureId, Sweep};
use output::{Cell, Table};

#[derive(Debug, Parser)]
#[command(name = "graetzkit", version, about = "Steady laminar heat transfer with axial conduction and viscous heating")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the data of one figure
    Figure {
        #[arg(value_enum)]
        fig: FigureId,
        /// JSON file with `pe_sweep` / `alpha_sweep` overrides
        #[arg(long)]
        config: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Centerline, wall and wall-gradient profiles of one case
    #[command(allow_negative_numbers = true)]
    Solve {
        #[command(flatten)]
        problem: ProblemArgs,
        /// Method (defaults to the boundary-function model of `--order`)
        #[arg(long, value_enum)]
        method: Option<Method>,
        #[command(flatten)]
        profile: ProfileArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Deviations between methods on one case
    #[command(allow_negative_numbers = true)]
    Compare {
        #[command(flatten)]
        problem: ProblemArgs,
        /// Comma-separated methods (at least two)
        #[arg(long, value_enum, value_delimiter = ',')]
        methods: Option<Vec<Method>>,
        /// Largest acceptable max deviation; exit code 4 when exceeded
        #[arg(long)]
        tol: Option<f64>,
        #[command(flatten)]
        profile: ProfileArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Full finite-difference field as x, r, T
    #[command(allow_negative_numbers = true)]
    FdmDump {
        #[command(flatten)]
        problem: ProblemArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

pub fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Figure { fig, config, output } => {
            let file = FileConfig::load_opt(config.as_deref())?;
            let (default_pe, default_alpha) = figures::default_sweeps(fig);
            let pe = file.pe_sweep()?.map_or(default_pe, Sweep::list);
            let alpha = file.alpha_sweep()?.map(Sweep::list).or(default_alpha);
            let table = figures::emit(fig, pe, alpha)?;
            table.emit(output.format(&file), output.path(&file).as_deref())
        }
        Command::Solve { problem, method, profile, grid, output } => {
            let file = FileConfig::load_opt(problem.config.as_deref())?;
            let resolved = problem.resolve(&file)?;
            let method = config::solve_method(method, &file, resolved.order);
            let (xs, profile_flags) = profile.stations(&file, &resolved.spec)?;
            let (grid_cfg, grid_flags) = grid.config(&file, &resolved.spec)?;
            let mut params = format!("{} --method {} {profile_flags}", resolved.flags, method.name());
            if method == Method::Fdm {
                params.push(' ');
                params.push_str(&grid_flags);
            }
            let (p, oracle) = profiles::evaluate(method, &resolved.spec, &xs, &grid_cfg)?;
            if let Some(sol) = oracle {
                eprintln!("fdm: residual {:e} after {} sweeps", sol.residual(), sol.sweeps());
            }
            let mut table = Table::new("solve", params, &["x", "t0", "ta", "t1a"]);
            for (i, &x) in xs.iter().enumerate() {
                table.push(vec![Cell::num(x), Cell::opt(p.t0[i]), Cell::opt(p.ta[i]), Cell::opt(p.t1a[i])]);
            }
            table.emit(output.format(&file), output.path(&file).as_deref())
        }
        Command::Compare { problem, methods, tol, profile, grid, output } => {
            let file = FileConfig::load_opt(problem.config.as_deref())?;
            let resolved = problem.resolve(&file)?;
            let methods = config::compare_methods(methods, &file)?;
            let tol = config::tolerance(tol, &file)?;
            let (xs, profile_flags) = profile.stations(&file, &resolved.spec)?;
            let (grid_cfg, grid_flags) = grid.config(&file, &resolved.spec)?;
            let names: Vec<&str> = methods.iter().map(|m| m.name()).collect();
            let mut params = format!("{} --methods {} {profile_flags}", resolved.flags, names.join(","));
            if methods.contains(&Method::Fdm) {
                params.push(' ');
                params.push_str(&grid_flags);
            }
            if let Some(t) = tol {
                params.push_str(&format!(" --tol {t}"));
            }
            let outcome = compare::compare(&resolved.spec, &methods, &xs, &grid_cfg, tol, "compare".into(), params)?;
            outcome.table.emit(output.format(&file), output.path(&file).as_deref())?;
            if outcome.within_tolerance {
                Ok(())
            } else {
                Err(CliError::ToleranceExceeded(format!("a deviation exceeds --tol {}", tol.unwrap_or_default())))
            }
        }
        Command::FdmDump { problem, grid, output } => {
            let file = FileConfig::load_opt(problem.config.as_deref())?;
            let resolved = problem.resolve(&file)?;
            let (grid_cfg, grid_flags) = grid.config(&file, &resolved.spec)?;
            let sol = graetzkit::fdm_solve(&resolved.spec, &grid_cfg)?;
            eprintln!("fdm: residual {:e} after {} sweeps", sol.residual(), sol.sweeps());
            let params = format!("{} {grid_flags}", resolved.flags);
            let mut table = Table::new("fdm-dump", params, &["x", "r", "T"]);
            for i in 0..sol.nx() {
                for j in 0..sol.nr() {
                    table.push(vec![Cell::num(sol.x(i)), Cell::num(sol.r(j)), Cell::num(sol.temperature(i, j))]);
                }
            }
            table.emit(output.format(&file), output.path(&file).as_deref())
        }
    }
}
