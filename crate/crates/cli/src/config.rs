//! Run configuration: command-line flags layered over an optional JSON file.
//!
//! Every quantity is SI. Flags win over file values. Unset problem values
//! fall back to a unit case (a = 1 m, k = rho = cp = 1, mu = 0, T_i = 1 K,
//! T_w = 0 K, pe = 1, plates); the resolved values are always echoed in the
//! output header, so nothing is hidden.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, ValueEnum};
use graetzkit::{FdmConfig, FluidProperties, Geometry, ProblemSpec, WallBC};
use serde::Deserialize;

use crate::error::{CliError, CliResult};
use crate::output::Format;

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
pub struct Fluid {
    pub k: f64,
    pub rho: f64,
    pub cp: f64,
    pub mu: f64,
}

impl FromStr for Fluid {
    type Err = String;

    /// `k,rho,cp,mu`
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<f64> = s
            .split(',')
            .map(|p| p.trim().parse::<f64>().map_err(|e| format!("bad fluid value {p:?}: {e}")))
            .collect::<Result<_, _>>()?;
        match parts[..] {
            [k, rho, cp, mu] => Ok(Fluid { k, rho, cp, mu }),
            _ => Err(format!("expected k,rho,cp,mu (4 values), got {}", parts.len())),
        }
    }
}

/// Fluid given either as an object or as a `"k,rho,cp,mu"` string in the JSON file.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum FluidEntry {
    Object(Fluid),
    Text(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Order4,
    Order6,
    Series,
    Fdm,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Order4 => "order4",
            Method::Order6 => "order6",
            Method::Series => "series",
            Method::Fdm => "fdm",
        }
    }
}

/// Contents of a `--config` file. Keys mirror the long flag names.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    d: Option<u8>,
    pe: Option<f64>,
    a: Option<f64>,
    u0: Option<f64>,
    fluid: Option<FluidEntry>,
    ti: Option<f64>,
    tw: Option<f64>,
    h: Option<f64>,
    tinf: Option<f64>,
    order: Option<u8>,
    method: Option<Method>,
    methods: Option<Vec<Method>>,
    tol: Option<f64>,
    xmax: Option<f64>,
    points: Option<usize>,
    nx: Option<usize>,
    nr: Option<usize>,
    length: Option<f64>,
    max_sweeps: Option<usize>,
    format: Option<Format>,
    out: Option<PathBuf>,
    pe_sweep: Option<Vec<f64>>,
    alpha_sweep: Option<Vec<f64>>,
}

impl FileConfig {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("config {}: {e}", path.display())))
    }

    pub fn load_opt(path: Option<&Path>) -> CliResult<Self> {
        path.map_or_else(|| Ok(Self::default()), Self::load)
    }

    pub fn pe_sweep(&self) -> CliResult<Option<Vec<f64>>> {
        match &self.pe_sweep {
            Some(v) if v.is_empty() => Err(CliError::Usage("pe_sweep must not be empty".into())),
            Some(v) if v.iter().any(|p| !(p.is_finite() && *p >= 0.0)) => {
                Err(CliError::Usage("pe_sweep values must be finite and >= 0".into()))
            }
            other => Ok(other.clone()),
        }
    }

    pub fn alpha_sweep(&self) -> CliResult<Option<Vec<f64>>> {
        match &self.alpha_sweep {
            Some(v) if v.is_empty() => Err(CliError::Usage("alpha_sweep must not be empty".into())),
            Some(v) if v.iter().any(|a| !(*a > 0.0 && *a <= 1.0)) => {
                Err(CliError::Usage("alpha_sweep values must lie in (0, 1]".into()))
            }
            other => Ok(other.clone()),
        }
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct ProblemArgs {
    /// Geometry: 0 = parallel plates, 1 = circular tube
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
    pub d: Option<u8>,
    /// Peclet number u0 a / D; sets u0 from the fluid properties
    #[arg(long)]
    pub pe: Option<f64>,
    /// Half-width or radius [m]
    #[arg(long)]
    pub a: Option<f64>,
    /// Centerline velocity [m/s]
    #[arg(long)]
    pub u0: Option<f64>,
    /// Fluid properties k [W/m/K], rho [kg/m^3], cp [J/kg/K], mu [Pa s]
    #[arg(long, value_name = "K,RHO,CP,MU")]
    pub fluid: Option<Fluid>,
    /// Inlet temperature [K]
    #[arg(long)]
    pub ti: Option<f64>,
    /// Wall temperature [K] (isothermal wall)
    #[arg(long)]
    pub tw: Option<f64>,
    /// Heat-transfer coefficient to the surroundings [W/m^2/K] (exchange wall)
    #[arg(long)]
    pub h: Option<f64>,
    /// Temperature of the surroundings [K] (exchange wall)
    #[arg(long)]
    pub tinf: Option<f64>,
    /// Radial expansion order of the boundary-function model
    #[arg(long, value_parser = ["4", "6"])]
    pub order: Option<String>,
    /// JSON file with default values for any of these options
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct OutputArgs {
    /// Output file (stdout when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct ProfileArgs {
    /// Last axial station of the reported profiles [m] (default 10 a)
    #[arg(long)]
    pub xmax: Option<f64>,
    /// Number of axial stations (default 101)
    #[arg(long)]
    pub points: Option<usize>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct GridArgs {
    /// Axial node count of the finite-difference grid
    #[arg(long)]
    pub nx: Option<usize>,
    /// Radial node count of the finite-difference grid
    #[arg(long)]
    pub nr: Option<usize>,
    /// Length of the finite-difference domain [m]
    #[arg(long)]
    pub length: Option<f64>,
    /// Sweep budget of the finite-difference solver
    #[arg(long)]
    pub max_sweeps: Option<usize>,
}

/// A fully resolved problem plus its canonical flag string.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub spec: ProblemSpec,
    pub order: u8,
    pub flags: String,
}

fn pick<T: Clone>(flag: &Option<T>, file: &Option<T>) -> Option<T> {
    flag.clone().or_else(|| file.clone())
}

impl ProblemArgs {
    pub fn resolve(&self, file: &FileConfig) -> CliResult<Resolved> {
        let d = pick(&self.d, &file.d).unwrap_or(0);
        let geometry = Geometry::from_flag(d).map_err(CliError::from)?;
        let a = pick(&self.a, &file.a).unwrap_or(1.0);
        let fluid = match (&self.fluid, &file.fluid) {
            (Some(f), _) => *f,
            (None, Some(FluidEntry::Object(f))) => *f,
            (None, Some(FluidEntry::Text(s))) => s.parse().map_err(CliError::Usage)?,
            (None, None) => Fluid { k: 1.0, rho: 1.0, cp: 1.0, mu: 0.0 },
        };
        let fluid = FluidProperties { k: fluid.k, rho: fluid.rho, cp: fluid.cp, mu: fluid.mu };
        fluid.validate().map_err(CliError::from)?;
        let diffusivity = fluid.diffusivity();

        // Flags override the file pairwise: a --pe flag beats a u0 key and vice versa.
        let (pe_flag, u0_flag) = (self.pe, self.u0);
        let (pe, u0) = if pe_flag.is_some() || u0_flag.is_some() { (pe_flag, u0_flag) } else { (file.pe, file.u0) };
        let u0 = match (pe, u0) {
            (Some(pe), None) => pe * diffusivity / a,
            (None, Some(u0)) => u0,
            (None, None) => diffusivity / a,
            (Some(pe), Some(u0)) => {
                let implied = u0 * a / diffusivity;
                if (implied - pe).abs() > 1e-12 * pe.abs().max(1.0) {
                    return Err(CliError::Usage(format!("--pe {pe} contradicts --u0 {u0} (implies pe = {implied})")));
                }
                u0
            }
        };

        let ti = pick(&self.ti, &file.ti).unwrap_or(1.0);
        let exchange = (pick(&self.h, &file.h), pick(&self.tinf, &file.tinf));
        let tw = pick(&self.tw, &file.tw);
        let bc = match (exchange, tw) {
            ((None, None), tw) => WallBC::UniformWall { t_wall: tw.unwrap_or(0.0) },
            ((Some(h), Some(t_inf)), None) => WallBC::Exchange { h, t_inf },
            ((Some(_), Some(_)), Some(_)) => {
                return Err(CliError::Usage("--tw cannot be combined with --h/--tinf".into()));
            }
            _ => return Err(CliError::Usage("the exchange wall needs both --h and --tinf".into())),
        };

        let order = match (&self.order, file.order) {
            (Some(o), _) => o.parse::<u8>().map_err(|e| CliError::Usage(e.to_string()))?,
            (None, Some(o)) => o,
            (None, None) => match bc {
                WallBC::UniformWall { .. } => 6,
                WallBC::Exchange { .. } => 4,
            },
        };
        if order != 4 && order != 6 {
            return Err(CliError::Usage(format!("--order must be 4 or 6, got {order}")));
        }

        let spec = ProblemSpec::new(geometry, a, u0, fluid, ti, bc).map_err(CliError::from)?;
        let mut flags = format!(
            "--d {d} --a {a} --u0 {u0} --fluid {},{},{},{} --ti {ti}",
            fluid.k, fluid.rho, fluid.cp, fluid.mu
        );
        match bc {
            WallBC::UniformWall { t_wall } => write!(flags, " --tw {t_wall}").unwrap(),
            WallBC::Exchange { h, t_inf } => write!(flags, " --h {h} --tinf {t_inf}").unwrap(),
        }
        write!(flags, " --order {order}").unwrap();
        Ok(Resolved { spec, order, flags })
    }
}

impl OutputArgs {
    pub fn format(&self, file: &FileConfig) -> Format {
        pick(&self.format, &file.format).unwrap_or_default()
    }

    pub fn path(&self, file: &FileConfig) -> Option<PathBuf> {
        pick(&self.out, &file.out)
    }
}

impl ProfileArgs {
    /// Axial stations `0, ..., xmax` and the flags that reproduce them.
    pub fn stations(&self, file: &FileConfig, spec: &ProblemSpec) -> CliResult<(Vec<f64>, String)> {
        let xmax = pick(&self.xmax, &file.xmax).unwrap_or(10.0 * spec.a);
        let points = pick(&self.points, &file.points).unwrap_or(101);
        if !(xmax.is_finite() && xmax > 0.0) {
            return Err(CliError::Usage(format!("--xmax must be > 0, got {xmax}")));
        }
        if points < 2 {
            return Err(CliError::Usage(format!("--points must be at least 2, got {points}")));
        }
        let xs = (0..points).map(|i| xmax * i as f64 / (points - 1) as f64).collect();
        Ok((xs, format!("--xmax {xmax} --points {points}")))
    }
}

impl GridArgs {
    /// Default oracle grid with any overrides applied, plus the flags that reproduce it.
    pub fn config(&self, file: &FileConfig, spec: &ProblemSpec) -> CliResult<(FdmConfig, String)> {
        let mut cfg = FdmConfig::default_for(spec).map_err(CliError::from)?;
        if let Some(nx) = pick(&self.nx, &file.nx) {
            cfg.nx = nx;
        }
        if let Some(nr) = pick(&self.nr, &file.nr) {
            cfg.nr = nr;
        }
        if let Some(length) = pick(&self.length, &file.length) {
            cfg.length = length;
        }
        if let Some(budget) = pick(&self.max_sweeps, &file.max_sweeps) {
            cfg.max_sweeps = budget;
        }
        cfg.validate().map_err(CliError::from)?;
        let flags = format!("--nx {} --nr {} --length {} --max-sweeps {}", cfg.nx, cfg.nr, cfg.length, cfg.max_sweeps);
        Ok((cfg, flags))
    }
}

/// Method selected by `solve`: explicit `--method`, else the model of the given order.
pub fn solve_method(flag: Option<Method>, file: &FileConfig, order: u8) -> Method {
    pick(&flag, &file.method).unwrap_or(if order == 4 { Method::Order4 } else { Method::Order6 })
}

pub fn compare_methods(flag: Option<Vec<Method>>, file: &FileConfig) -> CliResult<Vec<Method>> {
    let methods = flag.or_else(|| file.methods.clone()).unwrap_or_else(|| vec![Method::Order4, Method::Order6]);
    let mut unique = methods.clone();
    unique.dedup();
    if unique.len() < 2 || methods.iter().enumerate().any(|(i, m)| methods[..i].contains(m)) {
        return Err(CliError::Usage("compare needs at least two distinct methods".into()));
    }
    Ok(methods)
}

pub fn tolerance(flag: Option<f64>, file: &FileConfig) -> CliResult<Option<f64>> {
    match pick(&flag, &file.tol) {
        Some(t) if !(t.is_finite() && t >= 0.0) => Err(CliError::Usage(format!("--tol must be >= 0, got {t}"))),
        other => Ok(other),
    }
}
