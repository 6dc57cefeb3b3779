//! Centerline, wall and wall-gradient profiles from any method on a common axial grid.

use graetzkit::{
    extract_boundary_functions, fdm_solve, solve, theta_series, FdmConfig, FdmSolution, FieldSampler, Geometry,
    ProblemSpec, WallBC,
};

use crate::config::Method;
use crate::error::{CliError, CliResult};

/// Profiles at the requested stations; `None` where a method has no value.
#[derive(Debug, Clone, PartialEq)]
pub struct Profiles {
    pub t0: Vec<Option<f64>>,
    pub ta: Vec<Option<f64>>,
    pub t1a: Vec<Option<f64>>,
}

/// Profiles of one method; the oracle also hands back its solution for diagnostics.
pub fn evaluate(
    method: Method,
    spec: &ProblemSpec,
    xs: &[f64],
    grid: &FdmConfig,
) -> CliResult<(Profiles, Option<FdmSolution>)> {
    match method {
        Method::Order4 | Method::Order6 => {
            let order = if method == Method::Order4 { 4 } else { 6 };
            let sol = solve(spec, order)?;
            let p = Profiles {
                t0: xs.iter().map(|&x| Some(sol.centerline(x))).collect(),
                ta: xs.iter().map(|&x| Some(sol.wall_temperature(x))).collect(),
                t1a: xs.iter().map(|&x| Some(sol.wall_gradient(x))).collect(),
            };
            Ok((p, None))
        }
        Method::Series => Ok((series_profiles(spec, xs)?, None)),
        Method::Fdm => {
            let solution = fdm_solve(spec, grid)?;
            Ok((fdm_profiles(&solution, xs), Some(solution)))
        }
    }
}

/// Plates only, isothermal wall, finite positive Peclet number.
fn series_profiles(spec: &ProblemSpec, xs: &[f64]) -> CliResult<Profiles> {
    if spec.geometry != Geometry::Plates {
        return Err(CliError::Regime("the eigenseries reference exists for parallel plates only (d = 0)".into()));
    }
    let WallBC::UniformWall { t_wall } = spec.bc else {
        return Err(CliError::Regime("the eigenseries reference needs an isothermal wall".into()));
    };
    let pe = spec.peclet();
    if !(pe > 0.0) {
        return Err(CliError::Regime("the eigenseries reference needs pe > 0".into()));
    }
    let excess = spec.t_inlet - t_wall;
    let t0 = xs
        .iter()
        .map(|&x| theta_series(x / (spec.a * pe), 8).map(|th| Some(t_wall + excess * th)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Profiles { t0, ta: vec![Some(t_wall); xs.len()], t1a: vec![None; xs.len()] })
}

fn fdm_profiles(sol: &FdmSolution, xs: &[f64]) -> Profiles {
    let p = extract_boundary_functions(sol);
    let interp = |values: &[f64], x: f64| -> Option<f64> {
        let last = *p.x.last()?;
        if x > last * (1.0 + 1e-12) {
            return None;
        }
        let dx = p.x[1] - p.x[0];
        let s = x / dx;
        let i = (s.floor() as usize).min(p.x.len() - 1);
        if i + 1 >= p.x.len() {
            return Some(values[p.x.len() - 1]);
        }
        let w = s - i as f64;
        Some(values[i] * (1.0 - w) + values[i + 1] * w)
    };
    // The inlet column is pinned to T_i, corner included, so wall values are
    // only meaningful downstream of the first node.
    let wall = |values: &[f64], x: f64| if x < p.x[1] { None } else { interp(values, x) };
    Profiles {
        t0: xs.iter().map(|&x| interp(&p.t0, x)).collect(),
        ta: xs.iter().map(|&x| wall(&p.ta, x)).collect(),
        t1a: xs.iter().map(|&x| wall(&p.t1a, x)).collect(),
    }
}
