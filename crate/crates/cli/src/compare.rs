//! Side-by-side comparison of methods on one problem.
//!
//! Deviations are reported relative to the driving temperature difference
//! `|T_i - T_ref|` (1 K when that is zero), with `T_ref` the wall or
//! surroundings temperature. Wall gradients are scaled by `|T_i - T_ref| / a`.

use graetzkit::{fdm_solve, FdmConfig, FdmSolution, ProblemSpec};

use crate::config::Method;
use crate::error::CliResult;
use crate::output::{Cell, Table};
use crate::profiles::{evaluate, Profiles};

pub const COLUMNS: [&str; 10] =
    ["kind", "method_a", "method_b", "quantity", "max_dev", "l2_dev", "points", "tol", "pass", "value"];

/// Max and RMS of `|a - b| / scale` over stations where both exist.
pub fn deviation(a: &[Option<f64>], b: &[Option<f64>], scale: f64) -> Option<(f64, f64, usize)> {
    let diffs: Vec<f64> = a
        .iter()
        .zip(b)
        .filter_map(|(x, y)| Some((x.as_ref()? - y.as_ref()?).abs() / scale))
        .collect();
    if diffs.is_empty() {
        return None;
    }
    let max = diffs.iter().cloned().fold(0.0, f64::max);
    let l2 = (diffs.iter().map(|d| d * d).sum::<f64>() / diffs.len() as f64).sqrt();
    Some((max, l2, diffs.len()))
}

/// Three nested grids ending at (or just above) `cfg`; `None` when the coarsest would be too small.
pub fn nested_grids(cfg: &FdmConfig) -> Option<[FdmConfig; 3]> {
    let coarse = FdmConfig { nx: (cfg.nx - 1).div_ceil(4) + 1, nr: (cfg.nr - 1).div_ceil(4) + 1, ..*cfg };
    coarse.validate().ok()?;
    Some([coarse, coarse.refined(2), coarse.refined(4)])
}

/// Max centerline change between successive grids and the observed order,
/// over `x >= a` so the inlet corner discontinuity does not dominate.
fn grid_study(spec: &ProblemSpec, grids: &[FdmConfig; 3], finest: &FdmSolution, span: f64) -> CliResult<[f64; 3]> {
    let coarse = fdm_solve(spec, &grids[0])?;
    let medium = fdm_solve(spec, &grids[1])?;
    let (mut d01, mut d12) = (0.0f64, 0.0f64);
    for i in (0..grids[0].nx).filter(|&i| coarse.x(i) >= spec.a) {
        let c = coarse.temperature(i, 0);
        let m = medium.temperature(2 * i, 0);
        let f = finest.temperature(4 * i, 0);
        d01 = d01.max((c - m).abs() / span);
        d12 = d12.max((m - f).abs() / span);
    }
    Ok([d01, d12, (d01 / d12).log2()])
}

pub struct Outcome {
    pub table: Table,
    /// False when a declared tolerance was exceeded.
    pub within_tolerance: bool,
}

pub fn compare(
    spec: &ProblemSpec,
    methods: &[Method],
    xs: &[f64],
    grid: &FdmConfig,
    tol: Option<f64>,
    command: String,
    params: String,
) -> CliResult<Outcome> {
    let grids = if methods.contains(&Method::Fdm) { nested_grids(grid) } else { None };
    let oracle_grid = grids.as_ref().map_or(*grid, |g| g[2]);

    let mut profiles: Vec<(Method, Profiles)> = Vec::new();
    let mut oracle: Option<FdmSolution> = None;
    for &m in methods {
        let (p, sol) = evaluate(m, spec, xs, &oracle_grid)?;
        if sol.is_some() {
            oracle = sol;
        }
        profiles.push((m, p));
    }

    let reference = spec.bc.reference_temperature();
    let span = match (spec.t_inlet - reference).abs() {
        s if s > 0.0 => s,
        _ => 1.0,
    };
    let mut table = Table::new(command, params, &COLUMNS);
    let mut ok = true;
    for (i, (ma, pa)) in profiles.iter().enumerate() {
        for (mb, pb) in &profiles[i + 1..] {
            let quantities = [
                ("centerline", &pa.t0, &pb.t0, span),
                ("wall", &pa.ta, &pb.ta, span),
                ("wall_gradient", &pa.t1a, &pb.t1a, span / spec.a),
            ];
            for (name, a, b, scale) in quantities {
                let dev = deviation(a, b, scale);
                let pass = match (tol, dev) {
                    (Some(t), Some((max, _, _))) => {
                        let pass = max <= t;
                        ok &= pass;
                        Cell::Text(pass.to_string())
                    }
                    _ => Cell::Missing,
                };
                table.push(vec![
                    "deviation".into(),
                    ma.name().into(),
                    mb.name().into(),
                    name.into(),
                    Cell::opt(dev.map(|d| d.0)),
                    Cell::opt(dev.map(|d| d.1)),
                    dev.map_or(Cell::Missing, |d| Cell::Int(d.2 as i64)),
                    Cell::opt(tol),
                    pass,
                    Cell::Missing,
                ]);
            }
        }
    }

    if let Some(sol) = &oracle {
        let diag = |kind: &str, value: Cell| {
            let mut row = vec![Cell::from(kind), "fdm".into()];
            row.extend(std::iter::repeat_n(Cell::Missing, COLUMNS.len() - 3));
            row.push(value);
            row
        };
        table.push(diag("fdm_residual", Cell::num(sol.residual())));
        table.push(diag("fdm_sweeps", Cell::Int(sol.sweeps() as i64)));
        table.push(diag("fdm_nx", Cell::Int(sol.nx() as i64)));
        table.push(diag("fdm_nr", Cell::Int(sol.nr() as i64)));
        let study = match &grids {
            Some(g) => Some(grid_study(spec, g, sol, span)?),
            None => None,
        };
        table.push(diag("grid_diff_coarse_medium", Cell::opt(study.map(|s| s[0]))));
        table.push(diag("grid_diff_medium_fine", Cell::opt(study.map(|s| s[1]))));
        table.push(diag("grid_observed_order", Cell::opt(study.map(|s| s[2]))));
    }

    Ok(Outcome { table, within_tolerance: ok })
}
