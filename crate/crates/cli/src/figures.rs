//! Data behind the decay-constant and centerline figures.

use clap::ValueEnum;
use graetzkit::{
    beta1_exchange, beta1_wall_order4, solve_quartic_wall_order6, solve_wall_order4, solve_wall_order6, theta_series,
    FieldSampler, FluidProperties, Geometry, ProblemSpec, WallBC,
};

use crate::error::{CliError, CliResult};
use crate::output::{Cell, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FigureId {
    /// Slowest decay constant vs Peclet number, both orders and geometries
    Fig2,
    /// Fast decay constant of the sixth-order model vs Peclet number
    Fig3,
    /// Centerline temperature vs the classical eigenseries
    Fig4,
    /// Decay constant of the exchange wall over (pe, alpha)
    Fig6,
}

impl FigureId {
    pub fn name(self) -> &'static str {
        match self {
            FigureId::Fig2 => "fig2",
            FigureId::Fig3 => "fig3",
            FigureId::Fig4 => "fig4",
            FigureId::Fig6 => "fig6",
        }
    }
}

/// Peclet values of a figure plus their description for the header.
#[derive(Debug, Clone)]
pub struct Sweep {
    pub values: Vec<f64>,
    pub label: String,
}

impl Sweep {
    pub fn log(from: f64, to: f64, points: usize) -> Self {
        let (l0, l1) = (from.log10(), to.log10());
        let values = (0..points).map(|i| 10f64.powf(l0 + (l1 - l0) * i as f64 / (points - 1) as f64)).collect();
        Self { values, label: format!("log({from},{to},{points})") }
    }

    pub fn list(values: Vec<f64>) -> Self {
        let label = format!("[{}]", values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
        Self { values, label }
    }
}

/// Default sweeps per figure: `(pe, alpha)`.
pub fn default_sweeps(fig: FigureId) -> (Sweep, Option<Sweep>) {
    match fig {
        FigureId::Fig2 | FigureId::Fig3 => (Sweep::log(0.1, 1000.0, 81), None),
        FigureId::Fig4 => (Sweep::list(vec![FIG4_PROXY, 1.0]), None),
        FigureId::Fig6 => (
            Sweep::list(vec![0.0, 1.0, 10.0, 100.0, 1000.0]),
            Some(Sweep::list((1..=99).map(|k| k as f64 / 100.0).collect())),
        ),
    }
}

/// Finite stand-in for the infinite Peclet number of the eigenseries.
pub const FIG4_PROXY: f64 = 1000.0;

pub fn emit(fig: FigureId, pe: Sweep, alpha: Option<Sweep>) -> CliResult<Table> {
    let command = format!("figure {}", fig.name());
    let mut params = format!("pe_sweep={}", pe.label);
    let table = match fig {
        FigureId::Fig2 => fig2(command, params, &pe.values),
        FigureId::Fig3 => fig3(command, params, &pe.values),
        FigureId::Fig4 => {
            params.push_str(&format!(" pe_proxy={FIG4_PROXY} d=0 A=0 ti=1 tw=0 xi1=0:0.01:1 n_terms=8"));
            fig4(command, params, &pe.values)?
        }
        FigureId::Fig6 => {
            let alpha = alpha.unwrap_or_else(|| default_sweeps(FigureId::Fig6).1.unwrap());
            params.push_str(&format!(" alpha_sweep={}", alpha.label));
            fig6(command, params, &pe.values, &alpha.values)
        }
    };
    Ok(table)
}

fn geometries() -> [Geometry; 2] {
    [Geometry::Plates, Geometry::Tube]
}

fn fig2(command: String, params: String, pes: &[f64]) -> Table {
    let mut t = Table::new(
        command,
        params,
        &["pe", "beta1_order4_d0", "beta1_order6_d0", "beta1_order4_d1", "beta1_order6_d1"],
    );
    for &pe in pes {
        let mut row = vec![Cell::num(pe)];
        for g in geometries() {
            row.push(Cell::opt(beta1_wall_order4(pe, g).ok()));
            row.push(Cell::opt(solve_quartic_wall_order6(pe, g).ok().map(|r| r.beta1)));
        }
        t.push(row);
    }
    t
}

fn fig3(command: String, params: String, pes: &[f64]) -> Table {
    let mut t = Table::new(command, params, &["pe", "beta2_d0", "beta2_d1"]);
    for &pe in pes {
        let mut row = vec![Cell::num(pe)];
        for g in geometries() {
            row.push(Cell::opt(solve_quartic_wall_order6(pe, g).ok().and_then(|r| r.beta2)));
        }
        t.push(row);
    }
    t
}

/// Plates, unit properties, `T_i = 1`, `T_w = 0`, so the centerline value is theta.
fn fig4_spec(pe: f64) -> CliResult<ProblemSpec> {
    let fluid = FluidProperties { k: 1.0, rho: 1.0, cp: 1.0, mu: 0.0 };
    Ok(ProblemSpec::new(Geometry::Plates, 1.0, pe, fluid, 1.0, WallBC::UniformWall { t_wall: 0.0 })?)
}

fn fig4(command: String, params: String, pes: &[f64]) -> CliResult<Table> {
    let mut t = Table::new(
        command,
        params,
        &["pe", "xi1", "theta_series_8terms", "theta_order4", "theta_order6"],
    );
    for &pe in pes {
        if pe <= 0.0 {
            return Err(CliError::Usage("fig4 needs pe > 0 (xi1 = x / (a pe))".into()));
        }
        let spec = fig4_spec(pe)?;
        let o4 = solve_wall_order4(&spec).ok();
        let o6 = solve_wall_order6(&spec).ok();
        for k in 0..=100 {
            let xi1 = k as f64 / 100.0;
            let x = xi1 * pe * spec.a;
            t.push(vec![
                Cell::num(pe),
                Cell::num(xi1),
                Cell::opt(theta_series(xi1, 8).ok()),
                Cell::opt(o4.as_ref().map(|s| s.centerline(x))),
                Cell::opt(o6.as_ref().map(|s| s.centerline(x))),
            ]);
        }
    }
    Ok(t)
}

fn fig6(command: String, params: String, pes: &[f64], alphas: &[f64]) -> Table {
    let mut t = Table::new(command, params, &["d", "pe", "alpha", "beta1_exchange"]);
    for (d, g) in geometries().into_iter().enumerate() {
        for &pe in pes {
            for &alpha in alphas {
                t.push(vec![
                    Cell::Int(d as i64),
                    Cell::num(pe),
                    Cell::num(alpha),
                    Cell::opt(beta1_exchange(pe, alpha, g).ok()),
                ]);
            }
        }
    }
    t
}
