//! Finite-difference solver for the full steady axisymmetric problem.
//!
//! Solves, in `xi = x/a`, `eta = r/a` and theta units,
//!
//! ```text
//! pe (1 - eta^2) dtheta/dxi = theta_etaeta + (d/eta) theta_eta + theta_xixi + g eta^2
//! ```
//!
//! on `[0, L/a] x [0, 1]` with a flat inlet, symmetry on the axis (the `d/eta`
//! term becomes `d theta_etaeta` there), an isothermal or Newton-cooled wall
//! and zero axial gradient at the outlet. `g = A a^2 / D` in theta units.
//!
//! The solver is independent of the closed-form solutions and serves as their
//! reference. Each axial station is solved as a tridiagonal line in `eta`, and
//! stations are relaxed in increasing `x` (line SOR). The sweep order is fixed,
//! so results are bit-reproducible.
//!
//! Advection uses the hybrid rule: central differences while the cell Peclet
//! number `pe v dxi` is at most 2, first-order upwind above that. The upwind
//! branch adds numerical axial diffusion of `pe v dxi / 2`.

use std::io::{self, Write};

use crate::charpoly::{beta1_exchange_split, beta1_wall_order4};
use crate::error::{Error, Result};
use crate::problem::{one_minus_alpha, alpha_from_lambda, ProblemSpec, TemperatureScale, WallBC};
use crate::scalar::Scalar;

/// Axial advection discretization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum AdvectionScheme {
    /// Central differences everywhere (second order, may oscillate at high cell Peclet).
    Central,
    /// Central while the cell Peclet number is <= 2, upwind otherwise.
    #[default]
    HybridUpwind,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdmConfig<T = f64> {
    /// Axial node count (including inlet and outlet).
    pub nx: usize,
    /// Radial node count (including axis and wall).
    pub nr: usize,
    /// Domain length [m].
    pub length: T,
    /// Over-relaxation factor in (0, 2).
    pub relax: T,
    /// Target relative residual.
    pub tol: T,
    pub max_sweeps: usize,
    pub scheme: AdvectionScheme,
}

/// Largest default axial node count; very slow decays get a truncated domain.
const MAX_DEFAULT_NX: usize = 16_385;

impl<T: Scalar> FdmConfig<T> {
    /// Default grid: 65 radial nodes, axial spacing at most `a/8`, and a
    /// domain of `a * max(10, 10/beta1)` with `beta1` the fourth-order
    /// estimate, so the slowest mode has decayed by `e^-10` at the outlet.
    pub fn default_for(spec: &ProblemSpec<T>) -> Result<Self> {
        spec.validate()?;
        let pe = spec.peclet();
        let beta = match spec.bc {
            WallBC::UniformWall { .. } => beta1_wall_order4(pe, spec.geometry)?,
            WallBC::Exchange { h, .. } => {
                let lambda = spec.a * h / spec.fluid.k;
                beta1_exchange_split(
                    pe,
                    alpha_from_lambda(lambda, spec.geometry),
                    one_minus_alpha(lambda, spec.geometry),
                    spec.geometry,
                )
            }
        };
        let ten = T::lit(10.0);
        let mut span = if beta > T::zero() { ten.max(ten / beta) } else { ten };
        let max_span = T::from_usize(MAX_DEFAULT_NX - 1).unwrap() / T::lit(8.0);
        span = span.min(max_span);
        let nx = (span * T::lit(8.0)).ceil().to_usize().unwrap() + 1;
        // Over-relaxation only pays off while the operator is diffusion-like;
        // once upwinding kicks in, sweeps in x are close to marching and
        // omega > 1 produces transient growth along the channel.
        let cell_pe = pe / T::lit(8.0);
        let relax = if cell_pe > T::lit(2.0) { T::one() } else { T::lit(1.2) };
        Ok(Self {
            nx,
            nr: 65,
            length: span * spec.a,
            relax,
            tol: T::lit(1e-10),
            max_sweeps: 200_000,
            scheme: AdvectionScheme::HybridUpwind,
        })
    }

    /// Same domain with both spacings divided by `factor` (nested grids).
    pub fn refined(&self, factor: usize) -> Self {
        Self { nx: (self.nx - 1) * factor + 1, nr: (self.nr - 1) * factor + 1, ..*self }
    }

    pub fn validate(&self) -> Result<()> {
        if self.nx < 16 || self.nr < 8 {
            return Err(Error::InvalidParameter(format!("grid {}x{} below the 16x8 minimum", self.nx, self.nr)));
        }
        if !(self.length.is_finite() && self.length > T::zero()) {
            return Err(Error::InvalidParameter("domain length must be finite and > 0".into()));
        }
        if !(self.relax > T::zero() && self.relax < T::lit(2.0)) {
            return Err(Error::InvalidParameter(format!("relaxation factor {} outside (0, 2)", self.relax)));
        }
        if !(self.tol > T::zero()) {
            return Err(Error::InvalidParameter("tolerance must be > 0".into()));
        }
        Ok(())
    }
}

/// Converged discrete field.
#[derive(Debug, Clone, PartialEq)]
pub struct FdmSolution<T: Scalar = f64> {
    spec: ProblemSpec<T>,
    config: FdmConfig<T>,
    scale: TemperatureScale<T>,
    dxi: T,
    deta: T,
    /// Row-major `theta[i * nr + j]`, `i` axial and `j` radial.
    theta: Vec<T>,
    residual: T,
    sweeps: usize,
    history: Vec<T>,
}

/// Centerline, wall and wall-gradient profiles on the axial grid.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryProfiles<T = f64> {
    /// Axial positions [m].
    pub x: Vec<T>,
    /// `T(x, 0)` [K].
    pub t0: Vec<T>,
    /// `T(x, a)` [K].
    pub ta: Vec<T>,
    /// `dT/dr(x, a)` [K/m], one-sided second-order difference.
    pub t1a: Vec<T>,
}

/// Five-point stencil `ap theta_P = ae theta_E + aw theta_W + an theta_N + as theta_S + b`.
#[derive(Debug, Clone, Copy)]
struct Stencil<T> {
    ap: T,
    ae: T,
    aw: T,
    an: T,
    a_s: T,
    b: T,
}

struct Discretization<T> {
    nx: usize,
    nr: usize,
    dxi: T,
    deta: T,
    pe: T,
    d: T,
    g: T,
    lambda: Option<T>,
    theta_inlet: T,
    /// Wall value (isothermal) or surroundings (exchange), theta units.
    theta_bc: T,
    scheme: AdvectionScheme,
}

impl<T: Scalar> Discretization<T> {
    fn is_dirichlet(&self, i: usize, j: usize) -> Option<T> {
        if i == 0 {
            return Some(self.theta_inlet);
        }
        if j == self.nr - 1 && self.lambda.is_none() {
            return Some(self.theta_bc);
        }
        None
    }

    fn stencil(&self, i: usize, j: usize) -> Stencil<T> {
        let one = T::one();
        if let Some(v) = self.is_dirichlet(i, j) {
            return Stencil { ap: one, ae: T::zero(), aw: T::zero(), an: T::zero(), a_s: T::zero(), b: v };
        }
        let two = T::lit(2.0);
        let eta = T::from_usize(j).unwrap() * self.deta;
        let hr2 = self.deta * self.deta;
        let hx2 = self.dxi * self.dxi;
        let v = self.pe * (one - eta * eta);

        // radial part
        let (mut ap, an, a_s, mut b) = if j == 0 {
            let k = two * (one + self.d) / hr2;
            (k, k, T::zero(), T::zero())
        } else if j == self.nr - 1 {
            // Newton-cooled wall, ghost node theta_{N+1} = theta_{N-1} + 2 deta lambda (theta_bc - theta_N)
            let lambda = self.lambda.expect("wall stencil only built for exchange walls");
            let coupling = two * lambda / self.deta + self.d * lambda;
            (two / hr2 + coupling, T::zero(), two / hr2, coupling * self.theta_bc)
        } else {
            let skew = self.d / (two * eta * self.deta);
            (two / hr2, one / hr2 + skew, one / hr2 - skew, T::zero())
        };
        b = b + self.g * eta * eta;

        // axial part; the outlet mirrors i-1 into the ghost node
        let outlet = i == self.nx - 1;
        let upwind = match self.scheme {
            AdvectionScheme::Central => false,
            AdvectionScheme::HybridUpwind => v * self.dxi > two,
        };
        let (ae, aw) = if upwind {
            ap = ap + two / hx2 + v / self.dxi;
            if outlet {
                (T::zero(), two / hx2 + v / self.dxi)
            } else {
                (one / hx2, one / hx2 + v / self.dxi)
            }
        } else {
            ap = ap + two / hx2;
            if outlet {
                (T::zero(), two / hx2)
            } else {
                let half = v / (two * self.dxi);
                (one / hx2 - half, one / hx2 + half)
            }
        };
        Stencil { ap, ae, aw, an, a_s, b }
    }
}

/// Solves the steady problem on the given grid.
pub fn fdm_solve<T: Scalar>(spec: &ProblemSpec<T>, config: &FdmConfig<T>) -> Result<FdmSolution<T>> {
    spec.validate()?;
    config.validate()?;
    let scale = spec.temperature_scale();
    let g = scale.scale_delta(spec.dissipation_temperature());
    let lambda = match spec.bc {
        WallBC::UniformWall { .. } => None,
        WallBC::Exchange { h, .. } => Some(spec.a * h / spec.fluid.k),
    };
    if lambda == Some(T::zero()) && g != T::zero() {
        return Err(Error::InvalidRegime("insulated wall with viscous dissipation has no steady state".into()));
    }

    let (nx, nr) = (config.nx, config.nr);
    let disc = Discretization {
        nx,
        nr,
        dxi: config.length / spec.a / T::from_usize(nx - 1).unwrap(),
        deta: T::one() / T::from_usize(nr - 1).unwrap(),
        pe: spec.peclet(),
        d: spec.geometry.d(),
        g,
        lambda,
        theta_inlet: scale.to_theta(spec.t_inlet),
        theta_bc: T::zero(),
        scheme: config.scheme,
    };

    let stencils: Vec<Stencil<T>> = (0..nx)
        .flat_map(|i| (0..nr).map(move |j| (i, j)))
        .map(|(i, j)| disc.stencil(i, j))
        .collect();

    let mut theta = vec![disc.theta_inlet; nx * nr];
    for i in 0..nx {
        for j in 0..nr {
            if let Some(v) = disc.is_dirichlet(i, j) {
                theta[i * nr + j] = v;
            }
        }
    }

    let mut sub = vec![T::zero(); nr];
    let mut diag = vec![T::zero(); nr];
    let mut sup = vec![T::zero(); nr];
    let mut rhs = vec![T::zero(); nr];
    let mut line = vec![T::zero(); nr];
    let mut history = Vec::new();
    let relax = config.relax;

    let mut residual = relative_residual(&disc, &stencils, &theta);
    if residual <= config.tol {
        return Ok(FdmSolution {
            spec: *spec,
            config: *config,
            scale,
            dxi: disc.dxi,
            deta: disc.deta,
            theta,
            residual,
            sweeps: 0,
            history: vec![residual],
        });
    }
    history.push(residual);

    let mut done = config.max_sweeps;
    for sweep in 1..=config.max_sweeps {
        for i in 1..nx {
            for j in 0..nr {
                let k = i * nr + j;
                if let Some(v) = disc.is_dirichlet(i, j) {
                    sub[j] = T::zero();
                    sup[j] = T::zero();
                    diag[j] = T::one();
                    rhs[j] = v;
                    continue;
                }
                let s = &stencils[k];
                let east = if i + 1 < nx { theta[k + nr] } else { T::zero() };
                rhs[j] = s.b + s.ae * east + s.aw * theta[k - nr];
                diag[j] = s.ap;
                sub[j] = -s.a_s;
                sup[j] = -s.an;
            }
            thomas(&sub, &diag, &sup, &mut rhs, &mut line);
            let row = &mut theta[i * nr..(i + 1) * nr];
            for (old, new) in row.iter_mut().zip(&line) {
                *old = *old + relax * (*new - *old);
            }
        }

        if sweep % 5 == 0 || sweep == config.max_sweeps {
            residual = relative_residual(&disc, &stencils, &theta);
            if sweep % 100 == 0 {
                history.push(residual);
            }
            if !residual.is_finite() {
                done = sweep;
                break;
            }
            if residual <= config.tol {
                history.push(residual);
                return Ok(FdmSolution {
                    spec: *spec,
                    config: *config,
                    scale,
                    dxi: disc.dxi,
                    deta: disc.deta,
                    theta,
                    residual,
                    sweeps: sweep,
                    history,
                });
            }
        }
    }
    history.push(residual);
    Err(Error::NonConvergence {
        iterations: done,
        residual: residual.as_f64(),
        history: history.into_iter().map(Scalar::as_f64).collect(),
    })
}

/// Tridiagonal solve; `rhs` is used as scratch.
fn thomas<T: Scalar>(sub: &[T], diag: &[T], sup: &[T], rhs: &mut [T], out: &mut [T]) {
    let n = diag.len();
    let mut c = vec![T::zero(); n];
    let mut beta = diag[0];
    c[0] = sup[0] / beta;
    rhs[0] = rhs[0] / beta;
    for j in 1..n {
        beta = diag[j] - sub[j] * c[j - 1];
        c[j] = sup[j] / beta;
        rhs[j] = (rhs[j] - sub[j] * rhs[j - 1]) / beta;
    }
    out[n - 1] = rhs[n - 1];
    for j in (0..n - 1).rev() {
        out[j] = rhs[j] - c[j] * out[j + 1];
    }
}

/// `||r||_2 / ||ap theta||_2` over the non-Dirichlet nodes.
fn relative_residual<T: Scalar>(disc: &Discretization<T>, stencils: &[Stencil<T>], theta: &[T]) -> T {
    let nr = disc.nr;
    let mut num = T::zero();
    let mut den = T::zero();
    for i in 1..disc.nx {
        for j in 0..nr {
            if disc.is_dirichlet(i, j).is_some() {
                continue;
            }
            let k = i * nr + j;
            let s = &stencils[k];
            let east = if i + 1 < disc.nx { theta[k + nr] } else { T::zero() };
            let north = if j + 1 < nr { theta[k + 1] } else { T::zero() };
            let south = if j > 0 { theta[k - 1] } else { T::zero() };
            let diag = s.ap * theta[k];
            let r = s.b + s.ae * east + s.aw * theta[k - nr] + s.an * north + s.a_s * south - diag;
            num = num + r * r;
            den = den + diag * diag;
        }
    }
    if num == T::zero() {
        T::zero()
    } else {
        (num / den).sqrt()
    }
}

impl<T: Scalar> FdmSolution<T> {
    pub fn spec(&self) -> &ProblemSpec<T> {
        &self.spec
    }

    pub fn config(&self) -> &FdmConfig<T> {
        &self.config
    }

    pub fn nx(&self) -> usize {
        self.config.nx
    }

    pub fn nr(&self) -> usize {
        self.config.nr
    }

    /// Final relative residual.
    pub fn residual(&self) -> T {
        self.residual
    }

    pub fn sweeps(&self) -> usize {
        self.sweeps
    }

    pub fn residual_history(&self) -> &[T] {
        &self.history
    }

    pub fn x(&self, i: usize) -> T {
        T::from_usize(i).unwrap() * self.dxi * self.spec.a
    }

    pub fn r(&self, j: usize) -> T {
        T::from_usize(j).unwrap() * self.deta * self.spec.a
    }

    /// Temperature at node `(i, j)` [K].
    pub fn temperature(&self, i: usize, j: usize) -> T {
        self.scale.to_kelvin(self.theta[i * self.config.nr + j])
    }

    /// Centerline temperature at `x` by linear interpolation [K].
    pub fn centerline_at(&self, x: T) -> T {
        self.interpolate_row(0, x)
    }

    /// Wall temperature at `x` by linear interpolation [K].
    pub fn wall_at(&self, x: T) -> T {
        self.interpolate_row(self.config.nr - 1, x)
    }

    fn interpolate_row(&self, j: usize, x: T) -> T {
        let s = (x / self.spec.a / self.dxi).max(T::zero());
        let last = self.config.nx - 1;
        let i = s.floor().to_usize().unwrap_or(last).min(last);
        if i == last {
            return self.temperature(last, j);
        }
        let w = s - T::from_usize(i).unwrap();
        self.temperature(i, j) * (T::one() - w) + self.temperature(i + 1, j) * w
    }

    /// Writes the full field as `x,r,T` rows.
    pub fn write_field_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "x,r,T")?;
        for i in 0..self.config.nx {
            for j in 0..self.config.nr {
                writeln!(out, "{},{},{}", self.x(i), self.r(j), self.temperature(i, j))?;
            }
        }
        Ok(())
    }
}

/// Centerline, wall and wall-gradient profiles of a converged solution.
pub fn extract_boundary_functions<T: Scalar>(sol: &FdmSolution<T>) -> BoundaryProfiles<T> {
    let nr = sol.config.nr;
    let (n, m, l) = (nr - 1, nr - 2, nr - 3);
    let h = sol.deta * sol.spec.a;
    let (three, four, two) = (T::lit(3.0), T::lit(4.0), T::lit(2.0));
    let mut out = BoundaryProfiles { x: Vec::new(), t0: Vec::new(), ta: Vec::new(), t1a: Vec::new() };
    for i in 0..sol.config.nx {
        out.x.push(sol.x(i));
        out.t0.push(sol.temperature(i, 0));
        out.ta.push(sol.temperature(i, n));
        let grad = (three * sol.temperature(i, n) - four * sol.temperature(i, m) + sol.temperature(i, l)) / (two * h);
        out.t1a.push(grad);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::fixtures::*;
    use proptest::prelude::*;

    fn small(spec: &ProblemSpec<f64>) -> FdmConfig<f64> {
        FdmConfig { nx: 41, nr: 17, length: 5.0, ..FdmConfig::default_for(spec).unwrap() }
    }

    #[test]
    fn equilibrium_inlet_needs_no_work() {
        let spec = wall_spec(3.0, 1, 0.0, 300.0, 300.0);
        let sol = fdm_solve(&spec, &small(&spec)).unwrap();
        assert!(sol.sweeps() <= 1);
        for i in 0..sol.nx() {
            for j in 0..sol.nr() {
                assert_eq!(sol.temperature(i, j), 300.0);
            }
        }
    }

    #[test]
    fn insulated_unheated_stays_at_inlet_temperature() {
        let spec = exchange_spec(3.0, 0, 0.0, 0.0, 330.0, 280.0);
        let sol = fdm_solve(&spec, &small(&spec)).unwrap();
        let p = extract_boundary_functions(&sol);
        assert!(p.t0.iter().chain(&p.ta).all(|&t| t == 330.0));
        assert!(p.t1a.iter().all(|&g| g == 0.0));
    }

    #[test]
    fn insulated_heated_is_invalid() {
        let spec = exchange_spec(3.0, 0, 0.01, 0.0, 330.0, 280.0);
        assert!(matches!(fdm_solve(&spec, &small(&spec)), Err(Error::InvalidRegime(_))));
    }

    #[test]
    fn config_validation() {
        let spec = wall_spec(1.0, 0, 0.0, 1.0, 0.0);
        let base = small(&spec);
        assert!(fdm_solve(&spec, &FdmConfig { nx: 8, ..base }).is_err());
        assert!(fdm_solve(&spec, &FdmConfig { nr: 4, ..base }).is_err());
        assert!(fdm_solve(&spec, &FdmConfig { relax: 2.0, ..base }).is_err());
        assert!(fdm_solve(&spec, &FdmConfig { length: 0.0, ..base }).is_err());
        assert!(fdm_solve(&spec, &FdmConfig { tol: 0.0, ..base }).is_err());
    }

    #[test]
    fn non_convergence_is_reported() {
        let spec = wall_spec(1.0, 0, 0.0, 1.0, 0.0);
        let cfg = FdmConfig { max_sweeps: 3, ..small(&spec) };
        match fdm_solve(&spec, &cfg) {
            Err(Error::NonConvergence { iterations, history, .. }) => {
                assert_eq!(iterations, 3);
                assert!(!history.is_empty());
            }
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }

    #[test]
    fn default_grid_rules() {
        let spec = wall_spec(10.0, 0, 0.0, 1.0, 0.0);
        let cfg = FdmConfig::default_for(&spec).unwrap();
        let beta = beta1_wall_order4(10.0, spec.geometry).unwrap();
        assert_eq!(cfg.nr, 65);
        assert!((cfg.length - 10.0 / beta).abs() < 1e-12);
        assert!(cfg.length / (cfg.nx - 1) as f64 <= 0.125);
        assert!((-beta * cfg.length).exp() < 1e-4);
        let short = FdmConfig::default_for(&wall_spec(0.0, 1, 0.0, 1.0, 0.0)).unwrap();
        assert_eq!(short.length, 10.0);
    }

    #[test]
    fn isothermal_wall_row_is_exact_and_field_bounded() {
        let spec = wall_spec(5.0, 1, 0.0, 350.0, 300.0);
        let sol = fdm_solve(&spec, &small(&spec)).unwrap();
        assert!(sol.residual() <= 1e-10);
        let p = extract_boundary_functions(&sol);
        assert!(p.ta[1..].iter().all(|&t| t == 300.0));
        for i in 0..sol.nx() {
            for j in 0..sol.nr() {
                let t = sol.temperature(i, j);
                assert!((300.0..=350.0).contains(&t), "({i},{j}) = {t}");
            }
        }
    }

    #[test]
    fn robin_wall_flux_balance_converges_at_second_order() {
        let (h, t_inf) = (1.0, 0.0);
        let spec = exchange_spec(2.0, 0, 0.0, h, 1.0, t_inf);
        let base = FdmConfig { nx: 33, nr: 9, length: 4.0, ..FdmConfig::default_for(&spec).unwrap() };
        let errs: Vec<f64> = [1usize, 2, 4]
            .iter()
            .map(|&f| {
                let sol = fdm_solve(&spec, &base.refined(f)).unwrap();
                let p = extract_boundary_functions(&sol);
                // compare at x = 2 (node shared by all grids)
                let i = (sol.nx() - 1) / 2;
                (spec.fluid.k * p.t1a[i] - h * (t_inf - p.ta[i])).abs()
            })
            .collect();
        let order = (errs[1] / errs[2]).log2();
        assert!(errs[2] < errs[1] && errs[1] < errs[0], "{errs:?}");
        assert!(order > 1.7, "observed order {order} from {errs:?}");
    }

    #[test]
    fn field_dump_has_one_row_per_node() {
        let spec = wall_spec(1.0, 0, 0.0, 1.0, 0.0);
        let sol = fdm_solve(&spec, &small(&spec)).unwrap();
        let mut buf = Vec::new();
        sol.write_field_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 1 + sol.nx() * sol.nr());
        assert!(text.starts_with("x,r,T\n0,0,1\n"));
    }

    #[test]
    fn deterministic_results() {
        let spec = wall_spec(4.0, 1, 0.01, 1.0, 0.0);
        let cfg = small(&spec);
        let a = fdm_solve(&spec, &cfg).unwrap();
        let b = fdm_solve(&spec, &cfg).unwrap();
        assert_eq!(a, b);
    }

    fn centerline_order(spec: &ProblemSpec<f64>, base: FdmConfig<f64>) -> (f64, [f64; 2]) {
        let sols: Vec<_> = [1usize, 2, 4].iter().map(|&f| fdm_solve(spec, &base.refined(f)).unwrap()).collect();
        let mut diffs = [0.0f64; 2];
        for i in 0..base.nx {
            let v: Vec<f64> = (0..3).map(|k| sols[k].temperature(i << k, 0)).collect();
            diffs[0] = diffs[0].max((v[0] - v[1]).abs());
            diffs[1] = diffs[1].max((v[1] - v[2]).abs());
        }
        ((diffs[0] / diffs[1]).log2(), diffs)
    }

    #[test]
    fn centerline_converges_at_second_order() {
        let spec = wall_spec(10.0, 0, 0.0, 1.0, 0.0);
        let base = FdmConfig { nx: 161, nr: 17, length: 20.0, ..FdmConfig::default_for(&spec).unwrap() };
        let (order, diffs) = centerline_order(&spec, base);
        assert!((1.7..=2.3).contains(&order), "observed order {order} from {diffs:?}");
    }

    #[test]
    fn dissipation_offset_in_the_far_field() {
        for d in [0u8, 1] {
            let spec = wall_spec(10.0, d, 0.01, 1.0, 1.0);
            let sol = fdm_solve(&spec, &FdmConfig::default_for(&spec).unwrap()).unwrap();
            let want = spec.dissipation_temperature() / (4.0 * (3.0 + d as f64));
            let got = sol.temperature(sol.nx() - 1, 0) - 1.0;
            assert!(((got - want) / want).abs() < 0.02, "d={d}: {got} vs {want}");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn maximum_principle_without_heating(
            pe in 0.0f64..200.0,
            d in 0u8..2,
            ti in 250.0f64..400.0,
            tb in 250.0f64..400.0,
            h in prop::option::of(0.05f64..50.0),
        ) {
            let spec = match h {
                None => wall_spec(pe, d, 0.0, ti, tb),
                Some(h) => exchange_spec(pe, d, 0.0, h, ti, tb),
            };
            let cfg = FdmConfig { nx: 65, nr: 17, length: 8.0, ..FdmConfig::default_for(&spec).unwrap() };
            let sol = fdm_solve(&spec, &cfg).unwrap();
            let (lo, hi) = (ti.min(tb), ti.max(tb));
            let slack = 1e-9 * hi;
            for i in 0..sol.nx() {
                for j in 0..sol.nr() {
                    let t = sol.temperature(i, j);
                    prop_assert!(t >= lo - slack && t <= hi + slack, "({}, {}) = {}", i, j, t);
                }
            }
        }
    }
}
