//! Steady solutions for a wall held at uniform temperature.
//!
//! The centerline temperature `T0` and the wall gradient `T1a` are closed-form
//! sums of decaying exponentials in `xi = x / a`. The radial field is recovered
//! from the truncated Taylor expansion about the centerline,
//! `T = T0 + r^2/2 T20 + r^4/24 T40 (+ r^6/720 T60)`, whose even moments follow
//! from the wall quantities `T1a`, `T2a`, `T3a`.
//!
//! Internally the coefficients are kept in theta units (see [`crate::problem`]);
//! accessors return kelvin.

use crate::charpoly::{beta1_wall_order4, solve_quartic_wall_order6};
use crate::error::{Error, Result};
use crate::numeric::solve_dense;
use crate::problem::{ProblemSpec, TemperatureScale, WallBC};
use crate::scalar::Scalar;
use crate::solution::{check_position, FieldSampler};

fn wall_temperature_of<T: Scalar>(spec: &ProblemSpec<T>) -> Result<T> {
    match spec.bc {
        WallBC::UniformWall { t_wall } => Ok(t_wall),
        WallBC::Exchange { .. } => Err(Error::BcMismatch(
            "uniform-wall solution requested for an exchange wall".into(),
        )),
    }
}

/// Inputs shared by both orders, in theta units.
#[derive(Debug, Clone, Copy, PartialEq)]
struct WallSetup<T> {
    scale: TemperatureScale<T>,
    pe: T,
    d: T,
    /// Dissipation temperature `A a^2 / D` in theta units.
    g: T,
    theta_inlet: T,
}

impl<T: Scalar> WallSetup<T> {
    fn new(spec: &ProblemSpec<T>) -> Result<Self> {
        spec.validate()?;
        wall_temperature_of(spec)?;
        let scale = spec.temperature_scale();
        Ok(Self {
            scale,
            pe: spec.peclet(),
            d: spec.geometry.d(),
            g: scale.scale_delta(spec.dissipation_temperature()),
            theta_inlet: scale.to_theta(spec.t_inlet),
        })
    }
}

/// Fourth-order solution: `theta0 = amp e^{-beta1 xi} + theta_far`.
#[derive(Debug, Clone, PartialEq)]
pub struct WallSolutionO4<T: Scalar = f64> {
    spec: ProblemSpec<T>,
    setup: WallSetup<T>,
    beta1: T,
    /// Far-field centerline excess over the wall, theta units.
    theta_far: T,
    /// `theta_inlet - theta_far`.
    amp: T,
}

/// Builds the fourth-order isothermal-wall solution.
pub fn solve_wall_order4<T: Scalar>(spec: &ProblemSpec<T>) -> Result<WallSolutionO4<T>> {
    let setup = WallSetup::new(spec)?;
    let beta1 = beta1_wall_order4(setup.pe, spec.geometry)?;
    let theta_far = setup.g / (T::lit(4.0) * (T::lit(3.0) + setup.d));
    Ok(WallSolutionO4 {
        spec: *spec,
        setup,
        beta1,
        theta_far,
        amp: setup.theta_inlet - theta_far,
    })
}

impl<T: Scalar> WallSolutionO4<T> {
    pub fn beta1(&self) -> T {
        self.beta1
    }

    /// Far-field centerline temperature `T_w + A a^2 / (4 D (3+d))` [K].
    pub fn t_inf_limit(&self) -> T {
        self.setup.scale.to_kelvin(self.theta_far)
    }

    /// `T_i - T_inf_limit` [K].
    pub fn amp(&self) -> T {
        self.amp * self.setup.scale.span
    }

    /// Amplitude of the decaying part of `T1a` [K/m].
    pub fn t1a_amp(&self) -> T {
        self.q_amp() * self.setup.scale.span / self.spec.a
    }

    /// Far-field value of `T1a` [K/m].
    pub fn t1a_offset(&self) -> T {
        self.q_offset() * self.setup.scale.span / self.spec.a
    }

    fn q_amp(&self) -> T {
        -T::lit(8.0) / (T::lit(5.0) + self.setup.d) * self.amp
    }

    fn q_offset(&self) -> T {
        -self.setup.g / (T::lit(3.0) + self.setup.d)
    }

    fn theta0(&self, xi: T) -> T {
        self.amp * (-self.beta1 * xi).exp() + self.theta_far
    }

    /// Dimensionless wall gradient `a T1a / span`.
    fn q1(&self, xi: T) -> T {
        self.q_amp() * (-self.beta1 * xi).exp() + self.q_offset()
    }

    /// `(a^2 T20, a^4 T40)` in theta units.
    fn scaled_moments(&self, xi: T) -> (T, T) {
        let d = self.setup.d;
        let g = self.setup.g;
        let q = self.q1(xi);
        let half = T::lit(0.5);
        let m2 = (T::lit(3.0) + d) * half * q + half * g;
        let m4 = -T::lit(3.0) * (T::one() + d) * q - T::lit(3.0) * g;
        (m2, m4)
    }

    /// Centerline radial moments `(T20, T40)` at `x` [K/m^2, K/m^4].
    pub fn moments(&self, x: T) -> (T, T) {
        let (m2, m4) = self.scaled_moments(x / self.spec.a);
        let a2 = self.spec.a * self.spec.a;
        let span = self.setup.scale.span;
        (m2 * span / a2, m4 * span / (a2 * a2))
    }
}

impl<T: Scalar> FieldSampler<T> for WallSolutionO4<T> {
    fn spec(&self) -> &ProblemSpec<T> {
        &self.spec
    }

    fn order(&self) -> u8 {
        4
    }

    fn centerline(&self, x: T) -> T {
        self.setup.scale.to_kelvin(self.theta0(x / self.spec.a))
    }

    fn wall_temperature(&self, _x: T) -> T {
        self.setup.scale.reference
    }

    fn wall_gradient(&self, x: T) -> T {
        self.q1(x / self.spec.a) * self.setup.scale.span / self.spec.a
    }

    fn temperature(&self, x: T, r: T) -> Result<T> {
        check_position(&self.spec, x, r)?;
        let xi = x / self.spec.a;
        let eta2 = (r / self.spec.a).powi(2);
        let (m2, m4) = self.scaled_moments(xi);
        let theta = self.theta0(xi) + eta2 / T::lit(2.0) * m2 + eta2 * eta2 / T::lit(24.0) * m4;
        Ok(self.setup.scale.to_kelvin(theta))
    }
}

/// Minimum separation of the two decay constants.
const DEGENERATE_GAP: f64 = 1e-8;

/// Sixth-order solution:
/// `theta0 = c1 e^{-beta1 xi} + c2 e^{-beta2 xi} + c3` and
/// `a T1a / span = q1 e^{-beta1 xi} + q2 e^{-beta2 xi} + q3`.
#[derive(Debug, Clone, PartialEq)]
pub struct WallSolutionO6<T: Scalar = f64> {
    spec: ProblemSpec<T>,
    setup: WallSetup<T>,
    beta1: T,
    beta2: T,
    c: [T; 3],
    q: [T; 3],
}

/// Builds the sixth-order isothermal-wall solution.
///
/// The two free amplitudes are fixed at the inlet by `T0(0) = T_i` and
/// `u0 dT0/dx = D d2T0/dx2` (the centerline equation with a flat inlet profile).
pub fn solve_wall_order6<T: Scalar>(spec: &ProblemSpec<T>) -> Result<WallSolutionO6<T>> {
    let setup = WallSetup::new(spec)?;
    let roots = solve_quartic_wall_order6(setup.pe, spec.geometry)?;
    let beta1 = roots.beta1;
    let beta2 = roots.beta2.expect("quartic solve returns two constants");
    let gap = beta2 - beta1;
    if gap.abs() < T::lit(DEGENERATE_GAP) {
        return Err(Error::DegenerateRoots { gap: gap.as_f64() });
    }

    let d = setup.d;
    let g = setup.g;
    let pe = setup.pe;
    let three = T::lit(3.0);
    let five = T::lit(5.0);

    let c3 = g / T::lit(12.0) * (five + d) / (five + three * d);
    let k1 = beta1 * (beta1 + pe);
    let k2 = beta2 * (beta2 + pe);
    let denom = k2 - k1;
    let excess = c3 - setup.theta_inlet;
    let c1 = -excess * k2 / denom;
    let c2 = excess * k1 / denom;

    let fast = T::lit(11.0) * (three + d);
    let q1 = T::lit(48.0) * c1 / (beta1 * beta1 - fast);
    let q2 = T::lit(48.0) * c2 / (beta2 * beta2 - fast);
    let q3 = -g * (five + d) / (three * (five + three * d));

    Ok(WallSolutionO6 { spec: *spec, setup, beta1, beta2, c: [c1, c2, c3], q: [q1, q2, q3] })
}

impl<T: Scalar> WallSolutionO6<T> {
    pub fn beta1(&self) -> T {
        self.beta1
    }

    pub fn beta2(&self) -> T {
        self.beta2
    }

    /// Centerline coefficients `(C1, C2, C3)` [K]; `C1 + C2 + C3 = T_i`.
    pub fn c_coefficients(&self) -> [T; 3] {
        let s = self.setup.scale;
        [self.c[0] * s.span, self.c[1] * s.span, s.to_kelvin(self.c[2])]
    }

    /// Wall-gradient coefficients `(D1, D2, D3)` [K/m].
    pub fn d_coefficients(&self) -> [T; 3] {
        let f = self.setup.scale.span / self.spec.a;
        [self.q[0] * f, self.q[1] * f, self.q[2] * f]
    }

    /// `sum_i C_i beta_i (beta_i + pe)` in theta units; vanishes by construction.
    pub fn inlet_flux_balance(&self) -> T {
        let pe = self.setup.pe;
        self.c[0] * self.beta1 * (self.beta1 + pe) + self.c[1] * self.beta2 * (self.beta2 + pe)
    }

    fn decays(&self, xi: T) -> (T, T) {
        ((-self.beta1 * xi).exp(), (-self.beta2 * xi).exp())
    }

    fn theta0(&self, xi: T) -> T {
        let (e1, e2) = self.decays(xi);
        self.c[0] * e1 + self.c[1] * e2 + self.c[2]
    }

    fn q1(&self, xi: T) -> T {
        let (e1, e2) = self.decays(xi);
        self.q[0] * e1 + self.q[1] * e2 + self.q[2]
    }

    fn q1_xixi(&self, xi: T) -> T {
        let (e1, e2) = self.decays(xi);
        self.q[0] * self.beta1 * self.beta1 * e1 + self.q[1] * self.beta2 * self.beta2 * e2
    }

    /// Dimensionless wall derivatives `(a T1a, a^2 T2a, a^3 T3a) / span`.
    fn wall_derivatives(&self, xi: T) -> [T; 3] {
        let d = self.setup.d;
        let g = self.setup.g;
        let q1 = self.q1(xi);
        // isothermal wall: T2a + (d/a) T1a + A/D = 0
        let q2 = -d * q1 - g;
        // radial derivative of the governing equation at the wall, steady form
        let q3 = -self.q1_xixi(xi) - d * q2 + d * q1 - T::lit(2.0) * g;
        [q1, q2, q3]
    }

    /// `(a^2 T20, a^4 T40, a^6 T60)` in theta units, from the wall derivatives.
    fn scaled_moments(&self, xi: T) -> Result<[T; 3]> {
        let one = T::one();
        let matrix = [
            one,
            one / T::lit(6.0),
            one / T::lit(120.0),
            one,
            one / T::lit(2.0),
            one / T::lit(24.0),
            T::zero(),
            one,
            one / T::lit(6.0),
        ];
        let m = solve_dense(&matrix, &self.wall_derivatives(xi))?;
        Ok([m[0], m[1], m[2]])
    }

    /// `a^2 T20 / span` from the closed relation with `T1a` and its second
    /// axial derivative (independent of the 3x3 inversion).
    #[cfg(test)]
    fn t20_closed(&self, xi: T) -> T {
        let d = self.setup.d;
        let eight = T::lit(8.0);
        -self.q1_xixi(xi) / eight
            + (d + T::lit(3.0)) * (d + T::lit(5.0)) / eight * self.q1(xi)
            + (T::lit(5.0) + d) * self.setup.g / eight
    }

    /// Centerline radial moments `(T20, T40, T60)` at `x` [K/m^2, K/m^4, K/m^6].
    pub fn moments(&self, x: T) -> Result<(T, T, T)> {
        let m = self.scaled_moments(x / self.spec.a)?;
        let a2 = self.spec.a * self.spec.a;
        let span = self.setup.scale.span;
        Ok((m[0] * span / a2, m[1] * span / (a2 * a2), m[2] * span / (a2 * a2 * a2)))
    }

    /// `T(x, a) - T_w` [K]. The moments come from the wall-derivative relations
    /// alone, so this measures how consistently the closure reproduces the wall value.
    pub fn wall_residual(&self, x: T) -> Result<T> {
        let t = self.temperature(x, self.spec.a)?;
        Ok(t - self.setup.scale.reference)
    }
}

impl<T: Scalar> FieldSampler<T> for WallSolutionO6<T> {
    fn spec(&self) -> &ProblemSpec<T> {
        &self.spec
    }

    fn order(&self) -> u8 {
        6
    }

    fn centerline(&self, x: T) -> T {
        self.setup.scale.to_kelvin(self.theta0(x / self.spec.a))
    }

    fn wall_temperature(&self, _x: T) -> T {
        self.setup.scale.reference
    }

    fn wall_gradient(&self, x: T) -> T {
        self.q1(x / self.spec.a) * self.setup.scale.span / self.spec.a
    }

    fn temperature(&self, x: T, r: T) -> Result<T> {
        check_position(&self.spec, x, r)?;
        let xi = x / self.spec.a;
        let eta2 = (r / self.spec.a).powi(2);
        let [m2, m4, m6] = self.scaled_moments(xi)?;
        let theta = self.theta0(xi)
            + eta2 / T::lit(2.0) * m2
            + eta2 * eta2 / T::lit(24.0) * m4
            + eta2 * eta2 * eta2 / T::lit(720.0) * m6;
        Ok(self.setup.scale.to_kelvin(theta))
    }
}
