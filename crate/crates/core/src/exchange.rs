//! Steady fourth-order solution for a thin wall exchanging heat with
//! surroundings at `T_inf` (Newton cooling, `k dT/dr = h (T_inf - T)` at `r = a`).
//!
//! The wall temperature obeys a one-dimensional advection-diffusion-reaction
//! equation whose advection speed is `alpha * ubar`, so
//! `Ta = (T_i - T_far) e^{-beta1 xi} + T_far`. Only the decaying mode is kept;
//! the growing root of the characteristic quadratic is discarded.
//!
//! The wall itself has no thermal mass: inner and outer surface temperatures
//! are equal at every `x`.

use crate::charpoly::beta1_exchange_split;
use crate::error::{Error, Result};
use crate::problem::{alpha_from_lambda, dimensionless, one_minus_alpha, ProblemSpec, TemperatureScale, WallBC};
use crate::scalar::Scalar;
use crate::solution::{check_position, FieldSampler};

#[derive(Debug, Clone, PartialEq)]
pub struct ExchangeSolution<T: Scalar = f64> {
    spec: ProblemSpec<T>,
    scale: TemperatureScale<T>,
    pe: T,
    d: T,
    /// Dissipation temperature in theta units.
    g: T,
    lambda: T,
    alpha: T,
    beta1: T,
    /// Far-field wall temperature, theta units.
    theta_far: T,
    amp: T,
    v_adv: T,
}

/// Builds the exchange-wall solution.
///
/// An insulated wall (`h = 0`) with viscous heating has no steady state and
/// returns [`Error::InsulatedWithDissipation`]; without heating it returns the
/// uniform field `T = T_i`.
pub fn solve_exchange_order4<T: Scalar>(spec: &ProblemSpec<T>) -> Result<ExchangeSolution<T>> {
    let groups = dimensionless(spec)?;
    let WallBC::Exchange { h, .. } = spec.bc else {
        return Err(Error::BcMismatch("exchange solution requested for a uniform-temperature wall".into()));
    };
    let lambda = spec.a * h / spec.fluid.k;
    let alpha = alpha_from_lambda(lambda, spec.geometry);
    let one_minus = one_minus_alpha(lambda, spec.geometry);
    let scale = spec.temperature_scale();
    let g = scale.scale_delta(spec.dissipation_temperature());
    let d: T = spec.geometry.d();
    let pe = groups.pe;

    if lambda == T::zero() && g != T::zero() {
        return Err(Error::InsulatedWithDissipation);
    }

    let beta1 = beta1_exchange_split(pe, alpha, one_minus, spec.geometry);
    let three_d = T::lit(3.0) + d;
    let theta_far = if g == T::zero() {
        T::zero()
    } else {
        g * alpha / (one_minus * three_d * three_d)
    };
    let theta_inlet = scale.to_theta(spec.t_inlet);
    // insulated and unheated: nothing changes along the channel
    let (theta_far, amp) = if lambda == T::zero() { (theta_inlet, T::zero()) } else { (theta_far, theta_inlet - theta_far) };

    Ok(ExchangeSolution {
        spec: *spec,
        scale,
        pe,
        d,
        g,
        lambda,
        alpha,
        beta1,
        theta_far,
        amp,
        v_adv: alpha * groups.mean_velocity,
    })
}

impl<T: Scalar> ExchangeSolution<T> {
    pub fn beta1(&self) -> T {
        self.beta1
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn lambda(&self) -> T {
        self.lambda
    }

    /// Effective advection speed of the wall temperature, `alpha * ubar` [m/s].
    pub fn v_adv(&self) -> T {
        self.v_adv
    }

    /// Far-field wall temperature [K].
    pub fn t_far(&self) -> T {
        self.scale.to_kelvin(self.theta_far)
    }

    /// `T_i - T_far` [K].
    pub fn amp(&self) -> T {
        self.amp * self.scale.span
    }

    fn theta_a(&self, xi: T) -> T {
        self.amp * (-self.beta1 * xi).exp() + self.theta_far
    }

    fn theta_a_derivatives(&self, xi: T) -> (T, T) {
        let e = self.amp * (-self.beta1 * xi).exp();
        (-self.beta1 * e, self.beta1 * self.beta1 * e)
    }

    /// Dimensionless wall derivatives `(a T1a, a^2 T2a) / span`.
    fn wall_derivatives(&self, xi: T) -> (T, T) {
        let ta = self.theta_a(xi);
        let (dta, d2ta) = self.theta_a_derivatives(xi);
        let two = T::lit(2.0);
        // surroundings sit at theta = 0
        let q1 = -self.lambda * ta;
        let bracket = two * self.g - self.lambda * d2ta + two * self.pe * dta;
        let q2 = q1 - bracket / (T::lit(3.0) + self.d);
        (q1, q2)
    }

    /// `(a^2 T20, a^4 T40)` in theta units from the top 2x2 block of the
    /// wall/centerline relation.
    fn scaled_moments(&self, xi: T) -> (T, T) {
        let (q1, q2) = self.wall_derivatives(xi);
        let m4 = T::lit(3.0) * (q2 - q1);
        let m2 = q1 - m4 / T::lit(6.0);
        (m2, m4)
    }

    fn theta0(&self, xi: T) -> T {
        let (m2, m4) = self.scaled_moments(xi);
        self.theta_a(xi) - m2 / T::lit(2.0) - m4 / T::lit(24.0)
    }

    /// Centerline radial moments `(T20, T40)` [K/m^2, K/m^4].
    pub fn moments(&self, x: T) -> (T, T) {
        let (m2, m4) = self.scaled_moments(x / self.spec.a);
        let a2 = self.spec.a * self.spec.a;
        (m2 * self.scale.span / a2, m4 * self.scale.span / (a2 * a2))
    }

    /// Third radial derivative at the wall, `T3a` [K/m^3], from the steady
    /// wall-mapped equations. Not used by the reconstruction; for a
    /// fourth-order field it must equal `a T40`.
    pub fn t3a(&self, x: T) -> T {
        let xi = x / self.spec.a;
        let (dta, d2ta) = self.theta_a_derivatives(xi);
        let three = T::lit(3.0);
        let bracket = T::lit(6.0) * self.g - three * self.lambda * d2ta + T::lit(6.0) * self.pe * dta;
        let q3 = -bracket / (three + self.d);
        q3 * self.scale.span / self.spec.a.powi(3)
    }
}

impl<T: Scalar> FieldSampler<T> for ExchangeSolution<T> {
    fn spec(&self) -> &ProblemSpec<T> {
        &self.spec
    }

    fn order(&self) -> u8 {
        4
    }

    fn centerline(&self, x: T) -> T {
        self.scale.to_kelvin(self.theta0(x / self.spec.a))
    }

    fn wall_temperature(&self, x: T) -> T {
        self.scale.to_kelvin(self.theta_a(x / self.spec.a))
    }

    /// `(h/k)(T_inf - Ta)`.
    fn wall_gradient(&self, x: T) -> T {
        self.wall_derivatives(x / self.spec.a).0 * self.scale.span / self.spec.a
    }

    fn temperature(&self, x: T, r: T) -> Result<T> {
        check_position(&self.spec, x, r)?;
        let xi = x / self.spec.a;
        let eta2 = (r / self.spec.a).powi(2);
        let (m2, m4) = self.scaled_moments(xi);
        let theta = self.theta0(xi) + eta2 / T::lit(2.0) * m2 + eta2 * eta2 / T::lit(24.0) * m4;
        Ok(self.scale.to_kelvin(theta))
    }
}
