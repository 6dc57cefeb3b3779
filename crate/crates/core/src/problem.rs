//! Problem definition: geometry, fluid, wall condition and the derived groups.
//!
//! Solvers work on the dimensionless temperature
//! `theta = (T - T_ref) / (T_i - T_ref)` and the axial coordinate `xi = x / a`.
//! `T_ref` is the wall temperature for an isothermal wall and the surrounding
//! temperature for the exchange wall. When `T_i == T_ref` the span falls back
//! to one kelvin, so `theta` is simply `T - T_ref`.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Parallel plates (half gap `a`) or circular tube (radius `a`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Geometry {
    Plates,
    Tube,
}

impl Geometry {
    /// Integer flag `d`: 0 for plates, 1 for a tube.
    pub fn flag(self) -> u8 {
        match self {
            Geometry::Plates => 0,
            Geometry::Tube => 1,
        }
    }

    pub fn from_flag(d: u8) -> Result<Self> {
        match d {
            0 => Ok(Geometry::Plates),
            1 => Ok(Geometry::Tube),
            other => Err(Error::InvalidParameter(format!("geometry flag must be 0 or 1, got {other}"))),
        }
    }

    /// `d` as a scalar, for use inside formulas.
    pub fn d<T: Scalar>(self) -> T {
        T::from_u8(self.flag()).unwrap()
    }
}

/// Constant fluid properties, SI units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FluidProperties<T = f64> {
    /// Thermal conductivity [W/(m K)].
    pub k: T,
    /// Density [kg/m^3].
    pub rho: T,
    /// Heat capacity [J/(kg K)].
    pub cp: T,
    /// Dynamic viscosity [Pa s]. Zero disables viscous heating.
    pub mu: T,
}

impl<T: Scalar> FluidProperties<T> {
    /// Thermal diffusivity `k / (rho cp)`.
    pub fn diffusivity(&self) -> T {
        self.k / (self.rho * self.cp)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("k", self.k), ("rho", self.rho), ("cp", self.cp)] {
            if !(v.is_finite() && v > T::zero()) {
                return Err(Error::InvalidParameter(format!("fluid {name} must be finite and > 0, got {v}")));
            }
        }
        // mu = 0 is accepted as the "no dissipation" switch.
        if !(self.mu.is_finite() && self.mu >= T::zero()) {
            return Err(Error::InvalidParameter(format!("fluid mu must be finite and >= 0, got {}", self.mu)));
        }
        Ok(())
    }
}

/// Thermal condition on the channel wall.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WallBC<T = f64> {
    /// Wall held at `t_wall` [K].
    UniformWall { t_wall: T },
    /// Newton cooling to surroundings at `t_inf` [K] through a thin wall,
    /// coefficient `h` [W/(m^2 K)].
    Exchange { h: T, t_inf: T },
}

impl<T: Scalar> WallBC<T> {
    /// Reference temperature used to normalize the solution.
    pub fn reference_temperature(&self) -> T {
        match *self {
            WallBC::UniformWall { t_wall } => t_wall,
            WallBC::Exchange { t_inf, .. } => t_inf,
        }
    }
}

/// Full dimensional problem statement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProblemSpec<T = f64> {
    pub geometry: Geometry,
    /// Half gap or tube radius [m].
    pub a: T,
    /// Centerline (maximum) velocity [m/s].
    pub u0: T,
    pub fluid: FluidProperties<T>,
    /// Inlet temperature [K].
    pub t_inlet: T,
    pub bc: WallBC<T>,
}

/// Dimensionless groups derived from a [`ProblemSpec`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionlessGroups<T = f64> {
    /// Peclet number `u0 a / D`.
    pub pe: T,
    /// Wall exchange number `a h / k` (exchange wall only).
    pub lambda: Option<T>,
    /// Blend factor `1 / (1 + lambda / (3 + d))` (exchange wall only).
    pub alpha: Option<T>,
    /// Viscous dissipation rate `4 mu u0^2 / (rho cp a^2)` [K/s].
    pub dissipation_rate: T,
    /// Mean velocity `2 u0 / (3 + d)` [m/s].
    pub mean_velocity: T,
}

impl<T: Scalar> ProblemSpec<T> {
    /// Builds and validates a spec.
    pub fn new(
        geometry: Geometry,
        a: T,
        u0: T,
        fluid: FluidProperties<T>,
        t_inlet: T,
        bc: WallBC<T>,
    ) -> Result<Self> {
        let spec = Self { geometry, a, u0, fluid, t_inlet, bc };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.a.is_finite() && self.a > T::zero()) {
            return Err(Error::InvalidParameter(format!("a must be finite and > 0, got {}", self.a)));
        }
        if !(self.u0.is_finite() && self.u0 >= T::zero()) {
            return Err(Error::InvalidParameter(format!("u0 must be finite and >= 0, got {}", self.u0)));
        }
        self.fluid.validate()?;
        if !self.t_inlet.is_finite() {
            return Err(Error::InvalidParameter("inlet temperature must be finite".into()));
        }
        match self.bc {
            WallBC::UniformWall { t_wall } if !t_wall.is_finite() => {
                Err(Error::InvalidParameter("wall temperature must be finite".into()))
            }
            WallBC::Exchange { h, t_inf } if !(h.is_finite() && h >= T::zero() && t_inf.is_finite()) => {
                Err(Error::InvalidParameter(format!("exchange wall needs finite h >= 0 and finite t_inf, got h={h}")))
            }
            _ => Ok(()),
        }
    }

    pub fn diffusivity(&self) -> T {
        self.fluid.diffusivity()
    }

    pub fn peclet(&self) -> T {
        self.u0 * self.a / self.diffusivity()
    }

    /// Temperature scale of viscous heating, `A a^2 / D` [K].
    pub fn dissipation_temperature(&self) -> T {
        T::lit(4.0) * self.fluid.mu * self.u0 * self.u0 / self.fluid.k
    }

    /// Reference temperature and span used by the dimensionless solvers.
    pub fn temperature_scale(&self) -> TemperatureScale<T> {
        TemperatureScale::new(self.bc.reference_temperature(), self.t_inlet)
    }
}

/// Maps kelvin to the internal dimensionless temperature and back.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TemperatureScale<T = f64> {
    pub reference: T,
    /// `T_i - T_ref`, or one kelvin when that difference is zero.
    pub span: T,
}

impl<T: Scalar> TemperatureScale<T> {
    pub fn new(reference: T, t_inlet: T) -> Self {
        let diff = t_inlet - reference;
        let span = if diff == T::zero() { T::one() } else { diff };
        Self { reference, span }
    }

    pub fn to_theta(&self, t: T) -> T {
        (t - self.reference) / self.span
    }

    pub fn to_kelvin(&self, theta: T) -> T {
        self.reference + theta * self.span
    }

    /// Converts a temperature difference [K] into theta units.
    pub fn scale_delta(&self, dt: T) -> T {
        dt / self.span
    }
}

/// Derived groups. `lambda`/`alpha` are present only for the exchange wall.
pub fn dimensionless<T: Scalar>(spec: &ProblemSpec<T>) -> Result<DimensionlessGroups<T>> {
    spec.validate()?;
    let d: T = spec.geometry.d();
    let three_d = T::lit(3.0) + d;
    let (lambda, alpha) = match spec.bc {
        WallBC::Exchange { h, .. } => {
            let lambda = spec.a * h / spec.fluid.k;
            (Some(lambda), Some(alpha_from_lambda(lambda, spec.geometry)))
        }
        WallBC::UniformWall { .. } => (None, None),
    };
    Ok(DimensionlessGroups {
        pe: spec.peclet(),
        lambda,
        alpha,
        dissipation_rate: T::lit(4.0) * spec.fluid.mu * spec.u0 * spec.u0
            / (spec.fluid.rho * spec.fluid.cp * spec.a * spec.a),
        mean_velocity: T::lit(2.0) * spec.u0 / three_d,
    })
}

/// `alpha = 1 / (1 + lambda / (3 + d))`, written as `(3 + d) / (3 + d + lambda)`.
pub fn alpha_from_lambda<T: Scalar>(lambda: T, geometry: Geometry) -> T {
    let three_d = T::lit(3.0) + geometry.d::<T>();
    if lambda.is_infinite() {
        return T::zero();
    }
    three_d / (three_d + lambda)
}

/// `1 - alpha` without cancellation: `lambda / (3 + d + lambda)`.
pub(crate) fn one_minus_alpha<T: Scalar>(lambda: T, geometry: Geometry) -> T {
    if lambda.is_infinite() {
        return T::one();
    }
    lambda / (T::lit(3.0) + geometry.d::<T>() + lambda)
}

/// Poiseuille profile `u0 (1 - r^2 / a^2)`.
pub fn velocity<T: Scalar>(spec: &ProblemSpec<T>, r: T) -> Result<T> {
    if !(r >= T::zero() && r <= spec.a) {
        return Err(Error::OutOfDomain(format!("r = {r} outside [0, {}]", spec.a)));
    }
    let eta = r / spec.a;
    Ok(spec.u0 * (T::one() - eta * eta))
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn mean_velocity_by_geometry() {
        let tube = wall_spec(2.0, 1, 0.0, 1.0, 0.0);
        assert_eq!(dimensionless(&tube).unwrap().mean_velocity, 1.0);
        let plates = wall_spec(3.0, 0, 0.0, 1.0, 0.0);
        assert_eq!(dimensionless(&plates).unwrap().mean_velocity, 2.0);
    }

    #[test]
    fn insulated_exchange_has_unit_alpha() {
        let spec = exchange_spec(1.0, 0, 0.0, 0.0, 1.0, 0.0);
        let g = dimensionless(&spec).unwrap();
        assert_eq!(g.lambda, Some(0.0));
        assert_eq!(g.alpha, Some(1.0));
    }

    #[test]
    fn uniform_wall_has_no_exchange_groups() {
        let g = dimensionless(&wall_spec(1.0, 0, 0.0, 1.0, 0.0)).unwrap();
        assert!(g.lambda.is_none() && g.alpha.is_none());
    }

    #[test]
    fn zero_viscosity_means_no_dissipation() {
        let g = dimensionless(&wall_spec(5.0, 1, 0.0, 1.0, 0.0)).unwrap();
        assert_eq!(g.dissipation_rate, 0.0);
    }

    #[test]
    fn dissipation_rate_and_temperature_are_consistent() {
        let fluid = FluidProperties::<f64> { k: 0.6, rho: 1000.0, cp: 4186.0, mu: 1e-3 };
        let spec = ProblemSpec::new(Geometry::Tube, 1e-3, 0.5, fluid, 300.0, WallBC::UniformWall { t_wall: 350.0 })
            .unwrap();
        let g = dimensionless(&spec).unwrap();
        let via_rate = g.dissipation_rate * spec.a * spec.a / spec.diffusivity();
        assert!((via_rate - spec.dissipation_temperature()).abs() < 1e-15 * via_rate.abs().max(1e-300));
    }

    #[test]
    fn velocity_profile_values() {
        let spec = wall_spec(4.0, 0, 0.0, 1.0, 0.0);
        assert_eq!(velocity(&spec, 0.0).unwrap(), 4.0);
        assert_eq!(velocity(&spec, 1.0).unwrap(), 0.0);
        assert_eq!(velocity(&spec, 0.5).unwrap(), 3.0);
        assert!(matches!(velocity(&spec, 1.5), Err(Error::OutOfDomain(_))));
        assert!(matches!(velocity(&spec, -0.1), Err(Error::OutOfDomain(_))));
    }

    #[test]
    fn invalid_specs_are_rejected() {
        let fluid = unit_fluid(0.0);
        let bc = WallBC::UniformWall { t_wall: 0.0 };
        assert!(ProblemSpec::new(Geometry::Plates, 0.0, 1.0, fluid, 1.0, bc).is_err());
        assert!(ProblemSpec::new(Geometry::Plates, 1.0, -1.0, fluid, 1.0, bc).is_err());
        assert!(ProblemSpec::new(Geometry::Plates, 1.0, 1.0, fluid, f64::NAN, bc).is_err());
        let bad_fluid = FluidProperties { k: 0.0, ..fluid };
        assert!(ProblemSpec::new(Geometry::Plates, 1.0, 1.0, bad_fluid, 1.0, bc).is_err());
        let bad_h = WallBC::Exchange { h: -1.0, t_inf: 0.0 };
        assert!(ProblemSpec::new(Geometry::Plates, 1.0, 1.0, fluid, 1.0, bad_h).is_err());
        assert!(Geometry::from_flag(2).is_err());
    }

    #[test]
    fn temperature_scale_falls_back_to_kelvin() {
        let s = TemperatureScale::new(300.0, 300.0);
        assert_eq!(s.span, 1.0);
        assert_eq!(s.to_theta(305.0), 5.0);
        let s = TemperatureScale::new(300.0, 350.0);
        assert_eq!(s.to_theta(350.0), 1.0);
        assert_eq!(s.to_kelvin(0.5), 325.0);
    }

    /// Composite Simpson rule, used as an independent check of the mean velocity.
    fn simpson(f: impl Fn(f64) -> f64, lo: f64, hi: f64, n: usize) -> f64 {
        let h = (hi - lo) / n as f64;
        let mut s = f(lo) + f(hi);
        for i in 1..n {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            s += w * f(lo + i as f64 * h);
        }
        s * h / 3.0
    }

    #[test]
    fn velocity_averages_to_mean_velocity() {
        for d in [0u8, 1] {
            let spec = ProblemSpec::new(
                Geometry::from_flag(d).unwrap(),
                0.02,
                1.7,
                unit_fluid(0.0),
                1.0,
                WallBC::UniformWall { t_wall: 0.0 },
            )
            .unwrap();
            let a = spec.a;
            let mean = if d == 0 {
                simpson(|r| velocity(&spec, r).unwrap(), 0.0, a, 64) / a
            } else {
                simpson(|r| velocity(&spec, r).unwrap() * 2.0 * r, 0.0, a, 64) / (a * a)
            };
            let ubar = dimensionless(&spec).unwrap().mean_velocity;
            assert!(((mean - ubar) / ubar).abs() < 1e-12, "d={d}: {mean} vs {ubar}");
            assert_eq!(ubar / spec.u0, 2.0 / (3.0 + d as f64));
        }
    }

    proptest! {
        #[test]
        fn alpha_decreases_with_lambda(l1 in 0.0f64..1e6, dl in 1e-3f64..1e3, d in 0u8..2) {
            let g = Geometry::from_flag(d).unwrap();
            let a1 = alpha_from_lambda(l1, g);
            let a2 = alpha_from_lambda(l1 + dl, g);
            prop_assert!(a2 < a1);
            prop_assert!(a1 > 0.0 && a1 <= 1.0);
            prop_assert!((a1 + one_minus_alpha(l1, g) - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn alpha_vanishes_for_infinite_exchange() {
        assert_eq!(alpha_from_lambda(f64::INFINITY, Geometry::Tube), 0.0);
        assert!(alpha_from_lambda(1e12, Geometry::Plates) < 1e-11);
    }
}
