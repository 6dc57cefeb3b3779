//! Reduced boundary-function solutions of steady laminar convective heat
//! transfer in a channel or tube.
//!
//! The inlet is at uniform temperature and the flow is fully developed
//! (parabolic). The models keep axial conduction and viscous dissipation.
//! The full two-dimensional field is replaced by a few functions of the axial
//! coordinate (centerline temperature, wall temperature, wall gradient and
//! radial Taylor moments). Those functions have closed forms built from the
//! roots of a small characteristic polynomial.
//!
//! Modules:
//!
//! - [`problem`]: physical inputs, validation, dimensionless groups.
//! - [`charpoly`]: axial decay constants (quadratics and the sixth-order quartic).
//! - [`wall`]: prescribed wall temperature, fourth- and sixth-order profiles.
//! - [`exchange`]: Newton cooling to surroundings, fourth order.
//! - [`series`]: tabulated eigenseries reference for plates at high Peclet number.
//! - [`fdm`]: finite-difference reference solver for the full problem.
//!
//! Every numerical routine is generic over [`Scalar`] (`f32` or `f64`). The
//! structs default their scalar parameter to `f64`, so `graetzkit::ProblemSpec`
//! is the double-precision type.
//!
//! ```
//! use graetzkit::{solve_wall_order6, FieldSampler, FluidProperties, Geometry, ProblemSpec, WallBC};
//!
//! let water: FluidProperties = FluidProperties { k: 0.6, rho: 1000.0, cp: 4180.0, mu: 1e-3 };
//! let spec = ProblemSpec::new(Geometry::Tube, 0.01, 1e-4, water, 350.0, WallBC::UniformWall { t_wall: 300.0 })?;
//! let sol = solve_wall_order6(&spec)?;
//! assert!((sol.centerline(0.0) - 350.0).abs() < 1e-9);
//! assert!(sol.centerline(1.0) < 350.0);
//! # Ok::<(), graetzkit::Error>(())
//! ```

pub mod charpoly;
pub mod error;
pub mod exchange;
pub mod fdm;
pub mod numeric;
pub mod problem;
pub mod scalar;
pub mod series;
pub mod solution;
pub mod wall;

pub use charpoly::{
    asymptote, beta1_exchange, beta1_wall_order4, solve_quartic_wall_order6, wall_order6_quartic,
    wall_order6_residual, Asymptote, DecayConstants,
};
pub use error::{Error, Result};
pub use exchange::{solve_exchange_order4, ExchangeSolution};
pub use fdm::{extract_boundary_functions, fdm_solve, AdvectionScheme, BoundaryProfiles, FdmConfig, FdmSolution};
pub use problem::{
    alpha_from_lambda, dimensionless, velocity, DimensionlessGroups, FluidProperties, Geometry, ProblemSpec,
    TemperatureScale, WallBC,
};
pub use scalar::Scalar;
pub use series::{series_applicable, theta_series, GRAETZ_PLATES};
pub use solution::{reconstruct_field, BoundarySolution, FieldSampler};
pub use wall::{solve_wall_order4, solve_wall_order6, WallSolutionO4, WallSolutionO6};

/// Solves with the requested radial order (4 or 6) for either wall condition.
///
/// The exchange wall only has a fourth-order model; asking for order 6 there
/// is an [`Error::InvalidParameter`].
pub fn solve<T: Scalar>(spec: &ProblemSpec<T>, order: u8) -> Result<BoundarySolution<T>> {
    match (spec.bc, order) {
        (WallBC::UniformWall { .. }, 4) => solve_wall_order4(spec).map(BoundarySolution::WallOrder4),
        (WallBC::UniformWall { .. }, 6) => solve_wall_order6(spec).map(BoundarySolution::WallOrder6),
        (WallBC::Exchange { .. }, 4) => solve_exchange_order4(spec).map(BoundarySolution::Exchange),
        (WallBC::Exchange { .. }, 6) => {
            Err(Error::InvalidParameter("the exchange wall model is fourth order only".into()))
        }
        (_, other) => Err(Error::InvalidParameter(format!("order must be 4 or 6, got {other}"))),
    }
}
