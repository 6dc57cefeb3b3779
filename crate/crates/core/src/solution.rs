//! Common interface of the closed-form boundary-function solutions.

use crate::error::{Error, Result};
use crate::exchange::ExchangeSolution;
use crate::problem::ProblemSpec;
use crate::scalar::Scalar;
use crate::wall::{WallSolutionO4, WallSolutionO6};

/// Evaluates a reconstructed steady temperature field.
///
/// All positions are in metres and temperatures in kelvin. The field is even in
/// `r` by construction (only even radial powers appear).
pub trait FieldSampler<T: Scalar> {
    fn spec(&self) -> &ProblemSpec<T>;

    /// Radial expansion order (4 or 6).
    fn order(&self) -> u8;

    /// Centerline temperature `T(x, 0)`.
    fn centerline(&self, x: T) -> T;

    /// Wall temperature `T(x, a)`.
    fn wall_temperature(&self, x: T) -> T;

    /// Radial gradient at the wall `dT/dr(x, a)` [K/m].
    fn wall_gradient(&self, x: T) -> T;

    /// Temperature at `(x, r)`; `r` is the distance from the centerline.
    fn temperature(&self, x: T, r: T) -> Result<T>;
}

pub(crate) fn check_position<T: Scalar>(spec: &ProblemSpec<T>, x: T, r: T) -> Result<()> {
    if !(x >= T::zero()) {
        return Err(Error::OutOfDomain(format!("x = {x} must be >= 0")));
    }
    if !(r >= T::zero() && r <= spec.a) {
        return Err(Error::OutOfDomain(format!("r = {r} outside [0, {}]", spec.a)));
    }
    Ok(())
}

/// Any of the closed-form solutions, tagged by boundary type and order.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundarySolution<T: Scalar = f64> {
    WallOrder4(WallSolutionO4<T>),
    WallOrder6(WallSolutionO6<T>),
    Exchange(ExchangeSolution<T>),
}

impl<T: Scalar> BoundarySolution<T> {
    fn inner(&self) -> &dyn FieldSampler<T> {
        match self {
            BoundarySolution::WallOrder4(s) => s,
            BoundarySolution::WallOrder6(s) => s,
            BoundarySolution::Exchange(s) => s,
        }
    }
}

impl<T: Scalar> FieldSampler<T> for BoundarySolution<T> {
    fn spec(&self) -> &ProblemSpec<T> {
        self.inner().spec()
    }

    fn order(&self) -> u8 {
        self.inner().order()
    }

    fn centerline(&self, x: T) -> T {
        self.inner().centerline(x)
    }

    fn wall_temperature(&self, x: T) -> T {
        self.inner().wall_temperature(x)
    }

    fn wall_gradient(&self, x: T) -> T {
        self.inner().wall_gradient(x)
    }

    fn temperature(&self, x: T, r: T) -> Result<T> {
        self.inner().temperature(x, r)
    }
}

/// Temperature of a reconstructed field at `(x, r)`.
pub fn reconstruct_field<T: Scalar, S: FieldSampler<T> + ?Sized>(sol: &S, x: T, r: T) -> Result<T> {
    sol.temperature(x, r)
}
