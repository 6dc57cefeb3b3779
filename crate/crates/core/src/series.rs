//! Classical Graetz eigenseries for parallel plates without axial conduction.
//!
//! `theta(xi1) = sum_n A_n exp(-lambda_n^2 xi1)` with `xi1 = xi / pe` and
//! `theta = (T_w - T0) / (T_w - T_i)` on the centerline. Only valid for `d = 0`
//! and `pe -> inf`; other configurations may still be evaluated for comparison.
//!
//! Near `xi1 = 0` the truncated series oscillates; eight terms sum to 0.9745
//! there instead of 1.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Tabulated `(lambda_n, A_n)`, parallel plates, centerline, n = 0..7
/// (Shah & London, *Laminar Flow Forced Convection in Ducts*, 1978).
pub const GRAETZ_PLATES: [(f64, f64); 8] = [
    (1.6816, 1.2005),
    (5.6699, -0.2991),
    (9.6683, 0.1608),
    (13.6677, -0.1074),
    (17.6674, 0.0796),
    (21.6672, -0.0628),
    (25.6671, 0.0512),
    (29.6670, -0.0483),
];

/// Centerline theta from the first `n_terms` tabulated modes.
pub fn theta_series<T: Scalar>(xi1: T, n_terms: usize) -> Result<T> {
    if n_terms > GRAETZ_PLATES.len() {
        return Err(Error::NoMoreEigenvalues { requested: n_terms, available: GRAETZ_PLATES.len() });
    }
    if n_terms == 0 {
        return Err(Error::InvalidParameter("n_terms must be at least 1".into()));
    }
    if !(xi1 >= T::zero()) {
        return Err(Error::OutOfDomain(format!("xi1 = {xi1} must be >= 0")));
    }
    Ok(GRAETZ_PLATES[..n_terms]
        .iter()
        .map(|&(lambda, coeff)| T::lit(coeff) * (-T::lit(lambda * lambda) * xi1).exp())
        .fold(T::zero(), |acc, v| acc + v))
}

/// True when the series is being used outside its range (tube geometry or finite `pe`).
pub fn series_applicable(d: u8, pe: f64) -> bool {
    d == 0 && pe.is_infinite()
}
