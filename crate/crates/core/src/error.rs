use thiserror::Error;

/// Errors raised by the solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("position out of domain: {0}")]
    OutOfDomain(String),

    #[error("boundary condition mismatch: {0}")]
    BcMismatch(String),

    #[error("characteristic quartic has {found} negative real roots (expected 2) at pe={pe}, d={d}")]
    RootStructure { pe: f64, d: u8, found: usize },

    #[error("decay constants collide (|beta2 - beta1| = {gap:e})")]
    DegenerateRoots { gap: f64 },

    #[error("insulated wall (lambda = 0) with viscous dissipation has no steady state")]
    InsulatedWithDissipation,

    #[error("only {available} tabulated eigenvalues, {requested} requested")]
    NoMoreEigenvalues { requested: usize, available: usize },

    #[error("no convergence after {iterations} sweeps (relative residual {residual:e})")]
    NonConvergence {
        iterations: usize,
        residual: f64,
        /// Relative residual sampled along the iteration.
        history: Vec<f64>,
    },

    #[error("invalid regime: {0}")]
    InvalidRegime(String),
}

pub type Result<T> = std::result::Result<T, Error>;
