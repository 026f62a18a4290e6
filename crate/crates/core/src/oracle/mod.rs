//! Independent numerical machinery that verifies the closed forms:
//! adaptive quadrature, finite-difference residuals of the evolution
//! equation, a Crank–Nicolson reference propagator, numerical
//! Wigner/Fourier transforms, and numerical moments.
//!
//! Nothing here calls closed-form trajectory code except to obtain an
//! initial sample at t = 0; every oracle works from function values or
//! grid samples alone.

mod grid;
mod moments;
mod propagator;
mod quadrature;
mod residual;
mod transforms;

pub use grid::Grid1D;
pub use moments::numeric_moments;
pub use propagator::{crank_nicolson_propagate, grid_distance, grid_norm};
pub use quadrature::quadrature;
pub use residual::{schrodinger_residual, ResidualReport};
pub use transforms::{fourier_transform_numeric, wigner_transform_numeric};

use thiserror::Error;

/// Errors raised by the numerical oracles.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("invalid grid: {reason}")]
    InvalidGrid { reason: &'static str },
    #[error(
        "quadrature did not converge within depth limit: best estimate {best_estimate}, \
         estimated error {error_estimate}"
    )]
    QuadratureNotConverged { best_estimate: f64, error_estimate: f64 },
    #[error("non-finite integrand value at x = {x}")]
    NonFiniteIntegrand { x: f64 },
    #[error("wavepacket leaked to the grid boundary at t = {t}: |psi| = {amplitude}")]
    BoundaryLeak { t: f64, amplitude: f64 },
    #[error("sample length {got} does not match grid size {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("time step must be positive and finite: dt = {0}")]
    InvalidStep(f64),
    #[error("evaluation point x = {x} lies outside the sampled grid")]
    OutOfRange { x: f64 },
}
