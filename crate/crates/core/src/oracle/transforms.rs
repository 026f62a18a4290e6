//! Numerical Fourier and Wigner transforms of grid-sampled wavefunctions.
//!
//! Both use plain trapezoid sums: for smooth integrands that have decayed
//! below ~1e-12 at the grid edges the trapezoid rule is spectrally accurate
//! (all Euler–Maclaurin boundary terms vanish), so no adaptive machinery is
//! needed here.

use num_complex::Complex64;

use super::{Grid1D, OracleError};

/// ψ̂(p) = (2π)^{-1/2} ∫ ψ(x) e^{−ipx} dx from the grid samples.
///
/// |ψ̂(p)|² is the momentum density for the convention used throughout.
pub fn fourier_transform_numeric(samples: &[Complex64], grid: &Grid1D, p: f64) -> Complex64 {
    debug_assert_eq!(samples.len(), grid.len());
    let dx = grid.spacing();
    let mut acc = Complex64::new(0.0, 0.0);
    for (i, x) in grid.points().enumerate() {
        let w = if i == 0 || i == grid.len() - 1 { 0.5 } else { 1.0 };
        acc += w * samples[i] * Complex64::from_polar(1.0, -p * x);
    }
    acc * dx / (2.0 * std::f64::consts::PI).sqrt()
}

/// Wigner transform W(x, p) = (1/π) ∫ ψ*(x+y) ψ(x−y) e^{2ipy} dy from the
/// grid samples. x is snapped to the nearest grid node so x ± y stay on the
/// grid; points outside the grid are rejected.
pub fn wigner_transform_numeric(
    samples: &[Complex64],
    grid: &Grid1D,
    x: f64,
    p: f64,
) -> Result<f64, OracleError> {
    debug_assert_eq!(samples.len(), grid.len());
    let j0 = grid.nearest_index(x).ok_or(OracleError::OutOfRange { x })?;
    let dy = grid.spacing();
    let reach = j0.min(grid.len() - 1 - j0);
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..=(2 * reach) {
        let off = k as i64 - reach as i64;
        let w = if k == 0 || k == 2 * reach { 0.5 } else { 1.0 };
        let plus = samples[(j0 as i64 + off) as usize];
        let minus = samples[(j0 as i64 - off) as usize];
        let y = off as f64 * dy;
        acc += w * plus.conj() * minus * Complex64::from_polar(1.0, 2.0 * p * y);
    }
    Ok((acc * dy).re / std::f64::consts::PI)
}
