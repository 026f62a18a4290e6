//! Numerical moments of a grid-sampled wavefunction.
//!
//! Position moments are plain quadrature over |ψ|²; momentum moments use the
//! FFT spectral derivative (the grid samples are treated as one period of
//! length n·Δx, legitimate because the state has decayed below ~1e-12 at the
//! edges). All moments are normalized by the numerical ∫|ψ|².

use num_complex::Complex64;
use rustfft::FftPlanner;

use super::Grid1D;
use crate::wavefunctions::GaussianMoments;

/// Mean, variance and symmetrized covariance of x and p from samples alone.
pub fn numeric_moments(samples: &[Complex64], grid: &Grid1D) -> GaussianMoments {
    debug_assert_eq!(samples.len(), grid.len());
    let dx = grid.spacing();
    let n = samples.len();

    let norm: f64 = samples.iter().map(|c| c.norm_sqr()).sum::<f64>() * dx;

    let mut mean_x = 0.0;
    for (i, x) in grid.points().enumerate() {
        mean_x += x * samples[i].norm_sqr();
    }
    mean_x = mean_x * dx / norm;

    let mut var_x = 0.0;
    for (i, x) in grid.points().enumerate() {
        var_x += (x - mean_x) * (x - mean_x) * samples[i].norm_sqr();
    }
    var_x = var_x * dx / norm;

    let dpsi = spectral_derivative(samples, n as f64 * dx);

    // <p> = Im sum psi* psi' dx
    let mut mean_p = 0.0;
    let mut p2 = 0.0;
    let mut xp = 0.0;
    for (i, x) in grid.points().enumerate() {
        mean_p += (samples[i].conj() * dpsi[i]).im;
        p2 += dpsi[i].norm_sqr();
        xp += x * (samples[i].conj() * dpsi[i]).im;
    }
    mean_p = mean_p * dx / norm;
    let var_p = p2 * dx / norm - mean_p * mean_p;
    // <(xp + px)/2> = Im sum psi* x psi' dx
    let cov_xp = xp * dx / norm - mean_x * mean_p;

    GaussianMoments { mean_x, mean_p, var_x, var_p, cov_xp }
}

fn spectral_derivative(samples: &[Complex64], period: f64) -> Vec<Complex64> {
    let n = samples.len();
    let mut planner = FftPlanner::new();
    let fft = planner.plan_fft_forward(n);
    let ifft = planner.plan_fft_inverse(n);

    let mut buf = samples.to_vec();
    fft.process(&mut buf);
    let tau = 2.0 * std::f64::consts::PI;
    for (j, value) in buf.iter_mut().enumerate() {
        let j_signed = if 2 * j < n { j as i64 } else { j as i64 - n as i64 };
        // zero the Nyquist mode: its derivative contribution is ambiguous
        let k = if n % 2 == 0 && j == n / 2 { 0.0 } else { tau * j_signed as f64 / period };
        *value *= Complex64::new(0.0, k);
    }
    ifft.process(&mut buf);
    let scale = 1.0 / n as f64;
    for value in buf.iter_mut() {
        *value *= scale;
    }
    buf
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::snapshot_at;
    use crate::states::{DiskPoint, ModernInitialData};
    use crate::wavefunctions::{analytic_moments, psi};
    use approx::assert_abs_diff_eq;

    #[test]
    fn ground_state_moments() {
        let grid = Grid1D::new(-12.0, 12.0, 1024).unwrap();
        let init = ModernInitialData::new(0.0, 0.0, DiskPoint::origin()).unwrap();
        let m = numeric_moments(&grid.sample(|x| psi(x, init, 0.0)), &grid);
        assert_abs_diff_eq!(m.var_x, 0.5, epsilon = 1e-8);
        assert_abs_diff_eq!(m.var_p, 0.5, epsilon = 1e-8);
        assert_abs_diff_eq!(m.mean_x, 0.0, epsilon = 1e-10);
        assert_abs_diff_eq!(m.cov_xp, 0.0, epsilon = 1e-10);
    }

    #[test]
    fn squeezed_snapshot_matches_analytic() {
        // u = 4, v = -1 at q = 2, p = 1: cov = 1/8
        let grid = Grid1D::new(-12.0, 12.0, 2048).unwrap();
        let legacy = crate::states::LegacyParams::initial(0.5, 2.0, -1.0, -4.0);
        let init = crate::states::modern_initial_from_legacy(legacy).unwrap();
        let samples = grid.sample(|x| psi(x, init, 0.0));
        let m = numeric_moments(&samples, &grid);
        let a = analytic_moments(snapshot_at(init, 0.0));
        assert_abs_diff_eq!(m.mean_x, a.mean_x, epsilon = 1e-8);
        assert_abs_diff_eq!(m.mean_p, a.mean_p, epsilon = 1e-8);
        assert_abs_diff_eq!(m.var_x, a.var_x, epsilon = 1e-7);
        assert_abs_diff_eq!(m.var_p, a.var_p, epsilon = 1e-7);
        assert_abs_diff_eq!(m.cov_xp, 0.125, epsilon = 1e-7);
        // Robertson-Schrodinger saturation seen by the oracle
        assert_abs_diff_eq!(m.rs_invariant(), 0.25, epsilon = 1e-7);
    }
}
