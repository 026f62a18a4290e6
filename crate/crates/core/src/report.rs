//! Uncorrected ("printed") variants of the polar-form distributions and of
//! the ψ₀ phase convention.
//!
//! These are kept only as evidence for the adjudication table emitted by
//! [`crate::verify`]: each printed variant is evaluated against the verified
//! Cartesian forms (or against the Schrödinger residual) so the
//! printed-vs-corrected comparison is machine-checked rather than asserted.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::states::{PhasePoint, StateSnapshot};

/// Printed width factors f±: numerator 1 − r₀ instead of the corrected 1 − r₀².
pub fn printed_breathing_widths(r0: f64, theta0: f64, t: f64) -> (f64, f64) {
    let theta = theta0 + 2.0 * t;
    let num = 1.0 - r0;
    let base = 1.0 + r0 * r0;
    let cross = 2.0 * r0 * theta.cos();
    ((num / (base - cross)).sqrt(), (num / (base + cross)).sqrt())
}

/// Printed polar P_x: prefactor 1/√π and the printed f₋.
pub fn printed_polar_position_density(
    x: f64,
    r0: f64,
    theta0: f64,
    center: PhasePoint,
    t: f64,
) -> f64 {
    let (f_minus, _) = printed_breathing_widths(r0, theta0, t);
    let dx = x - center.q;
    (-f_minus * f_minus * dx * dx).exp() / PI.sqrt()
}

/// Printed polar P_p: prefactor 1/√π and the printed f₊.
pub fn printed_polar_momentum_density(
    p: f64,
    r0: f64,
    theta0: f64,
    center: PhasePoint,
    t: f64,
) -> f64 {
    let (_, f_plus) = printed_breathing_widths(r0, theta0, t);
    let dp = p - center.p;
    (-f_plus * f_plus * dp * dp).exp() / PI.sqrt()
}

/// Printed polar Wigner form: prefactor 1/√π, x-term over f₋², p-term over
/// f₊², positive cross term.
pub fn printed_polar_wigner(
    x: f64,
    p: f64,
    r0: f64,
    theta0: f64,
    center: PhasePoint,
    t: f64,
) -> f64 {
    let (f_minus, f_plus) = printed_breathing_widths(r0, theta0, t);
    let dx = x - center.q;
    let dp = p - center.p;
    let cross = 4.0 * r0 * (theta0 + 2.0 * t).sin() / (1.0 - r0 * r0);
    let exponent =
        -dx * dx / (f_minus * f_minus) - dp * dp / (f_plus * f_plus) + cross * dx * dp;
    exponent.exp() / PI.sqrt()
}

/// ψ₀ with the printed phase convention e^{i(x − q/2)p}; differs from the
/// implemented e^{ip(x−q)} by the x-independent phase e^{ipq/2}, which makes
/// e^{iφ}ψ₀ fail the evolution equation by d(pq/2)/dt.
pub fn psi0_printed_phase(x: f64, snapshot: StateSnapshot) -> Complex64 {
    let PhasePoint { q, p } = snapshot.phase_point;
    let (u, v) = (snapshot.pneuma.u(), snapshot.pneuma.v());
    let dx = x - q;
    let exponent = Complex64::new(
        -0.5 * u * dx * dx,
        (x - 0.5 * q) * p - 0.5 * v * dx * dx,
    );
    (u / PI).powf(0.25) * exponent.exp()
}
