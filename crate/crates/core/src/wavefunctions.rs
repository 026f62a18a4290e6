//! The wavepacket ψ, its legacy-form evaluation, the position/momentum/Wigner
//! distributions in Cartesian and polar parametrizations, and analytic
//! Gaussian moments.
//!
//! ψ₀ is evaluated as (u/π)^{1/4} e^{ip(x−q) − z(x−q)²/2}: the phase
//! convention under which ψ = e^{iφ}ψ₀ satisfies 2iψ_t + ψ_xx − x²ψ = 0
//! with the closed-form φ(t), and under which the legacy and modern
//! parametrizations agree exactly, phase included. The polar-coordinate
//! distribution forms are stored corrected (numerator 1−r₀², prefactors
//! f∓/√π and 1/π, negative cross term with f₊/f₋ roles fixed by equality
//! with the Cartesian forms); [`crate::report`] keeps the uncorrected
//! variants for the machine-checked comparison table.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::dynamics::{breathing_widths, snapshot_at};
use crate::states::{
    modern_from_legacy, DiskPoint, LegacyParams, ModernInitialData, PhasePoint, StateError,
    StateSnapshot,
};

/// ψ₀(x) = (u/π)^{1/4} e^{ip(x−q) − ½z(x−q)²} for the given snapshot
/// (global phase not included). |ψ₀|² = √(u/π) e^{−u(x−q)²}.
pub fn psi0(x: f64, snapshot: StateSnapshot) -> Complex64 {
    let PhasePoint { q, p } = snapshot.phase_point;
    let (u, v) = (snapshot.pneuma.u(), snapshot.pneuma.v());
    let dx = x - q;
    let exponent = Complex64::new(
        -0.5 * u * dx * dx,
        p * dx - 0.5 * v * dx * dx,
    );
    (u / PI).powf(0.25) * exponent.exp()
}

/// ψ = e^{iφ}ψ₀ evaluated from a snapshot carrying its own global phase.
pub fn psi_from_snapshot(x: f64, snapshot: StateSnapshot) -> Complex64 {
    Complex64::from_polar(1.0, snapshot.phi) * psi0(x, snapshot)
}

/// The phase-complete wavefunction at (x, t) evolved from modern initial data.
pub fn psi(x: f64, init: ModernInitialData, t: f64) -> Complex64 {
    psi_from_snapshot(x, snapshot_at(init, t))
}

/// Legacy-form wavepacket
/// ψ = e^{i(αx² + δx + κ + γ)} √(β/√π) e^{−(βx+ε)²/2}
/// evaluated from an instantaneous parameter set (β > 0 after
/// sign-normalization; β = 0 rejected).
pub fn eval_legacy_waveform(x: f64, params: LegacyParams) -> Result<Complex64, StateError> {
    let params = crate::states::normalize_legacy_signs(params)?;
    let LegacyParams { alpha, beta, gamma, delta, epsilon, kappa } = params;
    let g = beta * x + epsilon;
    let exponent = Complex64::new(
        -0.5 * g * g,
        alpha * x * x + delta * x + kappa + gamma,
    );
    Ok((beta / PI.sqrt()).sqrt() * exponent.exp())
}

/// Legacy route to ψ(x, t): evolve the six parameters from initial data
/// (α₀, β₀, δ₀, ε₀) and evaluate the legacy waveform. Agrees with [`psi`]
/// through the conversion maps pointwise, phase included.
pub fn psi_legacy(x: f64, init: LegacyParams, t: f64) -> Result<Complex64, StateError> {
    let init = crate::states::normalize_legacy_signs(init)?;
    let evolved = crate::dynamics::legacy_trajectory(init, t)?;
    eval_legacy_waveform(x, evolved)
}

/// P_x(x) = √(u/π) e^{−u(x−q)²}; equals |ψ₀(x)|² exactly.
pub fn position_density(x: f64, snapshot: StateSnapshot) -> f64 {
    let u = snapshot.pneuma.u();
    let dx = x - snapshot.phase_point.q;
    (u / PI).sqrt() * (-u * dx * dx).exp()
}

/// P_p(p) = √(u/π) e^{−u(p−p(t))²/|z|²} / |z|.
pub fn momentum_density(p: f64, snapshot: StateSnapshot) -> f64 {
    let u = snapshot.pneuma.u();
    let z_sq = snapshot.pneuma.z().norm_sqr();
    let dp = p - snapshot.phase_point.p;
    (u / PI).sqrt() * (-u * dp * dp / z_sq).exp() / z_sq.sqrt()
}

/// Wigner distribution
/// P(x, p) = (1/π) exp(−[(p − p(t) + v(x−q))² + u²(q−x)²]/u).
///
/// Normalized to 1 (the quadratic form has unit determinant); the marginals
/// are [`position_density`] and [`momentum_density`]; peak value 1/π at the
/// phase-space center.
pub fn wigner(x: f64, p: f64, snapshot: StateSnapshot) -> f64 {
    let PhasePoint { q, p: pc } = snapshot.phase_point;
    let (u, v) = (snapshot.pneuma.u(), snapshot.pneuma.v());
    let dx = x - q;
    let dp = p - pc + v * dx;
    (-(dp * dp + u * u * dx * dx) / u).exp() / PI
}

/// Polar form of P_x: (f₋/√π) e^{−f₋²(x−q)²}, with the corrected f₋.
/// Pointwise equal to [`position_density`].
pub fn polar_position_density(
    x: f64,
    r0: f64,
    theta0: f64,
    center: PhasePoint,
    t: f64,
) -> Result<f64, StateError> {
    let w = checked_widths(r0, theta0, t)?;
    let dx = x - center.q;
    Ok(w.f_minus / PI.sqrt() * (-w.f_minus * w.f_minus * dx * dx).exp())
}

/// Polar form of P_p: (f₊/√π) e^{−f₊²(p−p(t))²}, with the corrected f₊.
/// Pointwise equal to [`momentum_density`].
pub fn polar_momentum_density(
    p: f64,
    r0: f64,
    theta0: f64,
    center: PhasePoint,
    t: f64,
) -> Result<f64, StateError> {
    let w = checked_widths(r0, theta0, t)?;
    let dp = p - center.p;
    Ok(w.f_plus / PI.sqrt() * (-w.f_plus * w.f_plus * dp * dp).exp())
}

/// Polar form of the Wigner distribution:
/// (1/π) exp(−(x−q)²/f₊² − (p−p(t))²/f₋² − 4r₀(x−q)(p−p(t))sin(θ₀−2t)/(1−r₀²)).
///
/// The prefactor, the cross-term sign, the angle direction and the f₊/f₋
/// roles are all fixed by pointwise equality with the Cartesian [`wigner`].
pub fn polar_wigner(
    x: f64,
    p: f64,
    r0: f64,
    theta0: f64,
    center: PhasePoint,
    t: f64,
) -> Result<f64, StateError> {
    let w = checked_widths(r0, theta0, t)?;
    let dx = x - center.q;
    let dp = p - center.p;
    let cross = 4.0 * r0 * (theta0 - 2.0 * t).sin() / (1.0 - r0 * r0);
    let exponent = -dx * dx / (w.f_plus * w.f_plus) - dp * dp / (w.f_minus * w.f_minus)
        - cross * dx * dp;
    Ok(exponent.exp() / PI)
}

fn checked_widths(
    r0: f64,
    theta0: f64,
    t: f64,
) -> Result<crate::dynamics::BreathingWidths, StateError> {
    if !r0.is_finite() || !(0.0..1.0).contains(&r0) {
        return Err(StateError::RadiusOutOfRange(r0));
    }
    let zeta0 = DiskPoint::from_polar(r0, theta0)?;
    Ok(breathing_widths(zeta0, t))
}

/// First and second Gaussian moments of the state in x and p.
///
/// For this pure Gaussian family var_x·var_p − cov_xp² = 1/4 always
/// (Robertson–Schrödinger saturation).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianMoments {
    pub mean_x: f64,
    pub mean_p: f64,
    pub var_x: f64,
    pub var_p: f64,
    pub cov_xp: f64,
}

impl GaussianMoments {
    /// var_x·var_p − cov_xp², equal to 1/4 for every snapshot.
    pub fn rs_invariant(&self) -> f64 {
        self.var_x * self.var_p - self.cov_xp * self.cov_xp
    }

    /// Δx·Δp = √(var_x·var_p); equals 1/2 exactly when the chirp vanishes.
    pub fn uncertainty_product(&self) -> f64 {
        (self.var_x * self.var_p).sqrt()
    }
}

/// Closed-form moments: var_x = 1/(2u), var_p = (u²+v²)/(2u), cov = −v/(2u).
pub fn analytic_moments(snapshot: StateSnapshot) -> GaussianMoments {
    let (u, v) = (snapshot.pneuma.u(), snapshot.pneuma.v());
    GaussianMoments {
        mean_x: snapshot.phase_point.q,
        mean_p: snapshot.phase_point.p,
        var_x: 1.0 / (2.0 * u),
        var_p: (u * u + v * v) / (2.0 * u),
        cov_xp: -v / (2.0 * u),
    }
}

/// Convenience: moments evolved from modern initial data.
pub fn moments_at(init: ModernInitialData, t: f64) -> GaussianMoments {
    analytic_moments(snapshot_at(init, t))
}

/// Convenience: snapshot for legacy initial data evolved to time t
/// (legacy trajectory route).
pub fn legacy_snapshot_at(init: LegacyParams, t: f64) -> Result<StateSnapshot, StateError> {
    let evolved = crate::dynamics::legacy_trajectory(
        crate::states::normalize_legacy_signs(init)?,
        t,
    )?;
    modern_from_legacy(evolved)
}
