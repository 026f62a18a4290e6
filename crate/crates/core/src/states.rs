//! Domain types for both parametrizations, the Cayley transform in both
//! directions, and the exact bidirectional conversion maps between the
//! legacy and modern parameter sets.

use num_complex::Complex64;
use thiserror::Error;

/// Domain errors raised by constructors and conversions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum StateError {
    #[error("squeeze parameter lies outside the admissible disk: |zeta| = {modulus} >= {limit}")]
    ZetaOutsideDisk { modulus: f64, limit: f64 },
    #[error("Gaussian precision must be positive: u = {0}")]
    NonPositiveU(f64),
    #[error("beta = 0 does not describe a normalizable wavepacket")]
    ZeroBeta,
    #[error("beta must be positive here (sign-normalize first): beta = {0}")]
    NonPositiveBeta(f64),
    #[error("non-finite value in {context}")]
    NonFinite { context: &'static str },
    #[error("r0 must lie in [0, 1): got {0}")]
    RadiusOutOfRange(f64),
}

/// A classical phase-space point (q, p); under the oscillator flow it
/// rotates rigidly with period 2π.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhasePoint {
    pub q: f64,
    pub p: f64,
}

impl PhasePoint {
    pub fn new(q: f64, p: f64) -> Result<Self, StateError> {
        if !(q.is_finite() && p.is_finite()) {
            return Err(StateError::NonFinite { context: "PhasePoint" });
        }
        Ok(Self { q, p })
    }

    /// q² + p², conserved exactly by the rotation.
    pub fn radius_squared(self) -> f64 {
        self.q * self.q + self.p * self.p
    }
}

/// A complex squeeze parameter ζ in the open unit disk; under the oscillator
/// flow it rotates as e^{2it}ζ₀ (period π, twice the phase-space frequency).
///
/// Construction rejects |ζ| ≥ 1 − 1e-12: the Cayley image u = Re (1+ζ)/(1−ζ)
/// degenerates as ζ approaches the boundary, and the margin keeps u bounded
/// away from 0 and the map overflow-free.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint {
    zeta: Complex64,
}

impl DiskPoint {
    /// Admissible moduli are |ζ| < 1 − BOUNDARY_MARGIN.
    pub const BOUNDARY_MARGIN: f64 = 1e-12;

    pub fn new(zeta: Complex64) -> Result<Self, StateError> {
        if !(zeta.re.is_finite() && zeta.im.is_finite()) {
            return Err(StateError::NonFinite { context: "DiskPoint" });
        }
        let modulus = zeta.norm();
        if modulus >= 1.0 - Self::BOUNDARY_MARGIN {
            return Err(StateError::ZetaOutsideDisk {
                modulus,
                limit: 1.0 - Self::BOUNDARY_MARGIN,
            });
        }
        Ok(Self { zeta })
    }

    pub fn from_polar(r: f64, theta: f64) -> Result<Self, StateError> {
        if !theta.is_finite() {
            return Err(StateError::NonFinite { context: "DiskPoint" });
        }
        Self::new(Complex64::from_polar(r, theta))
    }

    /// ζ = 0, the coherent-state fixed point.
    pub fn origin() -> Self {
        Self { zeta: Complex64::new(0.0, 0.0) }
    }

    // Rotation preserves |zeta| analytically; bypasses the re-check so a
    // point at the admissible rim cannot be rejected by a 1-ulp wobble.
    pub(crate) fn new_unchecked(zeta: Complex64) -> Self {
        debug_assert!(zeta.norm() < 1.0);
        Self { zeta }
    }

    pub fn zeta(self) -> Complex64 {
        self.zeta
    }

    /// r = |ζ|.
    pub fn radius(self) -> f64 {
        self.zeta.norm()
    }

    /// θ = arg ζ (zero at the origin).
    pub fn angle(self) -> f64 {
        self.zeta.arg()
    }
}

/// The Cayley image z = u + iv of a disk point, with u > 0.
///
/// u is the Gaussian precision of the wavepacket (var_x = 1/(2u)) and v its
/// quadratic chirp coefficient.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PneumaPoint {
    u: f64,
    v: f64,
}

impl PneumaPoint {
    pub fn new(u: f64, v: f64) -> Result<Self, StateError> {
        if !(u.is_finite() && v.is_finite()) {
            return Err(StateError::NonFinite { context: "PneumaPoint" });
        }
        if u <= 0.0 {
            return Err(StateError::NonPositiveU(u));
        }
        Ok(Self { u, v })
    }

    pub(crate) fn new_unchecked(u: f64, v: f64) -> Self {
        debug_assert!(u > 0.0);
        Self { u, v }
    }

    pub fn u(self) -> f64 {
        self.u
    }

    pub fn v(self) -> f64 {
        self.v
    }

    /// z = u + iv.
    pub fn z(self) -> Complex64 {
        Complex64::new(self.u, self.v)
    }
}

/// The legacy six-parameter description of the wavepacket,
/// ψ = e^{i(αx² + δx + κ + γ)} √(β/√π) e^{−(βx+ε)²/2}.
///
/// β > 0 is the normalization convention adopted everywhere internally;
/// [`normalize_legacy_signs`] maps a β < 0 set onto the equivalent β > 0 set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LegacyParams {
    pub alpha: f64,
    pub beta: f64,
    /// Phase contribution with its own closed-form trajectory (radians).
    pub gamma: f64,
    pub delta: f64,
    pub epsilon: f64,
    /// Remaining phase contribution (radians); only κ + γ is physical.
    pub kappa: f64,
}

impl LegacyParams {
    /// Initial data (α₀, β₀, δ₀, ε₀); the phase parameters start at γ = κ = 0.
    pub fn initial(alpha0: f64, beta0: f64, delta0: f64, epsilon0: f64) -> Self {
        Self {
            alpha: alpha0,
            beta: beta0,
            gamma: 0.0,
            delta: delta0,
            epsilon: epsilon0,
            kappa: 0.0,
        }
    }

    /// κ + γ, the only phase combination that enters ψ.
    pub fn phase_sum(self) -> f64 {
        self.kappa + self.gamma
    }

    fn check_finite(self) -> Result<(), StateError> {
        let all = [self.alpha, self.beta, self.gamma, self.delta, self.epsilon, self.kappa];
        if all.iter().all(|x| x.is_finite()) {
            Ok(())
        } else {
            Err(StateError::NonFinite { context: "LegacyParams" })
        }
    }
}

/// A fully evaluated instantaneous state from which ψ, the densities and the
/// Wigner distribution are computable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateSnapshot {
    pub phase_point: PhasePoint,
    pub pneuma: PneumaPoint,
    /// Global phase of ψ = e^{iφ}ψ₀ (radians).
    pub phi: f64,
}

/// Initial data of the modern parametrization: (q₀, p₀, ζ₀).
///
/// The global-phase constant is fixed so that the corresponding legacy
/// initial data has κ₀ = γ₀ = 0, i.e. φ(0) = p₀q₀ + ½v₀q₀².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModernInitialData {
    pub q0: f64,
    pub p0: f64,
    pub zeta0: DiskPoint,
}

impl ModernInitialData {
    pub fn new(q0: f64, p0: f64, zeta0: DiskPoint) -> Result<Self, StateError> {
        if !(q0.is_finite() && p0.is_finite()) {
            return Err(StateError::NonFinite { context: "ModernInitialData" });
        }
        Ok(Self { q0, p0, zeta0 })
    }
}

/// Cayley transform z = (1+ζ)/(1−ζ), mapping the open unit disk onto the
/// right half-plane. u = Re z > 0 is guaranteed by the disk invariant.
pub fn cayley(zeta: DiskPoint) -> PneumaPoint {
    let one = Complex64::new(1.0, 0.0);
    let z = (one + zeta.zeta()) / (one - zeta.zeta());
    PneumaPoint::new_unchecked(z.re, z.im)
}

/// Inverse Cayley transform ζ = (z−1)/(z+1).
///
/// Mathematically |ζ| < 1 always holds for u > 0; the error fires only for
/// degenerate pneuma points whose image lands inside the disk's rejection
/// margin (u → 0 or |z| → ∞).
pub fn inverse_cayley(z: PneumaPoint) -> Result<DiskPoint, StateError> {
    let one = Complex64::new(1.0, 0.0);
    let zeta = (z.z() - one) / (z.z() + one);
    DiskPoint::new(zeta)
}

/// Modern → legacy conversion:
/// α = −v/2, β = √u, δ = p + vq, ε = −√u·q, κ + γ = φ − q(p + qv/2).
///
/// Only the sum κ + γ is determined by the snapshot; this bare conversion
/// stores the whole sum in κ and sets γ = 0. Converting along a trajectory
/// (where γ has its own closed form) is [`crate::dynamics::legacy_from_modern_at`].
pub fn legacy_from_modern(snapshot: StateSnapshot) -> LegacyParams {
    let PhasePoint { q, p } = snapshot.phase_point;
    let (u, v) = (snapshot.pneuma.u(), snapshot.pneuma.v());
    let beta = u.sqrt();
    LegacyParams {
        alpha: -v / 2.0,
        beta,
        gamma: 0.0,
        delta: p + v * q,
        epsilon: -beta * q,
        kappa: snapshot.phi - q * (p + q * v / 2.0),
    }
}

/// Legacy → modern conversion:
/// q = −ε/β, p = δ − 2αε/β, u = β², v = −2α, φ = κ + γ + ε(αε − βδ)/β².
///
/// Accepts β < 0 (sign-normalizes internally); rejects β = 0.
pub fn modern_from_legacy(params: LegacyParams) -> Result<StateSnapshot, StateError> {
    let params = normalize_legacy_signs(params)?;
    let LegacyParams { alpha, beta, gamma, delta, epsilon, kappa } = params;
    let u = beta * beta;
    let q = -epsilon / beta;
    let p = delta - 2.0 * alpha * epsilon / beta;
    let phi = kappa + gamma + epsilon * (alpha * epsilon - beta * delta) / u;
    Ok(StateSnapshot {
        phase_point: PhasePoint { q, p },
        pneuma: PneumaPoint::new_unchecked(u, -2.0 * alpha),
        phi,
    })
}

/// Modern initial data corresponding to legacy initial data (α₀, β₀, δ₀, ε₀)
/// with the κ₀ = γ₀ = 0 convention: ζ₀ = (z₀−1)/(z₀+1) with z₀ = β₀² − 2iα₀.
pub fn modern_initial_from_legacy(params: LegacyParams) -> Result<ModernInitialData, StateError> {
    let snapshot = modern_from_legacy(params)?;
    let zeta0 = inverse_cayley(snapshot.pneuma)?;
    ModernInitialData::new(snapshot.phase_point.q, snapshot.phase_point.p, zeta0)
}

/// Simultaneous sign change of β and ε leaves the wavepacket invariant, so
/// β can always be chosen positive. Idempotent; rejects β = 0.
pub fn normalize_legacy_signs(params: LegacyParams) -> Result<LegacyParams, StateError> {
    params.check_finite()?;
    if params.beta == 0.0 {
        return Err(StateError::ZeroBeta);
    }
    if params.beta < 0.0 {
        Ok(LegacyParams { beta: -params.beta, epsilon: -params.epsilon, ..params })
    } else {
        Ok(params)
    }
}
