//! Closed-form time evolution in both parametrizations.
//!
//! The whole dynamics consists of two circular motions: (q, p) rotates with
//! period 2π and ζ rotates with double frequency, ζ(t) = e^{2it}ζ₀. Pulled
//! through the Cayley transform the latter produces the period-π "breathing"
//! of the Gaussian width, and the legacy six-parameter trajectories follow
//! from the conversion maps.
//!
//! All phase formulas are evaluated from sin/cos building blocks only, never
//! tan, so t = π/2 + kπ are regular points; arctan-type terms use a
//! continuous (unwrapped) branch.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::states::{
    cayley, DiskPoint, LegacyParams, ModernInitialData, PhasePoint, StateError, StateSnapshot,
};

/// q(t) = q₀cos t + p₀sin t, p(t) = p₀cos t − q₀sin t.
pub fn evolve_phase_point(init: PhasePoint, t: f64) -> PhasePoint {
    let (s, c) = t.sin_cos();
    PhasePoint {
        q: init.q * c + init.p * s,
        p: init.p * c - init.q * s,
    }
}

/// ζ(t) = e^{−2it}ζ₀; |ζ| is preserved, period π.
///
/// The rotation direction follows from the evolution equation: the Gaussian
/// ansatz forces ż = i(1 − z²), which the Cayley transform conjugates to
/// ζ̇ = −2iζ. The squeeze ellipse therefore co-rotates with the (q, p)
/// point (clockwise) at twice its frequency.
pub fn evolve_disk(init: DiskPoint, t: f64) -> DiskPoint {
    let (s, c) = (2.0 * t).sin_cos();
    DiskPoint::new_unchecked(init.zeta() * Complex64::new(c, -s))
}

/// Closed-form pneuma-plane trajectory:
/// u(t) = u₀/E(t), v(t) = [2v₀cos 2t + (1−u₀²−v₀²)sin 2t]/(2E(t)),
/// with E(t) = u₀²sin²t + (cos t − v₀sin t)².
///
/// Equals the Cayley-conjugated disk rotation.
pub fn pneuma_trajectory(init: crate::states::PneumaPoint, t: f64) -> crate::states::PneumaPoint {
    let (u0, v0) = (init.u(), init.v());
    let (s, c) = t.sin_cos();
    let w = c - v0 * s;
    let denom = u0 * u0 * s * s + w * w;
    let (s2, c2) = (2.0 * t).sin_cos();
    let u = u0 / denom;
    let v = (2.0 * v0 * c2 + (1.0 - u0 * u0 - v0 * v0) * s2) / (2.0 * denom);
    crate::states::PneumaPoint::new_unchecked(u, v)
}

/// Continuous branch of arctan(u₀ tan t / (1 − v₀ tan t)) for u₀ > 0.
///
/// The curve t ↦ (cos t − v₀sin t, u₀sin t) winds counterclockwise around
/// the origin, advancing by exactly π per half-period, so the angle is
/// m·π + atan2(u₀ sin τ, cos τ − v₀ sin τ) with t = m·π + τ, τ ∈ [−π/2, π/2).
/// Continuous in t and exactly t for (u₀, v₀) = (1, 0).
pub fn half_plane_angle(u0: f64, v0: f64, t: f64) -> f64 {
    debug_assert!(u0 > 0.0);
    let m = (t / PI).round();
    let tau = t - m * PI;
    let (s, c) = tau.sin_cos();
    m * PI + (u0 * s).atan2(c - v0 * s)
}

/// Global phase of ψ = e^{iφ}ψ₀:
/// φ(t) = p₀q₀cos²t + ¼(p₀²−q₀²)sin 2t − ½·arctan-term + ½v₀q₀²,
/// with the arctan term unwrapped by [`half_plane_angle`]. φ(0) = p₀q₀ + ½v₀q₀².
pub fn global_phase(init: ModernInitialData, t: f64) -> f64 {
    let z0 = cayley(init.zeta0);
    let (u0, v0) = (z0.u(), z0.v());
    let (q0, p0) = (init.q0, init.p0);
    let c = t.cos();
    let s2 = (2.0 * t).sin();
    p0 * q0 * c * c + 0.25 * (p0 * p0 - q0 * q0) * s2 - 0.5 * half_plane_angle(u0, v0, t)
        + 0.5 * v0 * q0 * q0
}

/// Fully evaluated state at time t: rotated phase point, Cayley image of the
/// rotated squeeze parameter, and the global phase.
pub fn snapshot_at(init: ModernInitialData, t: f64) -> StateSnapshot {
    let phase_point = evolve_phase_point(PhasePoint { q: init.q0, p: init.p0 }, t);
    let pneuma = cayley(evolve_disk(init.zeta0, t));
    StateSnapshot {
        phase_point,
        pneuma,
        phi: global_phase(init, t),
    }
}

/// Legacy six-parameter trajectories from initial data (α₀, β₀, δ₀, ε₀);
/// γ and κ start at 0 (input γ/κ are ignored). Requires β₀ > 0.
///
/// The shared denominator D(t) = β₀⁴sin²t + (2α₀sin t + cos t)² is computed
/// once so the six components stay bit-consistent. γ uses the same unwrapped
/// branch as the global phase (u₀ = β₀², v₀ = −2α₀).
pub fn legacy_trajectory(init: LegacyParams, t: f64) -> Result<LegacyParams, StateError> {
    let LegacyParams { alpha: a0, beta: b0, delta: d0, epsilon: e0, .. } = init;
    if !(a0.is_finite() && b0.is_finite() && d0.is_finite() && e0.is_finite()) {
        return Err(StateError::NonFinite { context: "legacy_trajectory" });
    }
    if b0 <= 0.0 {
        return Err(StateError::NonPositiveBeta(b0));
    }
    let (s, c) = t.sin_cos();
    let (s2, c2) = (2.0 * t).sin_cos();
    let b0_2 = b0 * b0;
    let b0_4 = b0_2 * b0_2;
    let w = 2.0 * a0 * s + c;
    let denom = b0_4 * s * s + w * w;
    // cannot vanish for beta0 != 0: both terms are zero only at sin t = cos t = 0
    assert!(denom >= 1e-300, "degenerate trajectory denominator D(t) = {denom}");
    let sqrt_denom = denom.sqrt();

    let alpha = (a0 * c2 + s2 * (b0_4 + 4.0 * a0 * a0 - 1.0) / 4.0) / denom;
    let beta = b0 / sqrt_denom;
    let gamma = -0.5 * half_plane_angle(b0_2, -2.0 * a0, t);
    let delta = (d0 * w + e0 * b0_2 * b0 * s) / denom;
    let epsilon = (e0 * w - b0 * d0 * s) / sqrt_denom;
    let kappa = (s * s * (e0 * b0_2 * (a0 * e0 - b0 * d0) - a0 * d0 * d0)
        + 0.25 * s2 * (e0 * e0 * b0_2 - d0 * d0))
        / denom;

    Ok(LegacyParams { alpha, beta, gamma, delta, epsilon, kappa })
}

/// Modern → legacy conversion along a trajectory: γ takes its closed-form
/// value −½·arctan-term and κ absorbs the remainder of the determined sum
/// κ + γ = φ − q(p + qv/2).
pub fn legacy_from_modern_at(init: ModernInitialData, t: f64) -> LegacyParams {
    let snapshot = snapshot_at(init, t);
    let bare = crate::states::legacy_from_modern(snapshot);
    let z0 = cayley(init.zeta0);
    let gamma = -0.5 * half_plane_angle(z0.u(), z0.v(), t);
    LegacyParams {
        gamma,
        kappa: bare.phase_sum() - gamma,
        ..bare
    }
}

/// Breathing width factors, stored in the corrected form
/// f∓² = (1 − r₀²)/(1 + r₀² ∓ 2r₀cos(θ₀ − 2t)),
/// which makes f₋² = u(t) and f₊² = u(t)/|z(t)|² exact. Period π in t.
/// θ₀ − 2t is the angle of the evolved ζ(t); see [`evolve_disk`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BreathingWidths {
    /// Position-width factor: P_x ∝ e^{−f₋²(x−q)²}.
    pub f_minus: f64,
    /// Momentum-width factor: P_p ∝ e^{−f₊²(p−p(t))²}.
    pub f_plus: f64,
}

/// Corrected polar width factors of the breathing wavepacket.
pub fn breathing_widths(zeta0: DiskPoint, t: f64) -> BreathingWidths {
    let r = zeta0.radius();
    let theta = zeta0.angle() - 2.0 * t;
    let num = 1.0 - r * r;
    let base = 1.0 + r * r;
    let cross = 2.0 * r * theta.cos();
    BreathingWidths {
        f_minus: (num / (base - cross)).sqrt(),
        f_plus: (num / (base + cross)).sqrt(),
    }
}

/// The diagnostic value 4r₀/(1+r₀)² associated with the elliptical Wigner
/// contours. Equals the *square* of the standard eccentricity of an ellipse
/// with axis ratio (1−r₀)/(1+r₀); see [`wigner_axis_ratio`].
pub fn eccentricity(r0: f64) -> Result<f64, StateError> {
    check_radius(r0)?;
    Ok(4.0 * r0 / ((1.0 + r0) * (1.0 + r0)))
}

/// Axis ratio b/a = (1−r₀)/(1+r₀) of the Wigner level-set ellipse, reported
/// alongside [`eccentricity`]; the standard eccentricity is √(1 − (b/a)²).
pub fn wigner_axis_ratio(r0: f64) -> Result<f64, StateError> {
    check_radius(r0)?;
    Ok((1.0 - r0) / (1.0 + r0))
}

fn check_radius(r0: f64) -> Result<(), StateError> {
    if !r0.is_finite() || !(0.0..1.0).contains(&r0) {
        return Err(StateError::RadiusOutOfRange(r0));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{inverse_cayley, PneumaPoint};
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, TAU};

    #[test]
    fn quarter_period_rotation() {
        let p = evolve_phase_point(PhasePoint { q: 1.0, p: 0.0 }, FRAC_PI_2);
        assert_abs_diff_eq!(p.q, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.p, -1.0, epsilon = 1e-15);
    }

    #[test]
    fn full_period_rotation() {
        let p0 = PhasePoint { q: 0.7, p: -1.3 };
        let p = evolve_phase_point(p0, TAU);
        assert_abs_diff_eq!(p.q, p0.q, epsilon = 1e-15);
        assert_abs_diff_eq!(p.p, p0.p, epsilon = 1e-15);
    }

    #[test]
    fn rotation_matrix_example() {
        // (1, 2) by t = pi/4: (3/sqrt2, 1/sqrt2)
        let p = evolve_phase_point(PhasePoint { q: 1.0, p: 2.0 }, PI / 4.0);
        assert_abs_diff_eq!(p.q, 2.121320343559643, epsilon = 1e-14);
        assert_abs_diff_eq!(p.p, 0.7071067811865476, epsilon = 1e-14);
    }

    #[test]
    fn disk_rotation_examples() {
        let half = DiskPoint::new(Complex64::new(0.5, 0.0)).unwrap();
        let z = evolve_disk(half, FRAC_PI_2);
        assert_abs_diff_eq!(z.zeta().re, -0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(z.zeta().im, 0.0, epsilon = 1e-15);
        let z = evolve_disk(half, PI);
        assert_abs_diff_eq!(z.zeta().re, 0.5, epsilon = 1e-15);

        // 0.3 e^{i pi/4} rotated by pi/8 lands on the real axis
        let d = DiskPoint::from_polar(0.3, PI / 4.0).unwrap();
        let z = evolve_disk(d, PI / 8.0);
        assert_abs_diff_eq!(z.zeta().re, 0.3, epsilon = 1e-15);
        assert_abs_diff_eq!(z.zeta().im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn pneuma_coherent_fixed_point() {
        for &t in &[0.0, 0.3, FRAC_PI_2, 1.9, PI, 5.0] {
            let z = pneuma_trajectory(PneumaPoint::new(1.0, 0.0).unwrap(), t);
            assert_abs_diff_eq!(z.u(), 1.0, epsilon = 1e-14);
            assert_abs_diff_eq!(z.v(), 0.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn pneuma_breathing_extremes() {
        let z0 = PneumaPoint::new(3.0, 0.0).unwrap();
        let z = pneuma_trajectory(z0, FRAC_PI_2);
        assert_abs_diff_eq!(z.u(), 1.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(z.v(), 0.0, epsilon = 1e-15);
        let z = pneuma_trajectory(z0, PI);
        assert_abs_diff_eq!(z.u(), 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(z.v(), 0.0, epsilon = 1e-12);
    }

    // independent route: Cayley-conjugated disk rotation
    fn pneuma_via_disk(z0: PneumaPoint, t: f64) -> PneumaPoint {
        cayley(evolve_disk(inverse_cayley(z0).unwrap(), t))
    }

    #[test]
    fn pneuma_matches_disk_conjugation_near_singular_times() {
        let z0 = PneumaPoint::new(2.7, -1.4).unwrap();
        for &t in &[FRAC_PI_2 - 1e-9, FRAC_PI_2, FRAC_PI_2 + 1e-9, 3.0 * FRAC_PI_2] {
            let a = pneuma_trajectory(z0, t);
            let b = pneuma_via_disk(z0, t);
            assert!((a.z() - b.z()).norm() <= 1e-11 * b.z().norm());
        }
    }

    #[test]
    fn ground_state_legacy_trajectory() {
        let init = LegacyParams::initial(0.0, 1.0, 0.0, 0.0);
        for &t in &[0.0, 0.4, FRAC_PI_2, 2.0, PI, 4.0, TAU] {
            let p = legacy_trajectory(init, t).unwrap();
            assert_abs_diff_eq!(p.alpha, 0.0, epsilon = 1e-15);
            assert_abs_diff_eq!(p.beta, 1.0, epsilon = 1e-15);
            assert_abs_diff_eq!(p.gamma, -t / 2.0, epsilon = 1e-14);
            assert_abs_diff_eq!(p.delta, 0.0, epsilon = 1e-15);
            assert_abs_diff_eq!(p.epsilon, 0.0, epsilon = 1e-15);
            assert_abs_diff_eq!(p.kappa, 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn legacy_trajectory_identity_at_t0() {
        let init = LegacyParams::initial(0.8, 1.7, -0.4, 2.1);
        let p = legacy_trajectory(init, 0.0).unwrap();
        assert_eq!(
            (p.alpha, p.beta, p.gamma, p.delta, p.epsilon, p.kappa),
            (0.8, 1.7, 0.0, -0.4, 2.1, 0.0),
        );
    }

    #[test]
    fn legacy_trajectory_requires_positive_beta() {
        assert!(legacy_trajectory(LegacyParams::initial(0.0, -1.0, 0.0, 0.0), 1.0).is_err());
        assert!(legacy_trajectory(LegacyParams::initial(0.0, 0.0, 0.0, 0.0), 1.0).is_err());
    }

    #[test]
    fn commuting_diagram_legacy_vs_modern_route() {
        // legacy_trajectory o (convert) = (convert) o modern evolution
        let mut rng = crate::rng::Lcg64::new(0x5eed_cafe);
        for _ in 0..100 {
            let init = LegacyParams::initial(
                rng.uniform(-2.0, 2.0),
                rng.uniform(0.2, 3.0),
                rng.uniform(-3.0, 3.0),
                rng.uniform(-3.0, 3.0),
            );
            let modern = crate::states::modern_initial_from_legacy(init).unwrap();
            for k in 0..20 {
                let t = TAU * (k as f64) / 19.0;
                let via_legacy = legacy_trajectory(init, t).unwrap();
                let via_modern = legacy_from_modern_at(modern, t);
                assert_abs_diff_eq!(via_legacy.alpha, via_modern.alpha, epsilon = 1e-10);
                assert_abs_diff_eq!(via_legacy.beta, via_modern.beta, epsilon = 1e-10);
                assert_abs_diff_eq!(via_legacy.delta, via_modern.delta, epsilon = 1e-10);
                assert_abs_diff_eq!(via_legacy.epsilon, via_modern.epsilon, epsilon = 1e-10);
                assert_abs_diff_eq!(
                    via_legacy.phase_sum(),
                    via_modern.phase_sum(),
                    epsilon = 1e-10
                );
            }
        }
    }

    #[test]
    fn global_phase_at_t0() {
        let zeta0 = DiskPoint::from_polar(0.4, 1.1).unwrap();
        let z0 = cayley(zeta0);
        let init = ModernInitialData::new(1.3, -0.6, zeta0).unwrap();
        let expected = 1.3 * (-0.6) + 0.5 * z0.v() * 1.3 * 1.3;
        assert_abs_diff_eq!(global_phase(init, 0.0), expected, epsilon = 1e-15);
    }

    #[test]
    fn ground_state_phase_is_minus_half_t() {
        let init = ModernInitialData::new(0.0, 0.0, DiskPoint::origin()).unwrap();
        for &t in &[0.0, 0.9, FRAC_PI_2, 2.0, PI, 4.4, TAU, -3.0] {
            assert_abs_diff_eq!(global_phase(init, t), -t / 2.0, epsilon = 1e-13);
        }
    }

    #[test]
    fn global_phase_is_continuous_across_tan_singularities() {
        let init = ModernInitialData::new(0.7, -1.1, DiskPoint::from_polar(0.5, 0.3).unwrap())
            .unwrap();
        let dt = 1e-6;
        let mut prev = global_phase(init, FRAC_PI_2 - 500.0 * dt);
        let mut t = FRAC_PI_2 - 500.0 * dt;
        for _ in 0..1000 {
            t += dt;
            let next = global_phase(init, t);
            assert!((next - prev).abs() < 1e-4, "phase jump at t = {t}");
            prev = next;
        }
    }

    #[test]
    fn breathing_widths_examples() {
        // coherent state: f- = f+ = 1 for all t
        for &t in &[0.0, 0.7, 2.0] {
            let w = breathing_widths(DiskPoint::origin(), t);
            assert_abs_diff_eq!(w.f_minus, 1.0, epsilon = 1e-15);
            assert_abs_diff_eq!(w.f_plus, 1.0, epsilon = 1e-15);
        }
        // r0 = 1/2, theta0 = 0, t = 0: f-^2 = (1 - 1/4)/(1 + 1/4 - 1) = 3 = u0
        let d = DiskPoint::new(Complex64::new(0.5, 0.0)).unwrap();
        let w = breathing_widths(d, 0.0);
        assert_abs_diff_eq!(w.f_minus * w.f_minus, 3.0, epsilon = 1e-14);
        assert_abs_diff_eq!(w.f_minus * w.f_minus, cayley(d).u(), epsilon = 1e-14);
    }

    #[test]
    fn breathing_width_identities() {
        let zeta0 = DiskPoint::from_polar(0.62, 2.3).unwrap();
        for k in 0..40 {
            let t = TAU * (k as f64) / 40.0;
            let w = breathing_widths(zeta0, t);
            let z = cayley(evolve_disk(zeta0, t));
            let (u, v) = (z.u(), z.v());
            assert_abs_diff_eq!(w.f_minus * w.f_minus, u, epsilon = 1e-12);
            assert_abs_diff_eq!(w.f_plus * w.f_plus, u / (u * u + v * v), epsilon = 1e-12);
        }
    }

    #[test]
    fn eccentricity_values() {
        assert_eq!(eccentricity(0.0).unwrap(), 0.0);
        assert_abs_diff_eq!(eccentricity(0.5).unwrap(), 8.0 / 9.0, epsilon = 1e-15);
        assert_abs_diff_eq!(wigner_axis_ratio(0.5).unwrap(), 1.0 / 3.0, epsilon = 1e-15);
        assert!(eccentricity(1.0).is_err());
        assert!(eccentricity(-0.1).is_err());
        assert!(eccentricity(f64::NAN).is_err());
    }

    proptest! {
        #[test]
        fn rotation_group_law(q in -3.0f64..3.0, p in -3.0f64..3.0,
                              s in -7.0f64..7.0, t in -7.0f64..7.0) {
            let x = PhasePoint { q, p };
            let a = evolve_phase_point(evolve_phase_point(x, s), t);
            let b = evolve_phase_point(x, s + t);
            prop_assert!((a.q - b.q).abs() < 1e-12);
            prop_assert!((a.p - b.p).abs() < 1e-12);
            // energy conservation
            prop_assert!((a.radius_squared() - x.radius_squared()).abs() < 1e-12);
        }

        #[test]
        fn disk_group_law_and_modulus(r in 0.0f64..0.99, theta in 0.0f64..TAU,
                                      s in -7.0f64..7.0, t in -7.0f64..7.0) {
            let x = DiskPoint::from_polar(r, theta).unwrap();
            let a = evolve_disk(evolve_disk(x, s), t);
            let b = evolve_disk(x, s + t);
            prop_assert!((a.zeta() - b.zeta()).norm() < 1e-12);
            prop_assert!((a.radius() - r).abs() < 1e-15 * (1.0 + r));
        }

        #[test]
        fn pneuma_closed_form_matches_conjugated_rotation(
            lu in -2.3f64..2.3, v in -4.0f64..4.0, t in -7.0f64..7.0,
        ) {
            let z0 = PneumaPoint::new(lu.exp(), v).unwrap();
            let a = pneuma_trajectory(z0, t);
            let b = pneuma_via_disk(z0, t);
            prop_assert!(a.u() > 0.0);
            prop_assert!((a.z() - b.z()).norm() <= 1e-11 * b.z().norm());
        }

        #[test]
        fn breathing_and_pneuma_have_period_pi(
            r in 0.0f64..0.9, theta in 0.0f64..TAU, t in -4.0f64..4.0,
        ) {
            let zeta0 = DiskPoint::from_polar(r, theta).unwrap();
            let w1 = breathing_widths(zeta0, t);
            let w2 = breathing_widths(zeta0, t + PI);
            prop_assert!((w1.f_minus - w2.f_minus).abs() < 1e-12);
            prop_assert!((w1.f_plus - w2.f_plus).abs() < 1e-12);

            let z0 = cayley(zeta0);
            let a = pneuma_trajectory(z0, t);
            let b = pneuma_trajectory(z0, t + PI);
            prop_assert!((a.u() - b.u()).abs() <= 1e-12 * a.u().max(1.0));
            prop_assert!((a.v() - b.v()).abs() <= 1e-12 * a.v().abs().max(1.0));
        }
    }
}
