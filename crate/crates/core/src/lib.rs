//! Minimum-uncertainty squeezed states of the one-dimensional harmonic
//! oscillator, in dimensionless units where the evolution equation reads
//! `2iψ_t + ψ_xx − x²ψ = 0`.
//!
//! The same Gaussian wavepacket is tracked in two parametrizations:
//!
//! * the *modern* one — a phase-space point (q, p) rotating with period 2π
//!   and a squeeze parameter ζ in the open unit disk rotating with period π,
//!   mapped by the Cayley transform z = (1+ζ)/(1−ζ) = u + iv onto the right
//!   half-plane that controls Gaussian width (u) and chirp (v);
//! * the *legacy* six-parameter set (α, β, γ, δ, ε, κ) with its closed-form
//!   trajectories.
//!
//! [`states`] holds the domain types and the exact conversions between the
//! two parametrizations, [`dynamics`] the closed-form time evolution,
//! [`wavefunctions`] the wavefunction ψ and the position/momentum/Wigner
//! distributions (Cartesian and polar), and [`oracle`] the independent
//! numerical machinery (quadrature, finite-difference residuals, a
//! Crank–Nicolson reference propagator, numerical transforms and moments)
//! that adjudicates every closed form. [`verify`] bundles the acceptance
//! suites run by the CLI and the integration tests.

pub mod dynamics;
pub mod oracle;
pub mod report;
pub mod rng;
pub mod states;
pub mod tolerances;
pub mod verify;
pub mod wavefunctions;

pub use states::{
    cayley, inverse_cayley, legacy_from_modern, modern_from_legacy, modern_initial_from_legacy,
    normalize_legacy_signs, DiskPoint, LegacyParams, ModernInitialData, PhasePoint, PneumaPoint,
    StateError, StateSnapshot,
};

pub use dynamics::{
    breathing_widths, eccentricity, evolve_disk, evolve_phase_point, global_phase,
    legacy_from_modern_at, legacy_trajectory, pneuma_trajectory, snapshot_at, wigner_axis_ratio,
    BreathingWidths,
};

pub use wavefunctions::{
    analytic_moments, momentum_density, polar_momentum_density, polar_position_density,
    polar_wigner, position_density, psi, psi0, psi_from_snapshot, psi_legacy, wigner,
    GaussianMoments,
};
