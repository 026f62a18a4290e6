//! Command-line surface: subcommands, flag groups and spec parsers.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use squeeze_core::states::{DiskPoint, LegacyParams, ModernInitialData};

use crate::CliError;

#[derive(Parser)]
#[command(
    name = "squeeze",
    version,
    about = "Minimum-uncertainty squeezed states of the 1-D harmonic oscillator: \
             conversions, closed-form trajectories, wavefunction/Wigner sampling \
             and verification suites",
    after_help = "Initial data is given in exactly one parametrization:\n\
                  modern  --q0 --p0 --zeta-r --zeta-theta\n\
                  legacy  --alpha0 --beta0 --delta0 --epsilon0\n\
                  Exit codes: 0 success, 1 verification failure, 2 usage/domain error."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Convert the given parameter set into the other parametrization
    Convert {
        #[command(flatten)]
        state: StateArgs,
    },
    /// Emit both parametrizations along a time grid, one row per time
    Trajectory {
        #[command(flatten)]
        state: StateArgs,
        /// Time grid as start:stop:n (ascending, n >= 2)
        #[arg(long, value_name = "START:STOP:N")]
        t_grid: String,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Sample psi and the position density on an x-grid at time t
    Sample {
        #[command(flatten)]
        state: StateArgs,
        /// Evaluation time
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        t: f64,
        /// Sample grid as min:max:n
        #[arg(long, value_name = "MIN:MAX:N")]
        x_grid: String,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Sample the Wigner distribution on an (x, p) grid at time t
    Wigner {
        #[command(flatten)]
        state: StateArgs,
        /// Evaluation time
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        t: f64,
        /// x grid as min:max:n
        #[arg(long, value_name = "MIN:MAX:N")]
        x_grid: String,
        /// p grid as min:max:n
        #[arg(long, value_name = "MIN:MAX:N")]
        p_grid: String,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Run verification suites and emit a JSON report
    Verify {
        /// Suite selector; repeatable. `all` or one of: equivalence,
        /// residual, propagation, normalization, moments, geometry,
        /// rotation, typos
        #[arg(long, default_value = "all")]
        suite: Vec<String>,
        /// Seed of the 64-bit linear generator used for all random draws
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Named tolerance override, NAME=VALUE; repeatable
        #[arg(long, value_name = "NAME=VALUE")]
        tol: Vec<String>,
        /// Test hook: relative perturbation of u0 injected into the modern
        /// route of the equivalence suite (a correct build fails verify
        /// with any nonzero value)
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        perturb_u: f64,
        /// Write the JSON report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
pub struct IoArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this path instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Initial data in exactly one parametrization.
#[derive(Args)]
pub struct StateArgs {
    /// Modern: initial position q0
    #[arg(long, allow_negative_numbers = true)]
    pub q0: Option<f64>,
    /// Modern: initial momentum p0
    #[arg(long, allow_negative_numbers = true)]
    pub p0: Option<f64>,
    /// Modern: squeeze modulus r0 = |zeta0| (0 <= r0 < 1)
    #[arg(long, allow_negative_numbers = true)]
    pub zeta_r: Option<f64>,
    /// Modern: squeeze angle theta0 = arg zeta0 (radians)
    #[arg(long, allow_negative_numbers = true)]
    pub zeta_theta: Option<f64>,
    /// Legacy: alpha0
    #[arg(long, allow_negative_numbers = true)]
    pub alpha0: Option<f64>,
    /// Legacy: beta0 (nonzero; negated pairs (beta0, epsilon0) are gauge)
    #[arg(long, allow_negative_numbers = true)]
    pub beta0: Option<f64>,
    /// Legacy: delta0
    #[arg(long, allow_negative_numbers = true)]
    pub delta0: Option<f64>,
    /// Legacy: epsilon0
    #[arg(long, allow_negative_numbers = true)]
    pub epsilon0: Option<f64>,
}

/// Initial data resolved from the flag groups.
pub enum InitialState {
    Modern(ModernInitialData),
    Legacy(LegacyParams),
}

impl InitialState {
    /// The modern representation (converting when the input was legacy).
    pub fn modern(&self) -> Result<ModernInitialData, CliError> {
        match self {
            InitialState::Modern(m) => Ok(*m),
            InitialState::Legacy(l) => {
                squeeze_core::states::modern_initial_from_legacy(*l).map_err(CliError::domain)
            }
        }
    }

    /// Legacy initial data (alpha0, beta0, delta0, epsilon0) with the
    /// kappa0 = gamma0 = 0 convention.
    pub fn legacy_initial(&self) -> Result<LegacyParams, CliError> {
        match self {
            InitialState::Legacy(l) => {
                squeeze_core::states::normalize_legacy_signs(*l).map_err(CliError::domain)
            }
            InitialState::Modern(m) => {
                let z0 = squeeze_core::states::cayley(m.zeta0);
                Ok(LegacyParams::initial(
                    -z0.v() / 2.0,
                    z0.u().sqrt(),
                    m.p0 + z0.v() * m.q0,
                    -z0.u().sqrt() * m.q0,
                ))
            }
        }
    }
}

impl StateArgs {
    pub fn resolve(&self) -> Result<InitialState, CliError> {
        let modern = [self.q0, self.p0, self.zeta_r, self.zeta_theta];
        let legacy = [self.alpha0, self.beta0, self.delta0, self.epsilon0];
        let modern_given = modern.iter().any(Option::is_some);
        let legacy_given = legacy.iter().any(Option::is_some);
        match (modern_given, legacy_given) {
            (true, true) => Err(CliError::usage(
                "give exactly one parametrization, not both (--q0/--p0/--zeta-* vs --alpha0/...)",
            )),
            (false, false) => Err(CliError::usage(
                "no initial data: give --q0 --p0 --zeta-r --zeta-theta or --alpha0 --beta0 --delta0 --epsilon0",
            )),
            (true, false) => {
                let [q0, p0, r, theta] = modern.map(|v| v.ok_or_else(|| {
                    CliError::usage("the modern parametrization needs all of --q0 --p0 --zeta-r --zeta-theta")
                }));
                let zeta0 = DiskPoint::from_polar(r?, theta?).map_err(CliError::domain)?;
                let init = ModernInitialData::new(q0?, p0?, zeta0).map_err(CliError::domain)?;
                Ok(InitialState::Modern(init))
            }
            (false, true) => {
                let [alpha0, beta0, delta0, epsilon0] = legacy.map(|v| v.ok_or_else(|| {
                    CliError::usage("the legacy parametrization needs all of --alpha0 --beta0 --delta0 --epsilon0")
                }));
                let params = LegacyParams::initial(alpha0?, beta0?, delta0?, epsilon0?);
                // reject beta0 = 0 and non-finite input up front
                squeeze_core::states::normalize_legacy_signs(params).map_err(CliError::domain)?;
                Ok(InitialState::Legacy(params))
            }
        }
    }
}

/// Grid spec of the form start:stop:n.
pub struct GridSpec {
    pub start: f64,
    pub stop: f64,
    pub n: usize,
}

impl GridSpec {
    pub fn parse(spec: &str, what: &str) -> Result<Self, CliError> {
        let parts: Vec<&str> = spec.split(':').collect();
        let err = || CliError::usage(format!("malformed {what} grid '{spec}', expected start:stop:n"));
        if parts.len() != 3 {
            return Err(err());
        }
        let start: f64 = parts[0].parse().map_err(|_| err())?;
        let stop: f64 = parts[1].parse().map_err(|_| err())?;
        let n: usize = parts[2].parse().map_err(|_| err())?;
        if !start.is_finite() || !stop.is_finite() {
            return Err(err());
        }
        if n < 2 || start >= stop {
            return Err(CliError::usage(format!(
                "{what} grid '{spec}' must ascend and hold at least 2 points"
            )));
        }
        Ok(GridSpec { start, stop, n })
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        let step = (self.stop - self.start) / (self.n - 1) as f64;
        (0..self.n).map(move |i| self.start + step * i as f64)
    }
}

/// NAME=VALUE tolerance override.
pub fn parse_tol(spec: &str) -> Result<(String, f64), CliError> {
    let (name, value) = spec
        .split_once('=')
        .ok_or_else(|| CliError::usage(format!("malformed --tol '{spec}', expected NAME=VALUE")))?;
    let value: f64 = value
        .parse()
        .map_err(|_| CliError::usage(format!("malformed --tol value in '{spec}'")))?;
    if !(value.is_finite() && value > 0.0) {
        return Err(CliError::usage(format!("--tol value must be positive and finite in '{spec}'")));
    }
    Ok((name.to_string(), value))
}
