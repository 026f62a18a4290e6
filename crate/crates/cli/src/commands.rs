//! Subcommand implementations.

use std::path::PathBuf;

use squeeze_core::dynamics::{breathing_widths, evolve_disk, legacy_trajectory, snapshot_at};
use squeeze_core::states::{cayley, legacy_from_modern};
use squeeze_core::verify::{run_selection, VerifyConfig, SUITE_NAMES};
use squeeze_core::wavefunctions::{position_density, psi_from_snapshot, wigner};

use crate::options::{Format, GridSpec, InitialState, IoArgs, StateArgs};
use crate::output::{g17, sink, write_csv, write_json_object, JsonBuilder, MetaValue};
use crate::CliError;

pub const TRAJECTORY_COLUMNS: [&str; 16] = [
    "t", "q", "p", "u", "v", "zeta_re", "zeta_im", "alpha", "beta", "gamma", "delta", "epsilon",
    "kappa", "phi", "f_minus", "f_plus",
];

pub const SAMPLE_COLUMNS: [&str; 5] = ["x", "psi_re", "psi_im", "psi_abs2", "p_x"];

pub fn convert(state: &StateArgs) -> Result<i32, CliError> {
    match state.resolve()? {
        InitialState::Legacy(_) => {
            let modern = state.resolve()?.modern()?;
            let z0 = cayley(modern.zeta0);
            let phi0 = modern.p0 * modern.q0 + 0.5 * z0.v() * modern.q0 * modern.q0;
            let zeta = modern.zeta0.zeta();
            println!("q0 = {}", g17(modern.q0));
            println!("p0 = {}", g17(modern.p0));
            println!("zeta_re = {}", g17(zeta.re));
            println!("zeta_im = {}", g17(zeta.im));
            println!("zeta_r = {}", g17(modern.zeta0.radius()));
            println!("zeta_theta = {}", g17(modern.zeta0.angle()));
            println!("u0 = {}", g17(z0.u()));
            println!("v0 = {}", g17(z0.v()));
            println!("phi0 = {}", g17(phi0));
        }
        InitialState::Modern(modern) => {
            let legacy = legacy_from_modern(snapshot_at(modern, 0.0));
            println!("alpha0 = {}", g17(legacy.alpha));
            println!("beta0 = {}", g17(legacy.beta));
            println!("delta0 = {}", g17(legacy.delta));
            println!("epsilon0 = {}", g17(legacy.epsilon));
            println!("kappa_plus_gamma = {}", g17(legacy.phase_sum()));
        }
    }
    Ok(0)
}

pub fn trajectory(state: &StateArgs, t_grid: &str, io: &IoArgs) -> Result<i32, CliError> {
    let grid = GridSpec::parse(t_grid, "t")?;
    let init = state.resolve()?;
    let modern = init.modern()?;
    let legacy0 = init.legacy_initial()?;

    let rows: Vec<Vec<f64>> = grid
        .points()
        .map(|t| {
            let snap = snapshot_at(modern, t);
            let zeta_t = evolve_disk(modern.zeta0, t);
            let leg = legacy_trajectory(legacy0, t).map_err(CliError::domain)?;
            let w = breathing_widths(modern.zeta0, t);
            Ok(vec![
                t,
                snap.phase_point.q,
                snap.phase_point.p,
                snap.pneuma.u(),
                snap.pneuma.v(),
                zeta_t.zeta().re,
                zeta_t.zeta().im,
                leg.alpha,
                leg.beta,
                leg.gamma,
                leg.delta,
                leg.epsilon,
                leg.kappa,
                snap.phi,
                w.f_minus,
                w.f_plus,
            ])
        })
        .collect::<Result<_, CliError>>()?;

    let meta = describe_initial(&modern, &legacy0);
    emit_table(io, &meta, &TRAJECTORY_COLUMNS, rows)
}

pub fn sample(state: &StateArgs, t: f64, x_grid: &str, io: &IoArgs) -> Result<i32, CliError> {
    if !t.is_finite() {
        return Err(CliError::usage("--t must be finite"));
    }
    let grid = GridSpec::parse(x_grid, "x")?;
    let init = state.resolve()?;
    let modern = init.modern()?;
    let legacy0 = init.legacy_initial()?;
    let snap = snapshot_at(modern, t);

    let rows: Vec<Vec<f64>> = grid
        .points()
        .map(|x| {
            let value = psi_from_snapshot(x, snap);
            vec![x, value.re, value.im, value.norm_sqr(), position_density(x, snap)]
        })
        .collect();

    let mut meta = describe_initial(&modern, &legacy0);
    meta.push(("t", t));
    emit_table(io, &meta, &SAMPLE_COLUMNS, rows)
}

pub fn wigner_grid(
    state: &StateArgs,
    t: f64,
    x_grid: &str,
    p_grid: &str,
    io: &IoArgs,
) -> Result<i32, CliError> {
    if !t.is_finite() {
        return Err(CliError::usage("--t must be finite"));
    }
    let xs = GridSpec::parse(x_grid, "x")?;
    let ps = GridSpec::parse(p_grid, "p")?;
    let init = state.resolve()?;
    let modern = init.modern()?;
    let snap = snapshot_at(modern, t);
    let zeta_t = evolve_disk(modern.zeta0, t);
    let r0 = modern.zeta0.radius();

    let axis_ratio = squeeze_core::dynamics::wigner_axis_ratio(r0).map_err(CliError::domain)?;
    let ecc = squeeze_core::dynamics::eccentricity(r0).map_err(CliError::domain)?;
    let meta: Vec<(&str, f64)> = vec![
        ("t", t),
        ("q", snap.phase_point.q),
        ("p", snap.phase_point.p),
        ("r0", r0),
        ("zeta_angle", zeta_t.angle()),
        ("eccentricity", ecc),
        ("axis_ratio", axis_ratio),
        ("std_eccentricity", (1.0 - axis_ratio * axis_ratio).sqrt()),
    ];

    let mut w = sink(&io.out).map_err(CliError::domain)?;
    match io.format {
        Format::Csv => {
            let mut rows = Vec::with_capacity(xs.n * ps.n);
            for x in xs.points() {
                for p in ps.points() {
                    rows.push(vec![x, p, wigner(x, p, snap)]);
                }
            }
            let meta: Vec<(&str, String)> = meta.iter().map(|(k, v)| (*k, g17(*v))).collect();
            write_csv(&mut *w, &meta, &["x", "p", "w"], rows.into_iter())
                .map_err(CliError::domain)?;
        }
        Format::Json => {
            let mut body = JsonBuilder::new();
            body.raw("{\"x\":");
            body.number_array(xs.points());
            body.raw(",\"p\":");
            body.number_array(ps.points());
            body.raw(",\"w\":[");
            for (i, x) in xs.points().enumerate() {
                if i > 0 {
                    body.raw(",");
                }
                body.number_array(ps.points().map(|p| wigner(x, p, snap)));
            }
            body.raw("]}");
            let meta: Vec<(&str, MetaValue)> =
                meta.iter().map(|(k, v)| (*k, MetaValue::Number(*v))).collect();
            write_json_object(&mut *w, &meta, body.finish()).map_err(CliError::domain)?;
        }
    }
    Ok(0)
}

pub fn verify(
    suites: &[String],
    seed: u64,
    tols: &[String],
    perturb_u: f64,
    out: &Option<PathBuf>,
) -> Result<i32, CliError> {
    let mut cfg = VerifyConfig { seed, perturb_u, ..Default::default() };
    for spec in tols {
        let (name, value) = crate::options::parse_tol(spec)?;
        cfg.tol_overrides.insert(name, value);
    }

    let selected: Vec<&str> = if suites.iter().any(|s| s == "all") {
        SUITE_NAMES.to_vec()
    } else {
        suites.iter().map(String::as_str).collect()
    };
    let report = run_selection(&cfg, &selected)
        .map_err(|unknown| CliError::usage(format!("unknown suite '{unknown}'")))?;

    let mut w = sink(out).map_err(CliError::domain)?;
    serde_json::to_writer_pretty(&mut *w, &report).map_err(CliError::domain)?;
    use std::io::Write;
    w.write_all(b"\n").map_err(CliError::domain)?;
    w.flush().map_err(CliError::domain)?;

    Ok(if report.passed { 0 } else { 1 })
}

fn describe_initial(
    modern: &squeeze_core::states::ModernInitialData,
    legacy0: &squeeze_core::states::LegacyParams,
) -> Vec<(&'static str, f64)> {
    vec![
        ("q0", modern.q0),
        ("p0", modern.p0),
        ("zeta_r", modern.zeta0.radius()),
        ("zeta_theta", modern.zeta0.angle()),
        ("alpha0", legacy0.alpha),
        ("beta0", legacy0.beta),
        ("delta0", legacy0.delta),
        ("epsilon0", legacy0.epsilon),
    ]
}

fn emit_table(
    io: &IoArgs,
    meta: &[(&str, f64)],
    columns: &[&str],
    rows: Vec<Vec<f64>>,
) -> Result<i32, CliError> {
    let mut w = sink(&io.out).map_err(CliError::domain)?;
    match io.format {
        Format::Csv => {
            let meta: Vec<(&str, String)> = meta.iter().map(|(k, v)| (*k, g17(*v))).collect();
            write_csv(&mut *w, &meta, columns, rows.into_iter()).map_err(CliError::domain)?;
        }
        Format::Json => {
            let mut body = JsonBuilder::new();
            body.raw("{\"columns\":[");
            for (i, c) in columns.iter().enumerate() {
                if i > 0 {
                    body.raw(",");
                }
                body.string(c);
            }
            body.raw("],\"rows\":[");
            for (i, row) in rows.iter().enumerate() {
                if i > 0 {
                    body.raw(",");
                }
                body.number_array(row.iter().copied());
            }
            body.raw("]}");
            let meta: Vec<(&str, MetaValue)> =
                meta.iter().map(|(k, v)| (*k, MetaValue::Number(*v))).collect();
            write_json_object(&mut *w, &meta, body.finish()).map_err(CliError::domain)?;
        }
    }
    Ok(0)
}
