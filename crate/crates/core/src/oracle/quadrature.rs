//! Adaptive Simpson quadrature.

use super::OracleError;

const MAX_DEPTH: u32 = 50;

/// ∫_a^b f(x) dx by adaptive Simpson refinement until the local error
/// estimate |S₂ − S₁|/15 drops below the (subdivided) tolerance.
///
/// Deterministic for a given (f, a, b, tol). If any subinterval hits the
/// depth limit before converging the best estimate is reported inside the
/// error.
pub fn quadrature(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<f64, OracleError> {
    assert!(tol > 0.0, "quadrature tolerance must be positive");
    let fa = eval(&f, a)?;
    let fb = eval(&f, b)?;
    let m = 0.5 * (a + b);
    let fm = eval(&f, m)?;
    let whole = simpson(a, b, fa, fm, fb);
    let mut worst_unresolved = 0.0_f64;
    let value = adapt(
        &f,
        Span { a, m, b, fa, fm, fb, whole },
        tol,
        MAX_DEPTH,
        &mut worst_unresolved,
    )?;
    if worst_unresolved > 0.0 {
        return Err(OracleError::QuadratureNotConverged {
            best_estimate: value,
            error_estimate: worst_unresolved,
        });
    }
    Ok(value)
}

struct Span {
    a: f64,
    m: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

fn eval(f: &impl Fn(f64) -> f64, x: f64) -> Result<f64, OracleError> {
    let y = f(x);
    if y.is_finite() {
        Ok(y)
    } else {
        Err(OracleError::NonFiniteIntegrand { x })
    }
}

fn adapt(
    f: &impl Fn(f64) -> f64,
    span: Span,
    tol: f64,
    depth: u32,
    worst_unresolved: &mut f64,
) -> Result<f64, OracleError> {
    let lm = 0.5 * (span.a + span.m);
    let rm = 0.5 * (span.m + span.b);
    let flm = eval(f, lm)?;
    let frm = eval(f, rm)?;
    let left = simpson(span.a, span.m, span.fa, flm, span.fm);
    let right = simpson(span.m, span.b, span.fm, frm, span.fb);
    let delta = left + right - span.whole;
    if delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        *worst_unresolved = worst_unresolved.max(delta.abs() / 15.0);
        return Ok(left + right + delta / 15.0);
    }
    let half = 0.5 * tol;
    let l = adapt(
        f,
        Span { a: span.a, m: lm, b: span.m, fa: span.fa, fm: flm, fb: span.fm, whole: left },
        half,
        depth - 1,
        worst_unresolved,
    )?;
    let r = adapt(
        f,
        Span { a: span.m, m: rm, b: span.b, fa: span.fm, fm: frm, fb: span.fb, whole: right },
        half,
        depth - 1,
        worst_unresolved,
    )?;
    Ok(l + r)
}
