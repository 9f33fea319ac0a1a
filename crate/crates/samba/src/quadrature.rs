//! Adaptive Simpson quadrature used to evaluate integral-defined learning
//! rates.

use crate::error::ScheduleError;

const MAX_DEPTH: u32 = 60;

/// Integrates `f` over `[a, b]` to absolute tolerance `tol` with adaptive
/// Simpson subdivision and Richardson extrapolation.
pub fn adaptive_simpson<F>(f: &F, a: f64, b: f64, tol: f64) -> Result<f64, ScheduleError>
where
    F: Fn(f64) -> Result<f64, ScheduleError>,
{
    if a == b {
        return Ok(0.0);
    }
    let m = 0.5 * (a + b);
    let fa = f(a)?;
    let fm = f(m)?;
    let fb = f(b)?;
    let whole = (b - a) * (fa + 4.0 * fm + fb) / 6.0;
    simpson_step(f, a, b, fa, fm, fb, whole, tol, MAX_DEPTH)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64, ScheduleError>
where
    F: Fn(f64) -> Result<f64, ScheduleError>,
{
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm)?;
    let frm = f(rm)?;
    let left = (m - a) * (fa + 4.0 * flm + fm) / 6.0;
    let right = (b - m) * (fm + 4.0 * frm + fb) / 6.0;
    let delta = left + right - whole;
    // Accept when the Richardson estimate meets the budget, when the entire
    // contribution of this subinterval is below the budget (endpoint
    // singularities otherwise stall the recursion), or when the interval
    // cannot be split further in floating point.
    let magnitude = (b - a).abs() * (fa.abs() + 4.0 * fm.abs() + fb.abs()) / 6.0;
    if delta.abs() <= 15.0 * tol || magnitude <= tol || lm <= a || rm >= b {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(ScheduleError::QuadratureNotConverged { a, b });
    }
    let half_tol = 0.5 * tol;
    Ok(simpson_step(f, a, m, fa, flm, fm, left, half_tol, depth - 1)?
        + simpson_step(f, m, b, fm, frm, fb, right, half_tol, depth - 1)?)
}
