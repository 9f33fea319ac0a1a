//! Learning-rate schedules.
//!
//! The update moves each non-leading arm with step size `gamma(p) =
//! alpha(p) * p^2`. Four schedules are supported:
//!
//! * `Fixed`            — `alpha(p) = alpha`, constant in `(0, 1)`;
//! * `LogCooling`       — `alpha(p) = beta / (1 - ln p)`;
//! * `LogLogCooling`    — `alpha(p) = beta / ln(e - ln p)`;
//! * `FromSlowlyVarying`— `gamma(p) = ∫₀ᵖ ∫₀ᵛ l(u) du dv` for a monotone
//!   slowly varying `l: (0,1] -> [0,1]`, with `alpha(p) = gamma(p)/p²`.
//!
//! Cooling rates `beta` are validated to `(0, 1]`, the range with a proven
//! regret bound; larger values can be requested explicitly through the
//! `unvalidated` spec flag and remain subject to the positivity guard in the
//! update.

use std::f64::consts::E;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::ScheduleError;
use crate::quadrature::adaptive_simpson;

/// Default absolute tolerance for integral-defined schedules.
pub const DEFAULT_QUADRATURE_TOL: f64 = 1e-10;

/// Left-endpoint extension: `l(0+)` is taken as the value of `l` at the
/// smallest positive abscissa we ever evaluate.
const LEFT_EXTENSION: f64 = 1e-300;

/// A monotone, slowly varying function `l: (0,1] -> [0,1]` used to build
/// integral-defined schedules.
#[derive(Clone)]
pub enum SlowlyVarying {
    /// `l(u) = 1 / (1 - ln u)`
    InvLog,
    /// `l(u) = 1 / ln(e - ln u)`
    InvLogLog,
    /// Any user-supplied function; not serializable.
    Custom(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl SlowlyVarying {
    /// Looks up a builtin by its config name.
    pub fn by_name(name: &str) -> Result<Self, ScheduleError> {
        match name {
            "inv_log" => Ok(Self::InvLog),
            "inv_loglog" => Ok(Self::InvLogLog),
            other => Err(ScheduleError::UnknownBuiltin(other.to_string())),
        }
    }

    /// The config name of a builtin, if this is one.
    pub fn name(&self) -> Option<&'static str> {
        match self {
            Self::InvLog => Some("inv_log"),
            Self::InvLogLog => Some("inv_loglog"),
            Self::Custom(_) => None,
        }
    }

    /// Evaluates `l(u)`, extending to `u <= 0` by the left-limit convention
    /// and range-checking the result against `[0, 1]`.
    pub fn eval(&self, u: f64) -> Result<f64, ScheduleError> {
        let u = u.max(LEFT_EXTENSION);
        let value = match self {
            Self::InvLog => 1.0 / (1.0 - u.ln()),
            Self::InvLogLog => 1.0 / (E - u.ln()).ln(),
            Self::Custom(f) => f(u),
        };
        if !(0.0..=1.0).contains(&value) {
            return Err(ScheduleError::SlowlyVaryingOutOfRange { u, value });
        }
        Ok(value)
    }
}

impl fmt::Debug for SlowlyVarying {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.name() {
            Some(name) => write!(f, "SlowlyVarying({name})"),
            None => write!(f, "SlowlyVarying(custom)"),
        }
    }
}

/// Upper truncation for the log substitution `u = exp(-x)`: beyond this the
/// integrand is below the smallest normal double.
const X_MAX: f64 = 708.0;

/// `gamma(p) = ∫₀ᵖ ∫₀ᵛ l(u) du dv` by nested adaptive Simpson quadrature
/// with absolute error at most `tol`.
///
/// A slowly varying `l` changes on a logarithmic scale near `u = 0`, so the
/// inner integral is evaluated after the substitution `u = exp(-x)`, which
/// makes the integrand smooth and exponentially decaying.
pub fn gamma_from_l(l: &SlowlyVarying, p: f64, tol: f64) -> Result<f64, ScheduleError> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(ScheduleError::ProbOutOfDomain(p));
    }
    if !(tol > 0.0) {
        return Err(ScheduleError::TolOutOfRange(tol));
    }
    // gamma(p) scales like p^2, and alpha(p) = gamma(p)/p^2 must stay
    // accurate for small p, so the absolute budget is tightened to tol*p^2.
    // Half goes to the outer integral, half to the inner evaluations (whose
    // errors accumulate over a length-p interval).
    let eff_tol = (tol * p * p).max(f64::MIN_POSITIVE * 16.0);
    let outer_tol = 0.5 * eff_tol;
    let inner_tol = 0.5 * eff_tol / p;
    let transformed = |x: f64| -> Result<f64, ScheduleError> {
        let u = (-x).exp();
        Ok(l.eval(u)? * u)
    };
    // The transformed integrand is bounded by exp(-x), so the domain can be
    // truncated once the tail drops below half the inner budget.
    let x_cut = (-(0.5 * inner_tol).ln()).min(X_MAX);
    let inner = |v: f64| -> Result<f64, ScheduleError> {
        if v <= 0.0 {
            return Ok(0.0);
        }
        let x0 = -v.ln();
        if x0 >= x_cut {
            return Ok(0.0);
        }
        adaptive_simpson(&transformed, x0, x_cut, 0.5 * inner_tol)
    };
    adaptive_simpson(&inner, 0.0, p, outer_tol)
}

/// The learning-rate rule `alpha(p)` (equivalently `gamma(p) = alpha(p) p²`).
#[derive(Debug, Clone)]
pub enum Schedule {
    Fixed { alpha: f64 },
    LogCooling { beta: f64 },
    LogLogCooling { beta: f64 },
    FromSlowlyVarying { l: SlowlyVarying, tol: f64 },
}

impl Schedule {
    /// Constant rate; requires `alpha` in `(0, 1)`.
    pub fn fixed(alpha: f64) -> Result<Self, ScheduleError> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(ScheduleError::AlphaOutOfRange(alpha));
        }
        Ok(Self::Fixed { alpha })
    }

    /// `alpha(p) = beta / (1 - ln p)`; requires `beta` in `(0, 1]`.
    pub fn log_cooling(beta: f64) -> Result<Self, ScheduleError> {
        if !(beta > 0.0 && beta <= 1.0) {
            return Err(ScheduleError::BetaOutOfRange(beta));
        }
        Ok(Self::LogCooling { beta })
    }

    /// `log_cooling` without the `beta <= 1` validation. Positivity is still
    /// guarded step by step in the update.
    pub fn log_cooling_unvalidated(beta: f64) -> Result<Self, ScheduleError> {
        if !(beta > 0.0) {
            return Err(ScheduleError::BetaNotPositive(beta));
        }
        Ok(Self::LogCooling { beta })
    }

    /// `alpha(p) = beta / ln(e - ln p)`; requires `beta` in `(0, 1]`.
    pub fn loglog_cooling(beta: f64) -> Result<Self, ScheduleError> {
        if !(beta > 0.0 && beta <= 1.0) {
            return Err(ScheduleError::BetaOutOfRange(beta));
        }
        Ok(Self::LogLogCooling { beta })
    }

    /// `loglog_cooling` without the `beta <= 1` validation.
    pub fn loglog_cooling_unvalidated(beta: f64) -> Result<Self, ScheduleError> {
        if !(beta > 0.0) {
            return Err(ScheduleError::BetaNotPositive(beta));
        }
        Ok(Self::LogLogCooling { beta })
    }

    /// Integral-defined schedule from a slowly varying `l`.
    pub fn from_slowly_varying(l: SlowlyVarying, tol: f64) -> Result<Self, ScheduleError> {
        if !(tol > 0.0) {
            return Err(ScheduleError::TolOutOfRange(tol));
        }
        Ok(Self::FromSlowlyVarying { l, tol })
    }

    /// Evaluates `alpha(p)` for `p` in `(0, 1]`.
    pub fn alpha(&self, p: f64) -> Result<f64, ScheduleError> {
        if !(p > 0.0 && p <= 1.0) {
            return Err(ScheduleError::ProbOutOfDomain(p));
        }
        match self {
            Self::Fixed { alpha } => Ok(*alpha),
            Self::LogCooling { beta } => Ok(beta / (1.0 - p.ln())),
            Self::LogLogCooling { beta } => Ok(beta / (E - p.ln()).ln()),
            Self::FromSlowlyVarying { l, tol } => Ok(gamma_from_l(l, p, *tol)? / (p * p)),
        }
    }

    /// Evaluates the step size `gamma(p) = alpha(p) p²`.
    pub fn gamma(&self, p: f64) -> Result<f64, ScheduleError> {
        match self {
            Self::FromSlowlyVarying { l, tol } => {
                if !(p > 0.0 && p <= 1.0) {
                    return Err(ScheduleError::ProbOutOfDomain(p));
                }
                gamma_from_l(l, p, *tol)
            }
            _ => Ok(self.alpha(p)? * p * p),
        }
    }
}

/// The admissibility threshold for a fixed learning rate on an instance with
/// optimal mean `r_star` and minimal gap `delta`: a constant `alpha` below
/// `delta / (r_star - delta)` keeps regret logarithmic. Returns `+inf` when
/// `r_star == delta` (any `alpha < 1` is admissible).
pub fn alpha_threshold(r_star: f64, delta: f64) -> Result<f64, ScheduleError> {
    if !(delta > 0.0 && delta <= r_star && r_star <= 1.0) {
        return Err(ScheduleError::ThresholdDomain { r_star, delta });
    }
    if r_star == delta {
        return Ok(f64::INFINITY);
    }
    Ok(delta / (r_star - delta))
}

/// Serializable schedule description used in experiment configs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ScheduleSpec {
    Fixed {
        alpha: f64,
    },
    LogCooling {
        beta: f64,
        #[serde(default, skip_serializing_if = "std::ops::Not::not")]
        unvalidated: bool,
    },
    LoglogCooling {
        beta: f64,
        #[serde(default, skip_serializing_if = "std::ops::Not::not")]
        unvalidated: bool,
    },
    SlowlyVarying {
        l: String,
        tol: f64,
    },
}

impl ScheduleSpec {
    pub fn build(&self) -> Result<Schedule, ScheduleError> {
        match self {
            Self::Fixed { alpha } => Schedule::fixed(*alpha),
            Self::LogCooling { beta, unvalidated } => {
                if *unvalidated {
                    Schedule::log_cooling_unvalidated(*beta)
                } else {
                    Schedule::log_cooling(*beta)
                }
            }
            Self::LoglogCooling { beta, unvalidated } => {
                if *unvalidated {
                    Schedule::loglog_cooling_unvalidated(*beta)
                } else {
                    Schedule::loglog_cooling(*beta)
                }
            }
            Self::SlowlyVarying { l, tol } => {
                Schedule::from_slowly_varying(SlowlyVarying::by_name(l)?, *tol)
            }
        }
    }

    /// Compact label for file names and CSV rows.
    pub fn label(&self) -> String {
        match self {
            Self::Fixed { alpha } => format!("fixed_a{alpha}"),
            Self::LogCooling { beta, .. } => format!("log_cooling_b{beta}"),
            Self::LoglogCooling { beta, .. } => format!("loglog_cooling_b{beta}"),
            Self::SlowlyVarying { l, .. } => format!("slowly_varying_{l}"),
        }
    }
}
