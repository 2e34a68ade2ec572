//! Closed-form antiderivatives of `x^α k(η x^β)` for the kernels
//! `k ∈ {exp, cosh, sinh, cos, sin}`, and the half-line and full-line
//! integrals of `x^α e^(-η x^β)`.
//!
//! With `φ = η x^β`, `b = (α+β+1)/β` and the 1F2 parameters
//! `p = (α+β+1)/(2β)`, `q = p + 1/2`, `r = p + 1` the antiderivatives are
//!
//! ```text
//! exp : x^(α+1)/(α+1) · e^φ 1F1(1; b; -φ)
//! cosh: x^(α+1)/(α+1) · [cosh φ 1F2(1; p, q; φ²/4) - βφ/(α+β+1) sinh φ 1F2(1; q, r; φ²/4)]
//! sinh: x^(α+1)/(α+1) · [sinh φ 1F2(1; p, q; φ²/4) - βφ/(α+β+1) cosh φ 1F2(1; q, r; φ²/4)]
//! cos : x^(α+1)/(α+1) · [cos φ 1F2(1; p, q; -φ²/4) + βφ/(α+β+1) sin φ 1F2(1; q, r; -φ²/4)]
//! sin : x^(α+1)/(α+1) · [sin φ 1F2(1; p, q; -φ²/4) - βφ/(α+β+1) cos φ 1F2(1; q, r; -φ²/4)]
//! ```
//!
//! Each is the formula itself with no added constant. For `α+1 > 0` and
//! `β > 0` it vanishes as `x → 0⁺`, so it equals `∫₀^x`.
//!
//! The bracketed combinations cancel by a factor of about `e^|φ|`, so they
//! are formed in double-double from double-double series values.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::specfun::{self, SeriesConfig, SeriesValue};

/// `|α - (β - 1)|` at or below this selects the elementary exponential branch.
pub const ELEMENTARY_TIE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Exp,
    Cosh,
    Sinh,
    Cos,
    Sin,
}

impl Kind {
    pub const ALL: [Kind; 5] = [Kind::Exp, Kind::Cosh, Kind::Sinh, Kind::Cos, Kind::Sin];

    /// The kernel `k(t)` of the integrand `x^α k(η x^β)`.
    pub fn kernel(self, t: f64) -> f64 {
        match self {
            Kind::Exp => t.exp(),
            Kind::Cosh => t.cosh(),
            Kind::Sinh => t.sinh(),
            Kind::Cos => t.cos(),
            Kind::Sin => t.sin(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Exp => "exp",
            Kind::Cosh => "cosh",
            Kind::Sinh => "sinh",
            Kind::Cos => "cos",
            Kind::Sin => "sin",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown kind {s:?}")))
    }
}

/// One integrand `x^α k(η x^β)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IntegralSpec {
    pub kind: Kind,
    pub alpha: f64,
    pub eta: f64,
    pub beta: f64,
}

impl IntegralSpec {
    pub fn new(kind: Kind, alpha: f64, eta: f64, beta: f64) -> Result<Self> {
        let spec = Self {
            kind,
            alpha,
            eta,
            beta,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let Self {
            kind,
            alpha,
            eta,
            beta,
        } = *self;
        if !(alpha.is_finite() && eta.is_finite() && beta.is_finite()) {
            return Err(Error::InvalidSpec("parameters must be finite".into()));
        }
        if eta == 0.0 {
            return Err(Error::InvalidSpec("eta must be nonzero".into()));
        }
        if beta == 0.0 {
            return Err(Error::InvalidSpec("beta must be nonzero".into()));
        }
        if alpha == -1.0 {
            return Err(Error::InvalidSpec("alpha must differ from -1".into()));
        }
        if kind != Kind::Exp && alpha == -beta - 1.0 {
            return Err(Error::InvalidSpec(format!(
                "alpha must differ from -beta-1 for kind {kind}"
            )));
        }
        Ok(())
    }

    pub fn integrand(&self, x: f64) -> f64 {
        x.powf(self.alpha) * self.kind.kernel(self.eta * x.powf(self.beta))
    }

    pub fn is_elementary(&self) -> bool {
        self.kind == Kind::Exp && (self.alpha - (self.beta - 1.0)).abs() <= ELEMENTARY_TIE_TOL
    }
}

/// Relative accuracy below which a cancelling 1F2 combination is rejected
/// as past the accuracy cliff.
pub const ACCURACY_CLIFF_REL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AntiderivativeValue {
    pub value: f64,
    /// Absolute error estimate propagated from the series reports.
    pub err_est: f64,
    pub elementary_branch: bool,
    /// The series evaluations the value was built from.
    pub series_report: Vec<SeriesValue>,
}

fn not_converged(s: &SeriesValue) -> Error {
    Error::NotConverged {
        terms: s.terms_used,
        err_est: s.trunc_err_est,
    }
}

/// A 1F2 bracket and its absolute error estimate.
#[derive(Debug, Clone)]
pub struct Bracket {
    pub value: Dd,
    pub err_est: f64,
    pub report: Vec<SeriesValue>,
}

/// The bracketed 1F2 combination of a hyperbolic or trigonometric kernel
/// at `φ = η x^β`, in double-double.
///
/// Fails with [`Error::NotConverged`] only if a series hit `max_terms`.
pub fn series_bracket(
    kind: Kind,
    alpha: f64,
    beta: f64,
    phi: f64,
    cfg: &SeriesConfig,
) -> Result<Bracket> {
    let s2 = Dd::sum(alpha, beta).add_f64(1.0);
    let p = s2 / Dd::new(2.0 * beta);
    let q = p.add_f64(0.5);
    let r = p.add_f64(1.0);
    let arg = Dd::prod(phi, phi).mul_f64(0.25);
    let (arg, (odd, even)) = match kind {
        Kind::Cosh | Kind::Sinh => (arg, Dd::new(phi).sinh_cosh()),
        Kind::Cos | Kind::Sin => (-arg, Dd::new(phi).sin_cos()),
        Kind::Exp => {
            return Err(Error::InvalidSpec(
                "the exponential kernel has no 1F2 bracket".into(),
            ))
        }
    };
    let first = specfun::hyp1f2_dd(Dd::ONE, p, q, arg, cfg)?;
    let second = specfun::hyp1f2_dd(Dd::ONE, q, r, arg, cfg)?;
    for s in [&first, &second] {
        if !s.tail_converged {
            return Err(not_converged(&s.report));
        }
    }
    let (f_pq, f_qr) = (first.value, second.value);
    let coeff = Dd::prod(beta, phi) / s2;
    // (even, odd) = (cosh, sinh) or (cos, sin)
    let g = match kind {
        Kind::Cosh => even * f_pq - coeff * odd * f_qr,
        Kind::Sinh => odd * f_pq - coeff * even * f_qr,
        Kind::Cos => even * f_pq + coeff * odd * f_qr,
        Kind::Sin => odd * f_pq - coeff * even * f_qr,
        Kind::Exp => unreachable!(),
    };
    let err_est = even.hi.abs().max(odd.hi.abs())
        * (first.report.trunc_err_est + coeff.hi.abs() * second.report.trunc_err_est)
        + 8.0
            * crate::dd::EPS
            * (even.hi * f_pq.hi)
                .abs()
                .max((coeff.hi * odd.hi * f_qr.hi).abs());
    Ok(Bracket {
        value: g,
        err_est,
        report: vec![first.report, second.report],
    })
}

/// Closed-form antiderivative `F(x)` (no additive constant).
///
/// `x = 0` is accepted when `α+1 > 0` and `β > 0`, where `F(0⁺) = 0`.
pub fn antiderivative(
    spec: &IntegralSpec,
    x: f64,
    cfg: &SeriesConfig,
) -> Result<AntiderivativeValue> {
    spec.validate()?;
    let IntegralSpec {
        kind,
        alpha,
        eta,
        beta,
    } = *spec;
    if !(x >= 0.0) || x.is_infinite() {
        return Err(Error::Domain(format!(
            "antiderivative needs finite x >= 0, got {x}"
        )));
    }
    if x == 0.0 {
        return if alpha + 1.0 > 0.0 && beta > 0.0 {
            Ok(AntiderivativeValue {
                value: 0.0,
                err_est: 0.0,
                elementary_branch: spec.is_elementary(),
                series_report: Vec::new(),
            })
        } else {
            Err(Error::Domain(
                "the antiderivative diverges at x = 0 for these parameters".into(),
            ))
        };
    }

    let phi = eta * x.powf(beta);
    let a1 = alpha + 1.0;

    if spec.is_elementary() {
        // d/dx e^φ / (ηβ) = x^(β-1) e^φ; shifted by -1/(ηβ) to match the series form.
        let value = phi.exp_m1() / (eta * beta);
        return finite(AntiderivativeValue {
            value,
            err_est: f64::EPSILON * value.abs(),
            elementary_branch: true,
            series_report: Vec::new(),
        });
    }

    match kind {
        Kind::Exp => {
            let b = (alpha + beta + 1.0) / beta;
            let log_scale = phi + a1 * x.ln() - a1.abs().ln();
            let sv = specfun::hyp1f1_scaled(1.0, b, -phi, log_scale, cfg)?;
            if !sv.converged {
                return Err(not_converged(&sv));
            }
            finite(AntiderivativeValue {
                value: a1.signum() * sv.value,
                err_est: sv.trunc_err_est + 4.0 * f64::EPSILON * sv.value.abs(),
                elementary_branch: false,
                series_report: vec![sv],
            })
        }
        _ => {
            let bracket = series_bracket(kind, alpha, beta, phi, cfg)?;
            let prefactor = x.powf(a1) / a1;
            let value = prefactor * bracket.value.to_f64();
            let err_est = prefactor.abs() * bracket.err_est + f64::EPSILON * value.abs();
            if err_est > ACCURACY_CLIFF_REL * value.abs() + f64::EPSILON * prefactor.abs() {
                let terms = bracket
                    .report
                    .iter()
                    .map(|s| s.terms_used)
                    .max()
                    .unwrap_or(0);
                return Err(Error::NotConverged { terms, err_est });
            }
            finite(AntiderivativeValue {
                value,
                err_est,
                elementary_branch: false,
                series_report: bracket.report,
            })
        }
    }
}

fn finite(v: AntiderivativeValue) -> Result<AntiderivativeValue> {
    if v.value.is_finite() {
        Ok(v)
    } else {
        Err(Error::Domain(
            "antiderivative value overflows binary64".into(),
        ))
    }
}

/// `∫_a^b x^α k(η x^β) dx` as a difference of antiderivatives.
pub fn definite_integral(spec: &IntegralSpec, a: f64, b: f64, cfg: &SeriesConfig) -> Result<f64> {
    if !(a >= 0.0) || !(b > a) {
        return Err(Error::Domain(format!("need 0 <= a < b, got a={a}, b={b}")));
    }
    let upper = antiderivative(spec, b, cfg)?;
    let lower = antiderivative(spec, a, cfg)?;
    Ok(upper.value - lower.value)
}

fn check_half_line(alpha: f64, eta: f64, beta: f64) -> Result<f64> {
    if !(eta > 0.0) || !eta.is_finite() {
        return Err(Error::Domain(format!("eta must be positive, got {eta}")));
    }
    if beta == 0.0 || !beta.is_finite() || !alpha.is_finite() {
        return Err(Error::Domain("beta must be finite and nonzero".into()));
    }
    if alpha == -1.0 {
        return Err(Error::Domain("alpha must differ from -1".into()));
    }
    // Integrable at both ends iff (α+1)/β > 0: α > -1 for β > 0, α < -1 for β < 0.
    let s = (alpha + 1.0) / beta;
    if !(s > 0.0) {
        return Err(Error::Domain(format!(
            "integral diverges: (alpha+1)/beta = {s} must be positive"
        )));
    }
    Ok(s)
}

/// `∫₀^∞ x^α e^(-η x^β) dx = Γ((α+β+1)/β) / (|α+1| η^((α+1)/β))`.
pub fn half_line_integral(alpha: f64, eta: f64, beta: f64) -> Result<f64> {
    let s = check_half_line(alpha, eta, beta)?;
    let log_value = specfun::log_gamma(s + 1.0)? - s * eta.ln() - (alpha + 1.0).abs().ln();
    Ok(log_value.exp())
}

/// `∫_-∞^∞ |x|^α e^(-η |x|^β) dx`, twice the half-line value.
pub fn full_line_integral(alpha: f64, eta: f64, beta: f64) -> Result<f64> {
    Ok(2.0 * half_line_integral(alpha, eta, beta)?)
}
