//! Generalized gamma-type and Gaussian-type distributions.
//!
//! All four families are built on the kernel `x^α e^(-η x^β)` with shape
//! `s = (α+1)/β`:
//!
//! * [`GenGammaParams`]: density `|β| η^s / Γ(s) · x^α e^(-η x^β)` on `(0, ∞)`,
//!   for any `β ≠ 0` with `s > 0`.
//! * [`InvGammaParams`]: the case `α = -(θ+1)`, `β = -1`.
//! * [`SymmetricParams`]: density `β η^s / (2Γ(s)) · |x|^α e^(-η |x|^β)` on ℝ.
//! * [`LocScaleParams`]: `f((x-θ)/σ) / σ` for a symmetric `f`.
//!
//! Distribution functions come from the exponential antiderivative with
//! `η ↦ -η`, scaled by the reciprocal of the half-line integral. For `β > 0`
//! that is the regularized lower incomplete gamma function `P(s, η x^β)`.

use rand::distributions::Open01;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::integrals::{self, IntegralSpec, Kind};
use crate::specfun::{log_gamma, SeriesConfig};

/// Tolerance on `|cdf(x) - p|` accepted by [`Distribution::quantile`].
pub const QUANTILE_TOL: f64 = 1e-10;
/// Iteration cap of the quantile solver.
pub const QUANTILE_MAX_ITER: usize = 200;

fn finite_all(xs: &[f64]) -> bool {
    xs.iter().all(|x| x.is_finite())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GenGammaParams {
    pub alpha: f64,
    pub eta: f64,
    pub beta: f64,
}

impl GenGammaParams {
    /// Requires `η > 0`, `β ≠ 0`, `α ≠ -1` and `(α+1)/β > 0`.
    pub fn new(alpha: f64, eta: f64, beta: f64) -> Result<Self> {
        if !finite_all(&[alpha, eta, beta]) {
            return Err(Error::InvalidParams("parameters must be finite".into()));
        }
        if !(eta > 0.0) {
            return Err(Error::InvalidParams(format!(
                "eta must be positive, got {eta}"
            )));
        }
        if beta == 0.0 {
            return Err(Error::InvalidParams("beta must be nonzero".into()));
        }
        if alpha == -1.0 || !((alpha + 1.0) / beta > 0.0) {
            return Err(Error::InvalidParams(format!(
                "(alpha+1)/beta must be positive, got alpha={alpha}, beta={beta}"
            )));
        }
        Ok(Self { alpha, eta, beta })
    }

    pub fn shape(&self) -> f64 {
        (self.alpha + 1.0) / self.beta
    }

    fn log_norm(&self) -> f64 {
        let s = self.shape();
        self.beta.abs().ln() + s * self.eta.ln() - lgamma(s)
    }

    pub fn pdf(&self, x: f64) -> Result<f64> {
        if !(x > 0.0) {
            return Err(Error::Domain(format!("support is (0, inf), got x={x}")));
        }
        if x.is_infinite() {
            return Ok(0.0);
        }
        let Self { alpha, eta, beta } = *self;
        Ok((self.log_norm() + alpha * x.ln() - eta * x.powf(beta)).exp())
    }

    /// `P(s, φ)` for `φ = η x^β`, i.e. the mass of `(0, x)` when `β > 0`.
    fn lower_mass(&self, x: f64, cfg: &SeriesConfig) -> Result<f64> {
        let Self { alpha, eta, beta } = *self;
        let s = self.shape();
        let phi = eta * x.powf(beta);
        if phi == 0.0 {
            return Ok(0.0);
        }
        if phi.is_infinite() {
            return Ok(1.0);
        }
        // Upper tail bound φ^(s-1) e^-φ / Γ(s), up to a factor 2.
        if phi > 2.0 * (s - 1.0).abs() + 2.0 {
            let log_upper = (s - 1.0) * phi.ln() - phi - lgamma(s) + 2f64.ln();
            if log_upper < -41.0 {
                return Ok(1.0);
            }
        }
        // N · F(x) where F is the exponential antiderivative with η ↦ -η and
        // N = 1 / ∫₀^∞ x^α e^(-η x^β) dx; the product is ± P(s, φ).
        let spec = IntegralSpec::new(Kind::Exp, alpha, -eta, beta)?;
        let anti = integrals::antiderivative(&spec, x, cfg)?;
        let log_n = (alpha + 1.0).abs().ln() + s * eta.ln() - lgamma(s + 1.0);
        Ok((anti.value.abs().ln() + log_n).exp())
    }

    pub fn cdf(&self, x: f64, cfg: &SeriesConfig) -> Result<f64> {
        if x.is_nan() || x < 0.0 {
            return Err(Error::Domain(format!(
                "support closure is [0, inf], got x={x}"
            )));
        }
        let (at_zero, at_inf) = if self.beta > 0.0 {
            (0.0, 1.0)
        } else {
            (1.0, 0.0)
        };
        let p = if x == 0.0 {
            at_zero
        } else if x.is_infinite() {
            at_inf
        } else {
            self.lower_mass(x, cfg)?
        };
        let f = if self.beta > 0.0 { p } else { 1.0 - p };
        Ok(f.clamp(0.0, 1.0))
    }

    /// `E[X^n] = Γ((α+n+1)/β) / (η^(n/β) Γ(s))`, finite iff `(α+n+1)/β > 0`.
    pub fn raw_moment(&self, n: u32) -> Result<f64> {
        let Self { alpha, eta, beta } = *self;
        let k = (alpha + n as f64 + 1.0) / beta;
        if !(k > 0.0) {
            return Err(Error::MomentDoesNotExist {
                n,
                reason: format!("(alpha+n+1)/beta = {k} is not positive"),
            });
        }
        Ok((lgamma(k) - lgamma(self.shape()) - n as f64 / beta * eta.ln()).exp())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InvGammaParams {
    pub theta: f64,
    pub eta: f64,
}

impl InvGammaParams {
    pub fn new(theta: f64, eta: f64) -> Result<Self> {
        if !(theta > 0.0 && eta > 0.0) || !finite_all(&[theta, eta]) {
            return Err(Error::InvalidParams(format!(
                "theta and eta must be positive, got theta={theta}, eta={eta}"
            )));
        }
        Ok(Self { theta, eta })
    }

    pub fn as_gen_gamma(&self) -> GenGammaParams {
        GenGammaParams {
            alpha: -(self.theta + 1.0),
            eta: self.eta,
            beta: -1.0,
        }
    }

    /// `E[X^n] = η^n Γ(θ-n) / Γ(θ)`, finite iff `n < θ`.
    pub fn raw_moment(&self, n: u32) -> Result<f64> {
        let Self { theta, eta } = *self;
        if !((n as f64) < theta) {
            return Err(Error::MomentDoesNotExist {
                n,
                reason: format!("needs n < theta = {theta}"),
            });
        }
        Ok((n as f64 * eta.ln() + lgamma(theta - n as f64) - lgamma(theta)).exp())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SymmetricParams {
    pub alpha: f64,
    pub eta: f64,
    pub beta: f64,
}

impl SymmetricParams {
    /// Requires `η > 0`, `β > 0`, `α > -1`.
    pub fn new(alpha: f64, eta: f64, beta: f64) -> Result<Self> {
        if !finite_all(&[alpha, eta, beta]) {
            return Err(Error::InvalidParams("parameters must be finite".into()));
        }
        if !(eta > 0.0 && beta > 0.0) {
            return Err(Error::InvalidParams(format!(
                "eta and beta must be positive, got eta={eta}, beta={beta}"
            )));
        }
        if !(alpha > -1.0) {
            return Err(Error::InvalidParams(format!(
                "alpha must exceed -1, got {alpha}"
            )));
        }
        Ok(Self { alpha, eta, beta })
    }

    /// The distribution of `|X|`.
    pub fn folded(&self) -> GenGammaParams {
        GenGammaParams {
            alpha: self.alpha,
            eta: self.eta,
            beta: self.beta,
        }
    }

    pub fn pdf(&self, x: f64) -> Result<f64> {
        if x.is_nan() {
            return Err(Error::Domain("x is NaN".into()));
        }
        if x == 0.0 {
            let g = self.folded();
            let norm = 0.5 * g.log_norm().exp();
            return Ok(if self.alpha == 0.0 {
                norm
            } else if self.alpha > 0.0 {
                0.0
            } else {
                f64::INFINITY
            });
        }
        Ok(0.5 * self.folded().pdf(x.abs())?)
    }

    pub fn cdf(&self, x: f64, cfg: &SeriesConfig) -> Result<f64> {
        if x.is_nan() {
            return Err(Error::Domain("x is NaN".into()));
        }
        let half = 0.5 * self.folded().cdf(x.abs(), cfg)?;
        Ok(if x >= 0.0 { 0.5 + half } else { 0.5 - half })
    }

    /// Zero for odd `n`; the folded moment for even `n`.
    pub fn raw_moment(&self, n: u32) -> Result<f64> {
        if n % 2 == 1 {
            return Ok(0.0);
        }
        self.folded().raw_moment(n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LocScaleParams {
    pub base: SymmetricParams,
    pub theta: f64,
    pub sigma: f64,
}

impl LocScaleParams {
    pub fn new(base: SymmetricParams, theta: f64, sigma: f64) -> Result<Self> {
        if !theta.is_finite() || !(sigma > 0.0) || !sigma.is_finite() {
            return Err(Error::InvalidParams(format!(
                "theta must be finite and sigma positive, got theta={theta}, sigma={sigma}"
            )));
        }
        Ok(Self { base, theta, sigma })
    }

    fn standardize(&self, x: f64) -> f64 {
        (x - self.theta) / self.sigma
    }

    pub fn pdf(&self, x: f64) -> Result<f64> {
        Ok(self.base.pdf(self.standardize(x))? / self.sigma)
    }

    pub fn cdf(&self, x: f64, cfg: &SeriesConfig) -> Result<f64> {
        self.base.cdf(self.standardize(x), cfg)
    }

    /// Binomial expansion of `E[(θ + σU)^n]` over the even moments of `U`.
    pub fn raw_moment(&self, n: u32) -> Result<f64> {
        if self.theta == 0.0 && n % 2 == 1 {
            return Ok(0.0);
        }
        let mut sum = 0.0;
        for l in 0..=n / 2 {
            let u = self.base.raw_moment(2 * l)?;
            sum += binomial(n, 2 * l)
                * self.theta.powi((n - 2 * l) as i32)
                * self.sigma.powi(2 * l as i32)
                * u;
        }
        Ok(sum)
    }

    /// `(θ, σ² η^(-2/β) Γ((α+3)/β) / Γ((α+1)/β))`.
    pub fn mean_variance(&self) -> Result<(f64, f64)> {
        let SymmetricParams { alpha, eta, beta } = self.base;
        let k = (alpha + 3.0) / beta;
        if !(k > 0.0) {
            return Err(Error::MomentDoesNotExist {
                n: 2,
                reason: format!("(alpha+3)/beta = {k} is not positive"),
            });
        }
        let log_ratio = lgamma(k) - lgamma((alpha + 1.0) / beta) - 2.0 / beta * eta.ln();
        Ok((self.theta, self.sigma * self.sigma * log_ratio.exp()))
    }
}

/// `E[X^n]` for `X ~ N(θ, σ²)`:
/// `Σ_l C(n, 2l) θ^(n-2l) (2σ²)^l Γ(l+1/2)/√π`.
pub fn gaussian_raw_moment(theta: f64, sigma: f64, n: u32) -> f64 {
    let half_log_pi = 0.5 * std::f64::consts::PI.ln();
    (0..=n / 2)
        .map(|l| {
            let ratio = (lgamma(l as f64 + 0.5) - half_log_pi).exp();
            binomial(n, 2 * l)
                * theta.powi((n - 2 * l) as i32)
                * (2.0 * sigma * sigma).powi(l as i32)
                * ratio
        })
        .sum()
}

pub fn binomial(n: u32, k: u32) -> f64 {
    let k = k.min(n - k.min(n));
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn lgamma(x: f64) -> f64 {
    log_gamma(x).unwrap_or(f64::NAN)
}

/// Any of the four families.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Distribution {
    GenGamma(GenGammaParams),
    InvGamma(InvGammaParams),
    Symmetric(SymmetricParams),
    LocScale(LocScaleParams),
}

impl Distribution {
    pub fn name(&self) -> &'static str {
        match self {
            Distribution::GenGamma(_) => "gengamma",
            Distribution::InvGamma(_) => "invgamma",
            Distribution::Symmetric(_) => "symmetric",
            Distribution::LocScale(_) => "locscale",
        }
    }

    /// Open support interval.
    pub fn support(&self) -> (f64, f64) {
        match self {
            Distribution::GenGamma(_) | Distribution::InvGamma(_) => (0.0, f64::INFINITY),
            _ => (f64::NEG_INFINITY, f64::INFINITY),
        }
    }

    pub fn pdf(&self, x: f64) -> Result<f64> {
        match self {
            Distribution::GenGamma(g) => g.pdf(x),
            Distribution::InvGamma(p) => p.as_gen_gamma().pdf(x),
            Distribution::Symmetric(p) => p.pdf(x),
            Distribution::LocScale(p) => p.pdf(x),
        }
    }

    pub fn cdf(&self, x: f64, cfg: &SeriesConfig) -> Result<f64> {
        match self {
            Distribution::GenGamma(g) => g.cdf(x, cfg),
            Distribution::InvGamma(p) => p.as_gen_gamma().cdf(x, cfg),
            Distribution::Symmetric(p) => p.cdf(x, cfg),
            Distribution::LocScale(p) => p.cdf(x, cfg),
        }
    }

    pub fn raw_moment(&self, n: u32) -> Result<f64> {
        match self {
            Distribution::GenGamma(g) => g.raw_moment(n),
            Distribution::InvGamma(p) => p.raw_moment(n),
            Distribution::Symmetric(p) => p.raw_moment(n),
            Distribution::LocScale(p) => p.raw_moment(n),
        }
    }

    pub fn mean_variance(&self) -> Result<(f64, f64)> {
        match self {
            Distribution::LocScale(p) => p.mean_variance(),
            Distribution::Symmetric(p) => LocScaleParams::new(*p, 0.0, 1.0)?.mean_variance(),
            _ => {
                let m1 = self.raw_moment(1)?;
                let m2 = self.raw_moment(2)?;
                Ok((m1, m2 - m1 * m1))
            }
        }
    }

    /// `x` with `|cdf(x) - p| <= QUANTILE_TOL`.
    pub fn quantile(&self, p: f64, cfg: &SeriesConfig) -> Result<f64> {
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::Domain(format!("p must lie in (0, 1), got {p}")));
        }
        match self {
            Distribution::GenGamma(g) => half_line_quantile(g, p, cfg),
            Distribution::InvGamma(ig) => half_line_quantile(&ig.as_gen_gamma(), p, cfg),
            Distribution::Symmetric(s) => symmetric_quantile(s, p, cfg),
            Distribution::LocScale(l) => {
                Ok(l.theta + l.sigma * symmetric_quantile(&l.base, p, cfg)?)
            }
        }
    }

    /// `count` inverse-CDF draws from a ChaCha20 stream seeded with `seed`.
    pub fn sample(&self, count: usize, seed: u64, cfg: &SeriesConfig) -> Result<Vec<f64>> {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        (0..count)
            .map(|_| {
                let u: f64 = rng.sample(Open01);
                self.quantile(u, cfg)
            })
            .collect()
    }
}

fn symmetric_quantile(s: &SymmetricParams, p: f64, cfg: &SeriesConfig) -> Result<f64> {
    // F(x) = 1/2 ± P(|x|)/2, so the folded quantile of |2p - 1| gives |x|.
    if p == 0.5 {
        return Ok(0.0);
    }
    let q = (2.0 * p - 1.0).abs();
    let r = half_line_quantile(&s.folded(), q, cfg)?;
    Ok(if p > 0.5 { r } else { -r })
}

/// Safeguarded Newton on `(0, ∞)`: bracket by doubling, then Newton steps
/// from the pdf, falling back to geometric bisection whenever a step leaves
/// the bracket.
fn half_line_quantile(g: &GenGammaParams, p: f64, cfg: &SeriesConfig) -> Result<f64> {
    let cdf = |x: f64| g.cdf(x, cfg);
    let start = g
        .raw_moment(1)
        .ok()
        .filter(|m| m.is_finite() && *m > 0.0)
        .unwrap_or(1.0);
    let (mut lo, mut hi) = (start, start);
    let mut iterations = 0usize;
    while cdf(lo)? > p {
        lo *= 0.5;
        iterations += 1;
        if lo == 0.0 || iterations > 2000 {
            return Err(Error::NoConvergence { iterations });
        }
    }
    while cdf(hi)? < p {
        hi *= 2.0;
        iterations += 1;
        if hi.is_infinite() || iterations > 2000 {
            return Err(Error::NoConvergence { iterations });
        }
    }
    if lo == hi {
        return Ok(lo);
    }

    let mut x = (lo * hi).sqrt();
    for it in 0..QUANTILE_MAX_ITER {
        let f = cdf(x)? - p;
        if f.abs() <= 1e-15 {
            return Ok(x);
        }
        if f < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let d = g.pdf(x)?;
        let newton = x - f / d;
        let next = if d > 0.0 && newton > lo && newton < hi {
            newton
        } else {
            (lo * hi).sqrt()
        };
        let width_done = hi - lo <= 4.0 * f64::EPSILON * hi;
        if (next - x).abs() <= 2.0 * f64::EPSILON * x || width_done {
            let best = [lo, x, next, hi]
                .into_iter()
                .map(|c| cdf(c).map(|v| (c, (v - p).abs())))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .min_by(|a, b| a.1.total_cmp(&b.1))
                .expect("non-empty");
            return if best.1 <= QUANTILE_TOL {
                Ok(best.0)
            } else {
                Err(Error::NoConvergence { iterations: it + 1 })
            };
        }
        x = next;
    }
    Err(Error::NoConvergence {
        iterations: QUANTILE_MAX_ITER,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{E, PI};

    fn cfg() -> SeriesConfig {
        SeriesConfig::default()
    }

    fn gauss() -> SymmetricParams {
        SymmetricParams::new(0.0, 0.5, 2.0).unwrap()
    }

    #[test]
    fn pdf_examples() {
        let g = GenGammaParams::new(1.0, 1.0, 1.0).unwrap();
        assert!((g.pdf(2.0).unwrap() - 2.0 * (-2f64).exp()).abs() < 1e-16);
        assert!((gauss().pdf(0.0).unwrap() - 1.0 / (2.0 * PI).sqrt()).abs() < 1e-16);
        let ig = Distribution::InvGamma(InvGammaParams::new(3.0, 2.0).unwrap());
        assert!((ig.pdf(1.0).unwrap() - 4.0 * (-2f64).exp()).abs() < 1e-15);
        assert!(g.pdf(-1.0).is_err());
    }

    #[test]
    fn cdf_examples() {
        let g = GenGammaParams::new(1.0, 1.0, 1.0).unwrap();
        for x in [0.1f64, 1.0, 3.0, 20.0] {
            let exact = 1.0 - (-x).exp() * (1.0 + x);
            assert!((g.cdf(x, &cfg()).unwrap() - exact).abs() < 1e-14, "x={x}");
        }
        assert!((g.cdf(1.0, &cfg()).unwrap() - (1.0 - 2.0 / E)).abs() < 1e-15);
        assert_eq!(gauss().cdf(0.0, &cfg()).unwrap(), 0.5);
        let ig = Distribution::InvGamma(InvGammaParams::new(3.0, 2.0).unwrap());
        assert!(ig.cdf(1e3, &cfg()).unwrap() >= 1.0 - 1e-6);
        // Q(3, 2/x) = e^-u (1 + u + u²/2), u = 2/x
        let u = 2.0f64;
        let exact = (-u).exp() * (1.0 + u + u * u / 2.0);
        assert!((ig.cdf(1.0, &cfg()).unwrap() - exact).abs() < 1e-14);
    }

    #[test]
    fn exponential_via_elementary_branch() {
        // α = β - 1 takes the elementary antiderivative.
        let g = GenGammaParams::new(0.0, 2.0, 1.0).unwrap();
        assert!((g.cdf(0.7, &cfg()).unwrap() + (-1.4f64).exp_m1()).abs() < 1e-15);
    }

    #[test]
    fn moment_examples() {
        let g = GenGammaParams::new(1.0, 2.0, 1.0).unwrap();
        assert!((g.raw_moment(2).unwrap() - 1.5).abs() < 1e-14);
        let ig = InvGammaParams::new(3.0, 2.0).unwrap();
        assert!((ig.raw_moment(1).unwrap() - 1.0).abs() < 1e-14);
        assert!(matches!(
            ig.raw_moment(3),
            Err(Error::MomentDoesNotExist { .. })
        ));
        let ls = LocScaleParams::new(gauss(), 1.5, 2.0).unwrap();
        assert!((ls.raw_moment(2).unwrap() - (1.5f64.powi(2) + 4.0)).abs() < 1e-13);
        assert_eq!(gauss().raw_moment(3).unwrap(), 0.0);
    }

    #[test]
    fn gaussian_moment_forms_agree() {
        for theta in [0.0, -0.7, 1.3] {
            let ls = LocScaleParams::new(gauss(), theta, 1.7).unwrap();
            for n in 0..=8 {
                let a = ls.raw_moment(n).unwrap();
                let b = gaussian_raw_moment(theta, 1.7, n);
                assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0), "n={n}");
            }
        }
        assert!((gaussian_raw_moment(0.0, 1.0, 4) - 3.0).abs() < 1e-14);
    }

    #[test]
    fn mean_variance_examples() {
        let mv = LocScaleParams::new(gauss(), 0.0, 1.0)
            .unwrap()
            .mean_variance()
            .unwrap();
        assert_eq!(mv.0, 0.0);
        assert!((mv.1 - 1.0).abs() < 1e-14);
        let b = SymmetricParams::new(0.0, 0.5, 4.0).unwrap();
        let (m, v) = LocScaleParams::new(b, 2.0, 3.0)
            .unwrap()
            .mean_variance()
            .unwrap();
        let expect = 9.0 * 2f64.sqrt() * libm::tgamma(0.75) / libm::tgamma(0.25);
        assert_eq!(m, 2.0);
        assert!((v - expect).abs() < 1e-13);
    }

    #[test]
    fn quantile_examples() {
        let d = Distribution::Symmetric(gauss());
        assert_eq!(d.quantile(0.5, &cfg()).unwrap(), 0.0);
        assert!((d.quantile(0.975, &cfg()).unwrap() - 1.959963984540054).abs() < 1e-9);
        let g = Distribution::GenGamma(GenGammaParams::new(1.0, 1.0, 1.0).unwrap());
        assert!((g.quantile(1.0 - 2.0 / E, &cfg()).unwrap() - 1.0).abs() < 1e-9);
        assert!(g.quantile(1.0, &cfg()).is_err());
    }

    #[test]
    fn sampling_is_reproducible() {
        let d = Distribution::GenGamma(GenGammaParams::new(1.0, 1.0, 1.0).unwrap());
        let a = d.sample(5, 42, &cfg()).unwrap();
        assert_eq!(a, d.sample(5, 42, &cfg()).unwrap());
        assert_ne!(a, d.sample(5, 43, &cfg()).unwrap());
    }

    #[test]
    fn parameter_validation() {
        assert!(GenGammaParams::new(-1.0, 1.0, 1.0).is_err());
        assert!(GenGammaParams::new(-2.0, 1.0, 1.0).is_err());
        assert!(GenGammaParams::new(0.0, 1.0, -1.0).is_err());
        assert!(GenGammaParams::new(-2.0, 1.0, -1.0).is_ok());
        assert!(GenGammaParams::new(0.0, 0.0, 1.0).is_err());
        assert!(InvGammaParams::new(0.0, 1.0).is_err());
        assert!(SymmetricParams::new(0.0, 1.0, -2.0).is_err());
        assert!(LocScaleParams::new(gauss(), 0.0, 0.0).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), 15.0);
        assert_eq!(binomial(6, 0), 1.0);
        assert_eq!(binomial(6, 6), 1.0);
        assert_eq!(binomial(8, 4), 70.0);
    }
}
