//! Formula variants as they appear in print, kept so that tests can show
//! they disagree with the oracles while the corrected forms elsewhere in
//! the crate agree.
//!
//! Nothing in the rest of the crate calls into this module.

use serde::Serialize;

use crate::dd::Dd;
use crate::error::Result;
use crate::identities::{IdentityId, IdentityResidual, LemmaVariant};
use crate::integrals::Kind;
use crate::specfun::{self, log_gamma, SeriesConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Erratum {
    pub id: &'static str,
    pub printed: &'static str,
    pub corrected: &'static str,
    pub evidence: &'static str,
}

pub const CATALOGUE: &[Erratum] = &[
    Erratum {
        id: "gengamma-moment-eta-exponent",
        printed: "M(X^n) = Γ((α+n+1)/β) / (η^(α/β) Γ((α+1)/β))",
        corrected: "M(X^n) = Γ((α+n+1)/β) / (η^(n/β) Γ((α+1)/β))",
        evidence: "α=1, η=2, β=1, n=2: quadrature gives 1.5, printed gives 3",
    },
    Erratum {
        id: "invgamma-moment-denominator",
        printed: "M(X^n) = η^n Γ(θ-n) / Γ(θ+1), n > θ",
        corrected: "M(X^n) = η^n Γ(θ-n) / Γ(θ), n < θ",
        evidence: "θ=3, η=2, n=1: quadrature gives 1, printed gives 1/3",
    },
    Erratum {
        id: "gengamma-cdf-prefactor",
        printed: "F(x) = (α+1) η^s / Γ(b) · x^(α+1) e^(-φ) 1F1(1; b; φ)",
        corrected: "F(x) = η^s / Γ(b) · x^(α+1) e^(-φ) 1F1(1; b; φ)",
        evidence: "printed F(∞) = α+1",
    },
    Erratum {
        id: "invgamma-cdf-constant",
        printed: "F(x) = -η^θ / Γ(θ+1) · x^(-θ) e^(-η/x) 1F1(1; θ+1; η/x)",
        corrected: "F(x) = 1 - η^θ / Γ(θ+1) · x^(-θ) e^(-η/x) 1F1(1; θ+1; η/x)",
        evidence: "printed form is negative on (0, ∞) and tends to 0 at ∞",
    },
    Erratum {
        id: "symmetric-cdf-sign",
        printed: "F(x) = [1 - (α+1) η^s / Γ(b) · x^(α+1) e^(-φ) 1F1(1; b; φ)] / 2",
        corrected: "F(x) = 1/2 + sign(x) P(s, η|x|^β) / 2",
        evidence: "printed form decreases from 1/2 and, for α=0, tends to 0 at ∞",
    },
    Erratum {
        id: "gaussian-type-cdf-power",
        printed: "F(x) = [1 - β/σ · η^(1/β)/Γ(1/β) · e^(-φ) 1F1(1; (β+1)/β; φ)] / 2",
        corrected: "F(x) = 1/2 + sign(u) P(1/β, η|u|^β) / 2, u = (x-θ)/σ",
        evidence: "printed form lacks the factor u and tends to 1/2 at ∞",
    },
    Erratum {
        id: "product-identity-even",
        printed: "∏_{m=0}^{2j} (α+mβ+1) = (α+1)(α+β+1)(2β)^(2j) (p+1)_j (q+1)_j",
        corrected: "∏_{m=0}^{2j} (α+mβ+1) = (α+1)(2β)^(2j) (p)_j (q)_j",
        evidence: "α=0, β=1, j=1: product 6, printed 40",
    },
    Erratum {
        id: "product-identity-odd",
        printed: "∏_{m=0}^{2j+1} (α+mβ+1) = (α+1)(α+β+1)(2β)^(2j) (q+1)_j (r+1)_j",
        corrected: "∏_{m=0}^{2j+1} (α+mβ+1) = (α+1)(α+β+1)(2β)^(2j) (q)_j (r)_j",
        evidence: "α=0, β=1, j=1: product 24, printed 60",
    },
    Erratum {
        id: "hyperbolic-trig-antiderivative-prefactor",
        printed: "x^(α+1)/((α+1)(α+β+1)) · [k₁ F(p,q) ∓ βφ k₂ F(q,r)]",
        corrected: "x^(α+1)/(α+1) · [k₁ F(p,q) ∓ βφ/(α+β+1) k₂ F(q,r)]",
        evidence: "cosh, α=0, β=1, x=1: printed 0.2684... versus sinh 1 = 1.1752...",
    },
    Erratum {
        id: "hyperbolic-trig-identity-prefactor",
        printed: "1/(α+β+1) · [k₁ F(p,q) ∓ βφ k₂ F(q,r)] = exponential side",
        corrected: "k₁ F(p,q) ∓ βφ/(α+β+1) k₂ F(q,r) = exponential side",
        evidence: "residuals of order one at generic points",
    },
    Erratum {
        id: "trig-identity-signs",
        printed: "cos ... - βφ sin ...  and  sin ... + βφ cos ...",
        corrected: "cos ... + βφ/(α+β+1) sin ...  and  sin ... - βφ/(α+β+1) cos ...",
        evidence: "the corrected signs are those of the cos and sin antiderivatives",
    },
];

/// Printed generalized gamma moment, with `η^(α/β)`.
pub fn gen_gamma_moment(alpha: f64, eta: f64, beta: f64, n: u32) -> Result<f64> {
    let k = (alpha + n as f64 + 1.0) / beta;
    let s = (alpha + 1.0) / beta;
    Ok((log_gamma(k)? - log_gamma(s)? - alpha / beta * eta.ln()).exp())
}

/// Printed inverse gamma moment, with `Γ(θ+1)` below.
pub fn inv_gamma_moment(theta: f64, eta: f64, n: u32) -> Result<f64> {
    Ok((n as f64 * eta.ln() + log_gamma(theta - n as f64)? - log_gamma(theta + 1.0)?).exp())
}

/// `exp(log_prefactor) · e^(-φ) 1F1(1; b; φ)`.
fn scaled_kummer(b: f64, phi: f64, log_prefactor: f64, cfg: &SeriesConfig) -> Result<f64> {
    Ok(specfun::hyp1f1_scaled(1.0, b, phi, log_prefactor - phi, cfg)?.value)
}

/// Printed generalized gamma CDF, with the extra `(α+1)`. Requires `α+1 > 0`.
pub fn gen_gamma_cdf(alpha: f64, eta: f64, beta: f64, x: f64, cfg: &SeriesConfig) -> Result<f64> {
    let s = (alpha + 1.0) / beta;
    let b = s + 1.0;
    let log_pre = (alpha + 1.0).ln() + s * eta.ln() - log_gamma(b)? + (alpha + 1.0) * x.ln();
    scaled_kummer(b, eta * x.powf(beta), log_pre, cfg)
}

/// Printed inverse gamma CDF, which lacks the additive 1.
pub fn inv_gamma_cdf(theta: f64, eta: f64, x: f64, cfg: &SeriesConfig) -> Result<f64> {
    let log_pre = theta * eta.ln() - log_gamma(theta + 1.0)? - theta * x.ln();
    Ok(-scaled_kummer(theta + 1.0, eta / x, log_pre, cfg)?)
}

/// Printed symmetric CDF at `x > 0`.
pub fn symmetric_cdf(alpha: f64, eta: f64, beta: f64, x: f64, cfg: &SeriesConfig) -> Result<f64> {
    Ok(0.5 * (1.0 - gen_gamma_cdf(alpha, eta, beta, x, cfg)?))
}

/// Printed Gaussian-type CDF at `x > θ`.
pub fn gaussian_type_cdf(
    eta: f64,
    beta: f64,
    theta: f64,
    sigma: f64,
    x: f64,
    cfg: &SeriesConfig,
) -> Result<f64> {
    let u = (x - theta) / sigma;
    let b = (beta + 1.0) / beta;
    let log_pre = beta.ln() - sigma.ln() + eta.ln() / beta - log_gamma(1.0 / beta)?;
    Ok(0.5 * (1.0 - scaled_kummer(b, eta * u.powf(beta), log_pre, cfg)?))
}

/// Printed Pochhammer side of the product identities.
pub fn lemma1_rhs(variant: LemmaVariant, alpha: f64, beta: f64, j: u32) -> f64 {
    let a1 = alpha + 1.0;
    let s2 = alpha + beta + 1.0;
    let p = s2 / (2.0 * beta);
    let lead = a1 * s2 * (2.0 * beta).powi(2 * j as i32);
    match variant {
        LemmaVariant::A => a1 * beta.powi(j as i32) * specfun::pochhammer(a1 / beta + 1.0, j),
        LemmaVariant::B => lead * specfun::pochhammer(p + 1.0, j) * specfun::pochhammer(p + 1.5, j),
        LemmaVariant::C => lead * specfun::pochhammer(p + 1.5, j) * specfun::pochhammer(p + 2.0, j),
    }
}

/// The 1F2 pair `(F(p,q; ±φ²/4), F(q,r; ±φ²/4))` and the kernel values
/// `(even, odd)` = (cosh, sinh) or (cos, sin).
fn pieces(kind: Kind, alpha: f64, beta: f64, phi: f64, cfg: &SeriesConfig) -> Result<[f64; 4]> {
    let p = (alpha + beta + 1.0) / (2.0 * beta);
    let hyperbolic = matches!(kind, Kind::Cosh | Kind::Sinh | Kind::Exp);
    let arg = if hyperbolic {
        phi * phi / 4.0
    } else {
        -phi * phi / 4.0
    };
    let f1 = specfun::hyp1f2_dd(Dd::ONE, Dd::new(p), Dd::new(p + 0.5), Dd::new(arg), cfg)?;
    let f2 = specfun::hyp1f2_dd(
        Dd::ONE,
        Dd::new(p + 0.5),
        Dd::new(p + 1.0),
        Dd::new(arg),
        cfg,
    )?;
    let (even, odd) = if hyperbolic {
        (phi.cosh(), phi.sinh())
    } else {
        (phi.cos(), phi.sin())
    };
    Ok([f1.value.to_f64(), f2.value.to_f64(), even, odd])
}

/// Printed hyperbolic or trigonometric antiderivative, with
/// `1/((α+1)(α+β+1))` in front of both terms.
pub fn antiderivative(
    kind: Kind,
    alpha: f64,
    eta: f64,
    beta: f64,
    x: f64,
    cfg: &SeriesConfig,
) -> Result<f64> {
    let phi = eta * x.powf(beta);
    let [f1, f2, even, odd] = pieces(kind, alpha, beta, phi, cfg)?;
    let c = beta * phi;
    let bracket = match kind {
        Kind::Cosh => even * f1 - c * odd * f2,
        Kind::Sinh => odd * f1 - c * even * f2,
        Kind::Cos => even * f1 + c * odd * f2,
        Kind::Sin => odd * f1 - c * even * f2,
        Kind::Exp => {
            return crate::integrals::antiderivative(
                &crate::integrals::IntegralSpec::new(kind, alpha, eta, beta)?,
                x,
                cfg,
            )
            .map(|v| v.value)
        }
    };
    Ok(x.powf(alpha + 1.0) / ((alpha + 1.0) * (alpha + beta + 1.0)) * bracket)
}

/// Printed left side of the hyperbolic and trigonometric identities, with
/// the outer `1/(α+β+1)` and, for the trigonometric ones, the printed signs.
/// The right sides are unchanged, so the residual is computed against
/// [`crate::identities::check_identity`].
pub fn identity(
    id: IdentityId,
    alpha: f64,
    beta: f64,
    eta: f64,
    x: f64,
    cfg: &SeriesConfig,
) -> Result<IdentityResidual> {
    let phi = eta * x.powf(beta);
    let s2 = alpha + beta + 1.0;
    let c = beta * phi;
    let kind = match id {
        IdentityId::T5 | IdentityId::T6 | IdentityId::T7 => Kind::Cos,
        _ => Kind::Cosh,
    };
    let [f1, f2, even, odd] = pieces(kind, alpha, beta, phi, cfg)?;
    let cosh_side = (even * f1 - c * odd * f2) / s2;
    let sinh_side = (odd * f1 - c * even * f2) / s2;
    let cos_side = (even * f1 - c * odd * f2) / s2;
    let sin_side = (odd * f1 + c * even * f2) / s2;
    let exact = crate::identities::check_identity(id, alpha, beta, eta, x, cfg)?;
    let printed = match id {
        IdentityId::T2 => IdentityResidual::new(cosh_side, exact.rhs),
        IdentityId::T3 => IdentityResidual::new(sinh_side, exact.rhs),
        IdentityId::T4 => IdentityResidual::new(exact.lhs, cosh_side + sinh_side),
        IdentityId::T5 => IdentityResidual::new(cos_side, exact.rhs),
        IdentityId::T6 => IdentityResidual::new(sin_side, exact.rhs),
        IdentityId::T7 => {
            // Compare the real part; `exact.lhs` is Re or Im of the exponential side.
            let re = crate::identities::check_identity(IdentityId::T5, alpha, beta, eta, x, cfg)?;
            IdentityResidual::new(re.rhs, cos_side)
        }
        other => {
            return Err(crate::Error::InvalidSpec(format!(
                "{other} has no printed 1F2 variant"
            )))
        }
    };
    Ok(printed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::{GenGammaParams, InvGammaParams};
    use crate::identities::check_lemma1;
    use crate::oracle;

    fn cfg() -> SeriesConfig {
        SeriesConfig::default()
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn printed_gen_gamma_moment_fails_oracle() {
        let g = GenGammaParams::new(1.0, 2.0, 1.0).unwrap();
        let q = oracle::integrate_half_line(|x| x * x * g.pdf(x).unwrap(), 1e-13, 1e-12).unwrap();
        assert!((q.value - 1.5).abs() < 1e-10);
        assert!((gen_gamma_moment(1.0, 2.0, 1.0, 2).unwrap() - 3.0).abs() < 1e-13);
        assert!(rel(gen_gamma_moment(1.0, 2.0, 1.0, 2).unwrap(), q.value) >= 0.1);
    }

    #[test]
    fn printed_inv_gamma_moment_fails_oracle() {
        let ig = InvGammaParams::new(3.0, 2.0).unwrap().as_gen_gamma();
        let q = oracle::integrate_half_line(|x| x * ig.pdf(x).unwrap(), 1e-13, 1e-12).unwrap();
        assert!((q.value - 1.0).abs() < 1e-10);
        assert!((inv_gamma_moment(3.0, 2.0, 1).unwrap() - 1.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn printed_cdfs_miss_the_normalization_limit() {
        // Gamma(3, 1): printed F(∞) → α + 1 = 3.
        assert!((gen_gamma_cdf(2.0, 1.0, 1.0, 60.0, &cfg()).unwrap() - 3.0).abs() < 1e-10);
        assert!(inv_gamma_cdf(3.0, 2.0, 1.0, &cfg()).unwrap() < 0.0);
        assert!(inv_gamma_cdf(3.0, 2.0, 1e6, &cfg()).unwrap().abs() < 1e-6);
        assert!(symmetric_cdf(0.0, 0.5, 2.0, 40.0, &cfg()).unwrap().abs() < 1e-10);
        assert!((gaussian_type_cdf(0.5, 2.0, 0.0, 1.0, 40.0, &cfg()).unwrap() - 0.5).abs() < 0.05);
    }

    #[test]
    fn printed_product_identities_fail() {
        assert_eq!(lemma1_rhs(LemmaVariant::B, 0.0, 1.0, 1), 40.0);
        assert_eq!(lemma1_rhs(LemmaVariant::C, 0.0, 1.0, 1), 60.0);
        assert_eq!(lemma1_rhs(LemmaVariant::B, 0.0, 1.0, 0), 2.0);
        let exact = check_lemma1(LemmaVariant::B, 0.0, 1.0, 1);
        assert_eq!(exact.lhs, 6.0);
        // The first variant is printed correctly.
        let a = lemma1_rhs(LemmaVariant::A, 0.7, 1.3, 6);
        let exact = check_lemma1(LemmaVariant::A, 0.7, 1.3, 6);
        assert!(rel(a, exact.lhs) < 1e-13);
    }

    #[test]
    fn printed_antiderivatives_fail_oracle() {
        for kind in [Kind::Cosh, Kind::Sinh, Kind::Cos, Kind::Sin] {
            let (alpha, eta, beta) = (0.5, 1.0, 2.0);
            let q = oracle::integrate(
                |u| u.powf(alpha) * kind.kernel(eta * u.powf(beta)),
                0.2,
                1.5,
                1e-13,
                1e-13,
            )
            .unwrap();
            let printed = antiderivative(kind, alpha, eta, beta, 1.5, &cfg()).unwrap()
                - antiderivative(kind, alpha, eta, beta, 0.2, &cfg()).unwrap();
            assert!(rel(printed, q.value) >= 0.1, "{kind}");
        }
    }

    #[test]
    fn printed_identities_fail() {
        for id in [
            IdentityId::T2,
            IdentityId::T3,
            IdentityId::T4,
            IdentityId::T5,
            IdentityId::T6,
            IdentityId::T7,
        ] {
            let r = identity(id, 0.5, 2.0, 1.0, 0.7, &cfg()).unwrap();
            assert!(r.rel_residual > 0.05, "{id}: {r:?}");
        }
    }
}
