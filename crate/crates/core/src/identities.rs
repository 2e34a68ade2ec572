//! Pointwise residuals of the product identities and of the hypergeometric
//! identities that follow from splitting the exponential kernel into its
//! hyperbolic or trigonometric parts.
//!
//! With `φ = η x^β`, `b = (α+β+1)/β`, `c = βφ/(α+β+1)` and
//! `p = (α+β+1)/(2β)`, `q = p + 1/2`, `r = p + 1`:
//!
//! ```text
//! L1a: ∏_{m=0}^{j}    (α+mβ+1) = (α+1) β^j (b)_j
//! L1b: ∏_{m=0}^{2j}   (α+mβ+1) = (α+1) (2β)^(2j) (p)_j (q)_j
//! L1c: ∏_{m=0}^{2j+1} (α+mβ+1) = (α+1)(α+β+1) (2β)^(2j) (q)_j (r)_j
//!
//! T2: cosh φ F(p,q;φ²/4) - c sinh φ F(q,r;φ²/4) = [e^φ M(-φ) + e^-φ M(φ)] / 2
//! T3: sinh φ F(p,q;φ²/4) - c cosh φ F(q,r;φ²/4) = [e^φ M(-φ) - e^-φ M(φ)] / 2
//! T4: e^φ M(-φ) = (T2 left side) + (T3 left side)
//! T5: cos φ F(p,q;-φ²/4) + c sin φ F(q,r;-φ²/4) = Re e^(iφ) M(-iφ)
//! T6: sin φ F(p,q;-φ²/4) - c cos φ F(q,r;-φ²/4) = Im e^(iφ) M(-iφ)
//! T7: e^(iφ) M(-iφ) = (T5 left side) + i (T6 left side)
//! ```
//!
//! where `F(u,v;z) = 1F2(1; u, v; z)` and `M(z) = 1F1(1; b; z)`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::integrals::{self, Kind};
use crate::specfun::{self, SeriesConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum IdentityId {
    L1a,
    L1b,
    L1c,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
}

impl IdentityId {
    pub const ALL: [IdentityId; 9] = [
        IdentityId::L1a,
        IdentityId::L1b,
        IdentityId::L1c,
        IdentityId::T2,
        IdentityId::T3,
        IdentityId::T4,
        IdentityId::T5,
        IdentityId::T6,
        IdentityId::T7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::L1a => "L1a",
            IdentityId::L1b => "L1b",
            IdentityId::L1c => "L1c",
            IdentityId::T2 => "T2",
            IdentityId::T3 => "T3",
            IdentityId::T4 => "T4",
            IdentityId::T5 => "T5",
            IdentityId::T6 => "T6",
            IdentityId::T7 => "T7",
        }
    }

    pub fn lemma_variant(self) -> Option<LemmaVariant> {
        match self {
            IdentityId::L1a => Some(LemmaVariant::A),
            IdentityId::L1b => Some(LemmaVariant::B),
            IdentityId::L1c => Some(LemmaVariant::C),
            _ => None,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidSpec(format!("unknown identity {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LemmaVariant {
    A,
    B,
    C,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IdentityResidual {
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub rel_residual: f64,
}

impl IdentityResidual {
    pub fn new(lhs: f64, rhs: f64) -> Self {
        let residual = lhs - rhs;
        let scale = 1.0 + lhs.abs().max(rhs.abs());
        Self {
            lhs,
            rhs,
            residual,
            rel_residual: residual.abs() / scale,
        }
    }
}

/// Product form against Pochhammer form of the product identities.
pub fn check_lemma1(variant: LemmaVariant, alpha: f64, beta: f64, j: u32) -> IdentityResidual {
    let upper = match variant {
        LemmaVariant::A => j,
        LemmaVariant::B => 2 * j,
        LemmaVariant::C => 2 * j + 1,
    };
    let lhs: f64 = (0..=upper).map(|m| alpha + m as f64 * beta + 1.0).product();

    let a1 = alpha + 1.0;
    let s2 = alpha + beta + 1.0;
    let p = s2 / (2.0 * beta);
    let two_beta_sq = (2.0 * beta).powi(2 * j as i32);
    let rhs = match variant {
        LemmaVariant::A => a1 * beta.powi(j as i32) * specfun::pochhammer(s2 / beta, j),
        LemmaVariant::B => {
            a1 * two_beta_sq * specfun::pochhammer(p, j) * specfun::pochhammer(p + 0.5, j)
        }
        LemmaVariant::C => {
            a1 * s2
                * two_beta_sq
                * specfun::pochhammer(p + 0.5, j)
                * specfun::pochhammer(p + 1.0, j)
        }
    };
    IdentityResidual::new(lhs, rhs)
}

fn validate(alpha: f64, beta: f64, eta: f64, x: f64) -> Result<()> {
    if !(alpha.is_finite() && beta.is_finite() && eta.is_finite()) {
        return Err(Error::InvalidSpec("parameters must be finite".into()));
    }
    if beta == 0.0 || eta == 0.0 {
        return Err(Error::InvalidSpec("beta and eta must be nonzero".into()));
    }
    if alpha == -1.0 || alpha == -beta - 1.0 {
        return Err(Error::InvalidSpec(
            "alpha must differ from -1 and from -beta-1".into(),
        ));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!(
            "identities are checked at x > 0, got {x}"
        )));
    }
    Ok(())
}

/// `e^φ 1F1(1; b; -φ)` and `e^-φ 1F1(1; b; φ)`.
fn exp_pair(b: f64, phi: f64, cfg: &SeriesConfig) -> Result<(f64, f64)> {
    let plus = specfun::hyp1f1_scaled(1.0, b, -phi, phi, cfg)?;
    let minus = specfun::hyp1f1_scaled(1.0, b, phi, -phi, cfg)?;
    for s in [&plus, &minus] {
        if !s.converged {
            return Err(Error::NotConverged {
                terms: s.terms_used,
                err_est: s.trunc_err_est,
            });
        }
    }
    Ok((plus.value, minus.value))
}

/// Real and imaginary parts of `e^(iφ) 1F1(1; b; -iφ)`.
fn exp_imag(b: f64, phi: f64, cfg: &SeriesConfig) -> Result<(Dd, Dd)> {
    let (re, im) = specfun::hyp1f1_imag_dd(Dd::ONE, Dd::new(b), -phi, cfg)?;
    if !re.tail_converged {
        return Err(Error::NotConverged {
            terms: re.report.terms_used,
            err_est: re.report.trunc_err_est,
        });
    }
    let (s, c) = Dd::new(phi).sin_cos();
    let (fr, fi) = (re.value, im.value);
    Ok((c * fr - s * fi, s * fr + c * fi))
}

/// Residual of one of T2..T7 at a point. T7 is checked as its real and
/// imaginary parts; the part with the larger relative residual is returned.
pub fn check_identity(
    id: IdentityId,
    alpha: f64,
    beta: f64,
    eta: f64,
    x: f64,
    cfg: &SeriesConfig,
) -> Result<IdentityResidual> {
    validate(alpha, beta, eta, x)?;
    let phi = eta * x.powf(beta);
    let b = (alpha + beta + 1.0) / beta;
    let bracket = |kind| integrals::series_bracket(kind, alpha, beta, phi, cfg).map(|g| g.value);
    let res = match id {
        IdentityId::T2 => {
            let (ep, em) = exp_pair(b, phi, cfg)?;
            IdentityResidual::new(bracket(Kind::Cosh)?.to_f64(), 0.5 * (ep + em))
        }
        IdentityId::T3 => {
            let (ep, em) = exp_pair(b, phi, cfg)?;
            IdentityResidual::new(bracket(Kind::Sinh)?.to_f64(), 0.5 * (ep - em))
        }
        IdentityId::T4 => {
            let (ep, _) = exp_pair(b, phi, cfg)?;
            let sum = bracket(Kind::Cosh)? + bracket(Kind::Sinh)?;
            IdentityResidual::new(ep, sum.to_f64())
        }
        IdentityId::T5 => {
            let (re, _) = exp_imag(b, phi, cfg)?;
            IdentityResidual::new(bracket(Kind::Cos)?.to_f64(), re.to_f64())
        }
        IdentityId::T6 => {
            let (_, im) = exp_imag(b, phi, cfg)?;
            IdentityResidual::new(bracket(Kind::Sin)?.to_f64(), im.to_f64())
        }
        IdentityId::T7 => {
            let (re, im) = exp_imag(b, phi, cfg)?;
            let real = IdentityResidual::new(re.to_f64(), bracket(Kind::Cos)?.to_f64());
            let imag = IdentityResidual::new(im.to_f64(), bracket(Kind::Sin)?.to_f64());
            if imag.rel_residual > real.rel_residual {
                imag
            } else {
                real
            }
        }
        IdentityId::L1a | IdentityId::L1b | IdentityId::L1c => {
            return Err(Error::InvalidSpec(format!(
                "{id} is a product identity; use check_lemma1"
            )))
        }
    };
    Ok(res)
}

/// A random point of a sweep together with its residual.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepPoint {
    pub alpha: f64,
    pub beta: f64,
    pub eta: f64,
    pub x: f64,
    pub j: u32,
    pub residual: IdentityResidual,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSummary {
    pub id: IdentityId,
    pub samples: usize,
    pub seed: u64,
    pub max_rel_residual: f64,
    pub worst: Option<SweepPoint>,
}

/// Random sample points for an identity sweep.
///
/// T2..T7: `α ∈ (-0.9, 3)`, `β ∈ {1, 2, 3}`, `η ∈ (0.2, 2)`, `x ∈ (0.1, 2)`.
/// Lemma variants: `α ∈ (-0.9, 3)`, `β ∈ (0.2, 3)`, `j ∈ 1..=12`.
pub fn sweep_points(id: IdentityId, samples: usize, seed: u64) -> Vec<(f64, f64, f64, f64, u32)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let alpha = rng.gen_range(-0.9..3.0);
            if id.lemma_variant().is_some() {
                let beta = rng.gen_range(0.2..3.0);
                let j = rng.gen_range(1..=12u32);
                (alpha, beta, 0.0, 0.0, j)
            } else {
                let beta = [1.0, 2.0, 3.0][rng.gen_range(0..3usize)];
                let eta = rng.gen_range(0.2..2.0);
                let x = rng.gen_range(0.1..2.0);
                (alpha, beta, eta, x, 0)
            }
        })
        .collect()
}

/// Evaluates the identity at every point of [`sweep_points`], in order.
pub fn sweep(
    id: IdentityId,
    samples: usize,
    seed: u64,
    cfg: &SeriesConfig,
) -> Result<Vec<SweepPoint>> {
    sweep_points(id, samples, seed)
        .into_iter()
        .map(|(alpha, beta, eta, x, j)| {
            let residual = match id.lemma_variant() {
                Some(v) => check_lemma1(v, alpha, beta, j),
                None => check_identity(id, alpha, beta, eta, x, cfg)?,
            };
            Ok(SweepPoint {
                alpha,
                beta,
                eta,
                x,
                j,
                residual,
            })
        })
        .collect()
}

pub fn summarize(id: IdentityId, seed: u64, points: &[SweepPoint]) -> SweepSummary {
    let worst = points
        .iter()
        .copied()
        .max_by(|a, b| a.residual.rel_residual.total_cmp(&b.residual.rel_residual));
    SweepSummary {
        id,
        samples: points.len(),
        seed,
        max_rel_residual: worst.map_or(0.0, |w| w.residual.rel_residual),
        worst,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> SeriesConfig {
        SeriesConfig::default()
    }

    #[test]
    fn lemma_examples() {
        let r = check_lemma1(LemmaVariant::A, 0.0, 1.0, 3);
        assert_eq!((r.lhs, r.rhs, r.residual), (24.0, 24.0, 0.0));
        let r = check_lemma1(LemmaVariant::B, 0.0, 1.0, 0);
        assert_eq!((r.lhs, r.rhs), (1.0, 1.0));
        let r = check_lemma1(LemmaVariant::B, 0.0, 1.0, 1);
        assert_eq!((r.lhs, r.rhs), (6.0, 6.0));
        let r = check_lemma1(LemmaVariant::C, 0.7, 1.3, 5);
        assert!(r.rel_residual <= 1e-13, "{r:?}");
    }

    #[test]
    fn lemma_zero_factor() {
        // α + β + 1 = 0 zeroes the m = 1 factor on both sides.
        let r = check_lemma1(LemmaVariant::C, -2.0, 1.0, 3);
        assert_eq!((r.lhs, r.rhs), (0.0, 0.0));
    }

    #[test]
    fn identity_examples() {
        let r = check_identity(IdentityId::T2, 0.5, 2.0, 1.0, 0.7, &cfg()).unwrap();
        assert!(r.rel_residual <= 1e-10, "{r:?}");
        let r = check_identity(IdentityId::T6, 0.0, 1.0, 1.0, 1.0, &cfg()).unwrap();
        assert!(r.rel_residual <= 1e-10, "{r:?}");
        // sin 1 - cos 1 for ∫₀¹ sin, times (α+1)/x^(α+1) = 1
        assert!((r.lhs - (1.0 - 1f64.cos())).abs() < 1e-15);
    }

    #[test]
    fn all_identities_hold_at_a_point() {
        for id in &IdentityId::ALL[3..] {
            let r = check_identity(*id, 1.3, 2.0, 0.8, 1.4, &cfg()).unwrap();
            assert!(r.rel_residual <= 1e-12, "{id}: {r:?}");
        }
    }

    #[test]
    fn x_must_be_positive() {
        assert!(check_identity(IdentityId::T4, 1.0, 1.0, 1.0, 0.0, &cfg()).is_err());
        assert!(check_identity(IdentityId::L1a, 1.0, 1.0, 1.0, 1.0, &cfg()).is_err());
    }

    #[test]
    fn ids_parse() {
        assert_eq!("t5".parse::<IdentityId>().unwrap(), IdentityId::T5);
        assert_eq!("L1b".parse::<IdentityId>().unwrap(), IdentityId::L1b);
        assert!("T8".parse::<IdentityId>().is_err());
    }

    #[test]
    fn sweep_is_deterministic() {
        let a = sweep(IdentityId::T3, 5, 11, &cfg()).unwrap();
        let b = sweep(IdentityId::T3, 5, 11, &cfg()).unwrap();
        assert_eq!(a, b);
        let s = summarize(IdentityId::T3, 11, &a);
        assert_eq!(s.samples, 5);
        assert!(s.max_rel_residual <= 1e-9);
    }
}
