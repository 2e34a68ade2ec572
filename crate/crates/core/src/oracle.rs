//! Independent ground truth: adaptive Gauss–Kronrod quadrature, half-line
//! quadrature and Monte-Carlo moment estimation.
//!
//! Nothing here calls the series kernels or the closed forms; the only
//! numerics used are elementary functions and the integrand itself, so an
//! agreement between a closed form and this module is evidence rather than
//! a tautology.

use std::collections::BinaryHeap;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_err_est: f64,
    pub subdivisions: usize,
    pub converged: bool,
}

/// Maximum bisection depth of any interval.
pub const MAX_DEPTH: u32 = 60;
const MAX_INTERVALS: usize = 20_000;

// 15-point Kronrod nodes on [0, 1] (symmetric); the odd entries are the 7-point Gauss nodes.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// One 15-point Kronrod / 7-point Gauss evaluation on [a, b].
/// Returns (kronrod value, error estimate) with the usual QUADPACK scaling.
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut resk = fc * WGK[7];
    let mut resg = fc * WG[3];
    let mut resabs = resk.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        resk += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            resg += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = resk * 0.5;
    let mut resasc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        resasc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let result = resk * half;
    let resabs = resabs * half.abs();
    let resasc = resasc * half.abs();
    let mut err = ((resk - resg) * half).abs();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * resabs);
    }
    (result, err)
}

#[derive(Debug, Clone, Copy)]
struct Piece {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
    depth: u32,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Piece {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// Globally adaptive Gauss–Kronrod (7/15) quadrature on a finite interval.
///
/// The interval with the largest error estimate is bisected until the
/// total estimate meets `max(abs_tol, rel_tol |value|)`. Intervals that
/// reach depth [`MAX_DEPTH`] are frozen; if the target cannot be met the
/// best-effort value is returned with `converged = false`. Relative
/// tolerances below the rule's roundoff floor (`50 ε`) are raised to it.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
) -> Result<QuadratureResult> {
    let rel_tol = rel_tol.max(50.0 * f64::EPSILON);
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain(format!(
            "integration bounds must satisfy a < b, both finite; got [{a}, {b}]"
        )));
    }
    let (v, e) = gk15(&f, a, b);
    let mut heap = BinaryHeap::new();
    let mut frozen_value = 0.0;
    let mut frozen_err = 0.0;
    heap.push(Piece {
        a,
        b,
        value: v,
        err: e,
        depth: 0,
    });
    let mut total = v;
    let mut total_err = e;
    let mut subdivisions = 1usize;

    loop {
        let target = abs_tol.max(rel_tol * total.abs());
        if total_err <= target {
            break;
        }
        if subdivisions >= MAX_INTERVALS {
            break;
        }
        let Some(p) = heap.pop() else { break };
        if p.depth >= MAX_DEPTH {
            frozen_value += p.value;
            frozen_err += p.err;
            continue;
        }
        let mid = 0.5 * (p.a + p.b);
        let (v1, e1) = gk15(&f, p.a, mid);
        let (v2, e2) = gk15(&f, mid, p.b);
        total += v1 + v2 - p.value;
        total_err += e1 + e2 - p.err;
        subdivisions += 1;
        for (a, b, value, err) in [(p.a, mid, v1, e1), (mid, p.b, v2, e2)] {
            heap.push(Piece {
                a,
                b,
                value,
                err,
                depth: p.depth + 1,
            });
        }
    }

    // Re-sum from the pieces to shed the drift of the running updates.
    let mut pieces: Vec<Piece> = heap.into_vec();
    pieces.sort_by(|x, y| x.a.total_cmp(&y.a));
    let value = pieces.iter().map(|p| p.value).sum::<f64>() + frozen_value;
    let abs_err_est = pieces.iter().map(|p| p.err).sum::<f64>() + frozen_err;
    let target = abs_tol.max(rel_tol * value.abs());
    Ok(QuadratureResult {
        value,
        abs_err_est,
        subdivisions,
        converged: abs_err_est <= target && value.is_finite(),
    })
}

/// Integral over (0, ∞) by dyadic windows.
///
/// The half line is cut at 1 and split into windows `[2^k, 2^(k+1)]`
/// going outward and `[2^-(k+1), 2^-k]` going toward zero. Each window is
/// integrated adaptively, so an integrable algebraic singularity at 0 or a
/// slowly decaying tail only costs more windows. Each direction stops when
/// the window contributions shrink geometrically and the extrapolated
/// remainder (ratio `q`, remainder `last q / (1 - q)`) falls under the
/// tolerance; that remainder is added to the error estimate.
pub fn integrate_half_line<F: Fn(f64) -> f64>(
    f: F,
    abs_tol: f64,
    rel_tol: f64,
) -> Result<QuadratureResult> {
    let mut windows: Vec<QuadratureResult> = Vec::new();
    let mut tail_err = 0.0;
    let mut converged = true;

    for outward in [true, false] {
        let mut prev: Option<f64> = None;
        let mut settled = 0;
        for k in 0..1000 {
            let (lo, hi) = if outward {
                (2f64.powi(k), 2f64.powi(k + 1))
            } else {
                (2f64.powi(-k - 1), 2f64.powi(-k))
            };
            if hi.is_infinite() || lo == 0.0 {
                converged = false;
                break;
            }
            // Windows share the absolute budget; the relative target is applied per window.
            let w = integrate(&f, lo, hi, abs_tol * 0.1, rel_tol)?;
            converged &= w.converged;
            let mag = w.value.abs();
            windows.push(w);
            let running: f64 = windows.iter().map(|w| w.value).sum();
            let target = abs_tol.max(rel_tol * running.abs());
            if let Some(p) = prev {
                let q = if p > 0.0 { mag / p } else { 0.0 };
                if q < 0.9 {
                    let remainder = mag * q / (1.0 - q);
                    if remainder <= 1e-3 * target {
                        settled += 1;
                        if settled >= 3 {
                            tail_err += remainder;
                            break;
                        }
                    } else {
                        settled = 0;
                    }
                } else {
                    settled = 0;
                }
            }
            prev = Some(mag);
        }
    }

    let value: f64 = windows.iter().map(|w| w.value).sum();
    let abs_err_est: f64 = windows.iter().map(|w| w.abs_err_est).sum::<f64>() + tail_err;
    let subdivisions = windows.iter().map(|w| w.subdivisions).sum();
    let target = abs_tol.max(rel_tol * value.abs());
    Ok(QuadratureResult {
        value,
        abs_err_est,
        subdivisions,
        converged: converged && abs_err_est <= target,
    })
}

/// Integral over the whole real line, folded about `center`:
/// `∫ f = ∫₀^∞ [f(center + u) + f(center - u)] du`.
pub fn integrate_real_line<F: Fn(f64) -> f64>(
    f: F,
    center: f64,
    abs_tol: f64,
    rel_tol: f64,
) -> Result<QuadratureResult> {
    integrate_half_line(|u| f(center + u) + f(center - u), abs_tol, rel_tol)
}

/// Monte-Carlo estimate of `E[X^n]` from `count` draws of `sampler`,
/// returned as `(estimate, standard error)`.
///
/// Intended for `count >= 1000`; smaller counts are accepted but the
/// standard error is then itself unreliable.
pub fn mc_moment<S: FnMut() -> f64>(mut sampler: S, n: u32, count: usize) -> (f64, f64) {
    // Welford running mean and variance.
    let mut mean = 0.0;
    let mut m2 = 0.0;
    for i in 0..count {
        let v = sampler().powi(n as i32);
        let delta = v - mean;
        mean += delta / (i + 1) as f64;
        m2 += delta * (v - mean);
    }
    if count < 2 {
        return (mean, f64::INFINITY);
    }
    let var = m2 / (count - 1) as f64;
    (mean, (var / count as f64).sqrt())
}
