//! The independent oracles: adaptive Gauss-Kronrod on finite intervals,
//! the half line and the real line, plus Monte-Carlo moments.

use hyperint::oracle;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> hyperint::Result<()> {
    let r = oracle::integrate(|x: f64| x.sin(), 0.0, std::f64::consts::PI, 1e-13, 1e-13)?;
    println!(
        "∫₀^π sin = {} (err est {:e}, {} intervals)",
        r.value, r.abs_err_est, r.subdivisions
    );

    // Endpoint singularity.
    let r = oracle::integrate(|x: f64| 1.0 / x.sqrt(), 0.0, 1.0, 1e-9, 1e-9)?;
    println!(
        "∫₀¹ x^-1/2 = {} ({} intervals, converged: {})",
        r.value, r.subdivisions, r.converged
    );

    let r = oracle::integrate_half_line(|x: f64| x * (-x).exp(), 1e-14, 1e-12)?;
    println!("∫₀^∞ x e^-x = {}", r.value);

    let r = oracle::integrate_real_line(|x: f64| (-x * x).exp(), 0.0, 1e-14, 1e-12)?;
    println!(
        "∫ e^-x² = {}, √π = {}",
        r.value,
        std::f64::consts::PI.sqrt()
    );

    // Uniform(0, 1): E[X²] = 1/3
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (est, se) = oracle::mc_moment(|| rng.gen::<f64>(), 2, 100_000);
    println!("E[U²] ≈ {est:.5} +/- {se:.5}");
    Ok(())
}
