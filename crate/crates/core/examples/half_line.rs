//! ∫₀^∞ x^α e^(-η x^β) dx and its even extension to the real line.

use hyperint::integrals::{full_line_integral, half_line_integral};
use hyperint::oracle;

fn main() -> hyperint::Result<()> {
    let cases = [
        (0.0, 1.0, 2.0),
        (2.0, 1.0, 1.0),
        (0.5, 2.0, 0.5),
        (1.0, 0.7, 3.0),
        (-3.0, 1.0, -1.0),
    ];
    for (alpha, eta, beta) in cases {
        let closed = half_line_integral(alpha, eta, beta)?;
        let quad = oracle::integrate_half_line(
            |x: f64| x.powf(alpha) * (-eta * x.powf(beta)).exp(),
            1e-14,
            1e-12,
        )?;
        println!(
            "α={alpha:<4} η={eta:<4} β={beta:<4} closed={closed:.15} quadrature={:.15}",
            quad.value
        );
    }
    println!("√π/2 = {}", std::f64::consts::PI.sqrt() / 2.0);

    // ∫ e^(-x²/2) dx over ℝ = √(2π)
    println!("∫ e^(-x²/2) dx = {}", full_line_integral(0.0, 0.5, 2.0)?);

    // (α+1)/β must be positive.
    match half_line_integral(-2.0, 1.0, 2.0) {
        Ok(v) => println!("unexpected value {v}"),
        Err(e) => println!("α=-2, β=2: {e}"),
    }
    Ok(())
}
