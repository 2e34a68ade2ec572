//! Closed-form antiderivatives of x^α k(η x^β) for all five kernels,
//! compared with adaptive quadrature.

use hyperint::integrals::{self, IntegralSpec, Kind};
use hyperint::{oracle, SeriesConfig};

fn main() -> hyperint::Result<()> {
    let cfg = SeriesConfig::default();
    let (a, b) = (0.1, 2.5);
    println!(
        "{:<5} {:>22} {:>22} {:>10}",
        "kind", "closed form", "quadrature", "rel diff"
    );
    for kind in Kind::ALL {
        let spec = IntegralSpec::new(kind, 0.5, 1.2, 2.0)?;
        let closed = integrals::definite_integral(&spec, a, b, &cfg)?;
        let quad = oracle::integrate(|x| spec.integrand(x), a, b, 1e-14, 1e-12)?.value;
        println!(
            "{:<5} {closed:>22.15e} {quad:>22.15e} {:>10.1e}",
            kind.name(),
            ((closed - quad) / quad).abs()
        );
    }

    // α = β - 1 is the elementary case of the exponential kernel.
    let spec = IntegralSpec::new(Kind::Exp, 1.0, 1.0, 2.0)?;
    let f = integrals::antiderivative(&spec, 1.0, &cfg)?;
    println!(
        "\n∫₀¹ x e^(x²) dx = {} (elementary branch: {})",
        f.value, f.elementary_branch
    );

    // Series diagnostics for a trigonometric kernel.
    let spec = IntegralSpec::new(Kind::Sin, 0.0, 1.0, 1.0)?;
    let f = integrals::antiderivative(&spec, std::f64::consts::PI, &cfg)?;
    for s in &f.series_report {
        println!(
            "1F2 series: {} terms, error estimate {:e}",
            s.terms_used, s.trunc_err_est
        );
    }
    println!("∫₀^π sin x dx = {} +/- {:e}", f.value, f.err_est);
    Ok(())
}
