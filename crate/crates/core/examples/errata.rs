//! Printed formula variants next to the corrected ones, each against the
//! same quadrature oracle.

use hyperint::distributions::GenGammaParams;
use hyperint::integrals::{self, IntegralSpec, Kind};
use hyperint::{errata, oracle, SeriesConfig};

fn main() -> hyperint::Result<()> {
    let cfg = SeriesConfig::default();

    for e in errata::CATALOGUE {
        println!(
            "{}\n  printed:   {}\n  corrected: {}\n  evidence:  {}",
            e.id, e.printed, e.corrected, e.evidence
        );
    }

    // Second moment of Gamma(shape 2, rate 2).
    let g = GenGammaParams::new(1.0, 2.0, 1.0)?;
    let quad = oracle::integrate_half_line(|x| x * x * g.pdf(x).unwrap(), 1e-14, 1e-12)?.value;
    println!(
        "\nE[X²]: quadrature {quad:.6}, corrected {:.6}, printed {:.6}",
        g.raw_moment(2)?,
        errata::gen_gamma_moment(1.0, 2.0, 1.0, 2)?
    );

    // ∫₀¹ cosh x dx = sinh 1
    let spec = IntegralSpec::new(Kind::Cosh, 0.0, 1.0, 1.0)?;
    println!(
        "∫₀¹ cosh: sinh 1 = {:.6}, corrected {:.6}, printed {:.6}",
        1f64.sinh(),
        integrals::antiderivative(&spec, 1.0, &cfg)?.value,
        errata::antiderivative(Kind::Cosh, 0.0, 1.0, 1.0, 1.0, &cfg)?
    );
    Ok(())
}
