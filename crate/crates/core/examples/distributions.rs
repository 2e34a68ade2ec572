//! The four distribution families: density, distribution function,
//! quantiles, moments.

use hyperint::distributions::{
    Distribution, GenGammaParams, InvGammaParams, LocScaleParams, SymmetricParams,
};
use hyperint::SeriesConfig;

fn main() -> hyperint::Result<()> {
    let cfg = SeriesConfig::default();
    let gaussian = SymmetricParams::new(0.0, 0.5, 2.0)?;
    let families = [
        Distribution::GenGamma(GenGammaParams::new(1.0, 1.0, 1.0)?),
        Distribution::GenGamma(GenGammaParams::new(1.0, 1.0, 2.0)?),
        Distribution::InvGamma(InvGammaParams::new(3.0, 2.0)?),
        Distribution::Symmetric(gaussian),
        Distribution::LocScale(LocScaleParams::new(
            SymmetricParams::new(0.0, 1.0, 4.0)?,
            1.0,
            2.0,
        )?),
    ];
    for d in &families {
        let (mean, var) = d.mean_variance()?;
        let median = d.quantile(0.5, &cfg)?;
        println!(
            "{:<9} pdf(1)={:.6} cdf(1)={:.6} median={median:.6} mean={mean:.6} var={var:.6}",
            d.name(),
            d.pdf(1.0)?,
            d.cdf(1.0, &cfg)?
        );
    }

    // Gamma(2, 1): F(1) = 1 - 2/e
    println!("1 - 2/e = {:.6}", 1.0 - 2.0 / std::f64::consts::E);

    // Inverse gamma moments exist only below θ.
    let ig = InvGammaParams::new(3.0, 2.0)?;
    for n in 1..=3 {
        match ig.raw_moment(n) {
            Ok(m) => println!("invgamma E[X^{n}] = {m}"),
            Err(e) => println!("invgamma E[X^{n}]: {e}"),
        }
    }
    Ok(())
}
