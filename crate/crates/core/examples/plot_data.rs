//! CSV rows of (x, pdf, cdf) for a few generalized Gaussian shapes,
//! ready for any plotting tool.

use hyperint::distributions::{Distribution, SymmetricParams};
use hyperint::SeriesConfig;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = SeriesConfig::default();
    let mut out = csv::Writer::from_writer(std::io::stdout());
    out.write_record(["beta", "x", "pdf", "cdf"])?;
    for beta in [1.0, 2.0, 4.0, 8.0] {
        let d = Distribution::Symmetric(SymmetricParams::new(0.0, 1.0, beta)?);
        for i in 0..=40 {
            let x = -3.0 + 6.0 * i as f64 / 40.0;
            out.write_record([
                beta.to_string(),
                x.to_string(),
                d.pdf(x)?.to_string(),
                d.cdf(x, &cfg)?.to_string(),
            ])?;
        }
    }
    out.flush()?;
    Ok(())
}
