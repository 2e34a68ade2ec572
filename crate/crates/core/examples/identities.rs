//! Residuals of the product identities and of the 1F1/1F2 identities,
//! at single points and over seeded random sweeps.

use hyperint::identities::{self, IdentityId};
use hyperint::SeriesConfig;

fn main() -> hyperint::Result<()> {
    let cfg = SeriesConfig::default();

    for id in [IdentityId::L1a, IdentityId::L1b, IdentityId::L1c] {
        let variant = id.lemma_variant().expect("product identity");
        let r = identities::check_lemma1(variant, 0.3, 1.7, 5);
        println!(
            "{id}: lhs={:e} rhs={:e} rel_residual={:e}",
            r.lhs, r.rhs, r.rel_residual
        );
    }

    let r = identities::check_identity(IdentityId::T2, 0.5, 2.0, 1.0, 0.7, &cfg)?;
    println!("T2 at (0.5, 2, 1, 0.7): {} = {}", r.lhs, r.rhs);

    for id in IdentityId::ALL {
        let points = identities::sweep(id, 200, 7, &cfg)?;
        let summary = identities::summarize(id, 7, &points);
        println!(
            "{id:>3}: {} points, max rel_residual {:.2e}",
            summary.samples, summary.max_rel_residual
        );
    }
    Ok(())
}
