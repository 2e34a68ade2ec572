//! The series kernels: 1F1, its scaled form, 1F2 and Pochhammer symbols.

use hyperint::specfun::{self, pochhammer};
use hyperint::SeriesConfig;

fn main() -> hyperint::Result<()> {
    let cfg = SeriesConfig::default();

    // 1F1(1; 2; x) x = e^x - 1
    let x = 3.0;
    let v = specfun::hyp1f1(1.0, 2.0, x, &cfg)?;
    println!("1F1(1; 2; {x}) = {} ({} terms)", v.value, v.terms_used);
    println!("(e^x - 1)/x    = {}", x.exp_m1() / x);

    // Large negative arguments go through the Kummer transformation.
    let v = specfun::hyp1f1(2.5, 0.7, -50.0, &cfg)?;
    println!(
        "1F1(2.5; 0.7; -50) = {:e} +/- {:e}",
        v.value, v.trunc_err_est
    );

    // e^(-1000) 1F1(1; 1.5; 1000) without overflow.
    let v = specfun::hyp1f1_scaled(1.0, 1.5, 1000.0, -1000.0, &cfg)?;
    println!("e^-1000 1F1(1; 1.5; 1000) = {}", v.value);

    // 1F2(1; 3/2, 2; -x²/4) = 2(1 - cos x)/x²
    let x: f64 = 2.0;
    let v = specfun::hyp1f2(1.0, 1.5, 2.0, -x * x / 4.0, &cfg)?;
    println!(
        "1F2 = {}, closed form = {}",
        v.value,
        2.0 * (1.0 - x.cos()) / (x * x)
    );

    println!("(0.5)_4 = {}", pochhammer(0.5, 4));
    println!(
        "(-3)_3 = {}, (-3)_4 = {}",
        pochhammer(-3.0, 3),
        pochhammer(-3.0, 4)
    );
    Ok(())
}
