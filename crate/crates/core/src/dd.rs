//! Double-double arithmetic.
//!
//! A value is the unevaluated sum `hi + lo` of two binary64 numbers with
//! `|lo| <= ulp(hi) / 2`, giving roughly 106 bits of significand. All
//! operations are built from error-free transformations (two-sum and
//! fused multiply-add two-product), so everything stays in binary64 hardware.
//!
//! Used by the series kernels whose final combination cancels by a factor
//! of order `e^|phi|` (the hyperbolic and trigonometric antiderivatives).

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// Unit roundoff of the double-double format (2^-104).
pub const EPS: f64 = 4.930380657631324e-32;

#[allow(clippy::excessive_precision)]
pub const PI_2: Dd = Dd {
    hi: std::f64::consts::FRAC_PI_2,
    lo: 6.123233995736766036e-17,
};

#[allow(clippy::excessive_precision)]
pub const LN_2: Dd = Dd {
    hi: std::f64::consts::LN_2,
    lo: 2.319046813846299558e-17,
};

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub const fn new(hi: f64) -> Self {
        Dd { hi, lo: 0.0 }
    }

    /// Exact sum of two doubles.
    #[inline]
    pub fn sum(a: f64, b: f64) -> Self {
        let (hi, lo) = two_sum(a, b);
        Dd { hi, lo }
    }

    /// Exact product of two doubles.
    #[inline]
    pub fn prod(a: f64, b: f64) -> Self {
        let (hi, lo) = two_prod(a, b);
        Dd { hi, lo }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    pub fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let e = self.lo.mul_add(b, e);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    pub fn add_f64(self, b: f64) -> Self {
        let (s, e) = two_sum(self.hi, b);
        let e = e + self.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    /// Multiplication by a power of two, exact barring over/underflow.
    pub fn ldexp(self, k: i32) -> Self {
        let s = 2f64.powi(k);
        Dd {
            hi: self.hi * s,
            lo: self.lo * s,
        }
    }

    pub fn recip(self) -> Self {
        Dd::ONE / self
    }

    pub fn sqr(self) -> Self {
        self * self
    }

    /// `exp(self)` to double-double accuracy.
    pub fn exp(self) -> Self {
        if self.hi > 709.0 {
            return Dd::new(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        let k = (self.hi / LN_2.hi).round();
        let r = self - LN_2.mul_f64(k);
        // Taylor series on |r| <= ln2/2, further halved four times and squared back.
        let r = r.ldexp(-4);
        let mut term = Dd::ONE;
        let mut acc = Dd::ONE;
        for n in 1..30 {
            term = (term * r) / Dd::new(n as f64);
            acc = acc + term;
            if term.hi.abs() < 1e-34 {
                break;
            }
        }
        for _ in 0..4 {
            acc = acc.sqr();
        }
        acc.ldexp(k as i32)
    }

    /// Simultaneous `(sinh, cosh)`.
    pub fn sinh_cosh(self) -> (Self, Self) {
        if self.hi.abs() < 0.5 {
            // Direct series avoids the e - 1/e cancellation for small arguments.
            let x2 = self.sqr();
            let mut term = self;
            let mut sinh = self;
            let mut k = 1.0;
            loop {
                term = term * x2 / Dd::new((k + 1.0) * (k + 2.0));
                sinh = sinh + term;
                k += 2.0;
                if term.hi.abs() < 1e-34 * sinh.hi.abs() || k > 60.0 {
                    break;
                }
            }
            let cosh = (Dd::ONE + sinh.sqr()).sqrt();
            return (sinh, cosh);
        }
        let e = self.exp();
        let inv = e.recip();
        ((e - inv).ldexp(-1), (e + inv).ldexp(-1))
    }

    /// Simultaneous `(sin, cos)`, with argument reduction by a double-double pi/2.
    pub fn sin_cos(self) -> (Self, Self) {
        let k = (self.hi / PI_2.hi).round();
        let r = self - PI_2.mul_f64(k);
        let r2 = r.sqr();
        // sin r
        let mut term = r;
        let mut s = r;
        let mut n = 1.0;
        while term.hi.abs() > 1e-36 && n < 60.0 {
            term = -(term * r2) / Dd::new((n + 1.0) * (n + 2.0));
            s = s + term;
            n += 2.0;
        }
        // cos r
        let mut term = Dd::ONE;
        let mut c = Dd::ONE;
        let mut n = 0.0;
        while term.hi.abs() > 1e-36 && n < 60.0 {
            term = -(term * r2) / Dd::new((n + 1.0) * (n + 2.0));
            c = c + term;
            n += 2.0;
        }
        match (k as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    pub fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return Dd::new(self.hi.sqrt());
        }
        // One Newton step from the binary64 root doubles the accurate bits.
        let x = self.hi.sqrt();
        let xx = Dd::prod(x, x);
        let corr = (self - xx).hi / (2.0 * x);
        Dd::sum(x, corr)
    }
}

impl From<f64> for Dd {
    fn from(v: f64) -> Self {
        Dd::new(v)
    }
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, b: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let e = e + t;
        let (s, e) = quick_two_sum(s, e);
        let e = e + f;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    #[inline]
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }.add_f64(q3)
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_products_and_sums() {
        let a = Dd::prod(1.0 + f64::EPSILON, 1.0 + f64::EPSILON);
        assert_eq!(a.hi, 1.0 + 2.0 * f64::EPSILON);
        assert_eq!(a.lo, f64::EPSILON * f64::EPSILON);
        let s = Dd::sum(1.0, 1e-20);
        assert_eq!((s.hi, s.lo), (1.0, 1e-20));
    }

    #[test]
    fn division_round_trips() {
        let a = Dd::new(1.0) / Dd::new(3.0);
        let back = a * Dd::new(3.0) - Dd::ONE;
        assert!(back.to_f64().abs() < 1e-31);
    }

    #[test]
    fn exp_matches_binary64_and_identities() {
        for &x in &[-20.0, -1.0, 0.0, 0.3, 1.0, 7.5, 31.0, 100.0] {
            let e = Dd::new(x).exp();
            assert!((e.to_f64() / f64::exp(x) - 1.0).abs() < 4e-16, "x={x}");
            // exp(x) * exp(-x) = 1 in double-double
            let p = e * Dd::new(-x).exp() - Dd::ONE;
            assert!(p.to_f64().abs() < 1e-29, "x={x} p={p:?}");
        }
    }

    #[test]
    fn sin_cos_pythagoras_and_values() {
        for &x in &[0.0, 0.1, 1.0, 2.5, 10.0, 31.25, -7.0, 400.0] {
            let (s, c) = Dd::new(x).sin_cos();
            assert!((s.to_f64() - x.sin()).abs() < 1e-15, "x={x}");
            assert!((c.to_f64() - x.cos()).abs() < 1e-15, "x={x}");
            let one = s.sqr() + c.sqr() - Dd::ONE;
            assert!(one.to_f64().abs() < 1e-30, "x={x}");
        }
    }

    #[test]
    fn sinh_cosh_identity() {
        for &x in &[1e-3, 0.2, 0.49, 0.5, 3.0, 31.0] {
            let (s, c) = Dd::new(x).sinh_cosh();
            assert!((s.to_f64() / x.sinh() - 1.0).abs() < 1e-15);
            assert!((c.to_f64() / x.cosh() - 1.0).abs() < 1e-15);
            let one = c.sqr() - s.sqr() - Dd::ONE;
            assert!(one.to_f64().abs() < 1e-29 * c.sqr().hi, "x={x}");
        }
    }
}
