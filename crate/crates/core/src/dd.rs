//! Double-double ("quad") arithmetic: an unevaluated sum of two `f64`s
//! giving ~31 significant digits.
//!
//! The error-free transformations (two_sum, two_prod) follow Dekker and
//! Knuth; two_prod uses a fused multiply-add, so results are identical
//! across runs on the same target. This is the `quad` rung of the
//! precision ladder: enough headroom to resolve spectra whose eigenvalues
//! are far more ill-conditioned than double precision can represent.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::scalar::Real;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    // requires |a| >= |b|
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    #[inline]
    pub fn new(hi: f64, lo: f64) -> Self {
        let (s, e) = quick_two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    #[inline]
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    /// Karp's method: one f64 reciprocal square root plus a single
    /// double-double Newton correction.
    pub fn sqrt(self) -> Self {
        if self.hi == 0.0 && self.lo == 0.0 {
            return Dd::ZERO;
        }
        debug_assert!(self.hi > 0.0, "sqrt of negative double-double");
        let x = 1.0 / self.hi.sqrt();
        let ax = self.hi * x;
        let ax_sq = Dd::from_f64(ax) * Dd::from_f64(ax);
        let d = self - ax_sq;
        Dd::new(ax, d.hi * x * 0.5)
    }

    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, o: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, o.hi);
        let (t1, t2) = two_sum(self.lo, o.lo);
        let (s1, s2b) = quick_two_sum(s1, s2 + t1);
        Dd::new(s1, s2b + t2)
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, o: Dd) -> Dd {
        self + (-o)
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
    fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        Dd::new(p, e + self.hi * o.lo + self.lo * o.hi)
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, o: Dd) -> Dd {
        // long division with three quotient corrections
        let q1 = self.hi / o.hi;
        let r = self - o.mul_f64(q1);
        let q2 = r.hi / o.hi;
        let r = r - o.mul_f64(q2);
        let q3 = r.hi / o.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd::new(s, e) + Dd::from_f64(q3)
    }
}

impl Dd {
    #[inline]
    fn mul_f64(self, b: f64) -> Dd {
        let (p, e) = two_prod(self.hi, b);
        Dd::new(p, e + self.lo * b)
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, o: &Dd) -> Option<std::cmp::Ordering> {
        match self.hi.partial_cmp(&o.hi) {
            Some(std::cmp::Ordering::Equal) => self.lo.partial_cmp(&o.lo),
            ord => ord,
        }
    }
}

impl Real for Dd {
    fn zero() -> Self {
        Dd::ZERO
    }
    fn one() -> Self {
        Dd::from_f64(1.0)
    }
    fn from_f64(x: f64) -> Self {
        Dd::from_f64(x)
    }
    fn to_f64(self) -> f64 {
        self.to_f64()
    }
    fn abs(self) -> Self {
        self.abs()
    }
    fn sqrt(self) -> Self {
        self.sqrt()
    }
    fn epsilon() -> Self {
        // 2^-104
        Dd::from_f64(4.930380657631324e-32)
    }
    fn is_finite(self) -> bool {
        self.is_finite()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Dd, b: Dd, tol: f64) -> bool {
        (a - b).abs().hi <= tol
    }

    #[test]
    fn add_carries_low_part() {
        let one = Dd::from_f64(1.0);
        let tiny = Dd::from_f64(1e-25);
        let s = one + tiny;
        assert_eq!(s.hi, 1.0);
        assert_eq!(s.lo, 1e-25);
        let back = s - one;
        assert_eq!(back.hi, 1e-25);
    }

    #[test]
    fn mul_div_roundtrip() {
        let a = Dd::new(std::f64::consts::PI, 1.2246467991473532e-16);
        let b = Dd::from_f64(1.0) / Dd::from_f64(3.0);
        let c = a * b;
        let back = c / b;
        assert!(close(back, a, 1e-31));
    }

    #[test]
    fn sqrt_two() {
        let two = Dd::from_f64(2.0);
        let s = two.sqrt();
        let sq = s * s;
        assert!(close(sq, two, 1e-30));
    }

    #[test]
    fn third_has_full_precision() {
        // 1/3 in double-double vs the double-rounded value
        let third = Dd::from_f64(1.0) / Dd::from_f64(3.0);
        let err = third * Dd::from_f64(3.0) - Dd::from_f64(1.0);
        assert!(err.abs().hi < 1e-31);
        assert!(third.lo != 0.0);
    }

    #[test]
    fn ordering_uses_both_limbs() {
        let a = Dd::new(1.0, 1e-20);
        let b = Dd::new(1.0, 2e-20);
        assert!(a < b);
        assert!(Dd::from_f64(-1.0) < Dd::ZERO);
    }
}
