//! Scalar abstraction used by the dense solvers: a real-arithmetic trait
//! implemented for `f64` (double) and [`crate::dd::Dd`] (quad), plus a
//! complex type generic over it.
//!
//! The solvers avoid transcendental functions on purpose: everything is
//! expressible with field operations, `abs` and `sqrt`, which keeps the
//! double-double path exact-rounding-friendly.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

/// Real arithmetic needed by the eigensolver and SVD.
pub trait Real:
    Copy
    + PartialEq
    + PartialOrd
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_f64(x: f64) -> Self;
    fn to_f64(self) -> f64;
    fn abs(self) -> Self;
    fn sqrt(self) -> Self;
    /// Unit roundoff of the representation.
    fn epsilon() -> Self;
    fn is_finite(self) -> bool;

    fn max(self, other: Self) -> Self {
        if self > other {
            self
        } else {
            other
        }
    }

    fn min(self, other: Self) -> Self {
        if self < other {
            self
        } else {
            other
        }
    }
}

impl Real for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_f64(x: f64) -> Self {
        x
    }
    fn to_f64(self) -> f64 {
        self
    }
    fn abs(self) -> Self {
        f64::abs(self)
    }
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    fn epsilon() -> Self {
        f64::EPSILON
    }
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
}

/// Complex number over a [`Real`] scalar.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cx<R: Real> {
    pub re: R,
    pub im: R,
}

impl<R: Real> Cx<R> {
    pub fn new(re: R, im: R) -> Self {
        Cx { re, im }
    }

    pub fn zero() -> Self {
        Cx::new(R::zero(), R::zero())
    }

    pub fn one() -> Self {
        Cx::new(R::one(), R::zero())
    }

    pub fn real(re: R) -> Self {
        Cx::new(re, R::zero())
    }

    pub fn from_c64(z: Complex64) -> Self {
        Cx::new(R::from_f64(z.re), R::from_f64(z.im))
    }

    pub fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn conj(self) -> Self {
        Cx::new(self.re, -self.im)
    }

    pub fn is_zero(self) -> bool {
        self.re == R::zero() && self.im == R::zero()
    }

    pub fn norm_sqr(self) -> R {
        self.re * self.re + self.im * self.im
    }

    /// |re| + |im|; the cheap norm used for pivot/deflation decisions.
    pub fn abs1(self) -> R {
        self.re.abs() + self.im.abs()
    }

    /// Modulus, computed with scaling so it neither overflows nor loses
    /// small components.
    pub fn abs(self) -> R {
        let ar = self.re.abs();
        let ai = self.im.abs();
        let m = ar.max(ai);
        if m == R::zero() {
            return R::zero();
        }
        let x = ar / m;
        let y = ai / m;
        m * (x * x + y * y).sqrt()
    }

    pub fn scale(self, s: R) -> Self {
        Cx::new(self.re * s, self.im * s)
    }

    pub fn unscale(self, s: R) -> Self {
        Cx::new(self.re / s, self.im / s)
    }

    /// Principal square root (branch cut on the negative real axis),
    /// via the stable real-only formula.
    pub fn sqrt(self) -> Self {
        if self.im == R::zero() {
            if self.re >= R::zero() {
                return Cx::new(self.re.sqrt(), R::zero());
            }
            // negative real axis: result is +i sqrt(|re|) for im = +0
            return Cx::new(R::zero(), (-self.re).sqrt());
        }
        let half = R::from_f64(0.5);
        let w = ((self.abs() + self.re.abs()) * half).sqrt();
        if self.re >= R::zero() {
            Cx::new(w, self.im * half / w)
        } else {
            let im_mag = self.im.abs() * half / w;
            if self.im >= R::zero() {
                Cx::new(im_mag, w)
            } else {
                Cx::new(im_mag, -w)
            }
        }
    }

    /// Unit-modulus phase factor z/|z|, or 1 when z = 0.
    pub fn phase(self) -> Self {
        let a = self.abs();
        if a == R::zero() {
            Cx::one()
        } else {
            self.unscale(a)
        }
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

impl<R: Real> Add for Cx<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Cx::new(self.re + o.re, self.im + o.im)
    }
}

impl<R: Real> Sub for Cx<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Cx::new(self.re - o.re, self.im - o.im)
    }
}

impl<R: Real> Mul for Cx<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Cx::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl<R: Real> Neg for Cx<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Cx::new(-self.re, -self.im)
    }
}

impl<R: Real> Div for Cx<R> {
    type Output = Self;
    /// Smith's algorithm; robust against intermediate over/underflow.
    fn div(self, o: Self) -> Self {
        if o.im.abs() <= o.re.abs() {
            let t = o.im / o.re;
            let den = o.re + o.im * t;
            Cx::new((self.re + self.im * t) / den, (self.im - self.re * t) / den)
        } else {
            let t = o.re / o.im;
            let den = o.re * t + o.im;
            Cx::new((self.re * t + self.im) / den, (self.im * t - self.re) / den)
        }
    }
}

impl<R: Real> std::ops::AddAssign for Cx<R> {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl<R: Real> std::ops::SubAssign for Cx<R> {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl<R: Real> std::ops::MulAssign for Cx<R> {
    fn mul_assign(&mut self, o: Self) {
        *self = *self * o;
    }
}

pub type C64 = Cx<f64>;

impl From<Complex64> for C64 {
    fn from(z: Complex64) -> Self {
        Cx::new(z.re, z.im)
    }
}

impl From<C64> for Complex64 {
    fn from(z: C64) -> Self {
        Complex64::new(z.re, z.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_principal_branch() {
        let z = Cx::<f64>::new(-0.2496, 0.0).sqrt();
        assert!(z.re.abs() < 1e-15);
        assert!((z.im - 0.2496f64.sqrt()).abs() < 1e-15);

        let w = Cx::<f64>::new(0.2704, 0.5).sqrt();
        let sq = w * w;
        assert!((sq.re - 0.2704).abs() < 1e-14);
        assert!((sq.im - 0.5).abs() < 1e-14);
        assert!(w.re > 0.0);
    }

    #[test]
    fn division_matches_naive() {
        let a = Cx::<f64>::new(1.3, -2.2);
        let b = Cx::<f64>::new(-0.7, 0.4);
        let q = a / b;
        let back = q * b;
        assert!((back.re - a.re).abs() < 1e-14);
        assert!((back.im - a.im).abs() < 1e-14);
    }

    #[test]
    fn abs_scaled() {
        let z = Cx::<f64>::new(3e200, 4e200);
        assert!((z.abs() / 5e200 - 1.0).abs() < 1e-14);
        assert_eq!(Cx::<f64>::zero().abs(), 0.0);
    }
}
