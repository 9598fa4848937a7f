//! Dense square complex matrices over a [`Real`] scalar, plus the few
//! vector kernels the solvers need.

use num_complex::Complex64;

use crate::dd::Dd;
use crate::scalar::{Cx, Real};

/// Row-major square matrix of complex numbers.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat<R: Real> {
    n: usize,
    a: Vec<Cx<R>>,
}

/// Double-precision complex matrix; the workhorse type of the floating paths.
pub type CMatrix = Mat<f64>;

impl<R: Real> Mat<R> {
    pub fn zeros(n: usize) -> Self {
        Mat {
            n,
            a: vec![Cx::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n);
        for i in 0..n {
            m[(i, i)] = Cx::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Cx<R>>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Mat {
            n,
            a: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn mul(&self, rhs: &Mat<R>) -> Mat<R> {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = Mat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self[(i, k)];
                if aik.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += aik * rhs[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Cx<R>]) -> Vec<Cx<R>> {
        assert_eq!(self.n, v.len());
        let n = self.n;
        let mut out = vec![Cx::zero(); n];
        for i in 0..n {
            let mut acc = Cx::zero();
            for j in 0..n {
                acc += self[(i, j)] * v[j];
            }
            out[i] = acc;
        }
        out
    }

    /// A - z I.
    pub fn shifted(&self, z: Cx<R>) -> Mat<R> {
        let mut out = self.clone();
        for i in 0..self.n {
            out[(i, i)] = out[(i, i)] - z;
        }
        out
    }

    pub fn adjoint(&self) -> Mat<R> {
        let n = self.n;
        let mut out = Mat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = self[(j, i)].conj();
            }
        }
        out
    }

    pub fn conj_entries(&self) -> Mat<R> {
        Mat {
            n: self.n,
            a: self.a.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn sub(&self, rhs: &Mat<R>) -> Mat<R> {
        assert_eq!(self.n, rhs.n);
        Mat {
            n: self.n,
            a: self
                .a
                .iter()
                .zip(rhs.a.iter())
                .map(|(x, y)| *x - *y)
                .collect(),
        }
    }

    pub fn neg(&self) -> Mat<R> {
        Mat {
            n: self.n,
            a: self.a.iter().map(|z| -*z).collect(),
        }
    }

    pub fn fro_norm(&self) -> R {
        let mut s = R::zero();
        let mut scale = R::zero();
        for z in &self.a {
            scale = scale.max(z.abs1());
        }
        if scale == R::zero() {
            return R::zero();
        }
        for z in &self.a {
            let zr = z.re / scale;
            let zi = z.im / scale;
            s = s + zr * zr + zi * zi;
        }
        scale * s.sqrt()
    }

    pub fn max_abs(&self) -> R {
        let mut m = R::zero();
        for z in &self.a {
            m = m.max(z.abs());
        }
        m
    }

    pub fn entries(&self) -> &[Cx<R>] {
        &self.a
    }
}

impl<R: Real> std::ops::Index<(usize, usize)> for Mat<R> {
    type Output = Cx<R>;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Cx<R> {
        &self.a[i * self.n + j]
    }
}

impl<R: Real> std::ops::IndexMut<(usize, usize)> for Mat<R> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Cx<R> {
        &mut self.a[i * self.n + j]
    }
}

impl CMatrix {
    pub fn from_c64_rows(rows: &[Vec<Complex64>]) -> CMatrix {
        let conv: Vec<Vec<Cx<f64>>> = rows
            .iter()
            .map(|r| r.iter().map(|&z| z.into()).collect())
            .collect();
        Mat::from_rows(&conv)
    }

    pub fn get_c64(&self, i: usize, j: usize) -> Complex64 {
        self[(i, j)].into()
    }

    pub fn set_c64(&mut self, i: usize, j: usize, z: Complex64) {
        self[(i, j)] = z.into();
    }

    /// Entry-exact promotion of a double matrix to double-double.
    pub fn promote(&self) -> Mat<Dd> {
        let a = self
            .a
            .iter()
            .map(|z| Cx::new(Dd::from_f64(z.re), Dd::from_f64(z.im)))
            .collect();
        Mat { n: self.n, a }
    }
}

// -- vector kernels ----------------------------------------------------------

/// Conjugated dot product sum(conj(a_i) b_i).
pub fn vdot_conj<R: Real>(a: &[Cx<R>], b: &[Cx<R>]) -> Cx<R> {
    let mut s = Cx::zero();
    for (x, y) in a.iter().zip(b.iter()) {
        s += x.conj() * *y;
    }
    s
}

/// Unconjugated (transpose) dot product sum(a_i b_i).
pub fn vdot_t<R: Real>(a: &[Cx<R>], b: &[Cx<R>]) -> Cx<R> {
    let mut s = Cx::zero();
    for (x, y) in a.iter().zip(b.iter()) {
        s += *x * *y;
    }
    s
}

pub fn vnorm<R: Real>(v: &[Cx<R>]) -> R {
    let mut scale = R::zero();
    for z in v {
        scale = scale.max(z.abs1());
    }
    if scale == R::zero() {
        return R::zero();
    }
    let mut s = R::zero();
    for z in v {
        let zr = z.re / scale;
        let zi = z.im / scale;
        s = s + zr * zr + zi * zi;
    }
    scale * s.sqrt()
}

pub fn vscale<R: Real>(v: &mut [Cx<R>], s: Cx<R>) {
    for z in v.iter_mut() {
        *z = *z * s;
    }
}

/// Normalize to unit 2-norm and rotate the phase so the largest-modulus
/// component is real positive. Deterministic output for a deterministic input.
pub fn normalize_phase<R: Real>(v: &mut [Cx<R>]) {
    let nrm = vnorm(v);
    if nrm == R::zero() {
        return;
    }
    let mut imax = 0;
    let mut best = R::zero();
    for (i, z) in v.iter().enumerate() {
        let a = z.norm_sqr();
        if a > best {
            best = a;
            imax = i;
        }
    }
    let ph = v[imax].phase().conj();
    for z in v.iter_mut() {
        *z = (*z * ph).unscale(nrm);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Cx<f64> {
        Cx::new(re, im)
    }

    #[test]
    fn matmul_identity() {
        let m = Mat::from_rows(&[vec![c(1.0, 2.0), c(0.0, -1.0)], vec![c(3.0, 0.0), c(0.5, 0.5)]]);
        let id = Mat::identity(2);
        assert_eq!(m.mul(&id), m);
        assert_eq!(id.mul(&m), m);
    }

    #[test]
    fn adjoint_involution() {
        let m = Mat::from_rows(&[vec![c(1.0, 2.0), c(0.0, -1.0)], vec![c(3.0, 0.0), c(0.5, 0.5)]]);
        assert_eq!(m.adjoint().adjoint(), m);
    }

    #[test]
    fn normalize_makes_unit_and_phase_fixed() {
        let mut v = vec![c(0.0, 2.0), c(1.0, 0.0)];
        normalize_phase(&mut v);
        assert!((vnorm(&v) - 1.0).abs() < 1e-15);
        // largest component rotated to the positive real axis
        assert!(v[0].im.abs() < 1e-15);
        assert!(v[0].re > 0.0);
    }
}
