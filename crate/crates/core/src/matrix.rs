//! Dense complex matrices.
//!
//! Entries are stored row-major: element `(i, j)` of an `r × c` matrix lives
//! at flat index `i * c + j`. This ordering is fixed repo-wide; the
//! column-stacking vectorization in [`crate::superop`] is defined against it.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex;

use crate::error::Error;
use crate::scalar::Scalar;
use crate::Result;

/// Dense complex matrix with row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> ComplexMatrix<T> {
    /// Zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Complex::new(T::zero(), T::zero()); rows * cols] }
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::new(T::one(), T::zero());
        }
        m
    }

    /// Builds a matrix from a generator on `(row, col)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from row-major data.
    ///
    /// Panics if `data.len() != rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Complex<T>>) -> Self {
        assert_eq!(data.len(), rows * cols, "row-major data length must be rows*cols");
        Self { rows, cols, data }
    }

    /// Convenience constructor from `f64` `(re, im)` pairs, row-major.
    pub fn from_rows_f64(rows: &[&[(f64, f64)]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            for &(re, im) in *row {
                data.push(Complex::new(T::of(re), T::of(im)));
            }
        }
        Self { rows: r, cols: c, data }
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// True when the matrix is square.
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Flat row-major view of the entries.
    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.data
    }

    /// Mutable flat row-major view.
    pub fn as_mut_slice(&mut self) -> &mut [Complex<T>] {
        &mut self.data
    }

    /// Copy of column `j`.
    pub fn col(&self, j: usize) -> Vec<Complex<T>> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    /// Matrix product `self · rhs`.
    ///
    /// Panics on inner-dimension mismatch (programmer error by contract);
    /// fallible public operations validate shapes before multiplying.
    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matmul inner dimensions must agree");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.re == T::zero() && a.im == T::zero() {
                    continue;
                }
                let lhs_row = i * rhs.cols;
                for j in 0..rhs.cols {
                    let v = out.data[lhs_row + j] + a * rhs.data[k * rhs.cols + j];
                    out.data[lhs_row + j] = v;
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn matvec(&self, v: &[Complex<T>]) -> Vec<Complex<T>> {
        assert_eq!(self.cols, v.len(), "matvec dimension mismatch");
        let mut out = vec![Complex::new(T::zero(), T::zero()); self.rows];
        for i in 0..self.rows {
            let mut acc = Complex::new(T::zero(), T::zero());
            for j in 0..self.cols {
                acc = acc + self.data[i * self.cols + j] * v[j];
            }
            out[i] = acc;
        }
        out
    }

    /// Entrywise scaling by a complex factor.
    pub fn scale(&self, factor: Complex<T>) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| z * factor).collect(),
        }
    }

    /// Entrywise scaling by a real factor.
    pub fn scale_re(&self, factor: T) -> Self {
        self.scale(Complex::new(factor, T::zero()))
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    /// Trace (square matrices).
    pub fn trace(&self) -> Complex<T> {
        assert!(self.is_square(), "trace requires a square matrix");
        let mut acc = Complex::new(T::zero(), T::zero());
        for i in 0..self.rows {
            acc = acc + self[(i, i)];
        }
        acc
    }

    /// Tensor (Kronecker) product: `(A ⊗ B)[(i·rB + k), (j·cB + l)] = A[i,j]·B[k,l]`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let (ra, ca) = (self.rows, self.cols);
        let (rb, cb) = (rhs.rows, rhs.cols);
        let mut out = Self::zeros(ra * rb, ca * cb);
        for i in 0..ra {
            for j in 0..ca {
                let a = self[(i, j)];
                if a.re == T::zero() && a.im == T::zero() {
                    continue;
                }
                for k in 0..rb {
                    for l in 0..cb {
                        out[(i * rb + k, j * cb + l)] = a * rhs[(k, l)];
                    }
                }
            }
        }
        out
    }

    /// Hermitian part `(A + A†)/2`.
    pub fn hermitize(&self) -> Self {
        let adj = self.adjoint();
        Self::from_fn(self.rows, self.cols, |i, j| {
            (self[(i, j)] + adj[(i, j)]) * Complex::new(T::of(0.5), T::zero())
        })
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |m, z| m.max(z.norm()))
    }

    /// Largest entrywise difference `max |A_ij − B_ij|`.
    pub fn max_abs_diff(&self, rhs: &Self) -> T {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        let mut m = T::zero();
        for (a, b) in self.data.iter().zip(&rhs.data) {
            m = m.max((*a - *b).norm());
        }
        m
    }

    /// Entrywise equality within an absolute tolerance.
    pub fn approx_eq(&self, rhs: &Self, tol: T) -> bool {
        (self.rows, self.cols) == (rhs.rows, rhs.cols) && self.max_abs_diff(rhs) <= tol
    }

    /// Maximum absolute column sum (operator 1-norm).
    pub fn norm_one(&self) -> T {
        let mut best = T::zero();
        for j in 0..self.cols {
            let mut s = T::zero();
            for i in 0..self.rows {
                s = s + self[(i, j)].norm();
            }
            best = best.max(s);
        }
        best
    }

    /// Maximum absolute row sum (operator ∞-norm).
    pub fn norm_inf(&self) -> T {
        let mut best = T::zero();
        for i in 0..self.rows {
            let mut s = T::zero();
            for j in 0..self.cols {
                s = s + self[(i, j)].norm();
            }
            best = best.max(s);
        }
        best
    }

    /// Frobenius norm.
    pub fn norm_fro(&self) -> T {
        let mut s = T::zero();
        for z in &self.data {
            s = s + z.norm_sqr();
        }
        s.sqrt()
    }

    /// Hermiticity check within an absolute tolerance.
    pub fn is_hermitian(&self, tol: T) -> bool {
        self.is_square() && self.max_abs_diff(&self.adjoint()) <= tol
    }

    /// Fails unless the matrix is square with the given side.
    pub fn expect_square(&self, side: usize, what: &str) -> Result<()> {
        if self.rows == side && self.cols == side {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "{what}: expected {side}x{side}, got {}x{}",
                self.rows, self.cols
            )))
        }
    }
}

impl<T: Scalar> Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = Complex<T>;
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.cols + j]
    }
}

impl<T: Scalar> IndexMut<(usize, usize)> for ComplexMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Add for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn add(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| *a + *b).collect(),
        }
    }
}

impl<T: Scalar> Sub for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn sub(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| *a - *b).collect(),
        }
    }
}

impl<T: Scalar> Mul for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn mul(self, rhs: Self) -> ComplexMatrix<T> {
        self.matmul(rhs)
    }
}

impl<T: Scalar> Neg for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn neg(self) -> ComplexMatrix<T> {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| -*z).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cx;

    type M = ComplexMatrix<f64>;

    #[test]
    fn kron_identity_blocks() {
        let i2 = M::identity(2);
        let i4 = i2.kron(&i2);
        assert!(i4.approx_eq(&M::identity(4), 0.0));
    }

    #[test]
    fn kron_elementary_position() {
        // E_00 ⊗ E_11 has its single 1 at row 0*2+1 = 1, col 0*2+1 = 1.
        let mut e00 = M::zeros(2, 2);
        e00[(0, 0)] = cx(1.0, 0.0);
        let mut e11 = M::zeros(2, 2);
        e11[(1, 1)] = cx(1.0, 0.0);
        let k = e00.kron(&e11);
        for i in 0..4 {
            for j in 0..4 {
                let want = if (i, j) == (1, 1) { 1.0 } else { 0.0 };
                assert_eq!(k[(i, j)], cx(want, 0.0));
            }
        }
    }

    #[test]
    fn adjoint_and_trace() {
        let a = M::from_rows_f64(&[&[(1.0, 2.0), (0.0, -1.0)], &[(3.0, 0.0), (4.0, 5.0)]]);
        let adj = a.adjoint();
        assert_eq!(adj[(0, 1)], cx(3.0, 0.0));
        assert_eq!(adj[(1, 0)], cx(0.0, 1.0));
        assert_eq!(a.trace(), cx(5.0, 7.0));
    }

    #[test]
    fn matmul_against_hand_computation() {
        let a = M::from_rows_f64(&[&[(1.0, 0.0), (2.0, 0.0)], &[(0.0, 1.0), (0.0, 0.0)]]);
        let b = M::from_rows_f64(&[&[(0.0, 0.0), (1.0, 0.0)], &[(1.0, 0.0), (0.0, 0.0)]]);
        let c = a.matmul(&b);
        assert_eq!(c[(0, 0)], cx(2.0, 0.0));
        assert_eq!(c[(0, 1)], cx(1.0, 0.0));
        assert_eq!(c[(1, 0)], cx(0.0, 0.0));
        assert_eq!(c[(1, 1)], cx(0.0, 1.0));
    }

    #[test]
    fn norms_agree_on_simple_input() {
        let a = M::from_rows_f64(&[&[(3.0, 4.0), (0.0, 0.0)], &[(0.0, 0.0), (1.0, 0.0)]]);
        assert!((a.max_abs() - 5.0).abs() < 1e-15);
        assert!((a.norm_one() - 5.0).abs() < 1e-15);
        assert!((a.norm_fro() - 26f64.sqrt()).abs() < 1e-15);
    }
}
