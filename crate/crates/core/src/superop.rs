//! Superoperators: d²×d² matrices acting on vectorized operators.
//!
//! Vectorization is column-stacking, fixed repo-wide: `vec(X)[j·d + i] =
//! X[i, j]`. Under it, `vec(A X B) = (Bᵀ ⊗ A) vec(X)`, which is what
//! [`SuperOp::sandwich`] builds. No other module hand-rolls these indices.

use num_complex::Complex;

use crate::error::Error;
use crate::matrix::ComplexMatrix;
use crate::scalar::Scalar;
use crate::Result;

/// Column-stacks a d×d matrix into a length-d² vector.
pub fn vectorize<T: Scalar>(x: &ComplexMatrix<T>) -> Result<Vec<Complex<T>>> {
    if !x.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "vectorize requires a square matrix, got {}x{}",
            x.rows(),
            x.cols()
        )));
    }
    let d = x.rows();
    let mut v = Vec::with_capacity(d * d);
    for j in 0..d {
        for i in 0..d {
            v.push(x[(i, j)]);
        }
    }
    Ok(v)
}

/// Inverse of [`vectorize`]: rebuilds the d×d matrix.
pub fn devectorize<T: Scalar>(v: &[Complex<T>], d: usize) -> Result<ComplexMatrix<T>> {
    if v.len() != d * d {
        return Err(Error::DimensionMismatch(format!(
            "devectorize: vector length {} != {}^2",
            v.len(),
            d
        )));
    }
    Ok(ComplexMatrix::from_fn(d, d, |i, j| v[j * d + i]))
}

/// A linear map on d×d operators, stored as its d²×d² matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SuperOp<T> {
    mat: ComplexMatrix<T>,
    dim: usize,
}

impl<T: Scalar> SuperOp<T> {
    /// Wraps a d²×d² matrix.
    pub fn from_matrix(mat: ComplexMatrix<T>, dim: usize) -> Result<Self> {
        mat.expect_square(dim * dim, "superoperator matrix")?;
        Ok(Self { mat, dim })
    }

    /// The identity map on d×d operators.
    pub fn identity(dim: usize) -> Self {
        Self { mat: ComplexMatrix::identity(dim * dim), dim }
    }

    /// The zero map.
    pub fn zero(dim: usize) -> Self {
        Self { mat: ComplexMatrix::zeros(dim * dim, dim * dim), dim }
    }

    /// The map X ↦ A X B as a matrix: `Bᵀ ⊗ A` in the column-stacking
    /// convention.
    pub fn sandwich(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> Result<Self> {
        if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
            return Err(Error::DimensionMismatch(format!(
                "sandwich requires equal square factors, got {}x{} and {}x{}",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols()
            )));
        }
        let dim = a.rows();
        Ok(Self { mat: b.transpose().kron(a), dim })
    }

    /// Hilbert-space dimension d.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The underlying d²×d² matrix.
    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.mat
    }

    /// Consumes the wrapper, returning the matrix.
    pub fn into_matrix(self) -> ComplexMatrix<T> {
        self.mat
    }

    /// Applies the map to an operator.
    pub fn apply(&self, x: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
        x.expect_square(self.dim, "superoperator operand")?;
        let v = vectorize(x)?;
        devectorize(&self.mat.matvec(&v), self.dim)
    }

    /// Composition `self ∘ rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "superoperator dimensions must agree");
        Self { mat: self.mat.matmul(&rhs.mat), dim: self.dim }
    }

    /// Linear combination helpers.
    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "superoperator dimensions must agree");
        Self { mat: &self.mat + &rhs.mat, dim: self.dim }
    }

    /// Difference of maps.
    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "superoperator dimensions must agree");
        Self { mat: &self.mat - &rhs.mat, dim: self.dim }
    }

    /// Scalar multiple of the map.
    pub fn scale(&self, factor: Complex<T>) -> Self {
        Self { mat: self.mat.scale(factor), dim: self.dim }
    }
}

/// Choi matrix of a map, unnormalized: C = Σ_{i,j} |i⟩⟨j| ⊗ Φ(|i⟩⟨j|).
#[derive(Debug, Clone)]
pub struct ChoiMatrix<T> {
    mat: ComplexMatrix<T>,
    dim: usize,
}

impl<T: Scalar> ChoiMatrix<T> {
    /// The d²×d² Choi block matrix.
    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.mat
    }

    /// Hilbert-space dimension d of the underlying map.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Partial trace over the output (second) factor; equals the identity
    /// exactly when the map is trace-preserving.
    pub fn trace_out_output(&self) -> ComplexMatrix<T> {
        let d = self.dim;
        ComplexMatrix::from_fn(d, d, |i, j| {
            let mut acc = Complex::new(T::zero(), T::zero());
            for k in 0..d {
                acc = acc + self.mat[(i * d + k, j * d + k)];
            }
            acc
        })
    }
}

/// Builds the Choi matrix of a superoperator.
pub fn choi<T: Scalar>(phi: &SuperOp<T>) -> ChoiMatrix<T> {
    let d = phi.dim();
    let mut c = ComplexMatrix::zeros(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            // Φ(|i⟩⟨j|) is the devectorized column j·d + i of the matrix.
            let col = phi.matrix().col(j * d + i);
            for k in 0..d {
                for l in 0..d {
                    c[(i * d + k, j * d + l)] = col[l * d + k];
                }
            }
        }
    }
    ChoiMatrix { mat: c, dim: d }
}
