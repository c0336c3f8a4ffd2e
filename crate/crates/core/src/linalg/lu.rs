//! LU factorization with partial pivoting for complex matrices.

use num_complex::Complex;

use crate::error::Error;
use crate::matrix::ComplexMatrix;
use crate::scalar::Scalar;
use crate::Result;

/// Packed LU factors of a square matrix, `P·A = L·U`.
#[derive(Debug, Clone)]
pub struct Lu<T> {
    lu: ComplexMatrix<T>,
    /// `pivot[k]` is the row swapped into position `k` at step `k`.
    pivot: Vec<usize>,
}

impl<T: Scalar> Lu<T> {
    /// Factors a square matrix. Fails only on an exactly zero pivot; near
    /// singularity is the caller's concern (check a condition estimate).
    pub fn factor(a: &ComplexMatrix<T>) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "LU requires a square matrix, got {}x{}",
                a.rows(),
                a.cols()
            )));
        }
        let n = a.rows();
        let mut lu = a.clone();
        let mut pivot = vec![0usize; n];
        for k in 0..n {
            let mut p = k;
            let mut best = lu[(k, k)].norm();
            for i in k + 1..n {
                let v = lu[(i, k)].norm();
                if v > best {
                    best = v;
                    p = i;
                }
            }
            if best == T::zero() {
                return Err(Error::Singular(format!("zero pivot at column {k}")));
            }
            pivot[k] = p;
            if p != k {
                for j in 0..n {
                    let tmp = lu[(k, j)];
                    lu[(k, j)] = lu[(p, j)];
                    lu[(p, j)] = tmp;
                }
            }
            let inv_piv = Complex::new(T::one(), T::zero()) / lu[(k, k)];
            for i in k + 1..n {
                let factor = lu[(i, k)] * inv_piv;
                lu[(i, k)] = factor;
                if factor.norm() == T::zero() {
                    continue;
                }
                for j in k + 1..n {
                    let v = lu[(i, j)] - factor * lu[(k, j)];
                    lu[(i, j)] = v;
                }
            }
        }
        Ok(Self { lu, pivot })
    }

    /// Solves `A x = b` for a single right-hand side.
    pub fn solve_vec(&self, b: &[Complex<T>]) -> Vec<Complex<T>> {
        let n = self.lu.rows();
        assert_eq!(b.len(), n, "right-hand side length mismatch");
        let mut x = b.to_vec();
        for k in 0..n {
            x.swap(k, self.pivot[k]);
            let xk = x[k];
            for i in k + 1..n {
                x[i] = x[i] - self.lu[(i, k)] * xk;
            }
        }
        for k in (0..n).rev() {
            let mut acc = x[k];
            for j in k + 1..n {
                acc = acc - self.lu[(k, j)] * x[j];
            }
            x[k] = acc / self.lu[(k, k)];
        }
        x
    }

    /// Solves `A X = B` column by column.
    pub fn solve_mat(&self, b: &ComplexMatrix<T>) -> ComplexMatrix<T> {
        let n = self.lu.rows();
        assert_eq!(b.rows(), n, "right-hand side shape mismatch");
        let mut out = ComplexMatrix::zeros(n, b.cols());
        for j in 0..b.cols() {
            let col = self.solve_vec(&b.col(j));
            for i in 0..n {
                out[(i, j)] = col[i];
            }
        }
        out
    }

    /// The inverse matrix.
    pub fn inverse(&self) -> ComplexMatrix<T> {
        self.solve_mat(&ComplexMatrix::identity(self.lu.rows()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cx;

    type M = ComplexMatrix<f64>;

    fn seeded_matrix(d: usize, seed: u64) -> M {
        let mut s = seed.wrapping_mul(0x9E3779B97F4A7C15).wrapping_add(1);
        let mut next = move || {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((s >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        };
        M::from_fn(d, d, |_, _| cx(next(), next()))
    }

    #[test]
    fn solve_recovers_known_solution() {
        for seed in 0..6 {
            let a = seeded_matrix(5, seed);
            let x: Vec<_> = (0..5).map(|i| cx(i as f64 + 0.5, -(i as f64))).collect();
            let b = a.matvec(&x);
            let lu = Lu::factor(&a).unwrap();
            let got = lu.solve_vec(&b);
            for (g, w) in got.iter().zip(&x) {
                assert!((g - w).norm() < 1e-10, "seed {seed}: {g} vs {w}");
            }
        }
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let a = seeded_matrix(6, 42);
        let inv = Lu::factor(&a).unwrap().inverse();
        assert!(a.matmul(&inv).approx_eq(&M::identity(6), 1e-10));
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let mut a = M::zeros(3, 3);
        a[(0, 0)] = cx(1.0, 0.0);
        a[(1, 1)] = cx(1.0, 0.0);
        assert!(matches!(Lu::factor(&a), Err(Error::Singular(_))));
    }
}
