//! Pauli matrices and Pauli strings.
//!
//! The computational basis is ordered (|0⟩, |1⟩) lexicographically per qubit,
//! and the third Pauli matrix follows the convention
//!
//! ```text
//!   σ₃ = |1⟩⟨1| − |0⟩⟨0| = diag(−1, +1),
//! ```
//!
//! adopted globally. Keeping the algebra σ₁σ₂ = iσ₃ intact then fixes
//! σ₂ = [[0, i], [−i, 0]], and σ± = ½(σ₁ ± iσ₂) become σ₊ = |1⟩⟨0|,
//! σ₋ = |0⟩⟨1|, so σ₋ lowers toward |0⟩ (the −1 eigenstate). Conjugations
//! σ_k X σ_k and the spin-flip σ₂ ⊗ σ₂ are insensitive to the sign flips
//! relative to the textbook forms.

use num_complex::Complex;

use crate::error::Error;
use crate::matrix::ComplexMatrix;
use crate::scalar::{cx, Scalar};
use crate::Result;

/// A string of Pauli indices n̄ = (n₁, …, n_N), each in {0, 1, 2, 3}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PauliString(Vec<u8>);

impl PauliString {
    /// Validates indices (≤ 3) and length (≥ 1).
    pub fn new(indices: &[u8]) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::InvalidInput("Pauli string must have length >= 1".into()));
        }
        if let Some(&bad) = indices.iter().find(|&&n| n > 3) {
            return Err(Error::InvalidInput(format!("Pauli index {bad} not in 0..=3")));
        }
        Ok(Self(indices.to_vec()))
    }

    /// Number of qubits.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false by construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The underlying indices.
    pub fn indices(&self) -> &[u8] {
        &self.0
    }
}

/// Single-qubit Pauli matrix σ_k in this crate's convention.
pub fn sigma<T: Scalar>(k: u8) -> ComplexMatrix<T> {
    match k {
        0 => ComplexMatrix::identity(2),
        1 => ComplexMatrix::from_rows_f64(&[&[(0.0, 0.0), (1.0, 0.0)], &[(1.0, 0.0), (0.0, 0.0)]]),
        2 => ComplexMatrix::from_rows_f64(&[&[(0.0, 0.0), (0.0, 1.0)], &[(0.0, -1.0), (0.0, 0.0)]]),
        3 => {
            ComplexMatrix::from_rows_f64(&[&[(-1.0, 0.0), (0.0, 0.0)], &[(0.0, 0.0), (1.0, 0.0)]])
        }
        _ => panic!("Pauli index {k} not in 0..=3"),
    }
}

/// Raising operator σ₊ = ½(σ₁ + iσ₂) = |1⟩⟨0|.
pub fn sigma_plus<T: Scalar>() -> ComplexMatrix<T> {
    let mut m = ComplexMatrix::zeros(2, 2);
    m[(1, 0)] = cx(1.0, 0.0);
    m
}

/// Lowering operator σ₋ = ½(σ₁ − iσ₂) = |0⟩⟨1|.
pub fn sigma_minus<T: Scalar>() -> ComplexMatrix<T> {
    let mut m = ComplexMatrix::zeros(2, 2);
    m[(0, 1)] = cx(1.0, 0.0);
    m
}

/// Tensor product σ_n̄ = ⊗ᵢ σ_{nᵢ}, a 2^N × 2^N matrix.
pub fn pauli_string<T: Scalar>(string: &PauliString) -> ComplexMatrix<T> {
    let mut acc = sigma::<T>(string.indices()[0]);
    for &n in &string.indices()[1..] {
        acc = acc.kron(&sigma(n));
    }
    acc
}

/// All 4^N Pauli strings on N qubits, in lexicographic index order.
pub fn all_strings(n_qubits: usize) -> Vec<PauliString> {
    assert!(n_qubits >= 1);
    let count = 4usize.pow(n_qubits as u32);
    (0..count)
        .map(|mut code| {
            let mut idx = vec![0u8; n_qubits];
            for slot in idx.iter_mut().rev() {
                *slot = (code % 4) as u8;
                code /= 4;
            }
            PauliString(idx)
        })
        .collect()
}

/// Computational-basis ket |i⟩ in dimension `d` as a column of amplitudes.
pub fn basis_ket<T: Scalar>(d: usize, i: usize) -> Vec<Complex<T>> {
    let mut v = vec![Complex::new(T::zero(), T::zero()); d];
    v[i] = Complex::new(T::one(), T::zero());
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    type M = ComplexMatrix<f64>;

    #[test]
    fn sigma0_is_identity() {
        let s = PauliString::new(&[0]).unwrap();
        assert!(pauli_string::<f64>(&s).approx_eq(&M::identity(2), 0.0));
    }

    #[test]
    fn sigma3_has_paper_sign_convention() {
        let s = PauliString::new(&[3]).unwrap();
        let m = pauli_string::<f64>(&s);
        assert_eq!(m[(0, 0)], cx(-1.0, 0.0));
        assert_eq!(m[(1, 1)], cx(1.0, 0.0));
        assert_eq!(m[(0, 1)], cx(0.0, 0.0));
    }

    #[test]
    fn sigma_xx_is_antidiagonal_ones() {
        let s = PauliString::new(&[1, 1]).unwrap();
        let m = pauli_string::<f64>(&s);
        for i in 0..4 {
            for j in 0..4 {
                let want = if i + j == 3 { 1.0 } else { 0.0 };
                assert_eq!(m[(i, j)], cx(want, 0.0), "at ({i},{j})");
            }
        }
    }

    #[test]
    fn algebra_sigma1_sigma2_is_i_sigma3() {
        let prod = sigma::<f64>(1).matmul(&sigma(2));
        let want = sigma::<f64>(3).scale(cx(0.0, 1.0));
        assert!(prod.approx_eq(&want, 1e-15));
    }

    #[test]
    fn ladder_operators_match_convention() {
        let half = cx::<f64>(0.5, 0.0);
        let from_defs = (&sigma::<f64>(1) + &sigma::<f64>(2).scale(cx(0.0, 1.0))).scale(half);
        assert!(from_defs.approx_eq(&sigma_plus::<f64>(), 1e-15));
        // σ₊ |0⟩⟨0| σ₋ = |1⟩⟨1| in this convention.
        let mut e00 = M::zeros(2, 2);
        e00[(0, 0)] = cx(1.0, 0.0);
        let out = sigma_plus::<f64>().matmul(&e00).matmul(&sigma_minus::<f64>());
        let mut e11 = M::zeros(2, 2);
        e11[(1, 1)] = cx(1.0, 0.0);
        assert!(out.approx_eq(&e11, 1e-15));
    }

    #[test]
    fn pauli_strings_are_trace_orthogonal() {
        // Tr[σ_m̄ σ_n̄] = 2^N δ_{m̄n̄} for N ≤ 2.
        for n_qubits in 1..=2 {
            let strings = all_strings(n_qubits);
            let mats: Vec<M> = strings.iter().map(pauli_string::<f64>).collect();
            let norm = 2f64.powi(n_qubits as i32);
            for (a, ma) in mats.iter().enumerate() {
                for (b, mb) in mats.iter().enumerate() {
                    let tr = ma.matmul(mb).trace();
                    let want = if a == b { norm } else { 0.0 };
                    assert!(
                        (tr.re - want).abs() < 1e-12 && tr.im.abs() < 1e-12,
                        "Tr[s{a} s{b}] = {tr}"
                    );
                }
            }
        }
    }
}
