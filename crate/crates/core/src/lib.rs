//! Markovian and memory-kernel open quantum dynamics.
//!
//! `memkern` simulates finite-dimensional open quantum systems whose master
//! equation carries, on top of a Lindblad background, a second dissipator
//! convolved with a memory kernel:
//!
//! ```text
//!   dρ/dt = L₀[ρ(t)] + L₁ ∫₀ᵗ k(t−t′) ρ(t′) dt′
//! ```
//!
//! The crate provides
//!
//! - a dense complex-matrix substrate ([`matrix`], [`pauli`], [`superop`],
//!   [`state`]) with tensor products, vectorization and Choi conversion,
//! - Lindblad generators, spectral decompositions, propagators and
//!   steady-state projectors ([`lindblad`]),
//! - memory kernels with exact time-domain and rational Laplace forms, plus a
//!   stationary Gaussian sampler matching the kernel autocorrelation
//!   ([`kernel`]),
//! - three independent solvers for the convolution master equation — rational
//!   Laplace inversion through partial fractions, an exact augmented-ODE
//!   embedding, and direct Volterra time stepping — plus a Monte-Carlo
//!   stochastic-Hamiltonian average ([`solver`]),
//! - closed-form channel solutions for exponential and modulated exponential
//!   kernels, revival times, effective decay rates and complete-positivity
//!   envelopes ([`channels`]),
//! - channel-quality functionals: fidelity, minimum channel fidelity,
//!   concurrence, Choi-based CP verification and operator-norm distances
//!   ([`metrics`]).
//!
//! All numerics are generic over the real scalar type through [`Scalar`]
//! (`f32` or `f64`); concrete `f64` aliases live at the crate root.

pub mod channels;
pub mod error;
pub mod kernel;
pub mod lindblad;
pub mod linalg;
pub mod matrix;
pub mod metrics;
pub mod pauli;
pub mod poly;
pub mod scalar;
pub mod solver;
pub mod state;
pub mod superop;
pub mod tol;

pub use error::Error;
pub use scalar::Scalar;

/// Crate result type.
pub type Result<T> = std::result::Result<T, Error>;

/// `f64` complex scalar.
pub type C64 = num_complex::Complex<f64>;
/// `f32` complex scalar.
pub type C32 = num_complex::Complex<f32>;

/// Dense complex matrix at `f64` precision (the default working type).
pub type Matrix = matrix::ComplexMatrix<f64>;
/// Dense complex matrix at `f32` precision.
pub type Matrix32 = matrix::ComplexMatrix<f32>;
/// Superoperator at `f64` precision.
pub type SuperOp = superop::SuperOp<f64>;
/// Density matrix at `f64` precision.
pub type QuantumState = state::QuantumState<f64>;
