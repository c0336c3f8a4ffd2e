//! Dense complex linear algebra for small matrices (d ≤ a few hundred).
//!
//! Everything is written against [`crate::matrix::ComplexMatrix`] and is
//! generic over the scalar type, which is why the crate carries its own
//! factorizations instead of binding LAPACK.

pub mod eig;
pub mod eigh;
pub mod expm;
pub mod lu;

pub use eig::{eig, eigvals, Eig};
pub use eigh::{eigh, eigvalsh};
pub use expm::expm;
pub use lu::Lu;
