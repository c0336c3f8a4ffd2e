//! Repo-wide default tolerances.
//!
//! Structural checks (Hermiticity, trace, positivity) use [`STRUCTURAL`];
//! exact algebraic identities checked on floating-point data use
//! [`ALGEBRAIC`]. Spectral routines have their own coarser defaults because
//! they stack several factorizations.

/// Default tolerance for structural invariants of states and maps.
pub const STRUCTURAL: f64 = 1e-10;

/// Default tolerance for algebraic identities on random inputs.
pub const ALGEBRAIC: f64 = 1e-12;

/// Tolerance for projector algebra produced by spectral decompositions.
pub const SPECTRAL: f64 = 1e-8;

/// Absolute eigenvalue distance below which spectral points merge into one
/// block.
pub const EIGENVALUE_CLUSTER: f64 = 1e-7;

/// Condition-number threshold above which an eigenvector matrix is treated
/// as numerically defective.
pub const CONDITION_LIMIT: f64 = 1e8;

/// Absolute root distance below which polynomial roots merge into one
/// multiplicity cluster.
pub const ROOT_CLUSTER: f64 = 1e-7;
