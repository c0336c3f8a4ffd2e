//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the numerical routines.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Operand shapes are incompatible with the requested operation.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A value failed validation against its domain invariants.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The eigenvector matrix is too ill-conditioned for a spectral
    /// decomposition; the matrix is (numerically) defective and the caller
    /// must supply an analytic decomposition instead.
    #[error("defective matrix: {0}")]
    DefectiveMatrix(String),

    /// A nonzero eigenvalue sits on the imaginary axis, so the infinite-time
    /// limit does not exist.
    #[error("oscillatory spectrum: {0}")]
    OscillatorySpectrum(String),

    /// The resolvent was requested at (or too close to) a spectral point.
    #[error("singular point: z = {0} is within tolerance of the spectrum")]
    SingularPoint(String),

    /// A linear system or inversion hit a singular pivot.
    #[error("singular matrix: {0}")]
    Singular(String),

    /// The QR iteration failed to converge.
    #[error("eigenvalue iteration did not converge after {0} sweeps")]
    NoConvergence(usize),

    /// The delta kernel is a distribution and has no pointwise values.
    #[error("delta kernel cannot be evaluated pointwise")]
    DeltaNotEvaluable,

    /// The kernel variant is not supported by this operation.
    #[error("unsupported kernel variant: {0}")]
    Unsupported(String),

    /// Root clustering is ambiguous: two roots fall in the band where they
    /// can be neither merged nor separated reliably.
    #[error("ill-conditioned roots: {0}")]
    IllConditioned(String),

    /// The Volterra step size violates the stability precondition.
    #[error("step too large: dt = {dt} exceeds allowed {max}")]
    StepTooLarge {
        /// Requested step.
        dt: f64,
        /// Largest admissible step.
        max: f64,
    },

    /// Closed-form modulated solution requested outside its real-ω branch.
    #[error("complex oscillation frequency: omega^2 = {0} < 0; use a numerical solver")]
    ComplexOmega(f64),

    /// Revival times requested for a non-oscillatory (ω not real) channel.
    #[error("non-oscillatory channel: {0}")]
    NonOscillatory(String),
}
