use thiserror::Error;

/// Errors reported by the engine core.
///
/// Diagnostic payloads are carried as `f64` regardless of the scalar type the
/// computation ran at.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: max |H - H^dag| = {defect:e}")]
    NonHermitianInput { defect: f64 },

    #[error("matrix entries must be finite")]
    NonFiniteEntries,

    #[error("eigenvector set is not orthonormal: max |V^dag V - I| = {defect:e}")]
    NonOrthonormalEigenvectors { defect: f64 },

    #[error("eigensolver residual {residual:e} exceeds tolerance")]
    EigenConvergence { residual: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("Kraus set incomplete: max |sum M M^dag - I| = {defect:e}")]
    IncompleteKraus { defect: f64 },

    #[error("density matrix trace deviates from one by {defect:e}")]
    NonUnitTrace { defect: f64 },

    #[error("density matrix has negative eigenvalue {min:e}")]
    NegativeEigenvalue { min: f64 },

    #[error("probability {value:e} at index {index} lies outside [0, 1]")]
    ProbabilityOutOfRange { index: usize, value: f64 },

    #[error("occupation probabilities sum to {sum}, not 1")]
    UnnormalizedDistribution { sum: f64 },

    #[error("field B = {b} outside the strong-coupling window (0, 4J) for J = {j}")]
    RegimeViolation { b: f64, j: f64 },

    #[error("invalid engine parameters: {reason}")]
    InvalidParams { reason: &'static str },

    #[error("measurement strength c0 = {c0} outside [0, 1/sqrt(2)]")]
    InvalidStrength { c0: f64 },

    #[error("invalid measurement direction: theta = {theta}, phi = {phi}")]
    InvalidDirection { theta: f64, phi: f64 },

    #[error("distribution pair is not the output of a z-z measurement")]
    InconsistentInput,

    #[error("R1 ordering condition fails: kappa = {kappa} < chi = {chi}")]
    NotR1 { kappa: f64, chi: f64 },

    #[error("distributions do not realize the {expected} ordering")]
    WrongOrdering { expected: &'static str },
}

pub type Result<T> = core::result::Result<T, Error>;
