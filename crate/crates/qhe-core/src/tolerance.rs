//! Numerical tolerances used by validation and classification.
//!
//! The closed-form results this crate reproduces are exact; the artifact is
//! floating point. Every comparison threshold lives here as a crate constant,
//! and [`Tolerances`] bundles them so callers can override any of them.

use crate::scalar::{real, Real};

/// Max entrywise `|H - H†|` accepted as Hermitian.
pub const HERMITICITY: f64 = 1e-12;
/// Max `|tr(rho) - 1|` accepted for a density matrix.
pub const UNIT_TRACE: f64 = 1e-12;
/// Density-matrix eigenvalues may undershoot zero by at most this much.
pub const EIGENVALUE_FLOOR: f64 = 1e-12;
/// Max entrywise `|Σ Mα Mα† - I|` accepted as a complete Kraus set.
pub const COMPLETENESS: f64 = 1e-10;
/// Max entrywise deviation of the eigenvector Gram matrix from identity.
pub const ORTHONORMALITY: f64 = 1e-10;
/// Relative eigenpair residual `‖H ψ - E ψ‖ / max(1, ‖H‖_F)`.
pub const EIGEN_RESIDUAL: f64 = 1e-10;
/// Absolute gap below which adjacent eigenvalues count as degenerate.
pub const DEGENERACY: f64 = 1e-9;
/// Occupation probabilities may stray outside `[0, 1]` by this much before
/// construction fails; smaller excursions are clamped.
pub const PROB_RANGE: f64 = 1e-12;
/// Max `|Σ p_n - 1|` accepted for an occupation distribution.
pub const PROB_SUM: f64 = 1e-10;
/// Probabilities closer than this are treated as tied when sorting/classifying.
pub const TIE: f64 = 1e-12;
/// A measurement direction within this angle of a coordinate axis is routed
/// through the closed-form fast path for that axis.
pub const AXIS_SNAP: f64 = 1e-12;

/// Bundle of all tolerances, overridable per call site.
#[derive(Clone, Debug)]
pub struct Tolerances<T> {
    pub hermiticity: T,
    pub unit_trace: T,
    pub eigenvalue_floor: T,
    pub completeness: T,
    pub orthonormality: T,
    pub eigen_residual: T,
    pub degeneracy: T,
    pub prob_range: T,
    pub prob_sum: T,
    pub tie: T,
    pub axis_snap: T,
}

impl<T: Real> Default for Tolerances<T> {
    fn default() -> Self {
        Self {
            hermiticity: real(HERMITICITY),
            unit_trace: real(UNIT_TRACE),
            eigenvalue_floor: real(EIGENVALUE_FLOOR),
            completeness: real(COMPLETENESS),
            orthonormality: real(ORTHONORMALITY),
            eigen_residual: real(EIGEN_RESIDUAL),
            degeneracy: real(DEGENERACY),
            prob_range: real(PROB_RANGE),
            prob_sum: real(PROB_SUM),
            tie: real(TIE),
            axis_snap: real(AXIS_SNAP),
        }
    }
}
