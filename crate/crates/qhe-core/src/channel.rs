//! Non-selective quantum channels `ρ → Σ_α M_α ρ M_α†`.

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::scalar::Real;
use crate::state::DensityMatrix;
use crate::tolerance::Tolerances;

/// Max entrywise deviation of `Σ M_α M_α†` from the identity.
pub fn completeness_defect<T: Real>(operators: &[ComplexMatrix<T>]) -> Result<T> {
    let dim = match operators.first() {
        Some(op) => op.dim(),
        None => return Err(Error::IncompleteKraus { defect: 1.0 }),
    };
    let mut sum = ComplexMatrix::zeros(dim);
    for op in operators {
        if op.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: op.dim(),
            });
        }
        sum = &sum + &(op * &op.adjoint());
    }
    Ok(sum.max_abs_diff(&ComplexMatrix::identity(dim)))
}

/// Whether a set of operators satisfies the completeness relation.
pub fn validate_kraus<T: Real>(operators: &[ComplexMatrix<T>]) -> bool {
    validate_kraus_with(operators, &Tolerances::default())
}

pub fn validate_kraus_with<T: Real>(operators: &[ComplexMatrix<T>], tol: &Tolerances<T>) -> bool {
    matches!(completeness_defect(operators), Ok(d) if d <= tol.completeness)
}

/// Applies the non-selective channel defined by a complete Kraus set.
///
/// No outcome is recorded; the result is the outcome-averaged state.
pub fn apply_channel<T: Real>(
    rho: &DensityMatrix<T>,
    operators: &[ComplexMatrix<T>],
) -> Result<DensityMatrix<T>> {
    apply_channel_with(rho, operators, &Tolerances::default())
}

pub fn apply_channel_with<T: Real>(
    rho: &DensityMatrix<T>,
    operators: &[ComplexMatrix<T>],
    tol: &Tolerances<T>,
) -> Result<DensityMatrix<T>> {
    let defect = completeness_defect(operators)?;
    if defect > tol.completeness {
        return Err(Error::IncompleteKraus {
            defect: defect.to_f64().unwrap_or(f64::NAN),
        });
    }
    let dim = rho.dim();
    if operators[0].dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: operators[0].dim(),
        });
    }
    let mut out = ComplexMatrix::zeros(dim);
    for op in operators {
        out = &out + &(&(op * rho.matrix()) * &op.adjoint());
    }
    DensityMatrix::with_tolerances(out, tol)
}
