//! Quantum states: density matrices and occupation distributions.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::scalar::Real;
use crate::spectrum::{eig_hermitian_with, Spectrum};
use crate::tolerance::Tolerances;

/// A trace-one, positive-semidefinite Hermitian operator.
///
/// Every constructor validates Hermiticity, unit trace, and eigenvalue
/// positivity, so a value of this type is a physical state by construction.
#[derive(Clone, Debug)]
pub struct DensityMatrix<T> {
    matrix: ComplexMatrix<T>,
}

impl<T: Real> DensityMatrix<T> {
    pub fn new(matrix: ComplexMatrix<T>) -> Result<Self> {
        Self::with_tolerances(matrix, &Tolerances::default())
    }

    pub fn with_tolerances(matrix: ComplexMatrix<T>, tol: &Tolerances<T>) -> Result<Self> {
        if !matrix.is_finite() {
            return Err(Error::NonFiniteEntries);
        }
        let defect = matrix.hermiticity_defect();
        if defect > tol.hermiticity {
            return Err(Error::NonHermitianInput {
                defect: defect.to_f64().unwrap_or(f64::NAN),
            });
        }
        let tr = matrix.trace();
        let trace_defect = (tr - Complex::new(T::one(), T::zero())).norm();
        if trace_defect > tol.unit_trace {
            return Err(Error::NonUnitTrace {
                defect: trace_defect.to_f64().unwrap_or(f64::NAN),
            });
        }
        let spectrum = eig_hermitian_with(&matrix, tol)?;
        let min = spectrum
            .energies()
            .first()
            .copied()
            .unwrap_or_else(T::zero);
        if min < -tol.eigenvalue_floor {
            return Err(Error::NegativeEigenvalue {
                min: min.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { matrix })
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        let scale = T::one() / T::from_usize(dim).expect("dim");
        Self {
            matrix: ComplexMatrix::identity(dim).scaled(scale),
        }
    }

    /// Pure state `|v⟩⟨v|` from a normalized vector.
    pub fn pure(v: &[Complex<T>]) -> Result<Self> {
        let dim = v.len();
        Self::new(ComplexMatrix::from_fn(dim, |i, j| v[i] * v[j].conj()))
    }

    /// Mixture `Σ p_n |ψ_n⟩⟨ψ_n|` diagonal in the given eigenbasis.
    pub fn from_occupations(p: &OccupationDist<T>, basis: &Spectrum<T>) -> Result<Self> {
        Self::from_occupations_with(p, basis, &Tolerances::default())
    }

    pub fn from_occupations_with(
        p: &OccupationDist<T>,
        basis: &Spectrum<T>,
        tol: &Tolerances<T>,
    ) -> Result<Self> {
        if p.len() != basis.dim() {
            return Err(Error::DimensionMismatch {
                expected: basis.dim(),
                found: p.len(),
            });
        }
        let v = basis.eigenvectors();
        let m = ComplexMatrix::from_fn(basis.dim(), |i, j| {
            let mut acc = Complex::new(T::zero(), T::zero());
            for n in 0..basis.dim() {
                acc += v[(i, n)] * v[(j, n)].conj() * p.probs()[n];
            }
            acc
        });
        Self::with_tolerances(m, tol)
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Ascending eigenvalues; the matrix was validated at construction, so
    /// no further checks run here.
    pub fn eigenvalues(&self) -> Vec<T> {
        crate::spectrum::eigenvalues_only(&self.matrix)
    }

    /// Von Neumann entropy `-Σ λ ln λ` in nats.
    pub fn von_neumann_entropy(&self) -> T {
        self.eigenvalues()
            .into_iter()
            .map(|l| {
                let l = l.max(T::zero());
                if l > T::zero() {
                    -l * l.ln()
                } else {
                    T::zero()
                }
            })
            .sum()
    }

    /// Largest off-diagonal modulus `|⟨ψ_m| ρ |ψ_n⟩|`, `m ≠ n`, in the given
    /// eigenbasis. Zero means the state is diagonal there.
    pub fn energy_basis_coherence(&self, basis: &Spectrum<T>) -> T {
        let d = basis.dim();
        let mut worst = T::zero();
        for m in 0..d {
            let vm = basis.eigenvector(m);
            let rho_vm = self.matrix.apply(&vm);
            for n in 0..d {
                if n == m {
                    continue;
                }
                let vn = basis.eigenvector(n);
                let elem = vn
                    .iter()
                    .zip(rho_vm.iter())
                    .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| {
                        acc + a.conj() * b
                    });
                worst = worst.max(elem.norm());
            }
        }
        worst
    }
}

/// Probabilities over energy eigenstates, aligned with a [`Spectrum`] ordering.
#[derive(Clone, Debug, PartialEq)]
pub struct OccupationDist<T> {
    probs: Vec<T>,
}

impl<T: Real> OccupationDist<T> {
    /// Validates and clamps: entries may undershoot 0 or overshoot 1 by at
    /// most the range tolerance and are clamped to `[0, 1]`; the sum must be
    /// 1 within the sum tolerance.
    pub fn new(probs: Vec<T>) -> Result<Self> {
        Self::with_tolerances(probs, &Tolerances::default())
    }

    pub fn with_tolerances(mut probs: Vec<T>, tol: &Tolerances<T>) -> Result<Self> {
        for (index, p) in probs.iter_mut().enumerate() {
            if !p.is_finite() || *p < -tol.prob_range || *p > T::one() + tol.prob_range {
                return Err(Error::ProbabilityOutOfRange {
                    index,
                    value: p.to_f64().unwrap_or(f64::NAN),
                });
            }
            *p = p.max(T::zero()).min(T::one());
        }
        let sum: T = probs.iter().copied().sum();
        if (sum - T::one()).abs() > tol.prob_sum {
            return Err(Error::UnnormalizedDistribution {
                sum: sum.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { probs })
    }

    pub fn uniform(dim: usize) -> Self {
        let p = T::one() / T::from_usize(dim).expect("dim");
        Self {
            probs: vec![p; dim],
        }
    }

    /// Thermal occupations `e^{-β E_n} / Z` for the given level energies.
    ///
    /// Exponentials are shifted by the ground-state energy so arbitrarily
    /// large `β` cannot overflow.
    pub fn gibbs(energies: &[T], beta: T) -> Result<Self> {
        if !(beta >= T::zero()) {
            return Err(Error::InvalidParams {
                reason: "inverse temperature must be non-negative",
            });
        }
        let e_min = energies
            .iter()
            .copied()
            .fold(T::infinity(), T::min);
        let weights: Vec<T> = energies
            .iter()
            .map(|&e| (-beta * (e - e_min)).exp())
            .collect();
        let z: T = weights.iter().copied().sum();
        Ok(Self {
            probs: weights.into_iter().map(|w| w / z).collect(),
        })
    }

    pub fn probs(&self) -> &[T] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// Shannon entropy in nats; equals the von Neumann entropy for states
    /// diagonal in the chosen basis.
    pub fn shannon_entropy(&self) -> T {
        self.probs
            .iter()
            .map(|&p| if p > T::zero() { -p * p.ln() } else { T::zero() })
            .sum()
    }
}

/// Thermal state of a Hermitian Hamiltonian at inverse temperature `beta`.
pub fn gibbs_state<T: Real>(
    h: &ComplexMatrix<T>,
    beta: T,
) -> Result<(DensityMatrix<T>, OccupationDist<T>)> {
    gibbs_state_with(h, beta, &Tolerances::default())
}

pub fn gibbs_state_with<T: Real>(
    h: &ComplexMatrix<T>,
    beta: T,
    tol: &Tolerances<T>,
) -> Result<(DensityMatrix<T>, OccupationDist<T>)> {
    let spectrum = eig_hermitian_with(h, tol)?;
    let p = OccupationDist::gibbs(spectrum.energies(), beta)?;
    let rho = DensityMatrix::from_occupations_with(&p, &spectrum, tol)?;
    Ok((rho, p))
}

/// Occupation probabilities `⟨ψ_n| ρ |ψ_n⟩` of a state in an eigenbasis.
pub fn occupations<T: Real>(rho: &DensityMatrix<T>, basis: &Spectrum<T>) -> Result<OccupationDist<T>> {
    occupations_with(rho, basis, &Tolerances::default())
}

pub fn occupations_with<T: Real>(
    rho: &DensityMatrix<T>,
    basis: &Spectrum<T>,
    tol: &Tolerances<T>,
) -> Result<OccupationDist<T>> {
    if rho.dim() != basis.dim() {
        return Err(Error::DimensionMismatch {
            expected: basis.dim(),
            found: rho.dim(),
        });
    }
    let probs = (0..basis.dim())
        .map(|n| {
            let expectation = rho.matrix().expectation(&basis.eigenvector(n));
            debug_assert!(
                expectation.im.abs() <= tol.hermiticity,
                "diagonal element of a Hermitian state must be real"
            );
            expectation.re
        })
        .collect();
    OccupationDist::with_tolerances(probs, tol)
}

/// Mean energy `tr(ρ H)` of a state under a Hermitian observable.
pub fn mean_energy<T: Real>(rho: &DensityMatrix<T>, h: &ComplexMatrix<T>) -> Result<T> {
    mean_energy_with(rho, h, &Tolerances::default())
}

pub fn mean_energy_with<T: Real>(
    rho: &DensityMatrix<T>,
    h: &ComplexMatrix<T>,
    tol: &Tolerances<T>,
) -> Result<T> {
    if rho.dim() != h.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            found: h.dim(),
        });
    }
    let defect = h.hermiticity_defect();
    if defect > tol.hermiticity {
        return Err(Error::NonHermitianInput {
            defect: defect.to_f64().unwrap_or(f64::NAN),
        });
    }
    let tr = (rho.matrix() * h).trace();
    debug_assert!(
        tr.im.abs() <= tol.hermiticity * T::one().max(h.max_abs()),
        "tr(rho H) must be real for Hermitian factors"
    );
    Ok(tr.re)
}
