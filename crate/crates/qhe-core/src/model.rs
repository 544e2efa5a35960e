//! The coupled two-qubit working medium with isotropic exchange coupling.
//!
//! Basis order is `|00⟩, |01⟩, |10⟩, |11⟩` with `σ_z |0⟩ = +|0⟩`, which puts
//! `|00⟩` on the top level `2J + 2B`. All closed forms in this crate assume
//! the strong-coupling window `0 < B < 4J`, where the levels in ascending
//! order are the singlet, `|11⟩`, the triplet-zero, and `|00⟩`.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::matrix::{pauli_x, pauli_y, pauli_z, ComplexMatrix};
use crate::scalar::{real, Real};
use crate::spectrum::Spectrum;
use crate::tolerance::Tolerances;

/// Validated engine parameters: fields, coupling, inverse temperature.
///
/// Requires `J > 0`, `beta > 0`, and `0 < B2 <= B1 < 4J` so that both field
/// settings sit in the strong-coupling window and the first adiabatic stroke
/// raises the field.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EngineParams<T> {
    b1: T,
    b2: T,
    j: T,
    beta: T,
}

impl<T: Real> EngineParams<T> {
    pub fn new(b1: T, b2: T, j: T, beta: T) -> Result<Self> {
        let all_finite =
            b1.is_finite() && b2.is_finite() && j.is_finite() && beta.is_finite();
        if !all_finite {
            return Err(Error::InvalidParams {
                reason: "parameters must be finite",
            });
        }
        if !(j > T::zero()) {
            return Err(Error::InvalidParams {
                reason: "coupling J must be positive",
            });
        }
        if !(beta > T::zero()) {
            return Err(Error::InvalidParams {
                reason: "inverse temperature beta must be positive",
            });
        }
        if !(b2 > T::zero()) || !(b2 <= b1) {
            return Err(Error::InvalidParams {
                reason: "fields must satisfy 0 < B2 <= B1",
            });
        }
        let four_j = real::<T>(4.0) * j;
        if !(b1 < four_j) {
            return Err(Error::RegimeViolation {
                b: b1.to_f64().unwrap_or(f64::NAN),
                j: j.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { b1, b2, j, beta })
    }

    pub fn b1(&self) -> T {
        self.b1
    }

    pub fn b2(&self) -> T {
        self.b2
    }

    pub fn j(&self) -> T {
        self.j
    }

    pub fn beta(&self) -> T {
        self.beta
    }
}

/// Hamiltonian `B (σ_z ⊗ I + I ⊗ σ_z) + 2J (σ_x⊗σ_x + σ_y⊗σ_y + σ_z⊗σ_z)`.
pub fn hamiltonian<T: Real>(b: T, j: T) -> ComplexMatrix<T> {
    let id = ComplexMatrix::identity(2);
    let (sx, sy, sz) = (pauli_x(), pauli_y(), pauli_z());
    let zeeman = &sz.kron(&id) + &id.kron(&sz);
    let exchange = &(&sx.kron(&sx) + &sy.kron(&sy)) + &sz.kron(&sz);
    &zeeman.scaled(b) + &exchange.scaled(real::<T>(2.0) * j)
}

/// Level energies `(-6J, 2J - 2B, 2J, 2J + 2B)`, ascending inside the window.
pub fn level_energies<T: Real>(b: T, j: T) -> [T; 4] {
    let two = real::<T>(2.0);
    [
        -real::<T>(6.0) * j,
        two * j - two * b,
        two * j,
        two * j + two * b,
    ]
}

/// Closed-form spectrum in the strong-coupling window.
///
/// Eigenvectors, in level order: the singlet `(|10⟩ - |01⟩)/√2`, `|11⟩`, the
/// triplet-zero `(|10⟩ + |01⟩)/√2`, and `|00⟩`. They do not depend on `B`.
pub fn analytic_spectrum<T: Real>(b: T, j: T) -> Result<Spectrum<T>> {
    analytic_spectrum_with(b, j, &Tolerances::default())
}

pub fn analytic_spectrum_with<T: Real>(b: T, j: T, tol: &Tolerances<T>) -> Result<Spectrum<T>> {
    if !(b > T::zero()) || !(b < real::<T>(4.0) * j) {
        return Err(Error::RegimeViolation {
            b: b.to_f64().unwrap_or(f64::NAN),
            j: j.to_f64().unwrap_or(f64::NAN),
        });
    }
    let zero = Complex::new(T::zero(), T::zero());
    let one = Complex::new(T::one(), T::zero());
    let inv_sqrt2 = Complex::new(T::one() / real::<T>(2.0).sqrt(), T::zero());
    let mut vectors = ComplexMatrix::zeros(4);
    // Column 0: singlet (|10> - |01>)/sqrt(2).
    vectors[(1, 0)] = -inv_sqrt2;
    vectors[(2, 0)] = inv_sqrt2;
    // Column 1: |11>.
    vectors[(3, 1)] = one;
    // Column 2: triplet-zero (|10> + |01>)/sqrt(2).
    vectors[(1, 2)] = inv_sqrt2;
    vectors[(2, 2)] = inv_sqrt2;
    // Column 3: |00>.
    vectors[(0, 3)] = zero + one;
    Spectrum::new(level_energies(b, j).to_vec(), vectors, tol)
}
