//! Hermitian eigendecomposition via cyclic complex Jacobi rotations.
//!
//! Jacobi is the right tool at these sizes (d ≤ 16): simple, numerically
//! robust, and accurate to a few ulps, which the analytic-vs-numeric
//! cross-checks in this crate depend on.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::scalar::{real, Real};
use crate::tolerance::Tolerances;

/// Eigenvalues in ascending order with orthonormal eigenvectors as columns.
#[derive(Clone, Debug)]
pub struct Spectrum<T> {
    energies: Vec<T>,
    eigenvectors: ComplexMatrix<T>,
    degeneracy_tol: T,
}

impl<T: Real> Spectrum<T> {
    /// Wraps precomputed eigendata, checking ordering and orthonormality.
    pub fn new(energies: Vec<T>, eigenvectors: ComplexMatrix<T>, tol: &Tolerances<T>) -> Result<Self> {
        if eigenvectors.dim() != energies.len() {
            return Err(Error::DimensionMismatch {
                expected: energies.len(),
                found: eigenvectors.dim(),
            });
        }
        for w in energies.windows(2) {
            if w[0] > w[1] {
                return Err(Error::InvalidParams {
                    reason: "eigenvalues must be ascending",
                });
            }
        }
        let gram_defect = gram_defect(&eigenvectors);
        if gram_defect > tol.orthonormality {
            return Err(Error::NonOrthonormalEigenvectors {
                defect: gram_defect.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self {
            energies,
            eigenvectors,
            degeneracy_tol: tol.degeneracy,
        })
    }

    pub fn dim(&self) -> usize {
        self.energies.len()
    }

    pub fn energies(&self) -> &[T] {
        &self.energies
    }

    pub fn eigenvectors(&self) -> &ComplexMatrix<T> {
        &self.eigenvectors
    }

    pub fn eigenvector(&self, n: usize) -> Vec<Complex<T>> {
        self.eigenvectors.column(n)
    }

    pub fn degeneracy_tol(&self) -> T {
        self.degeneracy_tol
    }

    /// Projector `|ψ_n⟩⟨ψ_n|`.
    pub fn projector(&self, n: usize) -> ComplexMatrix<T> {
        let v = self.eigenvector(n);
        ComplexMatrix::from_fn(self.dim(), |i, j| v[i] * v[j].conj())
    }

    /// Whether levels `m` and `n` are degenerate within the grouping tolerance.
    pub fn is_degenerate_pair(&self, m: usize, n: usize) -> bool {
        (self.energies[m] - self.energies[n]).abs() <= self.degeneracy_tol
    }

    /// Runs of degenerate levels as half-open index ranges.
    pub fn degenerate_groups(&self) -> Vec<(usize, usize)> {
        let mut groups = Vec::new();
        let mut start = 0;
        for i in 1..=self.energies.len() {
            let split = i == self.energies.len()
                || (self.energies[i] - self.energies[i - 1]).abs() > self.degeneracy_tol;
            if split {
                groups.push((start, i));
                start = i;
            }
        }
        groups
    }

    /// Max residual `‖H ψ_n - E_n ψ_n‖ / max(1, ‖H‖_F)` over all levels.
    pub fn residual(&self, h: &ComplexMatrix<T>) -> T {
        let scale = T::one().max(h.frobenius_norm());
        let mut worst = T::zero();
        for n in 0..self.dim() {
            let v = self.eigenvector(n);
            let hv = h.apply(&v);
            let r = hv
                .iter()
                .zip(v.iter())
                .map(|(a, b)| (a - b * self.energies[n]).norm_sqr())
                .fold(T::zero(), |x, y| x + y)
                .sqrt();
            worst = worst.max(r / scale);
        }
        worst
    }
}

fn gram_defect<T: Real>(vectors: &ComplexMatrix<T>) -> T {
    let gram = &vectors.adjoint() * vectors;
    gram.max_abs_diff(&ComplexMatrix::identity(vectors.dim()))
}

/// Diagonalizes a Hermitian matrix, returning the spectrum in ascending order.
///
/// Eigenvector phases are fixed deterministically: the first component of
/// largest modulus is made real and positive.
pub fn eig_hermitian<T: Real>(h: &ComplexMatrix<T>) -> Result<Spectrum<T>> {
    eig_hermitian_with(h, &Tolerances::default())
}

/// [`eig_hermitian`] with explicit tolerances.
pub fn eig_hermitian_with<T: Real>(h: &ComplexMatrix<T>, tol: &Tolerances<T>) -> Result<Spectrum<T>> {
    if !h.is_finite() {
        return Err(Error::NonFiniteEntries);
    }
    let defect = h.hermiticity_defect();
    if defect > tol.hermiticity {
        return Err(Error::NonHermitianInput {
            defect: defect.to_f64().unwrap_or(f64::NAN),
        });
    }

    let (mut energies, mut vectors) = jacobi(h);

    // Ascending sort, carrying eigenvector columns along.
    let n = energies.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| energies[a].partial_cmp(&energies[b]).unwrap());
    energies = order.iter().map(|&k| energies[k]).collect();
    let sorted = ComplexMatrix::from_fn(n, |i, j| vectors[(i, order[j])]);
    vectors = sorted;

    fix_phases(&mut vectors);

    let spectrum = Spectrum::new(energies, vectors, tol)?;
    let residual = spectrum.residual(h);
    if residual > tol.eigen_residual {
        return Err(Error::EigenConvergence {
            residual: residual.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(spectrum)
}

/// Ascending eigenvalues without the Spectrum validation layer; for callers
/// that hold an already-validated operator and only need the diagonal.
pub(crate) fn eigenvalues_only<T: Real>(h: &ComplexMatrix<T>) -> Vec<T> {
    let (mut energies, _) = jacobi(h);
    energies.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
    energies
}

/// Cyclic Jacobi sweeps on `(H + H†)/2`. Returns unsorted eigenvalues and the
/// accumulated unitary whose columns are the eigenvectors.
fn jacobi<T: Real>(h: &ComplexMatrix<T>) -> (Vec<T>, ComplexMatrix<T>) {
    let n = h.dim();
    // Symmetrize so the iteration sees an exactly Hermitian matrix.
    let mut a = ComplexMatrix::from_fn(n, |i, j| (h[(i, j)] + h[(j, i)].conj()).unscale(real(2.0)));
    let mut v = ComplexMatrix::identity(n);

    let scale = a.frobenius_norm();
    if scale == T::zero() || n < 2 {
        let diag = (0..n).map(|i| a[(i, i)].re).collect();
        return (diag, v);
    }
    let stop = scale * T::epsilon() * real(n as f64);

    const MAX_SWEEPS: usize = 64;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= stop {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q, stop);
            }
        }
    }

    let diag = (0..n).map(|i| a[(i, i)].re).collect();
    (diag, v)
}

fn off_diagonal_norm<T: Real>(a: &ComplexMatrix<T>) -> T {
    let n = a.dim();
    let mut sum = T::zero();
    for p in 0..n {
        for q in (p + 1)..n {
            sum += a[(p, q)].norm_sqr();
        }
    }
    (sum + sum).sqrt()
}

/// One complex Jacobi rotation zeroing `a[(p, q)]`.
///
/// The plane rotation is `U = [[c, -s], [s e^{-iφ}, c e^{-iφ}]]` with `φ` the
/// phase of `a[(p, q)]`; `A ← U† A U` and `V ← V U`.
fn rotate<T: Real>(a: &mut ComplexMatrix<T>, v: &mut ComplexMatrix<T>, p: usize, q: usize, stop: T) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r <= stop * real(1e-3) {
        return;
    }
    let phase = apq.unscale(r); // e^{iφ}
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;

    let tau = (app - aqq) / (r + r);
    let t = if tau == T::zero() {
        T::one()
    } else {
        tau.signum() / (tau.abs() + (T::one() + tau * tau).sqrt())
    };
    let c = T::one() / (T::one() + t * t).sqrt();
    let s = t * c;

    let e_miphi = phase.conj(); // e^{-iφ}
    let u_pp = Complex::new(c, T::zero());
    let u_pq = Complex::new(-s, T::zero());
    let u_qp = e_miphi * s;
    let u_qq = e_miphi * c;

    let n = a.dim();
    // Column transform A ← A U on columns p, q.
    for i in 0..n {
        let aip = a[(i, p)];
        let aiq = a[(i, q)];
        a[(i, p)] = aip * u_pp + aiq * u_qp;
        a[(i, q)] = aip * u_pq + aiq * u_qq;
    }
    // Row transform A ← U† A on rows p, q.
    for j in 0..n {
        let apj = a[(p, j)];
        let aqj = a[(q, j)];
        a[(p, j)] = apj * u_pp.conj() + aqj * u_qp.conj();
        a[(q, j)] = apj * u_pq.conj() + aqj * u_qq.conj();
    }
    // Clean up what the rotation zeroes analytically.
    let zero = Complex::new(T::zero(), T::zero());
    a[(p, q)] = zero;
    a[(q, p)] = zero;
    a[(p, p)] = Complex::new(a[(p, p)].re, T::zero());
    a[(q, q)] = Complex::new(a[(q, q)].re, T::zero());

    // Accumulate V ← V U.
    for i in 0..n {
        let vip = v[(i, p)];
        let viq = v[(i, q)];
        v[(i, p)] = vip * u_pp + viq * u_qp;
        v[(i, q)] = vip * u_pq + viq * u_qq;
    }
}

/// Makes the first largest-modulus component of each column real positive.
fn fix_phases<T: Real>(vectors: &mut ComplexMatrix<T>) {
    let n = vectors.dim();
    for j in 0..n {
        let mut best = 0;
        let mut best_norm = T::zero();
        for i in 0..n {
            let nn = vectors[(i, j)].norm();
            if nn > best_norm {
                best_norm = nn;
                best = i;
            }
        }
        if best_norm == T::zero() {
            continue;
        }
        let phase = vectors[(best, j)].unscale(best_norm).conj();
        for i in 0..n {
            vectors[(i, j)] *= phase;
        }
    }
}
