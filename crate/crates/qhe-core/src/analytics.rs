//! Closed-form energetics for the coupled-qubit engine.
//!
//! Everything here is an independent algebraic route to a number the cycle
//! drivers also produce from distributions; the test suite holds the two
//! routes together across dense parameter grids.

use crate::error::{Error, Result};
use crate::scalar::{real, Real};
use crate::state::OccupationDist;
use crate::tolerance::Tolerances;

/// Population threshold `χ = (e^{2βB2} - 1) / (e^{8βJ} - 1)`.
///
/// Evaluated as `e^{2βB2 - 8βJ} · expm1(-2βB2) / expm1(-8βJ)`, which keeps
/// full precision for small `β` and cannot overflow for large `β` inside the
/// strong-coupling window (where the exponent difference is negative).
pub fn chi<T: Real>(b2: T, j: T, beta: T) -> T {
    let a = real::<T>(2.0) * beta * b2;
    let b = real::<T>(8.0) * beta * j;
    (a - b).exp() * (-a).exp_m1() / (-b).exp_m1()
}

/// Back-action weight `κ = 4c0²(1 - 2c0²)` against the χ threshold.
#[derive(Clone, Copy, Debug)]
pub struct R1Condition<T> {
    pub chi: T,
    pub kappa: T,
    /// `κ > χ`: the post-measurement state realizes the R1 ordering.
    pub holds: bool,
}

pub fn r1_condition<T: Real>(b2: T, j: T, beta: T, c0: T) -> Result<R1Condition<T>> {
    let kappa = crate::measurement::back_action_weight(c0)?;
    let chi = chi(b2, j, beta);
    Ok(R1Condition {
        chi,
        kappa,
        holds: kappa > chi,
    })
}

/// Raw efficiency expression `(B2 / 4J) (1 - χ/κ)` without the R1 check.
///
/// Returns whatever the formula gives, including non-finite values at the
/// strength endpoints where `κ = 0`; callers wanting the guarded version
/// use [`eta_r1`]. `κ` is clamped at zero so rounding at `c0 = 1/√2`
/// cannot flip its sign.
pub fn eta_r1_value<T: Real>(b2: T, j: T, beta: T, c0: T) -> T {
    let c0sq = c0 * c0;
    let kappa = (real::<T>(4.0) * c0sq * (T::one() - real::<T>(2.0) * c0sq)).max(T::zero());
    b2 / (real::<T>(4.0) * j) * (T::one() - chi(b2, j, beta) / kappa)
}

/// Five-stroke efficiency in the R1 regime.
///
/// Errors with [`Error::NotR1`] when `κ < χ`; at the window boundary the
/// bracket vanishes and the efficiency is zero.
pub fn eta_r1<T: Real>(b2: T, j: T, beta: T, c0: T) -> Result<T> {
    let cond = r1_condition(b2, j, beta, c0)?;
    if cond.kappa < cond.chi {
        return Err(Error::NotR1 {
            kappa: cond.kappa.to_f64().unwrap_or(f64::NAN),
            chi: cond.chi.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(eta_r1_value(b2, j, beta, c0))
}

/// Measurement heat for z-z measurements: `8J (p3' - p3)`.
pub fn qm_zz<T: Real>(p: &OccupationDist<T>, p_pm: &OccupationDist<T>, j: T) -> T {
    real::<T>(8.0) * j * (p_pm.probs()[2] - p.probs()[2])
}

/// Five-stroke work total in the R1 ordering: `2 B2 (p3' - p2)`.
pub fn wt5_r1<T: Real>(p: &OccupationDist<T>, p_pm: &OccupationDist<T>, b2: T) -> Result<T> {
    let tie = Tolerances::<T>::default().tie;
    if !(p_pm.probs()[2] > p.probs()[1] + tie) {
        return Err(Error::WrongOrdering { expected: "R1" });
    }
    Ok(real::<T>(2.0) * b2 * (p_pm.probs()[2] - p.probs()[1]))
}

/// Five-stroke work total in the R2 ordering: `2 (4J - B2) (p2 - p1')`.
pub fn wt5_r2<T: Real>(
    p: &OccupationDist<T>,
    p_pm: &OccupationDist<T>,
    b2: T,
    j: T,
) -> Result<T> {
    let tie = Tolerances::<T>::default().tie;
    if !(p.probs()[1] > p_pm.probs()[0] + tie) {
        return Err(Error::WrongOrdering { expected: "R2" });
    }
    Ok(real::<T>(2.0) * (real::<T>(4.0) * j - b2) * (p.probs()[1] - p_pm.probs()[0]))
}

/// Closed-form energetics of the projective x-x cycle family.
#[derive(Clone, Copy, Debug)]
pub struct XxProjectiveEnergetics<T> {
    pub q_m: T,
    pub w_erg: T,
    pub w_total5: T,
    pub w_total4: T,
    pub w_total3: T,
}

/// Projective x-x measurement energetics on a thermally ordered input.
pub fn xx_projective_energetics<T: Real>(
    p: &OccupationDist<T>,
    b1: T,
    b2: T,
    j: T,
) -> XxProjectiveEnergetics<T> {
    let q = p.probs();
    let two = real::<T>(2.0);
    let half = T::one() / two;
    let q_m = two * b1 * (q[1] - q[3]) + two * j * (two * q[0] - q[1] - q[3]);
    let w_erg = -b1 * (q[0] - q[2]) * half;
    let w_total4 = two * (b1 - b2) * (q[1] - q[3]);
    let w_total3 = b2 * (q[0] - q[2]) * half;
    XxProjectiveEnergetics {
        q_m,
        w_erg,
        w_total5: w_total4 + w_total3,
        w_total4,
        w_total3,
    }
}

/// Closed-form energetics of the projective x-z cycle family.
#[derive(Clone, Copy, Debug)]
pub struct XzProjectiveEnergetics<T> {
    pub q_m: T,
    pub w_total5: T,
    pub w_total4: T,
    pub w_total3: T,
}

/// Projective x-z measurement energetics on a thermally ordered input.
pub fn xz_projective_energetics<T: Real>(
    p: &OccupationDist<T>,
    b1: T,
    b2: T,
    j: T,
) -> XzProjectiveEnergetics<T> {
    let q = p.probs();
    let two = real::<T>(2.0);
    let half = T::one() / two;
    let three = real::<T>(3.0);
    let q_m = b1 * (q[1] - q[3]) + two * j * (three * q[0] - q[1] - q[2] - q[3]);
    let w_total4 = (b1 - b2) * (q[1] - q[3]);
    let w_total3 = half * (real::<T>(4.0) * j - b2) * (q[1] - q[3]);
    XzProjectiveEnergetics {
        q_m,
        w_total5: w_total4 + w_total3,
        w_total4,
        w_total3,
    }
}

/// Middle-level population gap after a projective measurement along axes
/// with polar angles `θ_A`, `θ_B`: `(cos²θ_A + cos²θ_B)(p2 - p4) / 2`.
pub fn projective_p2p4_gap<T: Real>(p: &OccupationDist<T>, theta_a: T, theta_b: T) -> T {
    let ca = theta_a.cos();
    let cb = theta_b.cos();
    (ca * ca + cb * cb) * (p.probs()[1] - p.probs()[3]) / real::<T>(2.0)
}
