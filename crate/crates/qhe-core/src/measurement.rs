//! Generalized spin measurements on the two qubits.
//!
//! The measurement on each qubit is built from `c0 I ± c1 σ·n̂` factors; the
//! four sign combinations form a complete, Hermitian Kraus set for any
//! strength `c0 ∈ [0, 1/√2]` (with `c1 = √(1/2 - c0²)`) and any directions.
//! `c0 = 1/2` is the projective limit, `c0 = 1/√2` is no measurement at all.
//!
//! For measurements along z-z and x-x the post-measurement occupations have
//! closed forms; those are implemented directly and double as fast paths for
//! the cycle drivers. Every other direction goes through the brute-force
//! channel. The two routes are held to agree to 1e-12 by the test suite.

use crate::channel::apply_channel_with;
use crate::error::{Error, Result};
use crate::matrix::{pauli_x, pauli_y, pauli_z, ComplexMatrix};
use crate::scalar::{real, Real};
use crate::spectrum::Spectrum;
use crate::state::{occupations_with, DensityMatrix, OccupationDist};
use crate::tolerance::Tolerances;

/// A measurement axis on the Bloch sphere, `θ ∈ [0, π]`, `φ ∈ [0, 2π)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Direction<T> {
    theta: T,
    phi: T,
}

impl<T: Real> Direction<T> {
    pub fn new(theta: T, phi: T) -> Result<Self> {
        let ok = theta.is_finite()
            && phi.is_finite()
            && theta >= T::zero()
            && theta <= T::PI()
            && phi >= T::zero()
            && phi < real::<T>(2.0) * T::PI();
        if !ok {
            return Err(Error::InvalidDirection {
                theta: theta.to_f64().unwrap_or(f64::NAN),
                phi: phi.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { theta, phi })
    }

    pub fn z() -> Self {
        Self {
            theta: T::zero(),
            phi: T::zero(),
        }
    }

    pub fn x() -> Self {
        Self {
            theta: T::FRAC_PI_2(),
            phi: T::zero(),
        }
    }

    pub fn y() -> Self {
        Self {
            theta: T::FRAC_PI_2(),
            phi: T::FRAC_PI_2(),
        }
    }

    pub fn theta(&self) -> T {
        self.theta
    }

    pub fn phi(&self) -> T {
        self.phi
    }

    /// Spin operator `σ·n̂` along this axis.
    pub fn spin_operator(&self) -> ComplexMatrix<T> {
        let sin_t = self.theta.sin();
        let nx = sin_t * self.phi.cos();
        let ny = sin_t * self.phi.sin();
        let nz = self.theta.cos();
        let mut m = pauli_x::<T>().scaled(nx);
        m = &m + &pauli_y::<T>().scaled(ny);
        &m + &pauli_z::<T>().scaled(nz)
    }

    /// Within `tol` of the z axis (either pole; the Kraus set is invariant
    /// under flipping the axis).
    pub fn is_z_aligned(&self, tol: T) -> bool {
        self.theta <= tol || (T::PI() - self.theta) <= tol
    }

    /// Within `tol` of the x axis (either sense).
    pub fn is_x_aligned(&self, tol: T) -> bool {
        let two_pi = real::<T>(2.0) * T::PI();
        let equatorial = (self.theta - T::FRAC_PI_2()).abs() <= tol;
        let on_x = self.phi <= tol
            || (self.phi - T::PI()).abs() <= tol
            || (two_pi - self.phi) <= tol;
        equatorial && on_x
    }
}

/// Strength and directions of the two-qubit generalized measurement.
///
/// `c1` is always the positive root `√(1/2 - c0²)`; only the squares enter
/// the physics.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasurementSpec<T> {
    c0: T,
    c1: T,
    dir_a: Direction<T>,
    dir_b: Direction<T>,
}

impl<T: Real> MeasurementSpec<T> {
    pub fn new(c0: T, dir_a: Direction<T>, dir_b: Direction<T>) -> Result<Self> {
        let max_c0 = (T::one() / real::<T>(2.0)).sqrt();
        if !c0.is_finite() || c0 < T::zero() || c0 > max_c0 {
            return Err(Error::InvalidStrength {
                c0: c0.to_f64().unwrap_or(f64::NAN),
            });
        }
        let half = T::one() / real::<T>(2.0);
        let c1 = (half - c0 * c0).max(T::zero()).sqrt();
        Ok(Self {
            c0,
            c1,
            dir_a,
            dir_b,
        })
    }

    pub fn zz(c0: T) -> Result<Self> {
        Self::new(c0, Direction::z(), Direction::z())
    }

    pub fn xx(c0: T) -> Result<Self> {
        Self::new(c0, Direction::x(), Direction::x())
    }

    pub fn xy(c0: T) -> Result<Self> {
        Self::new(c0, Direction::x(), Direction::y())
    }

    pub fn xz(c0: T) -> Result<Self> {
        Self::new(c0, Direction::x(), Direction::z())
    }

    /// Projective (`c0 = 1/2`) measurement along arbitrary axes.
    pub fn projective(dir_a: Direction<T>, dir_b: Direction<T>) -> Result<Self> {
        Self::new(T::one() / real::<T>(2.0), dir_a, dir_b)
    }

    pub fn c0(&self) -> T {
        self.c0
    }

    pub fn c1(&self) -> T {
        self.c1
    }

    pub fn dir_a(&self) -> &Direction<T> {
        &self.dir_a
    }

    pub fn dir_b(&self) -> &Direction<T> {
        &self.dir_b
    }

    pub fn is_projective(&self, tol: T) -> bool {
        (self.c0 - T::one() / real::<T>(2.0)).abs() <= tol
    }
}

/// The four measurement operators with their generating spec.
#[derive(Clone, Debug)]
pub struct KrausSet<T> {
    operators: Vec<ComplexMatrix<T>>,
    spec: MeasurementSpec<T>,
}

impl<T: Real> KrausSet<T> {
    pub fn operators(&self) -> &[ComplexMatrix<T>] {
        &self.operators
    }

    pub fn spec(&self) -> &MeasurementSpec<T> {
        &self.spec
    }

    /// Applies the non-selective channel to a state.
    pub fn apply(&self, rho: &DensityMatrix<T>) -> Result<DensityMatrix<T>> {
        apply_channel_with(rho, &self.operators, &Tolerances::default())
    }
}

/// Builds the four operators `(c0 I ± c1 σ·n̂_A) ⊗ (c0 I ± c1 σ·n̂_B)`.
pub fn build_kraus<T: Real>(spec: &MeasurementSpec<T>) -> KrausSet<T> {
    KrausSet {
        operators: kraus_operators_raw(spec.c0, spec.c1, &spec.dir_a, &spec.dir_b),
        spec: *spec,
    }
}

/// Raw operator construction without strength validation; used to probe
/// incomplete sets in tests.
pub fn kraus_operators_raw<T: Real>(
    c0: T,
    c1: T,
    dir_a: &Direction<T>,
    dir_b: &Direction<T>,
) -> Vec<ComplexMatrix<T>> {
    let id = ComplexMatrix::identity(2);
    let sa = dir_a.spin_operator();
    let sb = dir_b.spin_operator();
    let factor = |sign: T, s: &ComplexMatrix<T>| -> ComplexMatrix<T> {
        &id.scaled(c0) + &s.scaled(sign * c1)
    };
    let mut ops = Vec::with_capacity(4);
    for &sign_a in &[T::one(), -T::one()] {
        for &sign_b in &[T::one(), -T::one()] {
            ops.push(factor(sign_a, &sa).kron(&factor(sign_b, &sb)));
        }
    }
    ops
}

/// Post-measurement occupations for z-z measurements.
///
/// Only the outer pair of levels mixes: with `κ = 4c0²(1 - 2c0²)`,
/// `p1 → p1 - κ(p1 - p3)`, `p3 → p3 + κ(p1 - p3)`, `p2` and `p4` unchanged.
pub fn zz_post_probs<T: Real>(p: &OccupationDist<T>, c0: T) -> Result<OccupationDist<T>> {
    zz_post_probs_with(p, c0, &Tolerances::default())
}

pub fn zz_post_probs_with<T: Real>(
    p: &OccupationDist<T>,
    c0: T,
    tol: &Tolerances<T>,
) -> Result<OccupationDist<T>> {
    let q = four_level(p)?;
    let kappa = back_action_weight(c0)?;
    let transfer = kappa * (q[0] - q[2]);
    OccupationDist::with_tolerances(vec![q[0] - transfer, q[1], q[2] + transfer, q[3]], tol)
}

/// Post-measurement occupations for x-x measurements.
pub fn xx_post_probs<T: Real>(p: &OccupationDist<T>, c0: T) -> Result<OccupationDist<T>> {
    xx_post_probs_with(p, c0, &Tolerances::default())
}

pub fn xx_post_probs_with<T: Real>(
    p: &OccupationDist<T>,
    c0: T,
    tol: &Tolerances<T>,
) -> Result<OccupationDist<T>> {
    let q = four_level(p)?;
    check_strength(c0)?;
    let half = T::one() / real::<T>(2.0);
    let c0sq = c0 * c0;
    let c1sq = half - c0sq;
    let four = real::<T>(4.0);
    let a = four * c0sq * c0sq;
    let b = four * c1sq * c1sq;
    let cross = four * c0sq * c1sq;
    let outer = cross * (q[1] + q[3]);
    let inner = cross * (q[0] + q[2]);
    OccupationDist::with_tolerances(
        vec![
            a * q[0] + b * q[0] + outer,
            a * q[1] + b * q[3] + inner,
            a * q[2] + b * q[2] + outer,
            a * q[3] + b * q[1] + inner,
        ],
        tol,
    )
}

/// Post-measurement occupations for projective measurements along arbitrary
/// axes, computed through the brute-force channel in the given eigenbasis.
pub fn projective_post_probs<T: Real>(
    p: &OccupationDist<T>,
    dir_a: &Direction<T>,
    dir_b: &Direction<T>,
    basis: &Spectrum<T>,
) -> Result<OccupationDist<T>> {
    let spec = MeasurementSpec::projective(*dir_a, *dir_b)?;
    let post = apply_to_occupations(p, &spec, basis, &Tolerances::default())?;
    Ok(post.probs)
}

/// Projective x-z measurement on a thermally ordered distribution.
///
/// The output pins the outer-pair levels to 1/4 and orders the rest as
/// `p2' > 1/4 > p4'`.
pub fn xz_projective_post_probs<T: Real>(
    p: &OccupationDist<T>,
    basis: &Spectrum<T>,
) -> Result<OccupationDist<T>> {
    projective_post_probs(p, &Direction::x(), &Direction::z(), basis)
}

/// How the post-measurement distribution was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeasurementRoute {
    ClosedFormZz,
    ClosedFormXx,
    BruteForce,
}

/// Post-measurement occupations plus the coherence the channel left behind.
#[derive(Clone, Debug)]
pub struct PostMeasurement<T> {
    pub probs: OccupationDist<T>,
    /// Largest off-diagonal modulus of the post-measurement state in the
    /// measurement eigenbasis. z-z channels leave none; x-x channels couple
    /// the `|00⟩`/`|11⟩` levels.
    pub coherence: T,
    pub route: MeasurementRoute,
}

/// Dispatches a measurement to its closed form when the directions match the
/// z-z or x-x axes exactly (within the axis-snap tolerance), and to the
/// brute-force channel otherwise.
pub fn post_measurement<T: Real>(
    p: &OccupationDist<T>,
    spec: &MeasurementSpec<T>,
    basis: &Spectrum<T>,
) -> Result<PostMeasurement<T>> {
    post_measurement_with(p, spec, basis, &Tolerances::default())
}

pub fn post_measurement_with<T: Real>(
    p: &OccupationDist<T>,
    spec: &MeasurementSpec<T>,
    basis: &Spectrum<T>,
    tol: &Tolerances<T>,
) -> Result<PostMeasurement<T>> {
    let snap = tol.axis_snap;
    if p.len() == 4 && basis.dim() == 4 {
        if spec.dir_a.is_z_aligned(snap) && spec.dir_b.is_z_aligned(snap) {
            return Ok(PostMeasurement {
                probs: zz_post_probs_with(p, spec.c0, tol)?,
                coherence: T::zero(),
                route: MeasurementRoute::ClosedFormZz,
            });
        }
        if spec.dir_a.is_x_aligned(snap) && spec.dir_b.is_x_aligned(snap) {
            let probs = xx_post_probs_with(p, spec.c0, tol)?;
            // Only the |00>/|11> pair picks up an off-diagonal element; its
            // magnitude is 4 c0^2 c1^2 |p1 - p3| (checked against the brute
            // force in tests).
            let half = T::one() / real::<T>(2.0);
            let c0sq = spec.c0 * spec.c0;
            let c1sq = (half - c0sq).max(T::zero());
            let coherence = real::<T>(4.0) * c0sq * c1sq * (p.probs()[0] - p.probs()[2]).abs();
            return Ok(PostMeasurement {
                probs,
                coherence,
                route: MeasurementRoute::ClosedFormXx,
            });
        }
    }
    apply_to_occupations(p, spec, basis, tol)
}

/// Brute-force route: assemble the state, run the channel, read occupations.
fn apply_to_occupations<T: Real>(
    p: &OccupationDist<T>,
    spec: &MeasurementSpec<T>,
    basis: &Spectrum<T>,
    tol: &Tolerances<T>,
) -> Result<PostMeasurement<T>> {
    let rho = DensityMatrix::from_occupations_with(p, basis, tol)?;
    let kraus = build_kraus(spec);
    let out = apply_channel_with(&rho, kraus.operators(), tol)?;
    let probs = occupations_with(&out, basis, tol)?;
    let coherence = out.energy_basis_coherence(basis);
    Ok(PostMeasurement {
        probs,
        coherence,
        route: MeasurementRoute::BruteForce,
    })
}

fn check_strength<T: Real>(c0: T) -> Result<()> {
    let max_c0 = (T::one() / real::<T>(2.0)).sqrt();
    if !c0.is_finite() || c0 < T::zero() || c0 > max_c0 {
        return Err(Error::InvalidStrength {
            c0: c0.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(())
}

/// Back-action weight `κ = 4 c0² (1 - 2 c0²)`; zero at both strength
/// endpoints, maximal (1/2) at the projective point. Clamped at zero so
/// rounding at `c0 = 1/√2` cannot make it negative.
pub fn back_action_weight<T: Real>(c0: T) -> Result<T> {
    check_strength(c0)?;
    let c0sq = c0 * c0;
    Ok((real::<T>(4.0) * c0sq * (T::one() - real::<T>(2.0) * c0sq)).max(T::zero()))
}

fn four_level<T: Real>(p: &OccupationDist<T>) -> Result<[T; 4]> {
    if p.len() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: p.len(),
        });
    }
    Ok([p.probs()[0], p.probs()[1], p.probs()[2], p.probs()[3]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::validate_kraus;
    use crate::model::{analytic_spectrum, level_energies};

    fn thermal(b2: f64, j: f64, beta: f64) -> OccupationDist<f64> {
        OccupationDist::gibbs(&level_energies(b2, j), beta).unwrap()
    }

    #[test]
    fn completeness_for_any_spec() {
        let dirs = [
            Direction::z(),
            Direction::x(),
            Direction::y(),
            Direction::new(0.7, 1.9).unwrap(),
        ];
        for &da in &dirs {
            for &db in &dirs {
                for &c0 in &[0.0, 0.2, 0.5, std::f64::consts::FRAC_1_SQRT_2] {
                    let spec = MeasurementSpec::new(c0, da, db).unwrap();
                    let kraus = build_kraus(&spec);
                    assert!(validate_kraus(kraus.operators()));
                    for op in kraus.operators() {
                        assert!(op.hermiticity_defect() < 1e-14);
                    }
                }
            }
        }
    }

    #[test]
    fn deliberately_unbalanced_strengths_fail_completeness() {
        // 2 c0^2 + 2 c1^2 = 1.44 here.
        let ops = kraus_operators_raw(0.6, 0.6, &Direction::z(), &Direction::z());
        assert!(!validate_kraus(&ops));
        let ops = kraus_operators_raw(0.3, (0.5f64 - 0.09).sqrt(), &Direction::z(), &Direction::x());
        assert!(validate_kraus(&ops));
    }

    #[test]
    fn strength_bounds() {
        assert!(MeasurementSpec::zz(-0.1).is_err());
        assert!(MeasurementSpec::zz(0.8).is_err());
        let weakest = MeasurementSpec::zz(std::f64::consts::FRAC_1_SQRT_2).unwrap();
        assert!(weakest.c1() < 1e-8);
    }

    #[test]
    fn projective_factors_are_projectors() {
        let spec = MeasurementSpec::zz(0.5).unwrap();
        let kraus = build_kraus(&spec);
        for op in kraus.operators() {
            let sq = op * op;
            assert!(sq.max_abs_diff(op) < 1e-14, "projective operators are idempotent");
        }
    }

    #[test]
    fn no_measurement_limit_is_identity_scaled() {
        let spec = MeasurementSpec::zz(std::f64::consts::FRAC_1_SQRT_2).unwrap();
        let kraus = build_kraus(&spec);
        let half_id = ComplexMatrix::identity(4).scaled(0.5);
        for op in kraus.operators() {
            assert!(op.max_abs_diff(&half_id) < 1e-8);
        }
    }

    #[test]
    fn zz_closed_form_limits() {
        let p = thermal(3.0, 1.0, 1.0);
        let untouched = zz_post_probs(&p, 0.0).unwrap();
        assert_eq!(untouched.probs(), p.probs());

        let strong = zz_post_probs(&p, 0.5).unwrap();
        let mixed = (p.probs()[0] + p.probs()[2]) / 2.0;
        assert!((strong.probs()[0] - mixed).abs() < 1e-15);
        assert!((strong.probs()[2] - mixed).abs() < 1e-15);
    }

    #[test]
    fn zz_closed_form_matches_channel() {
        let p = thermal(3.0, 1.0, 1.0);
        let basis = analytic_spectrum::<f64>(3.0, 1.0).unwrap();
        let spec = MeasurementSpec::zz(0.3).unwrap();
        let closed = zz_post_probs(&p, 0.3).unwrap();
        let brute = apply_to_occupations(&p, &spec, &basis, &Tolerances::default()).unwrap();
        for (a, b) in closed.probs().iter().zip(brute.probs.probs()) {
            assert!((a - b).abs() < 1e-12);
        }
        assert!(brute.coherence < 1e-13, "z-z leaves the state diagonal");
    }

    #[test]
    fn xx_closed_form_limits_and_channel() {
        let p = thermal(3.0, 1.0, 1.0);
        let basis = analytic_spectrum::<f64>(3.0, 1.0).unwrap();

        let untouched = xx_post_probs(&p, std::f64::consts::FRAC_1_SQRT_2).unwrap();
        for (a, b) in untouched.probs().iter().zip(p.probs()) {
            assert!((a - b).abs() < 1e-14);
        }

        let proj = xx_post_probs(&p, 0.5).unwrap();
        let gap = (p.probs()[0] - p.probs()[2]) / 4.0;
        assert!((proj.probs()[0] - (0.25 + gap)).abs() < 1e-14);
        assert!((proj.probs()[1] - 0.25).abs() < 1e-14);
        assert!((proj.probs()[2] - (0.25 - gap)).abs() < 1e-14);
        assert!((proj.probs()[3] - 0.25).abs() < 1e-14);

        let spec = MeasurementSpec::xx(0.3).unwrap();
        let closed = xx_post_probs(&p, 0.3).unwrap();
        let brute = apply_to_occupations(&p, &spec, &basis, &Tolerances::default()).unwrap();
        for (a, b) in closed.probs().iter().zip(brute.probs.probs()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn xx_coherence_estimate_matches_brute_force() {
        let p = thermal(3.0, 1.0, 1.0);
        let basis = analytic_spectrum::<f64>(3.0, 1.0).unwrap();
        for &c0 in &[0.1, 0.3, 0.5, 0.65] {
            let spec = MeasurementSpec::xx(c0).unwrap();
            let fast = post_measurement(&p, &spec, &basis).unwrap();
            assert_eq!(fast.route, MeasurementRoute::ClosedFormXx);
            let brute = apply_to_occupations(&p, &spec, &basis, &Tolerances::default()).unwrap();
            assert!(
                (fast.coherence - brute.coherence).abs() < 1e-12,
                "c0 = {c0}: {} vs {}",
                fast.coherence,
                brute.coherence
            );
        }
    }

    #[test]
    fn projective_zz_preserves_middle_levels() {
        let p = thermal(3.0, 1.0, 1.0);
        let basis = analytic_spectrum::<f64>(3.0, 1.0).unwrap();
        let post = projective_post_probs(&p, &Direction::z(), &Direction::z(), &basis).unwrap();
        assert!((post.probs()[1] - p.probs()[1]).abs() < 1e-13);
        assert!((post.probs()[3] - p.probs()[3]).abs() < 1e-13);
    }

    #[test]
    fn equatorial_projective_equalizes_middle_levels() {
        let p = thermal(3.0, 1.0, 1.0);
        let basis = analytic_spectrum::<f64>(3.0, 1.0).unwrap();
        for &(phi_a, phi_b) in &[(0.0, 1.0), (2.2, 4.4), (5.9, 0.3)] {
            let da = Direction::new(std::f64::consts::FRAC_PI_2, phi_a).unwrap();
            let db = Direction::new(std::f64::consts::FRAC_PI_2, phi_b).unwrap();
            let post = projective_post_probs(&p, &da, &db, &basis).unwrap();
            assert!(
                (post.probs()[1] - post.probs()[3]).abs() < 1e-13,
                "phi_a = {phi_a}, phi_b = {phi_b}"
            );
        }
    }

    #[test]
    fn xy_projective_is_uniform() {
        let p = thermal(3.0, 1.0, 1.0);
        let basis = analytic_spectrum::<f64>(3.0, 1.0).unwrap();
        let post = projective_post_probs(&p, &Direction::x(), &Direction::y(), &basis).unwrap();
        for &x in post.probs() {
            assert!((x - 0.25).abs() < 1e-13);
        }
    }

    #[test]
    fn xz_projective_structure() {
        let p = thermal(3.0, 1.0, 1.0);
        let basis = analytic_spectrum::<f64>(3.0, 1.0).unwrap();
        let post = xz_projective_post_probs(&p, &basis).unwrap();
        assert!((post.probs()[0] - 0.25).abs() < 1e-13);
        assert!((post.probs()[2] - 0.25).abs() < 1e-13);
        assert!(post.probs()[1] > 0.25);
        assert!(post.probs()[3] < 0.25);

        let uniform = OccupationDist::uniform(4);
        let fixed = xz_projective_post_probs(&uniform, &basis).unwrap();
        for &x in fixed.probs() {
            assert!((x - 0.25).abs() < 1e-13);
        }
    }

    #[test]
    fn dispatcher_picks_routes() {
        let p = thermal(3.0, 1.0, 1.0);
        let basis = analytic_spectrum::<f64>(3.0, 1.0).unwrap();
        let zz = post_measurement(&p, &MeasurementSpec::zz(0.4).unwrap(), &basis).unwrap();
        assert_eq!(zz.route, MeasurementRoute::ClosedFormZz);
        let xx = post_measurement(&p, &MeasurementSpec::xx(0.4).unwrap(), &basis).unwrap();
        assert_eq!(xx.route, MeasurementRoute::ClosedFormXx);
        let xz = post_measurement(&p, &MeasurementSpec::xz(0.4).unwrap(), &basis).unwrap();
        assert_eq!(xz.route, MeasurementRoute::BruteForce);
        // Flipped axes still use the fast path: the operator set is invariant.
        let spec = MeasurementSpec::new(
            0.4,
            Direction::new(std::f64::consts::PI, 0.0).unwrap(),
            Direction::z(),
        )
        .unwrap();
        let flipped = post_measurement(&p, &spec, &basis).unwrap();
        assert_eq!(flipped.route, MeasurementRoute::ClosedFormZz);
        // Flipping an axis permutes the four operators, so the channel and
        // the resulting distribution are identical.
        let brute = apply_to_occupations(&p, &spec, &basis, &Tolerances::default()).unwrap();
        for ((a, b), c) in flipped
            .probs
            .probs()
            .iter()
            .zip(zz.probs.probs())
            .zip(brute.probs.probs())
        {
            assert!((a - b).abs() < 1e-15);
            assert!((a - c).abs() < 1e-12);
        }
    }

    #[test]
    fn direction_validation() {
        assert!(Direction::new(-0.1, 0.0).is_err());
        assert!(Direction::new(0.0, 6.4).is_err());
        assert!(Direction::new(f64::NAN, 0.0).is_err());
        assert!(Direction::new(3.1, 6.2).is_ok());
    }
}
