//! Property-based invariants tying the closed forms to the brute-force
//! density-matrix route.

use num_complex::Complex;
use proptest::prelude::*;

use qhe_core::analytics;
use qhe_core::channel::{apply_channel, validate_kraus};
use qhe_core::cycle::{run_five_stroke, verify_work_identity};
use qhe_core::ergotropy::{ergotropy_extract, is_active, r1_c0_interval, OrderingTag};
use qhe_core::matrix::ComplexMatrix;
use qhe_core::measurement::{
    build_kraus, projective_post_probs, xx_post_probs, zz_post_probs, Direction, MeasurementSpec,
};
use qhe_core::model::{analytic_spectrum, hamiltonian, level_energies, EngineParams};
use qhe_core::spectrum::eig_hermitian;
use qhe_core::state::{gibbs_state, mean_energy, occupations, DensityMatrix, OccupationDist};

const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

// =============================================================================
// Strategies
// =============================================================================

/// Four positive weights normalized to a distribution.
fn prob4() -> impl Strategy<Value = Vec<f64>> {
    [1e-4..1.0f64, 1e-4..1.0f64, 1e-4..1.0f64, 1e-4..1.0f64].prop_map(|w| {
        let sum: f64 = w.iter().sum();
        w.iter().map(|x| x / sum).collect()
    })
}

fn strength() -> impl Strategy<Value = f64> {
    0.0..=FRAC_1_SQRT_2
}

/// In-regime `(B1, B2, J, beta)` with `0 < B2 <= B1 < 4J`.
fn engine_params() -> impl Strategy<Value = EngineParams<f64>> {
    (0.3..2.5f64, 0.02..0.98f64, 0.0..1.0f64, 0.05..4.0f64).prop_map(|(j, f2, f1, beta)| {
        let b2 = f2 * 4.0 * j;
        let b1 = b2 + f1 * (4.0 * j - b2) * 0.999;
        EngineParams::new(b1, b2, j, beta).expect("in-regime by construction")
    })
}

fn direction() -> impl Strategy<Value = Direction<f64>> {
    (0.0..=std::f64::consts::PI, 0.0..std::f64::consts::TAU)
        .prop_map(|(theta, phi)| Direction::new(theta, phi).unwrap())
}

fn measurement_spec() -> impl Strategy<Value = MeasurementSpec<f64>> {
    (strength(), direction(), direction())
        .prop_map(|(c0, da, db)| MeasurementSpec::new(c0, da, db).unwrap())
}

/// Random Hermitian matrix of dimension 2..=8.
fn hermitian() -> impl Strategy<Value = ComplexMatrix<f64>> {
    (2usize..=8)
        .prop_flat_map(|d| {
            (
                Just(d),
                proptest::collection::vec((-1.0..1.0f64, -1.0..1.0f64), d * d),
            )
        })
        .prop_map(|(d, entries)| {
            let raw = ComplexMatrix::from_data(
                d,
                entries.into_iter().map(|(re, im)| Complex::new(re, im)).collect(),
            )
            .unwrap();
            ComplexMatrix::from_fn(d, |i, j| (raw[(i, j)] + raw[(j, i)].conj()) / 2.0)
        })
}

/// Random density matrix `A A† / tr(A A†)` of dimension 4.
fn density4() -> impl Strategy<Value = DensityMatrix<f64>> {
    proptest::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 16).prop_map(|entries| {
        let a = ComplexMatrix::from_data(
            4,
            entries.into_iter().map(|(re, im)| Complex::new(re, im)).collect(),
        )
        .unwrap();
        let aa = &a * &a.adjoint();
        let tr = aa.trace().re;
        DensityMatrix::new(aa.scaled(1.0 / tr)).unwrap()
    })
}

fn thermal(b2: f64, j: f64, beta: f64) -> OccupationDist<f64> {
    OccupationDist::gibbs(&level_energies(b2, j), beta).unwrap()
}

/// All permutations of `0..4`.
fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    if a != b && a != c && a != d && b != c && b != d && c != d {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

// =============================================================================
// Channel and state invariants
// =============================================================================

proptest! {
    /// Any measurement spec yields a complete Kraus set whose channel
    /// preserves the trace and positivity of any state.
    #[test]
    fn prop_channel_preserves_trace_and_positivity(
        spec in measurement_spec(),
        rho in density4(),
    ) {
        let kraus = build_kraus(&spec);
        prop_assert!(validate_kraus(kraus.operators()));
        let out = apply_channel(&rho, kraus.operators()).unwrap();
        let trace = out.matrix().trace();
        prop_assert!((trace.re - 1.0).abs() < 1e-12);
        prop_assert!(trace.im.abs() < 1e-12);
        // Positivity within the validated floor.
        let min = out.eigenvalues()[0];
        prop_assert!(min >= -1e-10);
    }

    /// Thermal occupations reproduce e^{-beta E}/Z for random Hermitian H.
    #[test]
    fn prop_gibbs_consistency(h in hermitian(), beta in 0.0..6.0f64) {
        let (rho, p) = gibbs_state(&h, beta).unwrap();
        let spectrum = eig_hermitian(&h).unwrap();
        let e0 = spectrum.energies()[0];
        let weights: Vec<f64> = spectrum
            .energies()
            .iter()
            .map(|e| (-beta * (e - e0)).exp())
            .collect();
        let z: f64 = weights.iter().sum();
        for (a, w) in p.probs().iter().zip(weights.iter()) {
            prop_assert!((a - w / z).abs() < 1e-12);
        }
        let q = occupations(&rho, &spectrum).unwrap();
        for (a, b) in q.probs().iter().zip(p.probs()) {
            prop_assert!((a - b).abs() < 1e-12);
        }
    }

    /// Mean energy of a basis-diagonal state equals the weighted level sum.
    #[test]
    fn prop_mean_energy_eigen_expansion(p in prob4(), params in engine_params()) {
        let spectrum = analytic_spectrum(params.b2(), params.j()).unwrap();
        let dist = OccupationDist::new(p).unwrap();
        let rho = DensityMatrix::from_occupations(&dist, &spectrum).unwrap();
        let h = hamiltonian(params.b2(), params.j());
        let direct = mean_energy(&rho, &h).unwrap();
        let expanded: f64 = spectrum
            .energies()
            .iter()
            .zip(dist.probs())
            .map(|(e, p)| e * p)
            .sum();
        prop_assert!((direct - expanded).abs() < 1e-12);
    }
}

// =============================================================================
// Closed-form vs brute-force equivalence
// =============================================================================

proptest! {
    /// z-z closed form equals the brute-force channel on arbitrary valid
    /// distributions, and the outer-pair gap contracts by (4c0^2 - 1)^2.
    #[test]
    fn prop_zz_equivalence(p in prob4(), c0 in strength(), params in engine_params()) {
        let dist = OccupationDist::new(p).unwrap();
        let spectrum = analytic_spectrum(params.b1(), params.j()).unwrap();
        let closed = zz_post_probs(&dist, c0).unwrap();

        let rho = DensityMatrix::from_occupations(&dist, &spectrum).unwrap();
        let kraus = build_kraus(&MeasurementSpec::zz(c0).unwrap());
        let out = apply_channel(&rho, kraus.operators()).unwrap();
        let brute = occupations(&out, &spectrum).unwrap();
        for (a, b) in closed.probs().iter().zip(brute.probs()) {
            prop_assert!((a - b).abs() < 1e-12);
        }

        let contraction = (4.0 * c0 * c0 - 1.0).powi(2);
        let gap_in = dist.probs()[0] - dist.probs()[2];
        let gap_out = closed.probs()[0] - closed.probs()[2];
        prop_assert!((gap_out - contraction * gap_in).abs() < 1e-12);
        prop_assert!(gap_out * gap_in >= -1e-15, "gap never flips sign");

        let sum: f64 = closed.probs().iter().sum();
        prop_assert!((sum - 1.0).abs() < 1e-12);
    }

    /// x-x closed form equals the brute-force channel; ordering inequalities
    /// follow the strength.
    #[test]
    fn prop_xx_equivalence(p in prob4(), c0 in strength(), params in engine_params()) {
        let dist = OccupationDist::new(p).unwrap();
        let spectrum = analytic_spectrum(params.b1(), params.j()).unwrap();
        let closed = xx_post_probs(&dist, c0).unwrap();

        let rho = DensityMatrix::from_occupations(&dist, &spectrum).unwrap();
        let kraus = build_kraus(&MeasurementSpec::xx(c0).unwrap());
        let out = apply_channel(&rho, kraus.operators()).unwrap();
        let brute = occupations(&out, &spectrum).unwrap();
        for (a, b) in closed.probs().iter().zip(brute.probs()) {
            prop_assert!((a - b).abs() < 1e-12);
        }
    }

    /// For thermally ordered input: p1' > p3' always; the middle pair order
    /// flips with the strength at the projective point.
    #[test]
    fn prop_xx_ordering(params in engine_params(), c0 in strength()) {
        let p = thermal(params.b2(), params.j(), params.beta());
        let post = xx_post_probs(&p, c0).unwrap();
        prop_assert!(post.probs()[0] > post.probs()[2] - 1e-15);
        let mid_gap = post.probs()[1] - post.probs()[3];
        if c0 < 0.5 - 1e-9 {
            prop_assert!(mid_gap <= 1e-15);
        } else if c0 > 0.5 + 1e-9 {
            prop_assert!(mid_gap >= -1e-15);
        }
    }

    /// Projective middle-level gap identity for arbitrary axes.
    #[test]
    fn prop_projective_gap_identity(
        p in prob4(),
        da in direction(),
        db in direction(),
        params in engine_params(),
    ) {
        let dist = OccupationDist::new(p).unwrap();
        let spectrum = analytic_spectrum(params.b1(), params.j()).unwrap();
        let post = projective_post_probs(&dist, &da, &db, &spectrum).unwrap();
        let gap = post.probs()[1] - post.probs()[3];
        let formula = analytics::projective_p2p4_gap(&dist, da.theta(), db.theta());
        prop_assert!((gap - formula).abs() < 1e-12);
    }
}

// =============================================================================
// Ergotropy invariants
// =============================================================================

proptest! {
    /// Signed ergotropy is non-positive, zero exactly on passive input, and
    /// the passive output is a permutation of the input ordered against the
    /// energies.
    #[test]
    fn prop_ergotropy_structure(p in prob4(), params in engine_params()) {
        let spectrum = analytic_spectrum(params.b1(), params.j()).unwrap();
        let dist = OccupationDist::new(p).unwrap();
        let ext = ergotropy_extract(&dist, &spectrum).unwrap();

        prop_assert!(ext.w_erg <= 0.0);
        let active = is_active(&dist, &spectrum).unwrap();
        prop_assert_eq!(ext.w_erg == 0.0, !active);

        // Multiset equality via the permutation itself.
        let mut seen: Vec<f64> = ext.ordering.permutation.iter().map(|&k| dist.probs()[k]).collect();
        for (a, b) in seen.iter().zip(ext.passive.probs()) {
            prop_assert_eq!(a, b);
        }
        seen.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut orig = dist.probs().to_vec();
        orig.sort_by(|a, b| a.partial_cmp(b).unwrap());
        prop_assert_eq!(seen, orig);

        // Passivity: non-increasing populations against ascending energies.
        for w in ext.passive.probs().windows(2) {
            prop_assert!(w[0] >= w[1] - 1e-15);
        }
    }

    /// The permutation route attains the brute-force maximum over all 4!
    /// population rearrangements, exactly.
    #[test]
    fn prop_ergotropy_minimality(p in prob4(), params in engine_params()) {
        let spectrum = analytic_spectrum(params.b1(), params.j()).unwrap();
        let dist = OccupationDist::new(p).unwrap();
        let ext = ergotropy_extract(&dist, &spectrum).unwrap();

        let energies = spectrum.energies();
        let mut best = f64::NEG_INFINITY;
        for perm in permutations4() {
            let mut extracted = 0.0;
            for n in 0..4 {
                extracted += energies[n] * (dist.probs()[n] - dist.probs()[perm[n]]);
            }
            best = best.max(extracted);
        }
        prop_assert_eq!(-ext.w_erg, best);
    }

    /// R1 classification matches the closed-form strength window.
    #[test]
    fn prop_r1_window_matches_classification(
        params in engine_params(),
        c0 in strength(),
    ) {
        let p = thermal(params.b2(), params.j(), params.beta());
        let post = zz_post_probs(&p, c0).unwrap();
        let cls = qhe_core::ergotropy::classify_zz(&post, &p).unwrap();
        let window = r1_c0_interval(params.b2(), params.j(), params.beta());
        let in_window = matches!(window, Some((lo, hi)) if c0 > lo + 1e-9 && c0 < hi - 1e-9);
        let outside = match window {
            Some((lo, hi)) => c0 < lo - 1e-9 || c0 > hi + 1e-9,
            None => true,
        };
        if in_window {
            prop_assert_eq!(cls.tag, OrderingTag::R1);
        } else if outside {
            prop_assert_ne!(cls.tag, OrderingTag::R1);
        }
    }
}

// =============================================================================
// Cycle invariants
// =============================================================================

proptest! {
    /// Energy conservation and the five = four + three identity, for
    /// arbitrary directions and strengths.
    #[test]
    fn prop_cycle_conservation_and_identity(
        params in engine_params(),
        spec in measurement_spec(),
    ) {
        let five = run_five_stroke(&params, &spec).unwrap();
        prop_assert!(five.energy_residual() < 1e-10);
        prop_assert!((five.w_total + five.w1 + five.w2 + five.w_erg).abs() < 1e-10);
        prop_assert!(five.w_erg <= 0.0);

        let id = verify_work_identity(&params, &spec).unwrap();
        prop_assert!(id.residual < 1e-9, "residual {}", id.residual);
    }

    /// z-z stroke signs: W1 < 0 for B1 > B2; Q_M > 0 away from the strength
    /// endpoints; W2 > 0 in the R1 ordering; eta independent of B1.
    #[test]
    fn prop_zz_sign_structure(params in engine_params(), c0 in 0.05..0.65f64) {
        let spec = MeasurementSpec::zz(c0).unwrap();
        let ledger = run_five_stroke(&params, &spec).unwrap();
        if params.b1() > params.b2() + 1e-12 {
            prop_assert!(ledger.w1 < 0.0);
        }
        prop_assert!(ledger.q_m > 0.0);
        if ledger.ordering.tag == OrderingTag::R1 {
            if params.b1() > params.b2() + 1e-12 {
                prop_assert!(ledger.w2 > 0.0);
            }
            prop_assert!(ledger.q_res < 0.0);
            prop_assert!(ledger.w_total > 0.0);
        }
    }
}

// =============================================================================
// Grid assertions (deterministic)
// =============================================================================

/// Measurement back-action never lowers the spectral entropy of the state:
/// checked for the z-z family over a strength-temperature grid.
#[test]
fn zz_channel_never_decreases_entropy() {
    let spectrum = analytic_spectrum(3.0, 1.0).unwrap();
    for beta_step in 1..=8 {
        let beta = 0.5 * beta_step as f64;
        let p = thermal(3.0, 1.0, beta);
        let rho_in = DensityMatrix::from_occupations(&p, &spectrum).unwrap();
        let s_in = rho_in.von_neumann_entropy();
        for c0_step in 0..=20 {
            let c0 = FRAC_1_SQRT_2 * c0_step as f64 / 20.0;
            let kraus = build_kraus(&MeasurementSpec::zz(c0).unwrap());
            let rho_out = apply_channel(&rho_in, kraus.operators()).unwrap();
            let s_out = rho_out.von_neumann_entropy();
            assert!(
                s_out >= s_in - 1e-12,
                "entropy dropped at beta = {beta}, c0 = {c0}: {s_in} -> {s_out}"
            );
            let shannon = zz_post_probs(&p, c0).unwrap().shannon_entropy();
            assert!((shannon - s_out).abs() < 1e-10, "diagonal state: Shannon = von Neumann");
        }
    }
}

/// Projective x-x and x-z closed-form energetics match the cycle drivers on
/// an in-regime parameter grid.
#[test]
fn projective_energetics_match_ledgers_on_grid() {
    use qhe_core::cycle::{run_four_stroke, run_three_stroke};
    let mut points = 0u32;
    for jj in 1..=4 {
        let j = 0.5 * jj as f64;
        for ib2 in 1..=5 {
            let b2 = 4.0 * j * ib2 as f64 / 6.5;
            for f1 in [0.0, 0.4, 0.9] {
                let b1 = b2 + f1 * (4.0 * j - b2) * 0.99;
                for beta in [0.5, 1.0, 2.5] {
                    let params = EngineParams::new(b1, b2, j, beta).unwrap();
                    let p = thermal(b2, j, beta);

                    let xx = analytics::xx_projective_energetics(&p, b1, b2, j);
                    let spec = MeasurementSpec::xx(0.5).unwrap();
                    let five = run_five_stroke(&params, &spec).unwrap();
                    let four = run_four_stroke(&params, &spec).unwrap();
                    let three = run_three_stroke(&params, &spec).unwrap();
                    assert!((five.q_m - xx.q_m).abs() < 1e-10);
                    assert!((five.w_erg - xx.w_erg).abs() < 1e-10);
                    assert!((five.w_total - xx.w_total5).abs() < 1e-10);
                    assert!((four.w_total - xx.w_total4).abs() < 1e-10);
                    assert!((three.w_total - xx.w_total3).abs() < 1e-10);

                    let xz = analytics::xz_projective_energetics(&p, b1, b2, j);
                    let spec = MeasurementSpec::xz(0.5).unwrap();
                    let five = run_five_stroke(&params, &spec).unwrap();
                    let four = run_four_stroke(&params, &spec).unwrap();
                    let three = run_three_stroke(&params, &spec).unwrap();
                    assert!((five.q_m - xz.q_m).abs() < 1e-10);
                    assert!((five.w_total - xz.w_total5).abs() < 1e-10);
                    assert!((four.w_total - xz.w_total4).abs() < 1e-10);
                    assert!((three.w_total - xz.w_total3).abs() < 1e-10);
                    points += 1;
                }
            }
        }
    }
    assert!(points > 150);
}

proptest! {
    /// The eigensolver reconstructs random Hermitian matrices: residual and
    /// orthonormality are validated inside `eig_hermitian`, so returning
    /// `Ok` with ascending energies is the assertion.
    #[test]
    fn prop_eigensolver_reconstructs(h in hermitian()) {
        let s = eig_hermitian(&h).unwrap();
        prop_assert!(s.residual(&h) < 1e-12);
        for w in s.energies().windows(2) {
            prop_assert!(w[0] <= w[1]);
        }
        let tr: f64 = s.energies().iter().sum();
        prop_assert!((tr - h.trace().re).abs() < 1e-11);
    }
}

/// Exactly degenerate spectra: `H = A ⊗ I` doubles every level; the solver
/// must keep the doubled eigenspaces orthonormal and group them.
#[test]
fn eigensolver_handles_degenerate_spectra() {
    let mut seed = 0x243f6a8885a308d3u64;
    let mut next = move || {
        seed ^= seed << 13;
        seed ^= seed >> 7;
        seed ^= seed << 17;
        (seed >> 11) as f64 / (1u64 << 53) as f64 - 0.5
    };
    for trial in 0..20 {
        let d = 3 + trial % 2; // 6- and 8-dimensional doubled spectra
        let raw = ComplexMatrix::from_fn(d, |_, _| Complex::new(next(), next()));
        let a = ComplexMatrix::from_fn(d, |i, j| (raw[(i, j)] + raw[(j, i)].conj()) / 2.0);
        let h = a.kron(&ComplexMatrix::identity(2));
        let s = eig_hermitian(&h).unwrap();
        assert!(s.residual(&h) < 1e-12);
        let base = eig_hermitian(&a).unwrap();
        for (k, &e) in base.energies().iter().enumerate() {
            assert!((s.energies()[2 * k] - e).abs() < 1e-12);
            assert!((s.energies()[2 * k + 1] - e).abs() < 1e-12);
        }
        // Doubled levels land in shared degeneracy groups of even size.
        for (start, end) in s.degenerate_groups() {
            assert!((end - start) % 2 == 0 && end > start);
        }
    }
}

/// The analytic spectrum agrees with the numeric eigensolver across the
/// strong-coupling window.
#[test]
fn analytic_spectrum_matches_numeric_on_grid() {
    for jj in 1..=5 {
        let j = 0.5 * jj as f64;
        for bb in 1..=19 {
            let b = 0.2 * bb as f64 * j; // up to 3.8 J < 4J
            let analytic = analytic_spectrum(b, j).unwrap();
            let numeric = eig_hermitian(&hamiltonian(b, j)).unwrap();
            for n in 0..4 {
                assert!((analytic.energies()[n] - numeric.energies()[n]).abs() < 1e-10);
                assert!(analytic.projector(n).max_abs_diff(&numeric.projector(n)) < 1e-10);
            }
        }
    }
}
