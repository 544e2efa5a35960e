//! Seeded randomized verification: every invariant family the library rests
//! on, run end to end with pass/fail accounting.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qhe_core::analytics;
use qhe_core::channel::apply_channel;
use qhe_core::cycle::{run_five_stroke, verify_work_identity};
use qhe_core::ergotropy::ergotropy_extract;
use qhe_core::matrix::ComplexMatrix;
use qhe_core::measurement::{
    build_kraus, projective_post_probs, xx_post_probs, zz_post_probs, MeasurementSpec,
};
use qhe_core::model::analytic_spectrum;
use qhe_core::state::{occupations, DensityMatrix, OccupationDist};

use crate::args::VerifyArgs;
use crate::csvio;
use crate::sampling;
use crate::{EXIT_OK, EXIT_VERIFY_FAILED};

struct SuiteReport {
    name: &'static str,
    passed: usize,
    total: usize,
    max_residual: f64,
    tol: f64,
    failures: Vec<String>,
}

impl SuiteReport {
    fn ok(&self) -> bool {
        self.passed == self.total
    }

    fn print(&self) {
        println!(
            "{:<20}: pass {}/{}  max_residual {}  tol {}",
            self.name,
            self.passed,
            self.total,
            csvio::short(self.max_residual),
            csvio::short(self.tol),
        );
        for f in &self.failures {
            println!("  fail {f}");
        }
    }
}

/// Runs one suite: `check` returns `(residual, description)`; an instance
/// passes when the residual is within tolerance.
fn run_suite(
    name: &'static str,
    n: usize,
    tol: f64,
    rng: &mut ChaCha8Rng,
    mut check: impl FnMut(&mut ChaCha8Rng) -> (f64, String),
) -> SuiteReport {
    let mut passed = 0;
    let mut max_residual: f64 = 0.0;
    let mut failures = Vec::new();
    for i in 0..n {
        let (residual, description) = check(rng);
        max_residual = max_residual.max(residual);
        if residual <= tol {
            passed += 1;
        } else if failures.len() < 3 {
            failures.push(format!(
                "[{i}]: {description} residual={}",
                csvio::short(residual)
            ));
        }
    }
    SuiteReport {
        name,
        passed,
        total: n,
        max_residual,
        tol,
        failures,
    }
}

pub fn run(args: &VerifyArgs) -> Result<i32, String> {
    if args.n == 0 {
        return Err("--n must be at least 1".to_string());
    }
    let n = args.n;
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    println!("verify seed={} n={}", args.seed, n);

    let tol = |default: f64| args.tol.unwrap_or(default);
    let mut reports = Vec::new();

    reports.push(run_suite(
        "zz_equivalence",
        n,
        tol(1e-12),
        &mut rng,
        |rng| {
            let params = sampling::params(rng);
            let c0 = rng.random_range(0.0..=sampling::FRAC_1_SQRT_2);
            let spectrum = analytic_spectrum(params.b1(), params.j()).unwrap();
            let p = OccupationDist::gibbs(spectrum.energies(), params.beta()).unwrap();
            let closed = zz_post_probs(&p, c0).unwrap();
            let rho = DensityMatrix::from_occupations(&p, &spectrum).unwrap();
            let kraus = build_kraus(&MeasurementSpec::zz(c0).unwrap());
            let out = apply_channel(&rho, kraus.operators()).unwrap();
            let brute = occupations(&out, &spectrum).unwrap();
            let residual = closed
                .probs()
                .iter()
                .zip(brute.probs())
                .map(|(a, b)| (a - b).abs())
                .fold(0.0f64, f64::max);
            (
                residual,
                format!("{} c0={}", sampling::describe_params(&params), csvio::num(c0)),
            )
        },
    ));

    reports.push(run_suite(
        "xx_equivalence",
        n,
        tol(1e-12),
        &mut rng,
        |rng| {
            let params = sampling::params(rng);
            let c0 = rng.random_range(0.0..=sampling::FRAC_1_SQRT_2);
            let spectrum = analytic_spectrum(params.b1(), params.j()).unwrap();
            let p = OccupationDist::gibbs(spectrum.energies(), params.beta()).unwrap();
            let closed = xx_post_probs(&p, c0).unwrap();
            let rho = DensityMatrix::from_occupations(&p, &spectrum).unwrap();
            let kraus = build_kraus(&MeasurementSpec::xx(c0).unwrap());
            let out = apply_channel(&rho, kraus.operators()).unwrap();
            let brute = occupations(&out, &spectrum).unwrap();
            let residual = closed
                .probs()
                .iter()
                .zip(brute.probs())
                .map(|(a, b)| (a - b).abs())
                .fold(0.0f64, f64::max);
            (
                residual,
                format!("{} c0={}", sampling::describe_params(&params), csvio::num(c0)),
            )
        },
    ));

    reports.push(run_suite(
        "ergotropy_oracle",
        n,
        tol(0.0),
        &mut rng,
        |rng| {
            let params = sampling::params(rng);
            let spectrum = analytic_spectrum(params.b1(), params.j()).unwrap();
            let raw: Vec<f64> = (0..4).map(|_| rng.random_range(1e-4..1.0)).collect();
            let sum: f64 = raw.iter().sum();
            let p = OccupationDist::new(raw.iter().map(|x| x / sum).collect()).unwrap();
            let ext = ergotropy_extract(&p, &spectrum).unwrap();
            let mut best = f64::NEG_INFINITY;
            for perm in permutations4() {
                let mut extracted = 0.0;
                for (n, &target) in perm.iter().enumerate() {
                    extracted += spectrum.energies()[n] * (p.probs()[n] - p.probs()[target]);
                }
                best = best.max(extracted);
            }
            (
                (-ext.w_erg - best).abs(),
                format!(
                    "{} p={:?}",
                    sampling::describe_params(&params),
                    p.probs()
                ),
            )
        },
    ));

    reports.push(run_suite(
        "work_identity",
        n,
        tol(1e-9),
        &mut rng,
        |rng| {
            let params = sampling::params(rng);
            let spec = sampling::spec(rng);
            let id = verify_work_identity(&params, &spec).unwrap();
            (
                id.residual,
                format!(
                    "{} {}",
                    sampling::describe_params(&params),
                    sampling::describe_spec(&spec)
                ),
            )
        },
    ));

    reports.push(run_suite(
        "sign_structure",
        n,
        tol(0.0),
        &mut rng,
        |rng| {
            let params = sampling::params(rng);
            let spec = sampling::spec(rng);
            let ledger = run_five_stroke(&params, &spec).unwrap();
            // Residual 0 when the sign conditions hold (or the point is not
            // an engine); 1 on violation.
            let violated = ledger.engine
                && !(ledger.q_m > 0.0 && ledger.q_res < 0.0 && ledger.w_erg <= 0.0);
            (
                if violated { 1.0 } else { 0.0 },
                format!(
                    "{} {}",
                    sampling::describe_params(&params),
                    sampling::describe_spec(&spec)
                ),
            )
        },
    ));

    reports.push(run_suite(
        "projective_gap",
        n,
        tol(1e-12),
        &mut rng,
        |rng| {
            let params = sampling::params(rng);
            let spectrum = analytic_spectrum(params.b2(), params.j()).unwrap();
            let p = OccupationDist::gibbs(spectrum.energies(), params.beta()).unwrap();
            let da = sampling::direction(rng);
            let db = sampling::direction(rng);
            let post = projective_post_probs(&p, &da, &db, &spectrum).unwrap();
            let gap = post.probs()[1] - post.probs()[3];
            let formula = analytics::projective_p2p4_gap(&p, da.theta(), db.theta());
            (
                (gap - formula).abs(),
                format!(
                    "{} thetaA={} thetaB={}",
                    sampling::describe_params(&params),
                    csvio::num(da.theta()),
                    csvio::num(db.theta())
                ),
            )
        },
    ));

    reports.push(run_suite(
        "channel_trace",
        n,
        tol(1e-12),
        &mut rng,
        |rng| {
            let spec = sampling::spec(rng);
            let entries: Vec<qhe_core::Complex<f64>> = (0..16)
                .map(|_| {
                    qhe_core::Complex::new(
                        rng.random_range(-1.0..1.0),
                        rng.random_range(-1.0..1.0),
                    )
                })
                .collect();
            let a = ComplexMatrix::from_data(4, entries).unwrap();
            let aa = &a * &a.adjoint();
            let tr = aa.trace().re;
            let rho = DensityMatrix::new(aa.scaled(1.0 / tr)).unwrap();
            let kraus = build_kraus(&spec);
            let out = apply_channel(&rho, kraus.operators()).unwrap();
            let trace = out.matrix().trace();
            (
                ((trace.re - 1.0).powi(2) + trace.im.powi(2)).sqrt(),
                sampling::describe_spec(&spec),
            )
        },
    ));

    for report in &reports {
        report.print();
    }
    let ok = reports.iter().filter(|r| r.ok()).count();
    let verdict = if ok == reports.len() { "PASS" } else { "FAIL" };
    println!("result: {verdict} ({ok}/{} suites)", reports.len());
    Ok(if ok == reports.len() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

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
