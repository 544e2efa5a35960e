//! Seeded uniform in-regime sampling shared by `verify` and the tests.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use qhe_core::measurement::{Direction, MeasurementSpec};
use qhe_core::model::EngineParams;

pub const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Uniform in-regime parameters, by rejection against the validator.
pub fn params(rng: &mut ChaCha8Rng) -> EngineParams<f64> {
    loop {
        let j = rng.random_range(0.3..2.5);
        let b2 = rng.random_range(0.02..0.98) * 4.0 * j;
        let b1 = b2 + rng.random_range(0.01..0.999) * (4.0 * j - b2) * 0.999;
        let beta = rng.random_range(0.05..4.0);
        if let Ok(p) = EngineParams::new(b1, b2, j, beta) {
            return p;
        }
    }
}

pub fn direction(rng: &mut ChaCha8Rng) -> Direction<f64> {
    Direction::new(
        rng.random_range(0.0..=std::f64::consts::PI),
        rng.random_range(0.0..std::f64::consts::TAU),
    )
    .expect("angles in range")
}

/// A measurement spec drawn over all direction families and strengths.
pub fn spec(rng: &mut ChaCha8Rng) -> MeasurementSpec<f64> {
    let c0 = rng.random_range(0.0..=FRAC_1_SQRT_2);
    match rng.random_range(0..5u32) {
        0 => MeasurementSpec::zz(c0),
        1 => MeasurementSpec::xx(c0),
        2 => MeasurementSpec::xy(c0),
        3 => MeasurementSpec::xz(c0),
        _ => MeasurementSpec::new(c0, direction(rng), direction(rng)),
    }
    .expect("strength in range")
}

/// Compact one-line description of a spec, for failure reproduction.
pub fn describe_spec(spec: &MeasurementSpec<f64>) -> String {
    format!(
        "c0={:.16e} thetaA={:.16e} phiA={:.16e} thetaB={:.16e} phiB={:.16e}",
        spec.c0(),
        spec.dir_a().theta(),
        spec.dir_a().phi(),
        spec.dir_b().theta(),
        spec.dir_b().phi(),
    )
}

pub fn describe_params(p: &EngineParams<f64>) -> String {
    format!(
        "B1={:.16e} B2={:.16e} J={:.16e} beta={:.16e}",
        p.b1(),
        p.b2(),
        p.j(),
        p.beta()
    )
}
