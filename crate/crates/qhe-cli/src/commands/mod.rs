pub mod cycle;
pub mod figure;
pub mod sweep;
pub mod verify;

use qhe_core::cycle::{CycleKind, StrokeLedger};
use qhe_core::measurement::{Direction, MeasurementSpec};

use crate::args::{KindArg, MeasArg};
use crate::csvio;

pub fn kind_of(arg: KindArg) -> CycleKind {
    match arg {
        KindArg::Three => CycleKind::Three,
        KindArg::Four => CycleKind::Four,
        KindArg::Five => CycleKind::Five,
    }
}

/// Builds the measurement spec from the flag set; custom directions require
/// explicit polar angles.
pub fn build_spec(
    meas: MeasArg,
    c0: f64,
    theta_a: Option<f64>,
    phi_a: Option<f64>,
    theta_b: Option<f64>,
    phi_b: Option<f64>,
) -> Result<MeasurementSpec<f64>, String> {
    let spec = match meas {
        MeasArg::Zz => MeasurementSpec::zz(c0),
        MeasArg::Xx => MeasurementSpec::xx(c0),
        MeasArg::Xy => MeasurementSpec::xy(c0),
        MeasArg::Xz => MeasurementSpec::xz(c0),
        MeasArg::Custom => {
            let ta = theta_a.ok_or("custom measurement requires --thetaA")?;
            let tb = theta_b.ok_or("custom measurement requires --thetaB")?;
            let da = Direction::new(ta, phi_a.unwrap_or(0.0)).map_err(|e| e.to_string())?;
            let db = Direction::new(tb, phi_b.unwrap_or(0.0)).map_err(|e| e.to_string())?;
            MeasurementSpec::new(c0, da, db)
        }
    };
    spec.map_err(|e| e.to_string())
}

/// Column set shared by `cycle --out` rows and sweep rows.
pub const ROW_HEADER: [&str; 22] = [
    "c0",
    "B1",
    "B2",
    "J",
    "beta",
    "thetaA",
    "phiA",
    "thetaB",
    "phiB",
    "kind",
    "meas",
    "W1",
    "Q_M",
    "W_erg",
    "W2",
    "Q_res",
    "W_T",
    "eta",
    "ordering",
    "engine",
    "coherence",
    "identity_residual",
];

#[allow(clippy::too_many_arguments)]
pub fn ledger_row(
    spec: &MeasurementSpec<f64>,
    b1: f64,
    b2: f64,
    j: f64,
    beta: f64,
    meas: MeasArg,
    ledger: &StrokeLedger<f64>,
    identity_residual: f64,
) -> Vec<String> {
    vec![
        csvio::num(spec.c0()),
        csvio::num(b1),
        csvio::num(b2),
        csvio::num(j),
        csvio::num(beta),
        csvio::num(spec.dir_a().theta()),
        csvio::num(spec.dir_a().phi()),
        csvio::num(spec.dir_b().theta()),
        csvio::num(spec.dir_b().phi()),
        ledger.kind.as_str().to_string(),
        meas.as_str().to_string(),
        csvio::num(ledger.w1),
        csvio::num(ledger.q_m),
        csvio::num(ledger.w_erg),
        csvio::num(ledger.w2),
        csvio::num(ledger.q_res),
        csvio::num(ledger.w_total),
        csvio::eta(ledger.eta),
        ledger.ordering.tag.as_str().to_string(),
        ledger.engine.to_string(),
        csvio::num(ledger.coherence),
        csvio::num(identity_residual),
    ]
}
