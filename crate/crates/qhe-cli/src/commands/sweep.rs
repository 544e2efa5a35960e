use std::fs::File;
use std::io::{BufWriter, Write};

use qhe_core::cycle::{run_with, verify_work_identity_with};
use qhe_core::measurement::{Direction, MeasurementSpec};
use qhe_core::model::EngineParams;

use crate::args::{MeasArg, SweepArgs};
use crate::commands::{ledger_row, ROW_HEADER};
use crate::config::SweepConfig;
use crate::EXIT_OK;

pub fn run(args: &SweepArgs) -> Result<i32, String> {
    let text = std::fs::read_to_string(&args.config)
        .map_err(|e| format!("cannot read {}: {e}", args.config.display()))?;
    let config = SweepConfig::parse(&text)?;

    let out_path = args
        .out
        .clone()
        .or_else(|| config.out.clone())
        .ok_or("no output path: pass --out or set 'out' in the config")?;
    let file = File::create(&out_path)
        .map_err(|e| format!("cannot write {}: {e}", out_path.display()))?;
    let mut writer = BufWriter::new(file);
    writeln!(writer, "{}", ROW_HEADER.join(",")).map_err(|e| e.to_string())?;

    let mut written = 0usize;
    let mut skipped = 0usize;
    // Lexicographic grid order; rows appear exactly in loop order.
    for &c0 in &config.c0.values() {
        for &b1 in &config.b1.values() {
            for &b2 in &config.b2.values() {
                for &j in &config.j.values() {
                    for &beta in &config.beta.values() {
                        for &theta_a in &config.theta_a.values() {
                            for &phi_a in &config.phi_a.values() {
                                for &theta_b in &config.theta_b.values() {
                                    for &phi_b in &config.phi_b.values() {
                                        let point = format!(
                                            "c0={c0} B1={b1} B2={b2} J={j} beta={beta} \
                                             thetaA={theta_a} phiA={phi_a} thetaB={theta_b} phiB={phi_b}"
                                        );
                                        match evaluate(
                                            &config, c0, b1, b2, j, beta, theta_a, phi_a,
                                            theta_b, phi_b,
                                        ) {
                                            Ok(row) => {
                                                writeln!(writer, "{}", row.join(","))
                                                    .map_err(|e| e.to_string())?;
                                                written += 1;
                                            }
                                            Err(reason) => {
                                                eprintln!("skip: {reason} at {point}");
                                                skipped += 1;
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    writer.flush().map_err(|e| e.to_string())?;
    println!(
        "wrote {} ({} rows, {} skipped)",
        out_path.display(),
        written,
        skipped
    );
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn evaluate(
    config: &SweepConfig,
    c0: f64,
    b1: f64,
    b2: f64,
    j: f64,
    beta: f64,
    theta_a: f64,
    phi_a: f64,
    theta_b: f64,
    phi_b: f64,
) -> Result<Vec<String>, String> {
    let params = EngineParams::new(b1, b2, j, beta).map_err(|e| e.to_string())?;
    let spec = match config.meas {
        MeasArg::Zz => MeasurementSpec::zz(c0),
        MeasArg::Xx => MeasurementSpec::xx(c0),
        MeasArg::Xy => MeasurementSpec::xy(c0),
        MeasArg::Xz => MeasurementSpec::xz(c0),
        MeasArg::Custom => {
            let da = Direction::new(theta_a, phi_a).map_err(|e| e.to_string())?;
            let db = Direction::new(theta_b, phi_b).map_err(|e| e.to_string())?;
            MeasurementSpec::new(c0, da, db)
        }
    }
    .map_err(|e| e.to_string())?;

    let ledger = run_with(&params, &spec, config.kind, &config.tolerances)
        .map_err(|e| e.to_string())?;
    let identity = verify_work_identity_with(&params, &spec, &config.tolerances)
        .map_err(|e| e.to_string())?;
    Ok(ledger_row(
        &spec,
        b1,
        b2,
        j,
        beta,
        config.meas,
        &ledger,
        identity.residual,
    ))
}
