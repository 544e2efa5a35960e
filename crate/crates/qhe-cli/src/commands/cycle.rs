use std::fs::OpenOptions;
use std::io::Write;

use qhe_core::cycle::{run_with, verify_work_identity};
use qhe_core::model::EngineParams;
use qhe_core::Tolerances;

use crate::args::CycleArgs;
use crate::commands::{build_spec, kind_of, ledger_row, ROW_HEADER};
use crate::csvio;
use crate::{EXIT_NOT_AN_ENGINE, EXIT_OK};

pub fn run(args: &CycleArgs) -> Result<i32, String> {
    let params =
        EngineParams::new(args.b1, args.b2, args.j, args.beta).map_err(|e| e.to_string())?;
    let spec = build_spec(
        args.meas,
        args.c0,
        args.theta_a,
        args.phi_a,
        args.theta_b,
        args.phi_b,
    )?;
    let kind = kind_of(args.kind);
    let ledger =
        run_with(&params, &spec, kind, &Tolerances::default()).map_err(|e| e.to_string())?;
    let identity = verify_work_identity(&params, &spec).map_err(|e| e.to_string())?;

    println!("kind = {}", ledger.kind.as_str());
    println!("meas = {}", args.meas.as_str());
    println!("c0 = {}", csvio::num(spec.c0()));
    println!("B1 = {}", csvio::num(args.b1));
    println!("B2 = {}", csvio::num(args.b2));
    println!("J = {}", csvio::num(args.j));
    println!("beta = {}", csvio::num(args.beta));
    println!("thetaA = {}", csvio::num(spec.dir_a().theta()));
    println!("phiA = {}", csvio::num(spec.dir_a().phi()));
    println!("thetaB = {}", csvio::num(spec.dir_b().theta()));
    println!("phiB = {}", csvio::num(spec.dir_b().phi()));
    println!("W1 = {}", csvio::num(ledger.w1));
    println!("Q_M = {}", csvio::num(ledger.q_m));
    println!("W_erg = {}", csvio::num(ledger.w_erg));
    println!("W2 = {}", csvio::num(ledger.w2));
    println!("Q_res = {}", csvio::num(ledger.q_res));
    println!("W_T = {}", csvio::num(ledger.w_total));
    println!("eta = {}", csvio::eta(ledger.eta));
    println!("ordering = {}", ledger.ordering.tag.as_str());
    println!("engine = {}", ledger.engine);
    println!("coherence = {}", csvio::num(ledger.coherence));
    println!("identity_residual = {}", csvio::num(identity.residual));

    if let Some(path) = &args.out {
        let fresh = !path.exists();
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .map_err(|e| format!("cannot open {}: {e}", path.display()))?;
        if fresh {
            writeln!(file, "{}", ROW_HEADER.join(",")).map_err(|e| e.to_string())?;
        }
        let row = ledger_row(
            &spec,
            args.b1,
            args.b2,
            args.j,
            args.beta,
            args.meas,
            &ledger,
            identity.residual,
        );
        writeln!(file, "{}", row.join(",")).map_err(|e| e.to_string())?;
    }

    if ledger.engine {
        Ok(EXIT_OK)
    } else {
        println!("note = not an engine (W_T <= 0)");
        Ok(EXIT_NOT_AN_ENGINE)
    }
}
