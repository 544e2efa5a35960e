//! Built-in figure presets: parameter sets and the CSV data behind them.
//!
//! Each preset sweeps one variable over 400 grid points with the remaining
//! parameters fixed. Columns that are mathematically undefined at a grid
//! point (no measurement heat, strength endpoint of the efficiency formula)
//! print as `nan`; classification-restricted efficiency columns print 0
//! where the restriction fails.

use qhe_core::analytics;
use qhe_core::cycle::{run_five_stroke, run_four_stroke, StrokeLedger};
use qhe_core::ergotropy::OrderingTag;
use qhe_core::measurement::MeasurementSpec;
use qhe_core::model::EngineParams;

use crate::csvio;

pub const GRID_POINTS: usize = 400;
const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

pub const FIGURE_IDS: [&str; 7] = ["fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8"];

/// Rendered CSV table: header plus formatted rows.
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

fn linspace(start: f64, stop: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| start + (stop - start) * i as f64 / (n - 1) as f64)
        .collect()
}

fn zz_ledger(b1: f64, b2: f64, j: f64, beta: f64, c0: f64) -> StrokeLedger<f64> {
    let params = EngineParams::new(b1, b2, j, beta).expect("preset parameters are in-regime");
    run_five_stroke(&params, &MeasurementSpec::zz(c0).expect("strength in range"))
        .expect("preset cycle runs")
}

fn xx_ledger(b1: f64, b2: f64, j: f64, beta: f64, c0: f64) -> StrokeLedger<f64> {
    let params = EngineParams::new(b1, b2, j, beta).expect("preset parameters are in-regime");
    run_five_stroke(&params, &MeasurementSpec::xx(c0).expect("strength in range"))
        .expect("preset cycle runs")
}

fn energetics_row(x: f64, ledger: &StrokeLedger<f64>) -> Vec<String> {
    vec![
        csvio::num(x),
        csvio::num(ledger.q_m),
        csvio::num(ledger.w_erg),
        csvio::num(ledger.w_total),
        csvio::num(ledger.w1),
        csvio::num(ledger.w2),
        csvio::num(ledger.q_res),
    ]
}

/// Five-stroke z-z energetics vs strength; B1 = 3.5, B2 = 3, J = 1, beta = 1.
pub fn fig2() -> Table {
    let rows = linspace(0.0, FRAC_1_SQRT_2, GRID_POINTS)
        .into_iter()
        .map(|c0| energetics_row(c0, &zz_ledger(3.5, 3.0, 1.0, 1.0, c0)))
        .collect();
    Table {
        header: vec!["c0", "Q_M", "W_erg", "W_T", "W_1", "W_2", "Q_res"],
        rows,
    }
}

/// R1 efficiency formula vs strength at B2 = 3, J = 1, beta in 1..4.
pub fn fig3() -> Table {
    let rows = linspace(0.0, FRAC_1_SQRT_2, GRID_POINTS)
        .into_iter()
        .map(|c0| {
            let mut row = vec![csvio::num(c0)];
            for beta in [1.0, 2.0, 3.0, 4.0] {
                row.push(csvio::num(analytics::eta_r1_value(3.0, 1.0, beta, c0)));
            }
            row
        })
        .collect();
    Table {
        header: vec!["c0", "eta_beta1", "eta_beta2", "eta_beta3", "eta_beta4"],
        rows,
    }
}

/// R1 efficiency formula vs coupling at B2 = 3, c0 = 0.3, beta in 1..4.
pub fn fig4() -> Table {
    let rows = linspace(0.8, 10.0, GRID_POINTS)
        .into_iter()
        .map(|j| {
            let mut row = vec![csvio::num(j)];
            for beta in [1.0, 2.0, 3.0, 4.0] {
                row.push(csvio::num(analytics::eta_r1_value(3.0, j, beta, 0.3)));
            }
            row
        })
        .collect();
    Table {
        header: vec!["J", "eta_beta1", "eta_beta2", "eta_beta3", "eta_beta4"],
        rows,
    }
}

/// R2-restricted ledger efficiency vs strength at B2 = 3.9, J = 1.
///
/// At this near-degenerate field the active ordering switches from R2 to R1
/// as the temperature drops; the columns report only the R2-classified
/// efficiency (0 elsewhere), which is the quantity with the monotone
/// temperature trend.
pub fn fig5() -> Table {
    let rows = linspace(0.0, FRAC_1_SQRT_2, GRID_POINTS)
        .into_iter()
        .map(|c0| {
            let mut row = vec![csvio::num(c0)];
            for beta in [1.0, 2.0, 3.0, 4.0] {
                let ledger = zz_ledger(3.9, 3.9, 1.0, beta, c0);
                let eta_r2 = if ledger.ordering.tag == OrderingTag::R2 {
                    ledger.eta.unwrap_or(0.0)
                } else {
                    0.0
                };
                row.push(csvio::num(eta_r2));
            }
            row
        })
        .collect();
    Table {
        header: vec!["c0", "eta_beta1", "eta_beta2", "eta_beta3", "eta_beta4"],
        rows,
    }
}

/// Five-stroke x-x energetics vs strength; B1 = 3.5, B2 = 3, J = 1, beta = 1.
pub fn fig6() -> Table {
    let rows = linspace(0.0, FRAC_1_SQRT_2, GRID_POINTS)
        .into_iter()
        .map(|c0| energetics_row(c0, &xx_ledger(3.5, 3.0, 1.0, 1.0, c0)))
        .collect();
    Table {
        header: vec!["c0", "Q_M", "W_erg", "W_T", "W_1", "W_2", "Q_res"],
        rows,
    }
}

/// Five-stroke x-x efficiency vs coupling for several strengths, against the
/// four-stroke projective reference; B1 = 3.5, B2 = 3, beta = 1.
pub fn fig7() -> Table {
    let strengths = [0.1, 0.3, 0.5, 0.6, 0.7];
    let rows = linspace(0.9, 10.0, GRID_POINTS)
        .into_iter()
        .map(|j| {
            let mut row = vec![csvio::num(j)];
            for &c0 in &strengths {
                let ledger = xx_ledger(3.5, 3.0, j, 1.0, c0);
                row.push(csvio::eta(ledger.eta));
            }
            let params = EngineParams::new(3.5, 3.0, j, 1.0).expect("in-regime");
            let reference =
                run_four_stroke(&params, &MeasurementSpec::xx(0.5).expect("projective"))
                    .expect("preset cycle runs");
            row.push(csvio::eta(reference.eta));
            row
        })
        .collect();
    Table {
        header: vec![
            "J",
            "eta_c0_0.1",
            "eta_c0_0.3",
            "eta_c0_0.5",
            "eta_c0_0.6",
            "eta_c0_0.7",
            "eta_proj4",
        ],
        rows,
    }
}

/// Five-stroke x-x efficiency vs coupling at c0 = 0.3 for beta in 1..4;
/// B1 = 3.5, B2 = 3.
pub fn fig8() -> Table {
    let rows = linspace(0.9, 10.0, GRID_POINTS)
        .into_iter()
        .map(|j| {
            let mut row = vec![csvio::num(j)];
            for beta in [1.0, 2.0, 3.0, 4.0] {
                let ledger = xx_ledger(3.5, 3.0, j, beta, 0.3);
                row.push(csvio::eta(ledger.eta));
            }
            row
        })
        .collect();
    Table {
        header: vec!["J", "eta_beta1", "eta_beta2", "eta_beta3", "eta_beta4"],
        rows,
    }
}

pub fn render(id: &str) -> Option<Table> {
    match id {
        "fig2" => Some(fig2()),
        "fig3" => Some(fig3()),
        "fig4" => Some(fig4()),
        "fig5" => Some(fig5()),
        "fig6" => Some(fig6()),
        "fig7" => Some(fig7()),
        "fig8" => Some(fig8()),
        _ => None,
    }
}

/// The preset parameters as key = value lines, for audit.
pub fn describe(id: &str) -> Option<String> {
    let text = match id {
        "fig2" => {
            "figure = fig2\nsweep = c0 over 0:0.70710678118654746:400\nkind = five\nmeas = zz\n\
             B1 = 3.5\nB2 = 3\nJ = 1\nbeta = 1\ncolumns = Q_M, W_erg, W_T, W_1, W_2, Q_res"
        }
        "fig3" => {
            "figure = fig3\nsweep = c0 over 0:0.70710678118654746:400\nquantity = R1 efficiency formula\n\
             B2 = 3\nJ = 1\nbeta = 1, 2, 3, 4"
        }
        "fig4" => {
            "figure = fig4\nsweep = J over 0.8:10:400\nquantity = R1 efficiency formula\n\
             B2 = 3\nc0 = 0.3\nbeta = 1, 2, 3, 4"
        }
        "fig5" => {
            "figure = fig5\nsweep = c0 over 0:0.70710678118654746:400\nquantity = R2-restricted ledger efficiency\n\
             kind = five\nmeas = zz\nB1 = 3.9\nB2 = 3.9\nJ = 1\nbeta = 1, 2, 3, 4"
        }
        "fig6" => {
            "figure = fig6\nsweep = c0 over 0:0.70710678118654746:400\nkind = five\nmeas = xx\n\
             B1 = 3.5\nB2 = 3\nJ = 1\nbeta = 1\ncolumns = Q_M, W_erg, W_T, W_1, W_2, Q_res"
        }
        "fig7" => {
            "figure = fig7\nsweep = J over 0.9:10:400\nquantity = five-stroke x-x ledger efficiency\n\
             kind = five\nmeas = xx\nB1 = 3.5\nB2 = 3\nbeta = 1\nc0 = 0.1, 0.3, 0.5, 0.6, 0.7\n\
             reference = four-stroke projective x-x efficiency"
        }
        "fig8" => {
            "figure = fig8\nsweep = J over 0.9:10:400\nquantity = five-stroke x-x ledger efficiency\n\
             kind = five\nmeas = xx\nB1 = 3.5\nB2 = 3\nc0 = 0.3\nbeta = 1, 2, 3, 4"
        }
        _ => return None,
    };
    Some(text.to_string())
}
