//! Deterministic number formatting for CSV and report output.
//!
//! Values print with 17 significant digits (`{:.16e}`) so every `f64`
//! round-trips exactly; undefined values print as `nan`/`none` sentinels.

/// Round-trip-safe formatting of a finite value; `nan` for anything else.
pub fn num(x: f64) -> String {
    if x.is_finite() {
        // Normalize -0.0 so ledgers of identical cycles compare bytewise.
        let x = if x == 0.0 { 0.0 } else { x };
        format!("{x:.16e}")
    } else {
        "nan".to_string()
    }
}

/// Ledger efficiency: `none` when the cycle absorbed no measurement heat.
pub fn eta(x: Option<f64>) -> String {
    match x {
        Some(v) => num(v),
        None => "none".to_string(),
    }
}

/// Short fixed-precision form for report summaries.
pub fn short(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.3e}")
    } else {
        "nan".to_string()
    }
}
