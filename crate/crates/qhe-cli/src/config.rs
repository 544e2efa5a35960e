//! Flat key = value sweep configuration.
//!
//! One `key = value` pair per line, `#` starts a comment. Numeric keys accept
//! either a single value or an inclusive grid `start:stop:count`. Example:
//!
//! ```text
//! kind = five
//! meas = zz
//! c0 = 0:0.7071:50
//! B1 = 3.5
//! B2 = 3
//! J = 1
//! beta = 1
//! out = sweep.csv
//! ```

use std::collections::BTreeMap;
use std::path::PathBuf;

use qhe_core::cycle::CycleKind;
use qhe_core::Tolerances;

use crate::args::MeasArg;

/// One sweep axis: a single value or an inclusive linear grid.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Grid {
    pub fn single(x: f64) -> Self {
        Grid {
            start: x,
            stop: x,
            count: 1,
        }
    }

    pub fn values(&self) -> Vec<f64> {
        match self.count {
            0 => Vec::new(),
            1 => vec![self.start],
            n => (0..n)
                .map(|i| self.start + (self.stop - self.start) * i as f64 / (n - 1) as f64)
                .collect(),
        }
    }

    fn parse(text: &str) -> Result<Self, String> {
        let parts: Vec<&str> = text.split(':').collect();
        match parts.as_slice() {
            [single] => {
                let x: f64 = single
                    .trim()
                    .parse()
                    .map_err(|_| format!("invalid number '{single}'"))?;
                Ok(Grid::single(x))
            }
            [start, stop, count] => {
                let start: f64 = start
                    .trim()
                    .parse()
                    .map_err(|_| format!("invalid grid start '{start}'"))?;
                let stop: f64 = stop
                    .trim()
                    .parse()
                    .map_err(|_| format!("invalid grid stop '{stop}'"))?;
                let count: usize = count
                    .trim()
                    .parse()
                    .map_err(|_| format!("invalid grid count '{count}'"))?;
                Ok(Grid { start, stop, count })
            }
            _ => Err(format!("expected 'value' or 'start:stop:count', got '{text}'")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub kind: CycleKind,
    pub meas: MeasArg,
    pub c0: Grid,
    pub b1: Grid,
    pub b2: Grid,
    pub j: Grid,
    pub beta: Grid,
    pub theta_a: Grid,
    pub phi_a: Grid,
    pub theta_b: Grid,
    pub phi_b: Grid,
    pub out: Option<PathBuf>,
    pub tolerances: Tolerances<f64>,
}

impl SweepConfig {
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut pairs: BTreeMap<String, String> = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected 'key = value'", lineno + 1))?;
            pairs.insert(key.trim().to_string(), value.trim().to_string());
        }

        let kind = match pairs.remove("kind").as_deref() {
            None | Some("five") => CycleKind::Five,
            Some("four") => CycleKind::Four,
            Some("three") => CycleKind::Three,
            Some(other) => return Err(format!("unknown kind '{other}'")),
        };
        let meas = match pairs.remove("meas").as_deref() {
            Some("zz") => MeasArg::Zz,
            Some("xx") => MeasArg::Xx,
            Some("xy") => MeasArg::Xy,
            Some("xz") => MeasArg::Xz,
            Some("custom") => MeasArg::Custom,
            None => return Err("missing 'meas'".to_string()),
            Some(other) => return Err(format!("unknown meas '{other}'")),
        };

        let mut grid = |key: &str, default: Option<f64>| -> Result<Grid, String> {
            match pairs.remove(key) {
                Some(text) => Grid::parse(&text).map_err(|e| format!("{key}: {e}")),
                None => default
                    .map(Grid::single)
                    .ok_or_else(|| format!("missing '{key}'")),
            }
        };
        let c0 = grid("c0", None)?;
        let b1 = grid("B1", None)?;
        let b2 = grid("B2", None)?;
        let j = grid("J", None)?;
        let beta = grid("beta", None)?;
        let theta_a = grid("thetaA", Some(0.0))?;
        let phi_a = grid("phiA", Some(0.0))?;
        let theta_b = grid("thetaB", Some(0.0))?;
        let phi_b = grid("phiB", Some(0.0))?;

        let out = pairs.remove("out").map(PathBuf::from);

        let mut tolerances = Tolerances::<f64>::default();
        let overrides: &mut [(&str, &mut f64)] = &mut [
            ("tol_hermiticity", &mut tolerances.hermiticity),
            ("tol_unit_trace", &mut tolerances.unit_trace),
            ("tol_eigenvalue_floor", &mut tolerances.eigenvalue_floor),
            ("tol_completeness", &mut tolerances.completeness),
            ("tol_orthonormality", &mut tolerances.orthonormality),
            ("tol_eigen_residual", &mut tolerances.eigen_residual),
            ("tol_degeneracy", &mut tolerances.degeneracy),
            ("tol_prob_range", &mut tolerances.prob_range),
            ("tol_prob_sum", &mut tolerances.prob_sum),
            ("tol_tie", &mut tolerances.tie),
            ("tol_axis_snap", &mut tolerances.axis_snap),
        ];
        for (key, slot) in overrides.iter_mut() {
            if let Some(text) = pairs.remove(*key) {
                **slot = text
                    .parse()
                    .map_err(|_| format!("{key}: invalid number '{text}'"))?;
            }
        }

        if let Some(unknown) = pairs.keys().next() {
            return Err(format!("unknown key '{unknown}'"));
        }
        Ok(SweepConfig {
            kind,
            meas,
            c0,
            b1,
            b2,
            j,
            beta,
            theta_a,
            phi_a,
            theta_b,
            phi_b,
            out,
            tolerances,
        })
    }
}
