//! The JSON envelope (also the run record) and table rendering.
//!
//! JSON is schema-stable: the same fields are always present, in declaration
//! order; repeated runs with identical inputs and seed are byte-identical
//! except for `timing_ms`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use cangrow_core::growth::{GrowthReport, Recurrence};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize, Debug, Clone)]
pub struct RingInfo {
    pub field: String,
    pub vars: Vec<String>,
    pub ideal: Vec<String>,
    pub spec: String,
    pub dim: usize,
    pub hilbert: Vec<usize>,
    pub embedding_dim: usize,
    pub socle_dim: usize,
    pub nil_index: usize,
    pub gorenstein: bool,
    pub graded: bool,
}

#[derive(Serialize, Debug, Clone)]
pub struct GrowthJson {
    pub recurrence: Option<Vec<String>>,
    pub recurrence_from: Option<usize>,
    pub char_poly: Option<Vec<String>>,
    pub curvature_low: Option<String>,
    pub curvature_high: Option<String>,
    pub classification: String,
    pub strictly_increasing_from: Option<usize>,
    pub exp_margin: String,
    pub isolation_width: String,
}

/// One run of the tool: inputs, results, and reproducibility data.
#[derive(Serialize, Debug, Clone)]
pub struct Envelope {
    pub tool_version: String,
    pub command: Vec<String>,
    pub inputs_hash: String,
    pub seed: u64,
    pub ring: Option<RingInfo>,
    pub module: Option<String>,
    pub betti: Vec<u64>,
    pub growth: Option<GrowthJson>,
    pub criteria: Vec<serde_json::Value>,
    pub findings: Vec<serde_json::Value>,
    pub table: Vec<String>,
    pub timing_ms: u64,
}

impl Envelope {
    pub fn new(command: Vec<String>, inputs_hash: String, seed: u64) -> Self {
        Envelope {
            tool_version: TOOL_VERSION.to_string(),
            command,
            inputs_hash,
            seed,
            ring: None,
            module: None,
            betti: Vec::new(),
            growth: None,
            criteria: Vec::new(),
            findings: Vec::new(),
            table: Vec::new(),
            timing_ms: 0,
        }
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.table.push(line.into());
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        for line in &self.table {
            out.push_str(line);
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }
}

#[derive(Clone, Copy)]
pub enum Round {
    Down,
    Up,
}

/// Decimal rendering of an exact rational with directed rounding, so printed
/// enclosures stay enclosures.
pub fn decimal(r: &BigRational, digits: u32, round: Round) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = r * BigRational::from_integer(scale.clone());
    let floor = scaled.floor().to_integer();
    let int = match round {
        Round::Down => floor,
        Round::Up => {
            if BigRational::from_integer(floor.clone()) == scaled {
                floor
            } else {
                floor + 1
            }
        }
    };
    let neg = int.is_negative();
    let mag = int.abs().to_string();
    let mag = if mag.len() <= digits as usize {
        format!("0.{:0>width$}", mag, width = digits as usize)
    } else {
        let split = mag.len() - digits as usize;
        format!("{}.{}", &mag[..split], &mag[split..])
    };
    if neg {
        format!("-{mag}")
    } else {
        mag
    }
}

pub fn rational_string(r: &BigRational) -> String {
    if r.denom().is_zero() {
        unreachable!("rationals have nonzero denominators")
    }
    r.to_string()
}

pub fn growth_json(report: &GrowthReport) -> GrowthJson {
    let rec: Option<&Recurrence> = report.recurrence.as_ref();
    GrowthJson {
        recurrence: rec.map(|r| r.coeffs.iter().map(rational_string).collect()),
        recurrence_from: rec.map(|r| r.n0),
        char_poly: report
            .char_poly
            .as_ref()
            .map(|p| p.iter().map(|c| c.to_string()).collect()),
        curvature_low: report.curvature_low.as_ref().map(|r| decimal(r, 12, Round::Down)),
        curvature_high: report.curvature_high.as_ref().map(|r| decimal(r, 12, Round::Up)),
        classification: report.classification.to_string(),
        strictly_increasing_from: report.strictly_increasing_from,
        exp_margin: rational_string(&report.exp_margin),
        isolation_width: rational_string(&report.isolation_width),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn directed_decimal_rounding() {
        assert_eq!(decimal(&q(1, 3), 6, Round::Down), "0.333333");
        assert_eq!(decimal(&q(1, 3), 6, Round::Up), "0.333334");
        assert_eq!(decimal(&q(2, 1), 3, Round::Down), "2.000");
        assert_eq!(decimal(&q(2, 1), 3, Round::Up), "2.000");
        assert_eq!(decimal(&q(-1, 3), 4, Round::Down), "-0.3334");
        assert_eq!(decimal(&q(-1, 3), 4, Round::Up), "-0.3333");
    }
}
