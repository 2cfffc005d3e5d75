//! One line of verification output.

use std::collections::BTreeMap;
use std::io::Write;

use nsg_core::Rational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    Mismatch,
    SkippedPrecondition,
}

/// A formula value checked against the brute-force oracle at one parameter
/// point. Field order is the wire order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub theorem: String,
    pub params: BTreeMap<String, i64>,
    pub formula: Value,
    pub oracle: Value,
    pub status: Status,
    pub residual: Option<f64>,
}

impl VerificationRecord {
    pub fn new(theorem: &str, params: &[(&str, i64)], formula: Value, oracle: Value) -> Self {
        let status = if formula == oracle {
            Status::Match
        } else {
            Status::Mismatch
        };
        Self {
            theorem: theorem.to_string(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            formula,
            oracle,
            status,
            residual: None,
        }
    }

    pub fn skipped(mut self) -> Self {
        self.status = Status::SkippedPrecondition;
        self
    }

    pub fn with_residual(mut self, residual: f64) -> Self {
        self.residual = Some(residual);
        self
    }

    /// Overrides the status computed from value equality.
    pub fn with_status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

pub fn int(x: i64) -> Value {
    json!(x)
}

pub fn pair(frobenius: i64, genus: i64) -> Value {
    json!({ "frobenius": frobenius, "genus": genus })
}

pub fn list(xs: &[i64]) -> Value {
    json!(xs)
}

/// Integers stay integers; anything else becomes a `"num/den"` string.
pub fn rational(r: Rational) -> Value {
    if r.is_integer() {
        json!(r.to_integer())
    } else {
        json!(format!("{}/{}", r.numer(), r.denom()))
    }
}

pub fn write_json<W: Write + ?Sized>(
    out: &mut W,
    records: &[VerificationRecord],
) -> std::io::Result<()> {
    for r in records {
        writeln!(out, "{}", r.to_json_line())?;
    }
    Ok(())
}

pub fn write_csv<W: Write>(out: W, records: &[VerificationRecord]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "theorem", "params", "formula", "oracle", "status", "residual",
    ])?;
    for r in records {
        let status = serde_json::to_value(r.status).expect("status serializes");
        w.write_record([
            r.theorem.clone(),
            r.params_string(),
            r.formula.to_string(),
            r.oracle.to_string(),
            status.as_str().unwrap_or_default().to_string(),
            r.residual.map(|x| x.to_string()).unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
