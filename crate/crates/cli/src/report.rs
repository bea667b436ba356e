//! Verification report rows and their text/JSON renderings.

use std::io::{self, Write};

use tanpick::Complex64;

use crate::output::{json_escape, json_f64, write_json_array};

/// One verified comparison: a named quantity, the two sides, and the verdict.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    /// Row id, stable across runs (e.g. "pick-axis").
    pub identity: String,
    /// Ordered input key/value pairs describing the row's parameters.
    pub inputs: Vec<(String, String)>,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub abs_err: f64,
    /// `abs_err / |rhs|` when the reference is nonzero, else `abs_err`.
    pub rel_err: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl VerificationReport {
    /// Build a row by comparing two complex values against a tolerance.
    pub fn compare(
        identity: &str,
        inputs: Vec<(String, String)>,
        lhs: Complex64,
        rhs: Complex64,
        tolerance: f64,
    ) -> Self {
        let abs_err = (lhs - rhs).norm();
        Self::with_error(identity, inputs, lhs, rhs, abs_err, tolerance)
    }

    /// Build a row whose error metric is supplied directly (for aggregate
    /// rows like "largest deviation over a grid").
    pub fn with_error(
        identity: &str,
        inputs: Vec<(String, String)>,
        lhs: Complex64,
        rhs: Complex64,
        abs_err: f64,
        tolerance: f64,
    ) -> Self {
        let denom = rhs.norm();
        let rel_err = if denom > 0.0 {
            abs_err / denom
        } else {
            abs_err
        };
        VerificationReport {
            identity: identity.to_owned(),
            inputs,
            lhs,
            rhs,
            abs_err,
            rel_err,
            tolerance,
            pass: abs_err <= tolerance,
        }
    }
}

fn inputs_summary(inputs: &[(String, String)]) -> String {
    inputs
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Render the report as an aligned text table with a summary line.
pub fn write_text(reports: &[VerificationReport], out: &mut dyn Write) -> io::Result<()> {
    let id_width = reports
        .iter()
        .map(|r| r.identity.len())
        .max()
        .unwrap_or(8)
        .max(8);
    let input_width = reports
        .iter()
        .map(|r| inputs_summary(&r.inputs).len())
        .max()
        .unwrap_or(6)
        .max(6);

    writeln!(
        out,
        "{:<id_width$}  {:<input_width$}  {:>12}  {:>12}  status",
        "identity", "inputs", "abs_err", "tolerance"
    )?;
    for r in reports {
        writeln!(
            out,
            "{:<id_width$}  {:<input_width$}  {:>12}  {:>12}  {}",
            r.identity,
            inputs_summary(&r.inputs),
            format!("{:.3e}", r.abs_err),
            format!("{:.1e}", r.tolerance),
            if r.pass { "PASS" } else { "FAIL" }
        )?;
    }
    let passed = reports.iter().filter(|r| r.pass).count();
    let verdict = if passed == reports.len() {
        "PASS"
    } else {
        "FAIL"
    };
    writeln!(
        out,
        "{verdict}: {passed} of {} rows within tolerance",
        reports.len()
    )
}

/// Render the report as a JSON array, full precision.
pub fn write_json(reports: &[VerificationReport], out: &mut dyn Write) -> io::Result<()> {
    let rows: Vec<String> = reports
        .iter()
        .map(|r| {
            let inputs = r
                .inputs
                .iter()
                .map(|(k, v)| format!("\"{}\":\"{}\"", json_escape(k), json_escape(v)))
                .collect::<Vec<_>>()
                .join(",");
            format!(
                "{{\"identity_id\":\"{}\",\"inputs\":{{{}}},\
                 \"lhs\":{{\"re\":{},\"im\":{}}},\"rhs\":{{\"re\":{},\"im\":{}}},\
                 \"abs_err\":{},\"rel_err\":{},\"tolerance\":{},\"pass\":{}}}",
                json_escape(&r.identity),
                inputs,
                json_f64(r.lhs.re),
                json_f64(r.lhs.im),
                json_f64(r.rhs.re),
                json_f64(r.rhs.im),
                json_f64(r.abs_err),
                json_f64(r.rel_err),
                json_f64(r.tolerance),
                r.pass
            )
        })
        .collect();
    write_json_array(out, &rows)
}
