//! Evaluation tables: grids of identity values as CSV or JSON.
//!
//! Column layouts are part of the CLI contract and must not drift; tests
//! pin the exact header strings.

use std::io::Write;

use tanpick::laplace::{cosh_centered_laplace_lhs, random_integral_exponent};
use tanpick::measure::{levy_measure, representing_measure};
use tanpick::pick::{pick_eval, tan_reciprocal};
use tanpick::quad::QuadratureSpec;
use tanpick::{Complex64, TruncationSpec};

use crate::output::{fmt_f64, write_json_array};
use crate::verify::admissible_grid;
use crate::TableArgs;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableId {
    /// Axis comparison of the transform with tan(1/z).
    Eq5,
    /// Complex-grid comparison of the transform with tan(1/z).
    Corollary,
    /// Exponential random-integral exponent against -t tanh(t).
    Exponent,
    /// Cosh-centered transform against -tanh(1/w).
    Eq7,
    /// Atoms of the finite representing measure.
    M,
    /// Atoms of the unit-mass jump measure.
    Levy,
}

pub fn parse_table_id(s: &str) -> Result<TableId, String> {
    match s {
        "eq5" => Ok(TableId::Eq5),
        "corollary" => Ok(TableId::Corollary),
        "exponent" => Ok(TableId::Exponent),
        "eq7" => Ok(TableId::Eq7),
        "m" => Ok(TableId::M),
        "levy" => Ok(TableId::Levy),
        other => Err(format!(
            "unknown table '{other}' (expected eq5|corollary|exponent|eq7|m|levy)"
        )),
    }
}

fn linspace(a: f64, b: f64, steps: u32) -> Vec<f64> {
    if steps <= 1 {
        return vec![a];
    }
    (0..steps)
        .map(|j| a + (b - a) * j as f64 / (steps - 1) as f64)
        .collect()
}

/// Emit `rows` under `columns`, as CSV (header line first) or as a JSON
/// array of objects keyed by the column names.
fn emit(
    out: &mut dyn Write,
    columns: &[&str],
    rows: &[Vec<String>],
    json: bool,
) -> std::io::Result<()> {
    if json {
        let objects: Vec<String> = rows
            .iter()
            .map(|row| {
                let fields: Vec<String> = columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| format!("\"{c}\":{v}"))
                    .collect();
                format!("{{{}}}", fields.join(","))
            })
            .collect();
        write_json_array(out, &objects)
    } else {
        writeln!(out, "{}", columns.join(","))?;
        for row in rows {
            writeln!(out, "{}", row.join(","))?;
        }
        Ok(())
    }
}

pub fn run_table(args: &TableArgs, out: &mut dyn Write) -> Result<(), String> {
    if args.terms == Some(0) {
        return Err("--terms must be at least 1".to_owned());
    }
    if args.steps == 0 {
        return Err("--steps must be at least 1".to_owned());
    }
    let terms = args.terms.unwrap_or(10_000);
    let trunc = TruncationSpec::new(terms);
    let io_err = |e: std::io::Error| e.to_string();

    match args.id {
        TableId::Eq5 => {
            let m = representing_measure(&trunc);
            let mut rows = Vec::new();
            for t in linspace(args.t_min, args.t_max, args.steps) {
                let z = Complex64::new(0.0, t);
                let lhs = pick_eval(&m, z).map_err(|e| e.to_string())?;
                let rhs = tan_reciprocal(z).map_err(|e| e.to_string())?;
                rows.push(vec![
                    fmt_f64(t),
                    fmt_f64(lhs.re),
                    fmt_f64(lhs.im),
                    fmt_f64(rhs.re),
                    fmt_f64(rhs.im),
                    fmt_f64((lhs - rhs).norm()),
                ]);
            }
            emit(
                out,
                &["t", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_err"],
                &rows,
                args.json,
            )
            .map_err(io_err)
        }
        TableId::Corollary => {
            let m = representing_measure(&trunc);
            let mut rows = Vec::new();
            for z in admissible_grid(args.seed, args.count as usize) {
                let lhs = pick_eval(&m, z).map_err(|e| e.to_string())?;
                let rhs = tan_reciprocal(z).map_err(|e| e.to_string())?;
                rows.push(vec![
                    fmt_f64(z.re),
                    fmt_f64(z.im),
                    fmt_f64(lhs.re),
                    fmt_f64(lhs.im),
                    fmt_f64(rhs.re),
                    fmt_f64(rhs.im),
                    fmt_f64((lhs - rhs).norm()),
                ]);
            }
            emit(
                out,
                &[
                    "z_re", "z_im", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_err",
                ],
                &rows,
                args.json,
            )
            .map_err(io_err)
        }
        TableId::Exponent => {
            let spec = QuadratureSpec::exp_weighted_default();
            let mut rows = Vec::new();
            for t in linspace(args.t_min, args.t_max, args.steps) {
                let k = random_integral_exponent(t, &trunc, &spec);
                let closed = -t * t.tanh();
                rows.push(vec![
                    fmt_f64(t),
                    fmt_f64(k),
                    fmt_f64(closed),
                    fmt_f64((k - closed).abs()),
                ]);
            }
            emit(
                out,
                &["t", "k_exponent", "closed_form", "abs_err"],
                &rows,
                args.json,
            )
            .map_err(io_err)
        }
        TableId::Eq7 => {
            let spec = QuadratureSpec::adaptive_default();
            let mut rows = Vec::new();
            for w in linspace(args.w_min, args.w_max, args.steps) {
                let lhs = cosh_centered_laplace_lhs(w, &trunc, &spec).map_err(|e| e.to_string())?;
                let rhs = -(1.0 / w).tanh();
                rows.push(vec![
                    fmt_f64(w),
                    fmt_f64(lhs),
                    fmt_f64(rhs),
                    fmt_f64((lhs - rhs).abs()),
                ]);
            }
            emit(out, &["w", "lhs", "rhs", "abs_err"], &rows, args.json).map_err(io_err)
        }
        TableId::M | TableId::Levy => {
            let m = if args.id == TableId::M {
                representing_measure(&trunc)
            } else {
                levy_measure(&trunc)
            };
            let rows: Vec<Vec<String>> = m
                .atoms()
                .iter()
                .map(|a| vec![fmt_f64(a.location), fmt_f64(a.mass)])
                .collect();
            emit(out, &["location", "mass"], &rows, args.json).map_err(io_err)
        }
    }
}
