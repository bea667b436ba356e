//! Shared output plumbing: float formatting, JSON emission, sinks.
//!
//! Every float crosses the process boundary through [`fmt_f64`], which
//! prints 17 significant digits so the printed value round-trips to the
//! exact f64. That is what makes repeated runs byte-comparable.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

/// Format a float with 17 significant digits in scientific notation.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Like [`fmt_f64`] but safe inside JSON: non-finite values become `null`.
pub fn json_f64(x: f64) -> String {
    if x.is_finite() {
        fmt_f64(x)
    } else {
        "null".to_owned()
    }
}

/// Escape a string for inclusion inside JSON quotes.
pub fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

/// Write a JSON array of pre-rendered object strings, one per line.
pub fn write_json_array(out: &mut dyn Write, rows: &[String]) -> io::Result<()> {
    writeln!(out, "[")?;
    for (i, row) in rows.iter().enumerate() {
        let comma = if i + 1 == rows.len() { "" } else { "," };
        writeln!(out, "  {row}{comma}")?;
    }
    writeln!(out, "]")
}

/// Open the output sink: a buffered file if a path was given, else stdout.
pub fn sink(path: Option<&Path>) -> io::Result<Box<dyn Write>> {
    match path {
        Some(p) => Ok(Box::new(BufWriter::new(File::create(p)?))),
        None => Ok(Box::new(BufWriter::new(io::stdout()))),
    }
}
