//! Command-line front end: verification runner, table/sample/pmf emitters.
//!
//! Exit codes: 0 when everything requested passed, 1 when a verification
//! row failed its tolerance, 2 for usage or configuration errors (clap's
//! own parse failures also exit 2).

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub mod output;
pub mod report;
pub mod table;
pub mod verify;

use table::TableId;
use verify::IdentityId;

#[derive(Parser)]
#[command(
    name = "tanpick",
    version,
    about = "Numerical verification of the discrete Pick representation of tan(1/z) \
             and its compound-Poisson counterpart"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Verify identity groups against their closed forms
    Verify(VerifyArgs),
    /// Emit evaluation tables (CSV by default)
    Table(TableArgs),
    /// Draw reproducible samples, one value per line
    Sample(SampleArgs),
    /// Print an exact probability mass table
    Pmf(PmfArgs),
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Identity group: pick|eq6|eq7|k-map|skellam|bessel|all
    #[arg(long, value_parser = verify::parse_identity)]
    pub identity: Option<IdentityId>,
    /// Print the per-identity defaults table and exit
    #[arg(long)]
    pub show_defaults: bool,
    /// Override the truncation depth for the group
    #[arg(long)]
    pub terms: Option<u32>,
    /// Override every row tolerance in the group
    #[arg(long)]
    pub tol: Option<f64>,
    /// Override the group's sampling seed
    #[arg(long)]
    pub seed: Option<u64>,
    /// Emit the report as JSON instead of text
    #[arg(long)]
    pub json: bool,
    /// Write to a file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct TableArgs {
    /// Table id: eq5|corollary|exponent|eq7|m|levy
    #[arg(value_parser = table::parse_table_id)]
    pub id: TableId,
    /// Left end of the t grid
    #[arg(long, default_value_t = 0.25)]
    pub t_min: f64,
    /// Right end of the t grid
    #[arg(long, default_value_t = 4.0)]
    pub t_max: f64,
    /// Grid size for t or w grids
    #[arg(long, default_value_t = 16)]
    pub steps: u32,
    /// Left end of the w grid
    #[arg(long, default_value_t = 1.25)]
    pub w_min: f64,
    /// Right end of the w grid
    #[arg(long, default_value_t = 5.0)]
    pub w_max: f64,
    /// Number of random points for the complex grid table
    #[arg(long, default_value_t = 200)]
    pub count: u32,
    /// Truncation depth
    #[arg(long)]
    pub terms: Option<u32>,
    /// Seed for the complex grid table
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    /// Emit JSON instead of CSV
    #[arg(long)]
    pub json: bool,
    /// Write to a file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct SampleArgs {
    /// What to sample: x|y|skellam
    #[arg(value_parser = parse_sample_kind)]
    pub kind: SampleKind,
    /// Number of samples
    #[arg(long)]
    pub n: u64,
    /// Seed
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Stream id (independent streams share a seed)
    #[arg(long, default_value_t = 0)]
    pub stream: u64,
    /// Series truncation for x samples (also spelled --trunc)
    #[arg(long, alias = "trunc", default_value_t = 200)]
    pub terms: u32,
    /// Write to a file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleKind {
    X,
    Y,
    Skellam,
}

fn parse_sample_kind(s: &str) -> Result<SampleKind, String> {
    match s {
        "x" => Ok(SampleKind::X),
        "y" => Ok(SampleKind::Y),
        "skellam" => Ok(SampleKind::Skellam),
        other => Err(format!(
            "unknown sample kind '{other}' (expected x|y|skellam)"
        )),
    }
}

#[derive(Args)]
pub struct PmfArgs {
    /// Distribution name; only "skellam" is available
    #[arg(value_parser = parse_pmf_dist)]
    pub dist: String,
    /// Largest |k| to tabulate (at most 30)
    #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u32).range(0..=30))]
    pub max_k: u32,
    /// Output format
    #[arg(long, default_value = "csv", value_parser = parse_format)]
    pub format: OutputFormat,
    /// Write to a file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    match s {
        "csv" => Ok(OutputFormat::Csv),
        "json" => Ok(OutputFormat::Json),
        other => Err(format!("unknown format '{other}' (expected csv|json)")),
    }
}

fn parse_pmf_dist(s: &str) -> Result<String, String> {
    if s == "skellam" {
        Ok(s.to_owned())
    } else {
        Err(format!("unknown distribution '{s}' (expected skellam)"))
    }
}

/// Top-level entry point; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(all_passed) => {
            if all_passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Verify(args) => run_verify_command(args),
        Command::Table(args) => {
            let mut sink = output::sink(args.out.as_deref()).map_err(stringify)?;
            table::run_table(&args, &mut sink).map_err(stringify)?;
            sink.flush().map_err(stringify)?;
            Ok(true)
        }
        Command::Sample(args) => {
            let mut sink = output::sink(args.out.as_deref()).map_err(stringify)?;
            run_sample_command(&args, &mut sink).map_err(stringify)?;
            sink.flush().map_err(stringify)?;
            Ok(true)
        }
        Command::Pmf(args) => {
            let mut sink = output::sink(args.out.as_deref()).map_err(stringify)?;
            run_pmf_command(&args, &mut sink).map_err(stringify)?;
            sink.flush().map_err(stringify)?;
            Ok(true)
        }
    }
}

fn stringify<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn run_verify_command(args: VerifyArgs) -> Result<bool, String> {
    if args.show_defaults {
        let mut sink = output::sink(args.out.as_deref()).map_err(stringify)?;
        verify::write_defaults(&mut sink, args.json).map_err(stringify)?;
        sink.flush().map_err(stringify)?;
        return Ok(true);
    }
    let identity = args
        .identity
        .ok_or("verify needs --identity <id> or --show-defaults")?;
    let options = verify::VerifyOptions {
        identity,
        terms: args.terms,
        tol: args.tol,
        seed: args.seed,
    };
    let reports = verify::run_verify(&options)?;
    let mut sink = output::sink(args.out.as_deref()).map_err(stringify)?;
    if args.json {
        report::write_json(&reports, &mut sink).map_err(stringify)?;
    } else {
        report::write_text(&reports, &mut sink).map_err(stringify)?;
    }
    sink.flush().map_err(stringify)?;
    Ok(reports.iter().all(|r| r.pass))
}

fn run_sample_command(args: &SampleArgs, out: &mut dyn Write) -> std::io::Result<()> {
    use tanpick::sample::{sample_skellam_direct, sample_x, sample_y, RandomSource};
    use tanpick::TruncationSpec;

    let mut src = RandomSource::new(args.seed, args.stream);
    match args.kind {
        SampleKind::X => {
            let trunc = TruncationSpec::new(args.terms.max(1));
            for _ in 0..args.n {
                writeln!(out, "{}", output::fmt_f64(sample_x(&mut src, &trunc)))?;
            }
        }
        SampleKind::Y => {
            for _ in 0..args.n {
                writeln!(out, "{}", sample_y(&mut src))?;
            }
        }
        SampleKind::Skellam => {
            for _ in 0..args.n {
                writeln!(out, "{}", sample_skellam_direct(&mut src))?;
            }
        }
    }
    Ok(())
}

fn run_pmf_command(args: &PmfArgs, out: &mut dyn Write) -> std::io::Result<()> {
    use tanpick::sample::skellam_pmf;

    let max_k = args.max_k as i64;
    match args.format {
        OutputFormat::Csv => {
            writeln!(out, "k,pmf")?;
            for k in -max_k..=max_k {
                writeln!(out, "{},{}", k, output::fmt_f64(skellam_pmf(k)))?;
            }
        }
        OutputFormat::Json => {
            let mut rows = Vec::new();
            for k in -max_k..=max_k {
                rows.push(format!(
                    "{{\"k\":{},\"pmf\":{}}}",
                    k,
                    output::json_f64(skellam_pmf(k))
                ));
            }
            output::write_json_array(out, &rows)?;
        }
    }
    Ok(())
}
