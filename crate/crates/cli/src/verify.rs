//! Identity verification groups: defaults, override handling, runners.
//!
//! Each group turns into a list of [`VerificationReport`] rows with stable
//! ids, so repeated runs of `verify --json` are byte-identical. Tolerance
//! overrides apply to rows that compare numbers; structural rows (domain
//! guards, sign checks, monotonicity) keep their built-in pass criteria.

use std::io::{self, Write};

use tanpick::laplace::{
    cosh_centered_laplace_lhs, exponent_laplace_lhs, random_integral_exponent, LaplaceError,
};
use tanpick::measure::representing_measure;
use tanpick::pick::{pick_eval, tan_reciprocal, upper_half_plane_check};
use tanpick::quad::QuadratureSpec;
use tanpick::sample::{sample_skellam_direct, sample_y, sample_y_split, skellam_pmf, RandomSource};
use tanpick::series::{bessel_i_quadrature, bessel_i_series, bessel_sum_residual};
use tanpick::{Complex64, TruncationSpec};

use crate::output::json_escape;
use crate::report::VerificationReport;

/// Version tag for the defaults table layout.
pub const DEFAULTS_SCHEMA: &str = "v1";

const AXIS_T: [f64; 5] = [0.25, 0.5, 1.0, 2.0, 4.0];
const EQ7_W: [f64; 3] = [1.25, 2.0, 5.0];
const EQ7_W_LARGE: [f64; 3] = [10.0, 20.0, 40.0];

const PICK_TERMS: u32 = 100_000;
const PICK_AXIS_TOL: f64 = 1e-6;
const PICK_AXIS_REAL_TOL: f64 = 1e-12;
const PICK_GRID_TOL: f64 = 1e-3;
const PICK_GRID_SEED: u64 = 7;
const PICK_GRID_COUNT: usize = 200;
const EQ6_TERMS: u32 = 10_000;
const EQ6_TOL: f64 = 1e-5;
const EQ7_TERMS: u32 = 10_000;
const EQ7_TOL: f64 = 1e-4;
const EQ7_ASYMPTOTIC_TOL: f64 = 2e-2;
const KMAP_TERMS: u32 = 100_000;
const KMAP_TOL: f64 = 1e-6;
const SKELLAM_SEED: u64 = 11;
const SKELLAM_SAMPLES: u64 = 1_000_000;
const SKELLAM_MC_TOL: f64 = 3e-3;
const SKELLAM_PMF_SUM_TOL: f64 = 1e-12;
const SKELLAM_MOMENT_TOL: f64 = 5e-3;
const SKELLAM_VARIANCE_TOL: f64 = 2e-2;
const BESSEL_ORDER_TOL: f64 = 1e-10;
const BESSEL_SUM_TERMS: u32 = 20;
const BESSEL_SUM_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityId {
    Pick,
    Eq6,
    Eq7,
    KMap,
    Skellam,
    Bessel,
    All,
}

pub fn parse_identity(s: &str) -> Result<IdentityId, String> {
    match s {
        "pick" => Ok(IdentityId::Pick),
        "eq6" => Ok(IdentityId::Eq6),
        "eq7" => Ok(IdentityId::Eq7),
        "k-map" => Ok(IdentityId::KMap),
        "skellam" => Ok(IdentityId::Skellam),
        "bessel" => Ok(IdentityId::Bessel),
        "all" => Ok(IdentityId::All),
        other => Err(format!(
            "unknown identity '{other}' (expected pick|eq6|eq7|k-map|skellam|bessel|all)"
        )),
    }
}

pub struct VerifyOptions {
    pub identity: IdentityId,
    pub terms: Option<u32>,
    pub tol: Option<f64>,
    pub seed: Option<u64>,
}

/// Run one identity group (or all of them) and collect the report rows.
pub fn run_verify(opts: &VerifyOptions) -> Result<Vec<VerificationReport>, String> {
    if let Some(t) = opts.tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(format!("--tol must be a positive finite number, got {t}"));
        }
    }
    if opts.terms == Some(0) {
        return Err("--terms must be at least 1".to_owned());
    }
    match opts.identity {
        IdentityId::Pick => run_pick(opts),
        IdentityId::Eq6 => run_eq6(opts),
        IdentityId::Eq7 => run_eq7(opts),
        IdentityId::KMap => run_kmap(opts),
        IdentityId::Skellam => run_skellam(opts),
        IdentityId::Bessel => run_bessel(opts),
        IdentityId::All => {
            let mut rows = Vec::new();
            rows.extend(run_pick(opts)?);
            rows.extend(run_eq6(opts)?);
            rows.extend(run_eq7(opts)?);
            rows.extend(run_kmap(opts)?);
            rows.extend(run_skellam(opts)?);
            rows.extend(run_bessel(opts)?);
            Ok(rows)
        }
    }
}

/// Random complex test points: re and im uniform on (-5, 5), kept when
/// `0.2 <= |z| <= 5` and `|Im z| >= 0.2`, so every point is well inside the
/// transform's domain and away from the real axis.
pub fn admissible_grid(seed: u64, count: usize) -> Vec<Complex64> {
    let mut src = RandomSource::new(seed, 0);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let re = -5.0 + 10.0 * src.uniform();
        let im = -5.0 + 10.0 * src.uniform();
        let z = Complex64::new(re, im);
        let norm = z.norm();
        if (0.2..=5.0).contains(&norm) && im.abs() >= 0.2 {
            out.push(z);
        }
    }
    out
}

fn run_pick(opts: &VerifyOptions) -> Result<Vec<VerificationReport>, String> {
    let trunc = TruncationSpec::new(opts.terms.unwrap_or(PICK_TERMS));
    let seed = opts.seed.unwrap_or(PICK_GRID_SEED);
    let m = representing_measure(&trunc);
    let zero = Complex64::new(0.0, 0.0);
    let mut rows = Vec::new();

    for &t in &AXIS_T {
        for sign in [1.0, -1.0] {
            let tt = sign * t;
            let z = Complex64::new(0.0, tt);
            let lhs = pick_eval(&m, z).map_err(|e| e.to_string())?;
            let rhs = tan_reciprocal(z).map_err(|e| e.to_string())?;
            rows.push(VerificationReport::compare(
                "pick-axis",
                vec![("t".into(), format!("{tt}"))],
                lhs,
                rhs,
                opts.tol.unwrap_or(PICK_AXIS_TOL),
            ));
            rows.push(VerificationReport::compare(
                "pick-axis-real-part",
                vec![("t".into(), format!("{tt}"))],
                Complex64::new(lhs.re, 0.0),
                zero,
                opts.tol.unwrap_or(PICK_AXIS_REAL_TOL),
            ));
        }
    }

    let grid = admissible_grid(seed, PICK_GRID_COUNT);
    let mut worst = (0.0f64, zero, zero, zero);
    let mut violations = 0u32;
    for &z in &grid {
        let lhs = pick_eval(&m, z).map_err(|e| e.to_string())?;
        let rhs = tan_reciprocal(z).map_err(|e| e.to_string())?;
        let err = (lhs - rhs).norm();
        if err > worst.0 {
            worst = (err, z, lhs, rhs);
        }
        // The sign property is stated on the upper half plane; reflect
        // lower-half points up (the map commutes with conjugation).
        let zu = if z.im > 0.0 { z } else { z.conj() };
        if !matches!(upper_half_plane_check(&m, zu), Ok(true)) {
            violations += 1;
        }
    }
    rows.push(VerificationReport::with_error(
        "pick-grid",
        vec![
            ("points".into(), format!("{PICK_GRID_COUNT}")),
            ("seed".into(), format!("{seed}")),
            ("worst_re".into(), format!("{:.6}", worst.1.re)),
            ("worst_im".into(), format!("{:.6}", worst.1.im)),
        ],
        worst.2,
        worst.3,
        worst.0,
        opts.tol.unwrap_or(PICK_GRID_TOL),
    ));
    rows.push(VerificationReport::with_error(
        "pick-half-plane",
        vec![
            ("points".into(), format!("{PICK_GRID_COUNT}")),
            ("seed".into(), format!("{seed}")),
            ("metric".into(), "sign violations".into()),
        ],
        Complex64::new(f64::from(violations), 0.0),
        zero,
        f64::from(violations),
        0.5,
    ));
    Ok(rows)
}

fn run_eq6(opts: &VerifyOptions) -> Result<Vec<VerificationReport>, String> {
    let trunc = TruncationSpec::new(opts.terms.unwrap_or(EQ6_TERMS));
    let adaptive = QuadratureSpec::adaptive_default();
    let weighted = QuadratureSpec::exp_weighted_default();
    let mut rows = Vec::new();
    for &t in &AXIS_T {
        let a = exponent_laplace_lhs(t, &trunc, &adaptive).map_err(|e| e.to_string())?;
        let k = random_integral_exponent(1.0 / t, &trunc, &weighted);
        let b = Complex64::new(0.0, t * k);
        let c = tan_reciprocal(Complex64::new(0.0, t)).map_err(|e| e.to_string())?;
        let err = (a - b).norm().max((a - c).norm()).max((b - c).norm());
        rows.push(VerificationReport::with_error(
            "eq6-chain",
            vec![
                ("t".into(), format!("{t}")),
                (
                    "laplace_vs_weighted".into(),
                    format!("{:.2e}", (a - b).norm()),
                ),
                (
                    "laplace_vs_closed".into(),
                    format!("{:.2e}", (a - c).norm()),
                ),
                (
                    "weighted_vs_closed".into(),
                    format!("{:.2e}", (b - c).norm()),
                ),
            ],
            a,
            c,
            err,
            opts.tol.unwrap_or(EQ6_TOL),
        ));
    }
    Ok(rows)
}

fn run_eq7(opts: &VerifyOptions) -> Result<Vec<VerificationReport>, String> {
    let trunc = TruncationSpec::new(opts.terms.unwrap_or(EQ7_TERMS));
    let adaptive = QuadratureSpec::adaptive_default();
    let zero = Complex64::new(0.0, 0.0);
    let mut rows = Vec::new();
    for &w in &EQ7_W {
        let lhs = cosh_centered_laplace_lhs(w, &trunc, &adaptive).map_err(|e| e.to_string())?;
        let rhs = -(1.0 / w).tanh();
        rows.push(VerificationReport::compare(
            "eq7-closed-form",
            vec![("w".into(), format!("{w}"))],
            Complex64::new(lhs, 0.0),
            Complex64::new(rhs, 0.0),
            opts.tol.unwrap_or(EQ7_TOL),
        ));
    }
    for &w in &EQ7_W_LARGE {
        let lhs = cosh_centered_laplace_lhs(w, &trunc, &adaptive).map_err(|e| e.to_string())?;
        // Large w: the transform approaches -1/w; compare relative to that.
        let err = (w * lhs + 1.0).abs();
        rows.push(VerificationReport::with_error(
            "eq7-asymptotic",
            vec![
                ("w".into(), format!("{w}")),
                ("metric".into(), "relative".into()),
            ],
            Complex64::new(lhs, 0.0),
            Complex64::new(-1.0 / w, 0.0),
            err,
            opts.tol.unwrap_or(EQ7_ASYMPTOTIC_TOL),
        ));
    }
    let guard_ok = matches!(
        cosh_centered_laplace_lhs(1.0, &trunc, &adaptive),
        Err(LaplaceError::DomainError { .. })
    );
    rows.push(VerificationReport::with_error(
        "eq7-domain-guard",
        vec![
            ("w".into(), "1".into()),
            ("expects".into(), "domain error".into()),
        ],
        zero,
        zero,
        if guard_ok { 0.0 } else { 1.0 },
        0.5,
    ));
    Ok(rows)
}

fn run_kmap(opts: &VerifyOptions) -> Result<Vec<VerificationReport>, String> {
    let trunc = TruncationSpec::new(opts.terms.unwrap_or(KMAP_TERMS));
    let weighted = QuadratureSpec::exp_weighted_default();
    let mut rows = Vec::new();
    for &t in &AXIS_T {
        let lhs = random_integral_exponent(t, &trunc, &weighted);
        let rhs = -t * t.tanh();
        rows.push(VerificationReport::compare(
            "k-map-exponent",
            vec![("t".into(), format!("{t}"))],
            Complex64::new(lhs, 0.0),
            Complex64::new(rhs, 0.0),
            opts.tol.unwrap_or(KMAP_TOL),
        ));
    }
    Ok(rows)
}

fn poisson1_pmf(k: usize) -> f64 {
    let mut p = (-1.0f64).exp();
    for j in 1..=k {
        p /= j as f64;
    }
    p
}

/// Largest deviation between an empirical histogram over `k = -8..=8` and
/// the exact pmf; returns the deviation and the cell where it occurs.
fn max_cell_deviation(counts: &[u64; 17], n: u64) -> (f64, i64, f64, f64) {
    let mut worst = (0.0f64, 0i64, 0.0f64, 0.0f64);
    for k in -8i64..=8 {
        let emp = counts[(k + 8) as usize] as f64 / n as f64;
        let exact = skellam_pmf(k);
        let dev = (emp - exact).abs();
        if dev > worst.0 {
            worst = (dev, k, emp, exact);
        }
    }
    worst
}

fn run_skellam(opts: &VerifyOptions) -> Result<Vec<VerificationReport>, String> {
    let seed = opts.seed.unwrap_or(SKELLAM_SEED);
    let n = SKELLAM_SAMPLES;
    let nf = n as f64;
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let mut rows = Vec::new();

    let pmf_sum: f64 = (-30i64..=30).map(skellam_pmf).sum();
    rows.push(VerificationReport::compare(
        "skellam-pmf-sum",
        vec![("range".into(), "|k| <= 30".into())],
        Complex64::new(pmf_sum, 0.0),
        one,
        opts.tol.unwrap_or(SKELLAM_PMF_SUM_TOL),
    ));

    // Compound-Poisson block sampler (stream 0): histogram plus moments.
    let mut src = RandomSource::new(seed, 0);
    let mut counts = [0u64; 17];
    let (mut s1, mut s2) = (0.0f64, 0.0f64);
    for _ in 0..n {
        let y = sample_y(&mut src);
        s1 += y as f64;
        s2 += (y * y) as f64;
        if (-8..=8).contains(&y) {
            counts[(y + 8) as usize] += 1;
        }
    }
    let mean = s1 / nf;
    let var = s2 / nf - mean * mean;
    let (dev, cell, emp, exact) = max_cell_deviation(&counts, n);
    let mc_inputs = |cell: i64| {
        vec![
            ("samples".into(), format!("{n}")),
            ("seed".into(), format!("{seed}")),
            ("worst_cell".into(), format!("{cell}")),
        ]
    };
    rows.push(VerificationReport::with_error(
        "skellam-mc-block",
        mc_inputs(cell),
        Complex64::new(emp, 0.0),
        Complex64::new(exact, 0.0),
        dev,
        opts.tol.unwrap_or(SKELLAM_MC_TOL),
    ));
    rows.push(VerificationReport::compare(
        "skellam-block-mean",
        vec![
            ("samples".into(), format!("{n}")),
            ("seed".into(), format!("{seed}")),
        ],
        Complex64::new(mean, 0.0),
        zero,
        opts.tol.unwrap_or(SKELLAM_MOMENT_TOL),
    ));
    rows.push(VerificationReport::compare(
        "skellam-block-variance",
        vec![
            ("samples".into(), format!("{n}")),
            ("seed".into(), format!("{seed}")),
        ],
        Complex64::new(var, 0.0),
        Complex64::new(2.0, 0.0),
        opts.tol.unwrap_or(SKELLAM_VARIANCE_TOL),
    ));

    // Direct difference-of-Poissons sampler (stream 1).
    let mut src = RandomSource::new(seed, 1);
    let mut counts = [0u64; 17];
    for _ in 0..n {
        let y = sample_skellam_direct(&mut src);
        if (-8..=8).contains(&y) {
            counts[(y + 8) as usize] += 1;
        }
    }
    let (dev, cell, emp, exact) = max_cell_deviation(&counts, n);
    rows.push(VerificationReport::with_error(
        "skellam-mc-direct",
        mc_inputs(cell),
        Complex64::new(emp, 0.0),
        Complex64::new(exact, 0.0),
        dev,
        opts.tol.unwrap_or(SKELLAM_MC_TOL),
    ));

    // Split sampler (stream 2): marginals must each be Poisson(1) and the
    // two halves uncorrelated.
    let mut src = RandomSource::new(seed, 2);
    let mut plus_counts = [0u64; 9];
    let mut minus_counts = [0u64; 9];
    let (mut sp, mut sm) = (0.0f64, 0.0f64);
    let mut spm = 0.0f64;
    for _ in 0..n {
        let (p, m) = sample_y_split(&mut src);
        if p <= 8 {
            plus_counts[p as usize] += 1;
        }
        if m <= 8 {
            minus_counts[m as usize] += 1;
        }
        sp += p as f64;
        sm += m as f64;
        spm += (p * m) as f64;
    }
    let cov = spm / nf - (sp / nf) * (sm / nf);
    for (name, counts) in [
        ("skellam-marginal-plus", &plus_counts),
        ("skellam-marginal-minus", &minus_counts),
    ] {
        let mut worst = (0.0f64, 0usize, 0.0f64, 0.0f64);
        for (k, &c) in counts.iter().enumerate() {
            let emp = c as f64 / nf;
            let exact = poisson1_pmf(k);
            let dev = (emp - exact).abs();
            if dev > worst.0 {
                worst = (dev, k, emp, exact);
            }
        }
        rows.push(VerificationReport::with_error(
            name,
            vec![
                ("samples".into(), format!("{n}")),
                ("seed".into(), format!("{seed}")),
                ("worst_cell".into(), format!("{}", worst.1)),
            ],
            Complex64::new(worst.2, 0.0),
            Complex64::new(worst.3, 0.0),
            worst.0,
            opts.tol.unwrap_or(SKELLAM_MC_TOL),
        ));
    }
    rows.push(VerificationReport::compare(
        "skellam-split-covariance",
        vec![
            ("samples".into(), format!("{n}")),
            ("seed".into(), format!("{seed}")),
        ],
        Complex64::new(cov, 0.0),
        zero,
        opts.tol.unwrap_or(SKELLAM_MOMENT_TOL),
    ));
    Ok(rows)
}

fn run_bessel(opts: &VerifyOptions) -> Result<Vec<VerificationReport>, String> {
    let zero = Complex64::new(0.0, 0.0);
    let mut rows = Vec::new();
    for k in 1..=10u32 {
        let lhs = bessel_i_quadrature(k).map_err(|e| e.to_string())?;
        let rhs = bessel_i_series(k, 2.0);
        rows.push(VerificationReport::compare(
            "bessel-series-vs-quadrature",
            vec![("k".into(), format!("{k}"))],
            Complex64::new(lhs, 0.0),
            Complex64::new(rhs, 0.0),
            opts.tol.unwrap_or(BESSEL_ORDER_TOL),
        ));
    }

    let terms = opts.terms.unwrap_or(BESSEL_SUM_TERMS);
    let residual = bessel_sum_residual(terms);
    rows.push(VerificationReport::with_error(
        "bessel-sum-identity",
        vec![("terms".into(), format!("{terms}"))],
        Complex64::new(residual, 0.0),
        zero,
        residual,
        opts.tol.unwrap_or(BESSEL_SUM_TOL),
    ));

    let orders = [1u32, 3, 5, 8, 10, 15];
    let residuals: Vec<f64> = orders.iter().map(|&k| bessel_sum_residual(k)).collect();
    let violations = residuals.windows(2).filter(|w| w[1] >= w[0]).count();
    rows.push(VerificationReport::with_error(
        "bessel-residual-monotone",
        vec![
            ("orders".into(), "1,3,5,8,10,15".into()),
            ("metric".into(), "ordering violations".into()),
        ],
        Complex64::new(violations as f64, 0.0),
        zero,
        violations as f64,
        0.5,
    ));
    Ok(rows)
}

struct DefaultRow {
    identity: &'static str,
    row: &'static str,
    terms: &'static str,
    tol: &'static str,
    seed: &'static str,
    grid: &'static str,
}

const DEFAULTS: &[DefaultRow] = &[
    DefaultRow {
        identity: "pick",
        row: "pick-axis",
        terms: "100000",
        tol: "1e-6",
        seed: "-",
        grid: "t in +/-{0.25,0.5,1,2,4}",
    },
    DefaultRow {
        identity: "pick",
        row: "pick-axis-real-part",
        terms: "100000",
        tol: "1e-12",
        seed: "-",
        grid: "same axis points",
    },
    DefaultRow {
        identity: "pick",
        row: "pick-grid",
        terms: "100000",
        tol: "1e-3",
        seed: "7",
        grid: "200 admissible complex points",
    },
    DefaultRow {
        identity: "pick",
        row: "pick-half-plane",
        terms: "100000",
        tol: "exact",
        seed: "7",
        grid: "sign check at the same points",
    },
    DefaultRow {
        identity: "eq6",
        row: "eq6-chain",
        terms: "10000",
        tol: "1e-5",
        seed: "-",
        grid: "t in {0.25,0.5,1,2,4}",
    },
    DefaultRow {
        identity: "eq7",
        row: "eq7-closed-form",
        terms: "10000",
        tol: "1e-4",
        seed: "-",
        grid: "w in {1.25,2,5}",
    },
    DefaultRow {
        identity: "eq7",
        row: "eq7-asymptotic",
        terms: "10000",
        tol: "2e-2",
        seed: "-",
        grid: "w in {10,20,40}, relative to -1/w",
    },
    DefaultRow {
        identity: "eq7",
        row: "eq7-domain-guard",
        terms: "10000",
        tol: "exact",
        seed: "-",
        grid: "w = 1 must be refused",
    },
    DefaultRow {
        identity: "k-map",
        row: "k-map-exponent",
        terms: "100000",
        tol: "1e-6",
        seed: "-",
        grid: "t in {0.25,0.5,1,2,4}",
    },
    DefaultRow {
        identity: "skellam",
        row: "skellam-pmf-sum",
        terms: "-",
        tol: "1e-12",
        seed: "-",
        grid: "|k| <= 30",
    },
    DefaultRow {
        identity: "skellam",
        row: "skellam-mc-block",
        terms: "-",
        tol: "3e-3",
        seed: "11",
        grid: "1000000 samples, cells |k| <= 8",
    },
    DefaultRow {
        identity: "skellam",
        row: "skellam-block-mean",
        terms: "-",
        tol: "5e-3",
        seed: "11",
        grid: "1000000 samples",
    },
    DefaultRow {
        identity: "skellam",
        row: "skellam-block-variance",
        terms: "-",
        tol: "2e-2",
        seed: "11",
        grid: "1000000 samples",
    },
    DefaultRow {
        identity: "skellam",
        row: "skellam-mc-direct",
        terms: "-",
        tol: "3e-3",
        seed: "11",
        grid: "1000000 samples, cells |k| <= 8",
    },
    DefaultRow {
        identity: "skellam",
        row: "skellam-marginal-plus",
        terms: "-",
        tol: "3e-3",
        seed: "11",
        grid: "1000000 samples, cells 0..=8",
    },
    DefaultRow {
        identity: "skellam",
        row: "skellam-marginal-minus",
        terms: "-",
        tol: "3e-3",
        seed: "11",
        grid: "1000000 samples, cells 0..=8",
    },
    DefaultRow {
        identity: "skellam",
        row: "skellam-split-covariance",
        terms: "-",
        tol: "5e-3",
        seed: "11",
        grid: "1000000 samples",
    },
    DefaultRow {
        identity: "bessel",
        row: "bessel-series-vs-quadrature",
        terms: "-",
        tol: "1e-10",
        seed: "-",
        grid: "orders 1..=10",
    },
    DefaultRow {
        identity: "bessel",
        row: "bessel-sum-identity",
        terms: "20",
        tol: "1e-12",
        seed: "-",
        grid: "single residual",
    },
    DefaultRow {
        identity: "bessel",
        row: "bessel-residual-monotone",
        terms: "-",
        tol: "exact",
        seed: "-",
        grid: "orders {1,3,5,8,10,15}",
    },
];

/// Print the defaults table. Overrides: --terms and --seed replace the
/// group's values where one appears above; --tol replaces the tolerance of
/// every comparison row in the group ("exact" rows are unaffected).
pub fn write_defaults(out: &mut dyn Write, json: bool) -> io::Result<()> {
    if json {
        writeln!(out, "{{")?;
        writeln!(out, "  \"schema\": \"{DEFAULTS_SCHEMA}\",")?;
        writeln!(out, "  \"rows\": [")?;
        for (i, r) in DEFAULTS.iter().enumerate() {
            let comma = if i + 1 == DEFAULTS.len() { "" } else { "," };
            writeln!(
                out,
                "    {{\"identity\":\"{}\",\"row\":\"{}\",\"terms\":\"{}\",\"tol\":\"{}\",\"seed\":\"{}\",\"grid\":\"{}\"}}{}",
                json_escape(r.identity),
                json_escape(r.row),
                json_escape(r.terms),
                json_escape(r.tol),
                json_escape(r.seed),
                json_escape(r.grid),
                comma
            )?;
        }
        writeln!(out, "  ]")?;
        writeln!(out, "}}")
    } else {
        writeln!(out, "defaults schema {DEFAULTS_SCHEMA}")?;
        writeln!(
            out,
            "{:<8}  {:<27}  {:>7}  {:>6}  {:>4}  grid",
            "identity", "row", "terms", "tol", "seed"
        )?;
        for r in DEFAULTS {
            writeln!(
                out,
                "{:<8}  {:<27}  {:>7}  {:>6}  {:>4}  {}",
                r.identity, r.row, r.terms, r.tol, r.seed, r.grid
            )?;
        }
        Ok(())
    }
}
