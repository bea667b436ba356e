//! Reproducible sampling for the laws behind the identities.
//!
//! The distributional picture: with `N ~ Poisson(2)` and i.i.d. Rademacher
//! signs `r_j`, the block variable `Y = r_1 + ... + r_N` is Skellam(1,1)
//! distributed, identical in law to the difference of two independent
//! Poisson(1) counts, with pmf `P(Y=k) = e^{-2} I_{|k|}(2)`. The series
//! variable
//!
//! ```text
//! X = sum_{n>=1} x_n * Y_n,   x_n = 2/((2n-1)*pi),
//! ```
//!
//! with independent blocks `Y_n` has characteristic function
//! `exp(sum_n 2(cos(t x_n) - 1))`, i.e. the compound Poisson law whose Levy
//! measure is the unit-mass atom family; truncating at `num_terms` blocks
//! matches the truncated exponent exactly. Var(X) = 1 in the full series.
//!
//! Randomness comes from ChaCha8 keyed by `(seed, stream_id)`; every
//! sampler consumes the stream in a documented order, so results are
//! bit-reproducible across platforms and runs.

use alloc::vec::Vec;
use num_complex::Complex64;
#[allow(unused_imports)] // the standalone no_std build resolves f64 math through this trait
use num_traits::Float;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::series::{self, TruncationSpec};

/// Default number of series blocks for `sample_x`.
pub const DEFAULT_SAMPLE_BLOCKS: u32 = 200;

/// `2^-53`, scaling a 53-bit integer into `[0, 1)`.
const UNIFORM_SCALE: f64 = 1.0 / 9007199254740992.0;

/// Errors from the sampling utilities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleError {
    /// The empirical characteristic function needs at least one sample.
    EmptySample,
}

impl core::fmt::Display for SampleError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Self::EmptySample => write!(f, "empty sample"),
        }
    }
}

impl core::error::Error for SampleError {}

/// Deterministic randomness: ChaCha8 keyed by a seed and a stream id.
///
/// Distinct stream ids on the same seed give independent streams, which is
/// how parallel batches stay reproducible without coordinating.
pub struct RandomSource {
    rng: ChaCha8Rng,
}

impl RandomSource {
    pub fn new(seed: u64, stream_id: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream_id);
        Self { rng }
    }

    /// Uniform on `[0, 1)` from the top 53 bits of one 64-bit word.
    pub fn uniform(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * UNIFORM_SCALE
    }

    /// A single Rademacher sign from one 64-bit word's low bit.
    pub fn sign(&mut self) -> i8 {
        if self.rng.next_u64() & 1 == 1 {
            1
        } else {
            -1
        }
    }
}

/// `n` i.i.d. Rademacher signs.
pub fn sample_rademacher(src: &mut RandomSource, n: usize) -> Vec<i8> {
    (0..n).map(|_| src.sign()).collect()
}

/// Poisson count by CDF inversion from a single uniform.
///
/// Exact and deterministic; meant for moderate intensities (the loop length
/// is about `lambda + O(sqrt(lambda))`).
pub fn sample_poisson(src: &mut RandomSource, lambda: f64) -> u64 {
    debug_assert!(lambda > 0.0 && lambda.is_finite());
    let u = src.uniform();
    let mut p = (-lambda).exp();
    let mut cdf = p;
    let mut k = 0u64;
    while u >= cdf {
        k += 1;
        p *= lambda / k as f64;
        cdf += p;
        if p < 1e-300 {
            // u landed in the rounding gap above the saturated CDF.
            break;
        }
    }
    k
}

/// One compound block as the pair (positive jumps, negative jumps):
/// `N ~ Poisson(2)` jumps, each signed by an independent Rademacher draw.
///
/// Stream order: one uniform for `N`, then `N` sign words.
pub fn sample_y_split(src: &mut RandomSource) -> (u64, u64) {
    let n = sample_poisson(src, 2.0);
    let mut plus = 0u64;
    for _ in 0..n {
        if src.sign() == 1 {
            plus += 1;
        }
    }
    (plus, n - plus)
}

/// One compound block `Y = sum of N Rademacher jumps`; Skellam(1,1) in law.
///
/// Consumes the stream exactly like `sample_y_split`.
pub fn sample_y(src: &mut RandomSource) -> i64 {
    let (plus, minus) = sample_y_split(src);
    plus as i64 - minus as i64
}

/// Skellam(lambda_plus, lambda_minus) as a difference of two independent
/// Poisson draws, the positive intensity consumed first.
pub fn sample_skellam(src: &mut RandomSource, lambda_plus: f64, lambda_minus: f64) -> i64 {
    let p = sample_poisson(src, lambda_plus);
    let m = sample_poisson(src, lambda_minus);
    p as i64 - m as i64
}

/// Skellam(1,1), the law the compound block must reproduce.
pub fn sample_skellam_direct(src: &mut RandomSource) -> i64 {
    sample_skellam(src, 1.0, 1.0)
}

/// Exact Skellam(1,1) pmf, `P(Y = k) = e^{-2} I_{|k|}(2)`.
pub fn skellam_pmf(k: i64) -> f64 {
    let a = k.unsigned_abs();
    if a > 300 {
        // I_a(2) underflows f64 far earlier; avoid the cast entirely.
        return 0.0;
    }
    (-2.0f64).exp() * series::bessel_i_series(a as u32, 2.0)
}

/// One sample of the series variable `X`, truncated at `trunc.num_terms`
/// blocks (the tail-correction flag plays no role in sampling).
///
/// Blocks are drawn in order `n = 1, 2, ...`, so the stream layout is
/// reproducible for any truncation depth.
pub fn sample_x(src: &mut RandomSource, trunc: &TruncationSpec) -> f64 {
    let mut sum = 0.0;
    for n in 1..=trunc.num_terms {
        let x = 2.0 / ((2 * n - 1) as f64 * core::f64::consts::PI);
        let (plus, minus) = sample_y_split(src);
        sum += x * (plus as f64 - minus as f64);
    }
    sum
}

/// Empirical characteristic function on a frequency grid.
#[derive(Clone, Debug, PartialEq)]
pub struct EcfEstimate {
    pub t_grid: Vec<f64>,
    pub values: Vec<Complex64>,
    /// Standard error of `|values[j] - truth|` per grid point, computed
    /// from the sample variances of the cosine and sine components.
    pub std_errors: Vec<f64>,
    pub sample_count: usize,
}

/// Estimate the characteristic function of `samples` at each `t`.
///
/// The standard error combines the cosine and sine component variances
/// (unbiased, `n-1` denominator); it is 0 when only one sample is given.
pub fn ecf(samples: &[f64], t_grid: &[f64]) -> Result<EcfEstimate, SampleError> {
    if samples.is_empty() {
        return Err(SampleError::EmptySample);
    }
    let n = samples.len() as f64;
    let mut values = Vec::with_capacity(t_grid.len());
    let mut std_errors = Vec::with_capacity(t_grid.len());
    for &t in t_grid {
        let mut sum_c = 0.0;
        let mut sum_s = 0.0;
        let mut sum_c2 = 0.0;
        let mut sum_s2 = 0.0;
        for &x in samples {
            let (s, c) = (t * x).sin_cos();
            sum_c += c;
            sum_s += s;
            sum_c2 += c * c;
            sum_s2 += s * s;
        }
        let mean_c = sum_c / n;
        let mean_s = sum_s / n;
        let se = if samples.len() > 1 {
            let var_c = ((sum_c2 - n * mean_c * mean_c) / (n - 1.0)).max(0.0);
            let var_s = ((sum_s2 - n * mean_s * mean_s) / (n - 1.0)).max(0.0);
            ((var_c + var_s) / n).sqrt()
        } else {
            0.0
        };
        values.push(Complex64::new(mean_c, mean_s));
        std_errors.push(se);
    }
    Ok(EcfEstimate {
        t_grid: t_grid.to_vec(),
        values,
        std_errors,
        sample_count: samples.len(),
    })
}

#[cfg(test)]
#[allow(clippy::excessive_precision)] // oracle constants are frozen at full printed precision
mod tests {
    use super::*;
    use crate::levy;

    const PMF_0: f64 = 0.3085083225536710395;
    const PMF_1: f64 = 0.2152692892489376592;
    const PMF_2: f64 = 0.0932390333047333804;
    const PMF_3: f64 = 0.0287912226394708984;

    #[test]
    fn streams_are_deterministic_and_distinct() {
        let mut a = RandomSource::new(7, 0);
        let mut b = RandomSource::new(7, 0);
        let xs: Vec<f64> = (0..64).map(|_| a.uniform()).collect();
        let ys: Vec<f64> = (0..64).map(|_| b.uniform()).collect();
        assert_eq!(xs, ys);
        let mut c = RandomSource::new(7, 1);
        let zs: Vec<f64> = (0..64).map(|_| c.uniform()).collect();
        assert_ne!(xs, zs);
        let mut d = RandomSource::new(8, 0);
        let ws: Vec<f64> = (0..64).map(|_| d.uniform()).collect();
        assert_ne!(xs, ws);
    }

    #[test]
    fn uniform_sits_in_unit_interval_with_central_mean() {
        let mut src = RandomSource::new(42, 0);
        let mut sum = 0.0;
        for _ in 0..100_000 {
            let u = src.uniform();
            assert!((0.0..1.0).contains(&u));
            sum += u;
        }
        let mean = sum / 100_000.0;
        assert!((mean - 0.5).abs() < 0.01, "uniform mean {mean}");
    }

    #[test]
    fn rademacher_signs_are_balanced() {
        let mut src = RandomSource::new(5, 0);
        let signs = sample_rademacher(&mut src, 100_000);
        assert!(signs.iter().all(|&s| s == 1 || s == -1));
        let total: i64 = signs.iter().map(|&s| s as i64).sum();
        // sd of the sum is sqrt(n) ~ 316.
        assert!(total.abs() < 1_600, "sign sum {total}");
    }

    #[test]
    fn poisson_inversion_has_the_right_moments() {
        let mut src = RandomSource::new(12, 0);
        let n = 200_000;
        let mut sum = 0u64;
        let mut sum_sq = 0u64;
        for _ in 0..n {
            let k = sample_poisson(&mut src, 2.0);
            sum += k;
            sum_sq += k * k;
        }
        let mean = sum as f64 / n as f64;
        let var = sum_sq as f64 / n as f64 - mean * mean;
        assert!((mean - 2.0).abs() < 0.02, "Poisson(2) mean {mean}");
        assert!((var - 2.0).abs() < 0.05, "Poisson(2) var {var}");
        // Small intensity too.
        let mut src = RandomSource::new(12, 1);
        let mean_small: f64 = (0..n)
            .map(|_| sample_poisson(&mut src, 0.5) as f64)
            .sum::<f64>()
            / n as f64;
        assert!(
            (mean_small - 0.5).abs() < 0.01,
            "Poisson(0.5) mean {mean_small}"
        );
    }

    #[test]
    fn block_sampler_and_split_agree_on_the_same_stream() {
        let mut a = RandomSource::new(99, 3);
        let mut b = RandomSource::new(99, 3);
        for _ in 0..10_000 {
            let y = sample_y(&mut a);
            let (plus, minus) = sample_y_split(&mut b);
            assert_eq!(y, plus as i64 - minus as i64);
        }
    }

    #[test]
    fn skellam_pmf_reference_values_and_symmetry() {
        assert!((skellam_pmf(0) - PMF_0).abs() < 1e-16);
        assert!((skellam_pmf(1) - PMF_1).abs() < 1e-16);
        assert!((skellam_pmf(2) - PMF_2).abs() < 1e-16);
        assert!((skellam_pmf(3) - PMF_3).abs() < 1e-16);
        for k in 1..=20 {
            assert_eq!(skellam_pmf(k), skellam_pmf(-k));
        }
        let total: f64 = (-30..=30).map(skellam_pmf).sum();
        assert!((total - 1.0).abs() < 1e-12, "pmf sum {total}");
        assert_eq!(skellam_pmf(301), 0.0);
    }

    #[test]
    fn empirical_block_pmf_matches_skellam() {
        let n = 200_000usize;
        let mut counts = [0u64; 9]; // k = -4..=4
        let mut src = RandomSource::new(31, 0);
        for _ in 0..n {
            let y = sample_y(&mut src);
            if (-4..=4).contains(&y) {
                counts[(y + 4) as usize] += 1;
            }
        }
        for k in -4i64..=4 {
            let emp = counts[(k + 4) as usize] as f64 / n as f64;
            let want = skellam_pmf(k);
            assert!(
                (emp - want).abs() < 6e-3,
                "block pmf at k={k}: {emp} vs {want}"
            );
        }
        // Same law from the two-Poisson sampler.
        let mut counts = [0u64; 9];
        let mut src = RandomSource::new(31, 1);
        for _ in 0..n {
            let y = sample_skellam_direct(&mut src);
            if (-4..=4).contains(&y) {
                counts[(y + 4) as usize] += 1;
            }
        }
        for k in -4i64..=4 {
            let emp = counts[(k + 4) as usize] as f64 / n as f64;
            assert!(
                (emp - skellam_pmf(k)).abs() < 6e-3,
                "direct pmf at k={k}: {emp}"
            );
        }
    }

    #[test]
    fn series_variable_has_unit_scale() {
        let trunc = TruncationSpec::new(DEFAULT_SAMPLE_BLOCKS);
        let mut src = RandomSource::new(3, 0);
        let n = 20_000;
        let mut sum = 0.0;
        let mut sum_sq = 0.0;
        for _ in 0..n {
            let x = sample_x(&mut src, &trunc);
            sum += x;
            sum_sq += x * x;
        }
        let mean = sum / n as f64;
        let var = sum_sq / n as f64 - mean * mean;
        assert!(mean.abs() < 0.05, "mean {mean}");
        assert!((var - 1.0).abs() < 0.07, "variance {var}");
    }

    #[test]
    fn ecf_matches_the_truncated_population_cf() {
        let blocks = TruncationSpec::uncorrected(DEFAULT_SAMPLE_BLOCKS);
        let triple = levy::standard_triple(&blocks);
        let mut src = RandomSource::new(3, 1);
        let samples: Vec<f64> = (0..50_000).map(|_| sample_x(&mut src, &blocks)).collect();
        let grid = [0.5, 1.0, 2.0, 4.0];
        let est = ecf(&samples, &grid).unwrap();
        for ((t, value), se) in grid.iter().zip(&est.values).zip(&est.std_errors) {
            let truth = levy::levy_exponent(&triple, *t, &blocks).re.exp();
            let dev = (value - Complex64::new(truth, 0.0)).norm();
            assert!(
                dev <= 3.0 * se,
                "t={t}: |ecf - cf| = {dev}, 3se = {}",
                3.0 * se
            );
        }
    }

    #[test]
    fn ecf_edge_cases() {
        assert_eq!(ecf(&[], &[1.0]), Err(SampleError::EmptySample));
        let est = ecf(&[0.7, -0.3, 1.1], &[0.0, 1.0]).unwrap();
        assert_eq!(est.values[0], Complex64::new(1.0, 0.0));
        assert_eq!(est.std_errors[0], 0.0);
        assert!(est.values[1].norm() <= 1.0 + 1e-15);
        let single = ecf(&[2.0], &[1.5]).unwrap();
        assert_eq!(single.std_errors[0], 0.0);
        assert_eq!(single.sample_count, 1);
    }
}
