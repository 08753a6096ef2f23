//! Deterministic 228-track synthetic radius set.
//!
//! The real cloud-chamber radii are not redistributable. This set is built in
//! closed form so that its population statistics land on the published
//! headline figures: median 6.67 mm, mean 7.42 mm, σ 5.05 mm, and exactly 161
//! tracks (70.6%) inside the inclusive 1σ band with a band mean of 7.42 mm.
//!
//! Construction, in mm:
//! * 43 short tracks spaced evenly over [1.0, 2.3], below the band;
//! * 70 in-band tracks rising from 2.6 toward the median;
//! * two tracks at exactly 6.67 (the central order statistics);
//! * 89 in-band tracks rising linearly from 6.70, slope chosen so the band
//!   mean is 7.42;
//! * 24 tail tracks on a Pareto(α = 2) quantile template, shifted and scaled
//!   so the overall mean and σ hit their targets.
//!
//! Rows are then interleaved with a stride-97 permutation so the file is not
//! sorted.

use super::TrackDataset;

pub const FIXTURE_COUNT: usize = 228;
pub const TARGET_MEDIAN_MM: f64 = 6.67;
pub const TARGET_MEAN_MM: f64 = 7.42;
pub const TARGET_SIGMA_MM: f64 = 5.05;
pub const TARGET_FILTERED: usize = 161;

const SHORT: usize = 43;
const SHORT_RANGE: (f64, f64) = (1.0, 2.3);
const BAND_FLOOR: f64 = 2.6;
const UPPER_START: f64 = 6.70;
const TAIL_ALPHA: f64 = 2.0;
const STRIDE: usize = 97;

/// Fixture radii in millimeters, rounded to six decimals, in file order.
pub fn fixture_radii_mm() -> Vec<f64> {
    let n = FIXTURE_COUNT;
    let mean = TARGET_MEAN_MM;
    let median = TARGET_MEDIAN_MM;

    let short: Vec<f64> = (0..SHORT)
        .map(|i| SHORT_RANGE.0 + (SHORT_RANGE.1 - SHORT_RANGE.0) * i as f64 / (SHORT - 1) as f64)
        .collect();

    // Sorted positions n/2 and n/2 + 1 (1-based) form the median pair.
    let below = n / 2 - SHORT - 1;
    let lower: Vec<f64> = (0..below)
        .map(|j| median - (median - BAND_FLOOR) * (1.0 - j as f64 / below as f64).powf(1.5))
        .collect();
    let pair = [median, median];

    let above = TARGET_FILTERED - below - pair.len();
    let band_sum_needed =
        TARGET_FILTERED as f64 * mean - lower.iter().sum::<f64>() - pair.iter().sum::<f64>();
    let ramp: Vec<f64> = (0..above).map(|j| j as f64 / (above - 1) as f64).collect();
    let slope = (band_sum_needed - above as f64 * UPPER_START) / ramp.iter().sum::<f64>();
    let upper: Vec<f64> = ramp.iter().map(|t| UPPER_START + slope * t).collect();

    let tail_len = n - SHORT - TARGET_FILTERED;
    let tail_sum = n as f64 * mean - short.iter().sum::<f64>() - TARGET_FILTERED as f64 * mean;
    let tail_mean = tail_sum / tail_len as f64;
    let template: Vec<f64> = (0..tail_len)
        .map(|j| (1.0 - (j as f64 + 0.5) / tail_len as f64).powf(-1.0 / TAIL_ALPHA))
        .collect();
    let template_mean = template.iter().sum::<f64>() / tail_len as f64;
    let body_sq: f64 = short
        .iter()
        .chain(&lower)
        .chain(&pair)
        .chain(&upper)
        .map(|v| v * v)
        .sum();
    let target_sq = n as f64 * (TARGET_SIGMA_MM.powi(2) + mean * mean);
    let spread: f64 = template.iter().map(|g| (g - template_mean).powi(2)).sum();
    let scale = ((target_sq - body_sq - tail_len as f64 * tail_mean.powi(2)) / spread).sqrt();
    let tail: Vec<f64> = template
        .iter()
        .map(|g| tail_mean + scale * (g - template_mean))
        .collect();

    let sorted: Vec<f64> = short
        .into_iter()
        .chain(lower)
        .chain(pair)
        .chain(upper)
        .chain(tail)
        .map(|v| (v * 1e6).round() / 1e6)
        .collect();
    debug_assert_eq!(sorted.len(), n);

    (0..n).map(|i| sorted[(i * STRIDE) % n]).collect()
}

/// The fixture as CSV text: a `radius_mm` header and one value per row.
pub fn fixture_csv() -> String {
    let mut out =
        String::from("# synthetic alpha-track radii, deterministic construction\nradius_mm\n");
    for r in fixture_radii_mm() {
        out.push_str(&format!("{r:.6}\n"));
    }
    out
}

/// The fixture as a dataset, radii in meters.
pub fn fixture_dataset() -> TrackDataset {
    TrackDataset::from_radii(
        "synthetic-228",
        fixture_radii_mm().into_iter().map(|r| r / 1000.0),
    )
}
