use serde::{Deserialize, Serialize};

use super::TrackDataset;
use crate::error::{QtfError, Result};

/// Divisor used for the standard deviation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SigmaKind {
    /// Divide by N.
    #[default]
    Population,
    /// Divide by N − 1. A single observation yields σ = 0.
    Sample,
}

/// Summary of a radius distribution. All lengths in meters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrackStats {
    pub count: usize,
    pub median_radius: f64,
    pub mean_radius: f64,
    pub sigma_radius: f64,
    pub sigma_kind: SigmaKind,
    /// `mean − σ`
    pub filter_low: f64,
    /// `mean + σ`
    pub filter_high: f64,
    /// Radii inside `[filter_low, filter_high]`, both ends included.
    pub filtered_count: usize,
    pub filtered_fraction: f64,
    pub filtered_mean_radius: f64,
}

impl TrackStats {
    #[inline]
    pub fn in_band(&self, radius: f64) -> bool {
        self.filter_low <= radius && radius <= self.filter_high
    }
}

pub fn compute_stats(dataset: &TrackDataset) -> Result<TrackStats> {
    compute_stats_with(dataset, SigmaKind::Population)
}

pub fn compute_stats_with(dataset: &TrackDataset, sigma_kind: SigmaKind) -> Result<TrackStats> {
    if dataset.is_empty() {
        return Err(QtfError::EmptyDataset);
    }
    let mut sorted: Vec<f64> = dataset.radii().collect();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len();

    let median_radius = if n % 2 == 1 {
        sorted[n / 2]
    } else {
        0.5 * (sorted[n / 2 - 1] + sorted[n / 2])
    };

    // Sorted order makes the sums independent of input order.
    let mean_radius = sorted.iter().sum::<f64>() / n as f64;
    let ss: f64 = sorted.iter().map(|r| (r - mean_radius).powi(2)).sum();
    let divisor = match sigma_kind {
        SigmaKind::Population => n as f64,
        SigmaKind::Sample if n > 1 => (n - 1) as f64,
        SigmaKind::Sample => 1.0,
    };
    let sigma_radius = (ss / divisor).sqrt();

    let filter_low = mean_radius - sigma_radius;
    let filter_high = mean_radius + sigma_radius;
    let (filtered_count, filtered_sum) = sorted
        .iter()
        .filter(|&&r| filter_low <= r && r <= filter_high)
        .fold((0usize, 0.0f64), |(c, s), &r| (c + 1, s + r));

    // Non-empty: with σ computed from these data at least one radius lies
    // within one σ of the mean.
    let filtered_mean_radius = if filtered_count > 0 {
        filtered_sum / filtered_count as f64
    } else {
        mean_radius
    };

    Ok(TrackStats {
        count: n,
        median_radius,
        mean_radius,
        sigma_radius,
        sigma_kind,
        filter_low,
        filter_high,
        filtered_count,
        filtered_fraction: filtered_count as f64 / n as f64,
        filtered_mean_radius,
    })
}
