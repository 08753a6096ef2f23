use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{compute_stats_with, SigmaKind, TrackDataset, TrackStats};
use crate::constants::{PaperValues, PhysConsts};
use crate::error::{QtfError, Result};
use crate::solvency::{action_index, momentum_from_energy, Boundary, ParticleSpec};

/// Where the track momentum comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MomentumSource {
    /// The quoted 3.26e-19 kg·m/s, used as-is.
    #[default]
    PaperStated,
    /// `√(2 m E)` from the particle mass and energy.
    Derived,
}

impl MomentumSource {
    pub fn resolve(self, particle: ParticleSpec) -> Result<f64> {
        match self {
            MomentumSource::PaperStated => Ok(PaperValues::get().paper_momentum),
            MomentumSource::Derived => momentum_from_energy(particle),
        }
    }
}

impl FromStr for MomentumSource {
    type Err = QtfError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "paper" | "paper-stated" | "stated" => Ok(MomentumSource::PaperStated),
            "derived" => Ok(MomentumSource::Derived),
            other => Err(QtfError::Config(format!(
                "unknown momentum source {other:?} (expected paper or derived)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReportOptions {
    pub particle: ParticleSpec,
    pub momentum_source: MomentumSource,
    pub floor_n: f64,
    pub floor_boundary: Boundary,
    pub sigma_kind: SigmaKind,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            particle: ParticleSpec::alpha_5mev(),
            momentum_source: MomentumSource::PaperStated,
            floor_n: PaperValues::get().paper_floor_n,
            floor_boundary: Boundary::Inclusive,
            sigma_kind: SigmaKind::Population,
        }
    }
}

/// One line of the per-track CSV.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrackRow {
    pub id: usize,
    pub radius_m: f64,
    pub n_real: f64,
    pub n_quanta: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolvencyReport {
    pub source_label: String,
    pub rows_read: usize,
    pub rows_dropped: usize,
    pub stats: TrackStats,
    pub particle: ParticleSpec,
    pub momentum_used: f64,
    pub momentum_source: MomentumSource,
    pub n_median: f64,
    pub n_filtered_mean: f64,
    pub n_min: f64,
    pub n_max: f64,
    pub floor_n: f64,
    pub floor_boundary: Boundary,
    pub floor_satisfied: bool,
    /// Per-track indices, in dataset order.
    pub tracks: Vec<TrackRow>,
}

impl SolvencyReport {
    pub fn n_values(&self) -> impl Iterator<Item = f64> + '_ {
        self.tracks.iter().map(|t| t.n_real)
    }
}

pub fn solvency_report(
    dataset: &TrackDataset,
    options: &ReportOptions,
    consts: &PhysConsts,
) -> Result<SolvencyReport> {
    let stats = compute_stats_with(dataset, options.sigma_kind)?;
    let momentum = options.momentum_source.resolve(options.particle)?;

    // Indexed parallel collect keeps dataset order.
    let tracks: Vec<TrackRow> = dataset
        .records
        .par_iter()
        .map(|rec| {
            action_index(rec.radius, momentum, consts).map(|ix| TrackRow {
                id: rec.id,
                radius_m: rec.radius,
                n_real: ix.n_real,
                n_quanta: ix.n_quanta,
            })
        })
        .collect::<Result<_>>()?;

    let (n_min, n_max) = tracks
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), t| {
            (lo.min(t.n_real), hi.max(t.n_real))
        });

    Ok(SolvencyReport {
        source_label: dataset.source_label.clone(),
        rows_read: dataset.rows_read,
        rows_dropped: dataset.rows_dropped,
        particle: options.particle,
        momentum_used: momentum,
        momentum_source: options.momentum_source,
        n_median: action_index(stats.median_radius, momentum, consts)?.n_real,
        n_filtered_mean: action_index(stats.filtered_mean_radius, momentum, consts)?.n_real,
        n_min,
        n_max,
        floor_n: options.floor_n,
        floor_boundary: options.floor_boundary,
        floor_satisfied: options.floor_boundary.passes(n_min, options.floor_n),
        stats,
        tracks,
    })
}
