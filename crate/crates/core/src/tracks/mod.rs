//! Track-radius pipeline: ingest, clean, summarize, convert to solvency
//! indices and render the summary table.

mod emit;
pub mod fixture;
mod parse;
mod report;
mod stats;

use serde::{Deserialize, Serialize};

pub use emit::{emit_summary, Format};
pub use parse::{parse_dataset, ParseOptions, Unit};
pub use report::{solvency_report, MomentumSource, ReportOptions, SolvencyReport, TrackRow};
pub use stats::{compute_stats, compute_stats_with, SigmaKind, TrackStats};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrackRecord {
    /// 1-based position among accepted rows.
    pub id: usize,
    /// Radius (m).
    pub radius: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrackDataset {
    pub records: Vec<TrackRecord>,
    pub source_label: String,
    pub rows_read: usize,
    pub rows_dropped: usize,
}

impl TrackDataset {
    /// Builds a dataset from radii already in meters. Ids are assigned in
    /// order; nothing is dropped.
    pub fn from_radii(
        source_label: impl Into<String>,
        radii: impl IntoIterator<Item = f64>,
    ) -> Self {
        let records: Vec<TrackRecord> = radii
            .into_iter()
            .enumerate()
            .map(|(i, radius)| TrackRecord { id: i + 1, radius })
            .collect();
        TrackDataset {
            rows_read: records.len(),
            rows_dropped: 0,
            records,
            source_label: source_label.into(),
        }
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn radii(&self) -> impl Iterator<Item = f64> + '_ {
        self.records.iter().map(|r| r.radius)
    }
}
