use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{TrackDataset, TrackRecord};
use crate::error::{QtfError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Unit {
    #[default]
    Mm,
    M,
}

impl Unit {
    #[inline]
    pub fn to_meters(self, value: f64) -> f64 {
        match self {
            Unit::Mm => value / 1000.0,
            Unit::M => value,
        }
    }
}

impl FromStr for Unit {
    type Err = QtfError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "mm" => Ok(Unit::Mm),
            "m" => Ok(Unit::M),
            other => Err(QtfError::Config(format!(
                "unknown unit {other:?} (expected mm or m)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParseOptions {
    pub unit: Unit,
    /// Zero-based field holding the radius when rows have several columns.
    pub column: usize,
    pub source_label: String,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            unit: Unit::Mm,
            column: 0,
            source_label: String::from("<input>"),
        }
    }
}

fn split_fields(line: &str) -> impl Iterator<Item = &str> {
    line.split([',', ';', '\t'])
}

fn parse_radius(field: &str) -> Option<f64> {
    let field = field.trim().trim_matches('"').trim();
    let v: f64 = field.parse().ok()?;
    (v.is_finite() && v > 0.0).then_some(v)
}

fn looks_numeric(field: &str) -> bool {
    field.trim().trim_matches('"').trim().parse::<f64>().is_ok()
}

/// Parses one radius per row.
///
/// `#` lines are ignored outright. A non-numeric first data row is taken as a
/// header. Every other row that is blank, non-numeric, non-finite or
/// non-positive counts toward `rows_dropped` without aborting the parse.
pub fn parse_dataset(input: &[u8], options: &ParseOptions) -> Result<TrackDataset> {
    let text = std::str::from_utf8(input).map_err(|_| QtfError::Undecodable)?;
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);

    let mut records = Vec::new();
    let mut rows_read = 0usize;
    let mut rows_dropped = 0usize;
    let mut first_row = true;

    for line in text.lines() {
        if line.trim_start().starts_with('#') {
            continue;
        }
        let field = split_fields(line).nth(options.column).unwrap_or("");
        if first_row {
            first_row = false;
            if !field.trim().is_empty() && !looks_numeric(field) {
                continue;
            }
        }
        rows_read += 1;
        match parse_radius(field) {
            Some(v) => records.push(TrackRecord {
                id: records.len() + 1,
                radius: options.unit.to_meters(v),
            }),
            None => rows_dropped += 1,
        }
    }

    if records.is_empty() {
        return Err(QtfError::NoValidRows { rows_read });
    }
    Ok(TrackDataset {
        records,
        source_label: options.source_label.clone(),
        rows_read,
        rows_dropped,
    })
}
