use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::SolvencyReport;
use crate::error::QtfError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = QtfError;

    /// An empty string selects the default (JSON).
    fn from_str(s: &str) -> Result<Self, QtfError> {
        match s.trim().to_ascii_lowercase().as_str() {
            "" | "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" | "txt" => Ok(Format::Text),
            other => Err(QtfError::Config(format!("unknown format {other:?}"))),
        }
    }
}

/// Renders a report. Output bytes depend only on the report and the format.
pub fn emit_summary(report: &SolvencyReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Csv => per_track_csv(report),
        Format::Text => summary_table(report),
    }
}

fn per_track_csv(report: &SolvencyReport) -> String {
    let mut out = String::from("id,radius_m,n_real,n_quanta\n");
    for t in &report.tracks {
        let _ = writeln!(out, "{},{},{},{}", t.id, t.radius_m, t.n_real, t.n_quanta);
    }
    out
}

fn summary_table(report: &SolvencyReport) -> String {
    let s = &report.stats;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Source: {} ({} tracks, {} rows dropped)",
        report.source_label, s.count, report.rows_dropped
    );
    let _ = writeln!(
        out,
        "Momentum: {:.3e} kg·m/s ({})",
        report.momentum_used,
        match report.momentum_source {
            super::MomentumSource::PaperStated => "paper-stated",
            super::MomentumSource::Derived => "derived",
        }
    );
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "{:<18}  {:>11}  {:>10}  Interpretation",
        "Statistic", "Radius (mm)", "Computed n"
    );
    let _ = writeln!(
        out,
        "{:<18}  {:>11.2}  {:>10}  Typical rendering cost",
        "Median",
        s.median_radius * 1e3,
        format!("{:.2e}", report.n_median)
    );
    let _ = writeln!(
        out,
        "{:<18}  {:>11.2}  {:>10}  Full-track rendering toll",
        "Mean (1σ filter)",
        s.filtered_mean_radius * 1e3,
        format!("{:.2e}", report.n_filtered_mean)
    );
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "Mean {:.2} mm, σ {:.2} mm; 1σ band {:.2}–{:.2} mm holds {} of {} tracks ({:.1}%)",
        s.mean_radius * 1e3,
        s.sigma_radius * 1e3,
        s.filter_low * 1e3,
        s.filter_high * 1e3,
        s.filtered_count,
        s.count,
        s.filtered_fraction * 100.0
    );
    let _ = writeln!(
        out,
        "Floor: n_min = {:.2e} {} {:.2e} ({})",
        report.n_min,
        match report.floor_boundary {
            crate::solvency::Boundary::Inclusive => ">=",
            crate::solvency::Boundary::Strict => ">",
        },
        report.floor_n,
        if report.floor_satisfied {
            "satisfied"
        } else {
            "violated"
        }
    );
    let _ = writeln!(out, "n range: {:.2e} .. {:.2e}", report.n_min, report.n_max);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::get_consts;
    use crate::tracks::{solvency_report, ReportOptions, TrackDataset};

    fn report() -> SolvencyReport {
        let ds = TrackDataset::from_radii("b4", [6.67e-3]);
        solvency_report(&ds, &ReportOptions::default(), &get_consts()).unwrap()
    }

    #[test]
    fn text_has_median_row() {
        let text = emit_summary(&report(), Format::Text);
        let row = text.lines().find(|l| l.starts_with("Median")).unwrap();
        assert!(row.contains("6.67"), "{row}");
        assert!(row.contains("2.06e13"), "{row}");
        assert!(text.contains("Floor: n_min"));
    }

    #[test]
    fn empty_format_is_json() {
        assert_eq!("".parse::<Format>().unwrap(), Format::Json);
        assert_eq!(Format::default(), Format::Json);
        assert!("xml".parse::<Format>().is_err());
    }

    #[test]
    fn rendering_is_deterministic() {
        let r = report();
        for f in [Format::Json, Format::Csv, Format::Text] {
            assert_eq!(emit_summary(&r, f), emit_summary(&r, f));
        }
    }

    #[test]
    fn json_round_trips() {
        let r = report();
        let back: SolvencyReport = serde_json::from_str(&emit_summary(&r, Format::Json)).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn csv_rows() {
        let csv = emit_summary(&report(), Format::Csv);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("id,radius_m,n_real,n_quanta"));
        let fields: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(fields[0], "1");
        assert_eq!(fields[1], "0.00667");
    }
}
