use std::fmt::Write as _;

use clap::Args;
use serde::Serialize;

use qtf_core::{ConstantsSnapshot, RunManifest};

use crate::error::CliResult;
use crate::output::{json_with_manifest, manifest_comment, write_output};
use crate::{OutArgs, OutputFormat};

#[derive(Debug, Args)]
pub struct ConstantsArgs {
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Serialize)]
struct Body<'a> {
    constants: &'a ConstantsSnapshot,
}

fn rows(snapshot: &ConstantsSnapshot) -> Vec<(String, String, &'static str)> {
    let p = &snapshot.physical;
    let v = &snapshot.paper;
    vec![
        ("h".into(), format!("{:e}", p.h), "J·s"),
        ("hbar".into(), format!("{:e}", p.hbar), "J·s"),
        ("k_b".into(), format!("{:e}", p.k_b), "J/K"),
        (
            "default_temperature".into(),
            format!("{}", p.default_temperature),
            "K",
        ),
        (
            "paper.alpha_mass".into(),
            format!("{:e}", v.alpha_mass),
            "kg",
        ),
        (
            "paper.alpha_energy".into(),
            format!("{:e}", v.alpha_energy),
            "J",
        ),
        (
            "paper.momentum".into(),
            format!("{:e}", v.paper_momentum),
            "kg·m/s",
        ),
        ("paper.hbar".into(), format!("{:e}", v.paper_hbar), "J·s"),
        (
            "paper.median_radius".into(),
            format!("{:e}", v.paper_median_radius),
            "m",
        ),
        (
            "paper.mean_radius".into(),
            format!("{:e}", v.paper_mean_radius),
            "m",
        ),
        (
            "paper.radius_sigma".into(),
            format!("{:e}", v.paper_radius_sigma),
            "m",
        ),
        (
            "paper.track_count".into(),
            v.paper_track_count.to_string(),
            "",
        ),
        (
            "paper.filtered_count".into(),
            v.paper_filtered_count.to_string(),
            "",
        ),
        (
            "paper.n_median".into(),
            format!("{:e}", v.paper_n_median),
            "",
        ),
        ("paper.n_mean".into(), format!("{:e}", v.paper_n_mean), ""),
        ("paper.floor_n".into(), format!("{:e}", v.paper_floor_n), ""),
    ]
}

pub fn run(args: ConstantsArgs) -> CliResult<()> {
    let snapshot = ConstantsSnapshot::current();
    let mut manifest = RunManifest::new("constants");
    manifest.set("format", format!("{:?}", args.format).to_lowercase());

    let rendered = match args.format {
        OutputFormat::Json => json_with_manifest(
            &manifest,
            &Body {
                constants: &snapshot,
            },
        ),
        OutputFormat::Text => {
            let mut s = manifest_comment(&manifest);
            let rows = rows(&snapshot);
            let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
            for (name, value, unit) in rows {
                let _ = writeln!(s, "{name:<width$}  {value:>22}  {unit}");
            }
            s
        }
        OutputFormat::Csv => {
            let mut s = manifest_comment(&manifest);
            s.push_str("name,value,unit\n");
            for (name, value, unit) in rows(&snapshot) {
                let _ = writeln!(s, "{name},{value},{unit}");
            }
            s
        }
    };
    write_output(args.out.out.as_deref(), &rendered)
}
