use std::path::PathBuf;

use clap::{Args, ValueEnum};

use qtf_core::tracks::{
    emit_summary, parse_dataset, solvency_report, ParseOptions, ReportOptions, SigmaKind, Unit,
};
use qtf_core::{
    get_consts, Boundary, Format, MomentumSource, PaperValues, ParticleSpec, RunManifest,
};

use crate::error::{CliError, CliResult};
use crate::output::{digest, json_with_manifest, manifest_comment, read_input, write_output};
use crate::{OutArgs, OutputFormat};

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum UnitArg {
    Mm,
    M,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MomentumArg {
    /// The quoted 3.26e-19 kg·m/s.
    Paper,
    /// sqrt(2 m E) from --mass and --energy.
    Derived,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SigmaArg {
    Population,
    Sample,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BoundaryArg {
    Inclusive,
    Strict,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct AnalyzeArgs {
    /// Delimited text file, one radius per row.
    path: PathBuf,
    #[arg(long, value_enum, default_value = "mm")]
    unit: UnitArg,
    /// Zero-based column holding the radius.
    #[arg(long, default_value_t = 0)]
    column: usize,
    #[arg(long, value_enum, default_value = "paper")]
    momentum: MomentumArg,
    /// Particle mass in kg (derived momentum only).
    #[arg(long, default_value_t = PaperValues::get().alpha_mass)]
    mass: f64,
    /// Particle kinetic energy in J (derived momentum only).
    #[arg(long, default_value_t = PaperValues::get().alpha_energy)]
    energy: f64,
    /// Minimum solvency index the dataset is checked against.
    #[arg(long, default_value_t = PaperValues::get().paper_floor_n)]
    floor: f64,
    #[arg(long, value_enum, default_value = "inclusive")]
    floor_boundary: BoundaryArg,
    #[arg(long, value_enum, default_value = "population")]
    sigma: SigmaArg,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(serde::Serialize)]
struct Body<'a> {
    report: &'a qtf_core::SolvencyReport,
}

pub fn run(args: AnalyzeArgs) -> CliResult<()> {
    if args.floor.is_nan() || args.floor < 0.0 {
        return Err(CliError::Usage(format!(
            "--floor must be >= 0, got {}",
            args.floor
        )));
    }
    let particle = ParticleSpec::new(args.mass, args.energy).map_err(CliError::from_core)?;
    let unit = match args.unit {
        UnitArg::Mm => Unit::Mm,
        UnitArg::M => Unit::M,
    };
    let momentum_source = match args.momentum {
        MomentumArg::Paper => MomentumSource::PaperStated,
        MomentumArg::Derived => MomentumSource::Derived,
    };
    let sigma_kind = match args.sigma {
        SigmaArg::Population => SigmaKind::Population,
        SigmaArg::Sample => SigmaKind::Sample,
    };
    let floor_boundary = match args.floor_boundary {
        BoundaryArg::Inclusive => Boundary::Inclusive,
        BoundaryArg::Strict => Boundary::Strict,
    };

    let bytes = read_input(&args.path)?;
    let source_label = args.path.display().to_string();
    let dataset = parse_dataset(
        &bytes,
        &ParseOptions {
            unit,
            column: args.column,
            source_label: source_label.clone(),
        },
    )
    .map_err(|e| CliError::Data(format!("{}: {e}", args.path.display())))?;

    let options = ReportOptions {
        particle,
        momentum_source,
        floor_n: args.floor,
        floor_boundary,
        sigma_kind,
    };
    let report = solvency_report(&dataset, &options, &get_consts()).map_err(CliError::from_core)?;

    let mut manifest = RunManifest::new("analyze");
    manifest
        .set("path", &source_label)
        .set("unit", unit)
        .set("column", args.column)
        .set("momentum", momentum_source)
        .set("particle", particle)
        .set("floor", args.floor)
        .set("floor_boundary", floor_boundary)
        .set("sigma", sigma_kind)
        .set("format", format!("{:?}", args.format).to_lowercase());
    manifest.input_digest = Some(digest(&bytes));

    let rendered = match args.format {
        OutputFormat::Json => json_with_manifest(&manifest, &Body { report: &report }),
        OutputFormat::Csv => manifest_comment(&manifest) + &emit_summary(&report, Format::Csv),
        OutputFormat::Text => manifest_comment(&manifest) + &emit_summary(&report, Format::Text),
    };
    write_output(args.out.out.as_deref(), &rendered)
}
