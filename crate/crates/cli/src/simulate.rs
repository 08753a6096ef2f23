use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::Args;
use serde::{Deserialize, Serialize};

use qtf_core::montecarlo::{
    censor_at_floor, closed_form_collapse_time, generate_tracks, is_monotone_nondecreasing,
    ks_statistic, run_accrual, sweep_initial_budget, sweep_prediction_1, AccrualConfig,
    AccrualOutcome, RadiusDistribution, SimConfig, SweepPoint,
};
use qtf_core::tracks::{compute_stats, emit_summary, solvency_report, ReportOptions, TrackStats};
use qtf_core::{
    get_consts, Format, MomentumSource, PaperValues, ParticleSpec, RunManifest, SolvencyReport,
};

use crate::error::{CliError, CliResult};
use crate::output::{digest, json_with_manifest, manifest_comment, read_input, write_output};
use crate::{OutArgs, OutputFormat};

/// Overrides the config seed when set.
pub const SEED_ENV: &str = "QTF_SEED";

#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// Simulation config (`.json` is read as JSON, anything else as TOML).
    config: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimFile {
    #[serde(default = "default_seed")]
    pub seed: u64,
    pub population: Option<PopulationSection>,
    pub accrual: Option<AccrualConfig>,
    pub sweep: Option<SweepSection>,
}

fn default_seed() -> u64 {
    42
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PopulationSection {
    #[serde(default = "default_tracks")]
    pub n_tracks: usize,
    #[serde(default = "RadiusDistribution::paper_lognormal")]
    pub distribution: RadiusDistribution,
    #[serde(default)]
    pub particle: ParticleSpec,
    #[serde(default)]
    pub momentum: MomentumSource,
    #[serde(default = "default_floor")]
    pub floor_n: f64,
    #[serde(default = "default_true")]
    pub censor: bool,
}

fn default_tracks() -> usize {
    PaperValues::get().paper_track_count
}

fn default_floor() -> f64 {
    PaperValues::get().paper_floor_n
}

fn default_true() -> bool {
    true
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSection {
    #[serde(default)]
    pub budget_rates: Vec<f64>,
    #[serde(default)]
    pub initial_budgets: Vec<f64>,
}

#[derive(Debug, Serialize)]
struct FloorCheck {
    floor_n: f64,
    retained: usize,
    removed: usize,
    n_min: Option<f64>,
    /// Every retained track has `n_real >= floor_n`.
    all_at_or_above_floor: bool,
}

#[derive(Debug, Serialize)]
struct PopulationResult {
    generated_count: usize,
    generated_stats: TrackStats,
    momentum_used: f64,
    floor_check: FloorCheck,
    /// KS distance between the generated and the retained radii.
    ks_retained_vs_generated: Option<f64>,
    report: Option<SolvencyReport>,
}

#[derive(Debug, Serialize)]
struct AccrualResult {
    config: AccrualConfig,
    outcome: AccrualOutcome,
    closed_form_time: Option<f64>,
}

#[derive(Debug, Serialize)]
struct SweepResult {
    parameter: &'static str,
    points: Vec<SweepPoint>,
    monotone_nondecreasing: bool,
}

#[derive(Debug, Serialize)]
struct SimReport {
    population: Option<PopulationResult>,
    accrual: Option<AccrualResult>,
    sweeps: Vec<SweepResult>,
}

pub fn load_config(path: &Path, bytes: &[u8]) -> CliResult<SimFile> {
    let text = std::str::from_utf8(bytes)
        .map_err(|_| CliError::Usage(format!("{}: config is not UTF-8", path.display())))?;
    let is_json = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("json"));
    let parsed: SimFile = if is_json {
        serde_json::from_str(text)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?
    } else {
        toml::from_str(text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?
    };
    if parsed.population.is_none() && parsed.accrual.is_none() {
        return Err(CliError::Usage(format!(
            "{}: config needs a [population] or [accrual] section",
            path.display()
        )));
    }
    if parsed.sweep.is_some() && parsed.accrual.is_none() {
        return Err(CliError::Usage(format!(
            "{}: [sweep] needs an [accrual] section as its base",
            path.display()
        )));
    }
    Ok(parsed)
}

fn seed_override() -> CliResult<Option<u64>> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| {
            CliError::Usage(format!("{SEED_ENV}={v:?} is not a 64-bit unsigned integer"))
        }),
        Err(_) => Ok(None),
    }
}

fn run_population(seed: u64, section: &PopulationSection) -> CliResult<PopulationResult> {
    let consts = get_consts();
    let config = SimConfig {
        seed,
        n_tracks: section.n_tracks,
        radius_distribution: section.distribution,
        particle: section.particle,
        momentum_source: section.momentum,
        floor_n: section.floor_n,
    };
    let generated = generate_tracks(&config).map_err(CliError::from_core)?;
    let momentum = config.momentum().map_err(CliError::from_core)?;
    let retained = if section.censor {
        censor_at_floor(&generated, config.floor_n, momentum, &consts)
            .map_err(CliError::from_core)?
    } else {
        generated.clone()
    };

    let report = if retained.is_empty() {
        None
    } else {
        let options = ReportOptions {
            particle: config.particle,
            momentum_source: config.momentum_source,
            floor_n: config.floor_n,
            ..Default::default()
        };
        Some(solvency_report(&retained, &options, &consts).map_err(CliError::from_core)?)
    };
    let n_min = report.as_ref().map(|r| r.n_min);

    Ok(PopulationResult {
        generated_count: generated.len(),
        generated_stats: compute_stats(&generated).map_err(CliError::from_core)?,
        momentum_used: momentum,
        floor_check: FloorCheck {
            floor_n: config.floor_n,
            retained: retained.len(),
            removed: generated.len() - retained.len(),
            n_min,
            all_at_or_above_floor: report
                .as_ref()
                .is_none_or(|r| r.n_values().all(|n| n >= config.floor_n)),
        },
        ks_retained_vs_generated: if retained.is_empty() {
            None
        } else {
            Some(ks_statistic(&retained, &generated).map_err(CliError::from_core)?)
        },
        report,
    })
}

fn simulate(file: &SimFile, seed: u64) -> CliResult<SimReport> {
    let population = file
        .population
        .as_ref()
        .map(|section| run_population(seed, section))
        .transpose()?;

    let accrual = file
        .accrual
        .as_ref()
        .map(|cfg| {
            run_accrual(cfg).map(|outcome| AccrualResult {
                config: *cfg,
                outcome,
                closed_form_time: closed_form_collapse_time(cfg),
            })
        })
        .transpose()
        .map_err(CliError::from_core)?;

    let mut sweeps = Vec::new();
    if let (Some(sweep), Some(base)) = (&file.sweep, &file.accrual) {
        if !sweep.budget_rates.is_empty() {
            let points =
                sweep_prediction_1(base, &sweep.budget_rates).map_err(CliError::from_core)?;
            sweeps.push(SweepResult {
                parameter: "budget_rate",
                monotone_nondecreasing: is_monotone_nondecreasing(&points),
                points,
            });
        }
        if !sweep.initial_budgets.is_empty() {
            let points =
                sweep_initial_budget(base, &sweep.initial_budgets).map_err(CliError::from_core)?;
            sweeps.push(SweepResult {
                parameter: "initial_budget",
                monotone_nondecreasing: is_monotone_nondecreasing(&points),
                points,
            });
        }
    }

    Ok(SimReport {
        population,
        accrual,
        sweeps,
    })
}

fn fmt_time(t: Option<f64>) -> String {
    t.map_or_else(|| "none".to_owned(), |t| format!("{t}"))
}

fn render_csv(report: &SimReport) -> String {
    if !report.sweeps.is_empty() {
        let mut s = String::from("parameter,value,collapsed,collapse_time\n");
        for sweep in &report.sweeps {
            for p in &sweep.points {
                let _ = writeln!(
                    s,
                    "{},{},{},{}",
                    sweep.parameter,
                    p.value,
                    p.outcome.collapsed,
                    p.outcome
                        .collapse_time
                        .map_or(String::new(), |t| t.to_string())
                );
            }
        }
        return s;
    }
    if let Some(r) = report.population.as_ref().and_then(|p| p.report.as_ref()) {
        return emit_summary(r, Format::Csv);
    }
    let mut s = String::from("collapsed,collapse_time,steps_run,closed_form_time\n");
    if let Some(a) = &report.accrual {
        let _ = writeln!(
            s,
            "{},{},{},{}",
            a.outcome.collapsed,
            a.outcome
                .collapse_time
                .map_or(String::new(), |t| t.to_string()),
            a.outcome.steps_run,
            a.closed_form_time.map_or(String::new(), |t| t.to_string())
        );
    }
    s
}

fn render_text(report: &SimReport) -> String {
    let mut s = String::new();
    if let Some(p) = &report.population {
        let f = &p.floor_check;
        let _ = writeln!(
            s,
            "Population: {} generated, {} retained at n >= {:e} ({} removed)",
            p.generated_count, f.retained, f.floor_n, f.removed
        );
        let _ = writeln!(
            s,
            "Floor check: n_min = {} ({})",
            f.n_min.map_or("n/a".into(), |n| format!("{n:.3e}")),
            if f.all_at_or_above_floor {
                "no track below floor"
            } else {
                "TRACK BELOW FLOOR"
            }
        );
        if let Some(d) = p.ks_retained_vs_generated {
            let _ = writeln!(s, "KS distance retained vs generated: {d:.4}");
        }
        if let Some(r) = &p.report {
            let _ = writeln!(s);
            s.push_str(&emit_summary(r, Format::Text));
        }
        let _ = writeln!(s);
    }
    if let Some(a) = &report.accrual {
        let _ = writeln!(
            s,
            "Accrual: collapsed = {}, collapse_time = {}, steps = {}, closed form = {}",
            a.outcome.collapsed,
            fmt_time(a.outcome.collapse_time),
            a.outcome.steps_run,
            fmt_time(a.closed_form_time)
        );
    }
    for sweep in &report.sweeps {
        let _ = writeln!(s, "Sweep over {}:", sweep.parameter);
        for p in &sweep.points {
            let _ = writeln!(
                s,
                "  {:>12}  {}",
                p.value,
                fmt_time(p.outcome.collapse_time)
            );
        }
        let _ = writeln!(
            s,
            "  monotone nondecreasing: {}",
            if sweep.monotone_nondecreasing {
                "yes"
            } else {
                "NO"
            }
        );
    }
    s
}

pub fn run(args: SimulateArgs) -> CliResult<()> {
    let bytes = read_input(&args.config).map_err(|e| CliError::Usage(e.to_string()))?;
    let file = load_config(&args.config, &bytes)?;
    let seed = seed_override()?.unwrap_or(file.seed);
    let report = simulate(&file, seed)?;

    let mut manifest = RunManifest::new("simulate");
    manifest
        .set("config_path", args.config.display().to_string())
        .set("population", &file.population)
        .set("accrual", file.accrual)
        .set("sweep", &file.sweep)
        .set("format", format!("{:?}", args.format).to_lowercase());
    manifest.input_digest = Some(digest(&bytes));
    manifest.seed = Some(seed);

    let rendered = match args.format {
        OutputFormat::Json => json_with_manifest(&manifest, &report),
        OutputFormat::Csv => manifest_comment(&manifest) + &render_csv(&report),
        OutputFormat::Text => manifest_comment(&manifest) + &render_text(&report),
    };
    write_output(args.out.out.as_deref(), &rendered)
}
