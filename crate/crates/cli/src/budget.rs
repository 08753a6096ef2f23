use std::fmt::Write as _;

use clap::Args;
use serde::Serialize;

use qtf_core::thermo::{
    asymmetry_ratio, audit_against_paper, compute_budget, stated_magnitudes, DiscrepancyRecord,
    EnergyBudget, ReferenceTable, ThermoQuery, DEFAULT_ENERGY_PER_MODE_PER_FRAME,
};
use qtf_core::{get_consts, RunManifest};

use crate::error::{CliError, CliResult};
use crate::output::{json_with_manifest, manifest_comment, write_output};
use crate::{OutArgs, OutputFormat};

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct BudgetArgs {
    /// Bath temperature (K).
    #[arg(long, default_value_t = 300.0)]
    temperature: f64,
    /// Bits erased per symbolic unit.
    #[arg(long, default_value_t = 1e6)]
    bits: f64,
    /// Coherent degrees of freedom.
    #[arg(long, default_value_t = 1e23)]
    modes: f64,
    /// Single-qubit hold time (s).
    #[arg(long, default_value_t = 1e-3)]
    tau: f64,
    /// Frame rate (Hz).
    #[arg(long, default_value_t = 60.0)]
    fps: f64,
    /// Entangled transitions per frame.
    #[arg(long, default_value_t = 1e6)]
    transitions: f64,
    /// Energy per mode per frame (J).
    #[arg(long, default_value_t = DEFAULT_ENERGY_PER_MODE_PER_FRAME)]
    energy_per_mode: f64,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Serialize)]
struct Body {
    query: ThermoQuery,
    budget: EnergyBudget,
    /// False when the query departs from the defaults the stated magnitudes
    /// were quoted for.
    audit_inputs_match_paper: bool,
    audit: Vec<DiscrepancyRecord>,
    reference: ReferenceTable,
    scene_asymmetry: f64,
}

fn budget_rows(b: &EnergyBudget) -> [(&'static str, f64, &'static str, &'static str); 8] {
    [
        ("erase_per_bit", b.erase_per_bit, "J", "k_B T ln 2"),
        ("erase_total", b.erase_total, "J", "bits · k_B T ln 2"),
        ("decoherence_rate", b.decoherence_rate, "Hz", "k_B T / ħ"),
        ("min_sustain", b.min_sustain, "J", "ħ / τ"),
        (
            "coherence_cost",
            b.coherence_cost,
            "J",
            "N · k_B T (lower bound)",
        ),
        ("ml_min_energy", b.ml_min_energy, "J", "h / 4t, t = 1/fps"),
        ("per_frame", b.per_frame, "J", "transitions · h / 4t"),
        ("dynamic_rate", b.dynamic_rate, "J/s", "e · N · fps"),
    ]
}

fn render_text(body: &Body) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<18}  {:>11}  {:<4}  Formula",
        "Quantity", "Computed", "Unit"
    );
    for (name, value, unit, formula) in budget_rows(&body.budget) {
        let _ = writeln!(s, "{name:<18}  {value:>11.3e}  {unit:<4}  {formula}");
    }
    let _ = writeln!(s);
    let _ = writeln!(
        s,
        "{:<20}  {:>11}  {:>11}  {:>10}  Flag",
        "Audit", "Computed", "Stated", "Rel. gap"
    );
    for r in &body.audit {
        let _ = writeln!(
            s,
            "{:<20}  {:>11.3e}  {:>11.3e}  {:>10.3}  {}",
            r.quantity_name,
            r.computed,
            r.paper_stated,
            r.relative_gap,
            if r.flagged { "DISCREPANT" } else { "ok" }
        );
    }
    if !body.audit_inputs_match_paper {
        let _ = writeln!(
            s,
            "(inputs differ from the quoted defaults; audit gaps are indicative only)"
        );
    }
    let _ = writeln!(s);
    let _ = writeln!(
        s,
        "Scene asymmetry (wave / collapsed): {:.3e}",
        body.scene_asymmetry
    );
    s
}

fn render_csv(body: &Body) -> String {
    let mut s = String::from("quantity,computed,unit,stated,relative_gap,flagged\n");
    for (name, value, unit, _) in budget_rows(&body.budget) {
        let _ = write!(s, "{name},{value},{unit},");
        match body.audit.iter().find(|r| r.quantity_name == name) {
            Some(r) => {
                let _ = writeln!(s, "{},{},{}", r.paper_stated, r.relative_gap, r.flagged);
            }
            None => s.push_str(",,\n"),
        }
    }
    for r in body.audit.iter().filter(|r| {
        budget_rows(&body.budget)
            .iter()
            .all(|row| row.0 != r.quantity_name)
    }) {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{}",
            r.quantity_name, r.computed, r.unit, r.paper_stated, r.relative_gap, r.flagged
        );
    }
    s
}

pub fn run(args: BudgetArgs) -> CliResult<()> {
    let query = ThermoQuery {
        temperature: args.temperature,
        bits: args.bits,
        n_modes: args.modes,
        sustain_time: args.tau,
        frame_rate: args.fps,
        transitions: args.transitions,
        energy_per_mode_per_frame: args.energy_per_mode,
    };
    let consts = get_consts();
    let budget = compute_budget(&query, &consts).map_err(|e| CliError::Usage(e.to_string()))?;
    let reference = ReferenceTable::get();
    let body = Body {
        query,
        budget,
        audit_inputs_match_paper: query == ThermoQuery::default(),
        audit: audit_against_paper(&budget, &stated_magnitudes()),
        reference,
        scene_asymmetry: asymmetry_ratio(reference.wave_scene, reference.collapsed_scene)
            .map_err(|e| CliError::Usage(e.to_string()))?,
    };

    let mut manifest = RunManifest::new("budget");
    manifest
        .set("query", query)
        .set("format", format!("{:?}", args.format).to_lowercase());

    let rendered = match args.format {
        OutputFormat::Json => json_with_manifest(&manifest, &body),
        OutputFormat::Text => manifest_comment(&manifest) + &render_text(&body),
        OutputFormat::Csv => manifest_comment(&manifest) + &render_csv(&body),
    };
    write_output(args.out.out.as_deref(), &rendered)
}
