//! Closed-form energy bounds for erasure, coherence maintenance and
//! frame-rate rendering, plus an auditor that compares them with the
//! magnitudes quoted next to each formula.
//!
//! The formulas are implemented exactly as written. Where a quoted magnitude
//! does not follow from its own formula the computed value wins and the quote
//! survives only as an audit target.

use serde::{Deserialize, Serialize};

use crate::constants::{PhysConsts, DEFAULT_TEMPERATURE};
use crate::error::{require_non_negative, require_positive, Result};

/// Relative gap above which a quoted magnitude is flagged as discrepant.
pub const DISCREPANCY_THRESHOLD: f64 = 0.10;

/// Default energy per mode per frame for dynamic rendering (J). Taken as an
/// opaque parameter; it has no derivation.
pub const DEFAULT_ENERGY_PER_MODE_PER_FRAME: f64 = 6e-14;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThermoQuery {
    /// Bath temperature (K).
    pub temperature: f64,
    /// Bits erased per rendered symbolic unit.
    pub bits: f64,
    /// Interacting degrees of freedom held coherent.
    pub n_modes: f64,
    /// Coherence hold time for a single qubit (s).
    pub sustain_time: f64,
    /// Frame rate for real-time rendering (Hz).
    pub frame_rate: f64,
    /// Entangled transitions per frame in the speed-limit bound.
    pub transitions: f64,
    /// Energy per mode per frame for dynamic rendering (J).
    pub energy_per_mode_per_frame: f64,
}

impl Default for ThermoQuery {
    fn default() -> Self {
        ThermoQuery {
            temperature: DEFAULT_TEMPERATURE,
            bits: 1e6,
            n_modes: 1e23,
            sustain_time: 1e-3,
            frame_rate: 60.0,
            transitions: 1e6,
            energy_per_mode_per_frame: DEFAULT_ENERGY_PER_MODE_PER_FRAME,
        }
    }
}

impl ThermoQuery {
    pub fn validate(&self) -> Result<()> {
        require_positive("temperature", self.temperature)?;
        require_non_negative("bits", self.bits)?;
        require_non_negative("n_modes", self.n_modes)?;
        require_positive("sustain_time", self.sustain_time)?;
        require_positive("frame_rate", self.frame_rate)?;
        require_non_negative("transitions", self.transitions)?;
        require_non_negative("energy_per_mode_per_frame", self.energy_per_mode_per_frame)?;
        Ok(())
    }

    /// Frame period `1 / frame_rate` (s).
    pub fn frame_time(&self) -> f64 {
        1.0 / self.frame_rate
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyBudget {
    /// Landauer cost per erased bit (J).
    pub erase_per_bit: f64,
    /// Landauer cost for all bits of one symbolic unit (J).
    pub erase_total: f64,
    /// Thermal decoherence rate (Hz).
    pub decoherence_rate: f64,
    /// Minimum energy to hold one qubit for the sustain time (J).
    pub min_sustain: f64,
    /// Lower bound on entropic work to keep all modes coherent (J).
    pub coherence_cost: f64,
    /// Speed-limit energy for one transition per frame (J).
    pub ml_min_energy: f64,
    /// Speed-limit energy for all transitions in a frame (J).
    pub per_frame: f64,
    /// Continuous rendering power (J/s).
    pub dynamic_rate: f64,
}

/// Landauer bound: `(k_B T ln 2, bits × k_B T ln 2)`.
pub fn landauer_cost(temperature: f64, bits: f64, consts: &PhysConsts) -> Result<(f64, f64)> {
    require_positive("temperature", temperature)?;
    require_non_negative("bits", bits)?;
    let per_bit = consts.k_b * temperature * std::f64::consts::LN_2;
    Ok((per_bit, bits * per_bit))
}

/// Thermal decoherence rate `k_B T / ħ`.
pub fn decoherence_rate(temperature: f64, consts: &PhysConsts) -> Result<f64> {
    require_positive("temperature", temperature)?;
    Ok(consts.k_b * temperature / consts.hbar)
}

/// `ħ / τ`.
pub fn min_sustain_energy(sustain_time: f64, consts: &PhysConsts) -> Result<f64> {
    require_positive("sustain_time", sustain_time)?;
    Ok(consts.hbar / sustain_time)
}

/// Lower bound `N · k_B T` on the work needed to keep `N` modes coherent.
pub fn coherence_cost(n_modes: f64, temperature: f64, consts: &PhysConsts) -> Result<f64> {
    require_non_negative("n_modes", n_modes)?;
    require_positive("temperature", temperature)?;
    Ok(n_modes * consts.k_b * temperature)
}

/// Margolus–Levitin bound inverted for energy: `(h / 4t, N · h / 4t)`.
pub fn ml_bound(
    transition_time: f64,
    n_transitions: f64,
    consts: &PhysConsts,
) -> Result<(f64, f64)> {
    require_positive("transition_time", transition_time)?;
    require_non_negative("n_transitions", n_transitions)?;
    let single = consts.h / (4.0 * transition_time);
    Ok((single, n_transitions * single))
}

/// `e × N × f`.
pub fn dynamic_rendering_rate(
    energy_per_mode_per_frame: f64,
    n_modes: f64,
    frame_rate: f64,
) -> Result<f64> {
    require_non_negative("energy_per_mode_per_frame", energy_per_mode_per_frame)?;
    require_non_negative("n_modes", n_modes)?;
    require_non_negative("frame_rate", frame_rate)?;
    Ok(energy_per_mode_per_frame * n_modes * frame_rate)
}

/// `w_wave / w_collapsed`.
pub fn asymmetry_ratio(w_wave: f64, w_collapsed: f64) -> Result<f64> {
    require_non_negative("w_wave", w_wave)?;
    require_positive("w_collapsed", w_collapsed)?;
    Ok(w_wave / w_collapsed)
}

/// Evaluates every bound for one query.
pub fn compute_budget(query: &ThermoQuery, consts: &PhysConsts) -> Result<EnergyBudget> {
    query.validate()?;
    let (erase_per_bit, erase_total) = landauer_cost(query.temperature, query.bits, consts)?;
    let (ml_min_energy, per_frame) = ml_bound(query.frame_time(), query.transitions, consts)?;
    Ok(EnergyBudget {
        erase_per_bit,
        erase_total,
        decoherence_rate: decoherence_rate(query.temperature, consts)?,
        min_sustain: min_sustain_energy(query.sustain_time, consts)?,
        coherence_cost: coherence_cost(query.n_modes, query.temperature, consts)?,
        ml_min_energy,
        per_frame,
        dynamic_rate: dynamic_rendering_rate(
            query.energy_per_mode_per_frame,
            query.n_modes,
            query.frame_rate,
        )?,
    })
}

/// Read-only biological and scene-level reference energies. Nothing here is
/// modeled; the values only seed [`asymmetry_ratio`] defaults.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReferenceTable {
    /// Phototransduction cost per photon (J).
    pub phototransduction_per_photon: f64,
    /// Biological signal stabilization per dot (J).
    pub signal_stabilization_per_dot: f64,
    /// Perceiving a single collapsed dot (J).
    pub collapsed_dot: f64,
    /// Holding a 1 m² scene fully coherent (J).
    pub wave_scene: f64,
    /// Registering the same scene in collapsed form (J).
    pub collapsed_scene: f64,
    /// Human metabolic rate (W).
    pub human_metabolic_rate: f64,
    /// Global energy production (W).
    pub global_power: f64,
}

impl ReferenceTable {
    pub const fn get() -> Self {
        ReferenceTable {
            phototransduction_per_photon: 1e-16,
            signal_stabilization_per_dot: 1e-6,
            collapsed_dot: 1e-3,
            wave_scene: 1e8,
            collapsed_scene: 1e4,
            human_metabolic_rate: 100.0,
            global_power: 2e13,
        }
    }

    pub fn scene_asymmetry(&self) -> f64 {
        self.wave_scene / self.collapsed_scene
    }
}

impl Default for ReferenceTable {
    fn default() -> Self {
        Self::get()
    }
}

/// Which budget field an audit target refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BudgetQuantity {
    ErasePerBit,
    EraseTotal,
    DecoherenceRate,
    MinSustain,
    CoherenceCost,
    MlMinEnergy,
    PerFrame,
    DynamicRate,
}

impl BudgetQuantity {
    pub fn value(self, budget: &EnergyBudget) -> f64 {
        match self {
            BudgetQuantity::ErasePerBit => budget.erase_per_bit,
            BudgetQuantity::EraseTotal => budget.erase_total,
            BudgetQuantity::DecoherenceRate => budget.decoherence_rate,
            BudgetQuantity::MinSustain => budget.min_sustain,
            BudgetQuantity::CoherenceCost => budget.coherence_cost,
            BudgetQuantity::MlMinEnergy => budget.ml_min_energy,
            BudgetQuantity::PerFrame => budget.per_frame,
            BudgetQuantity::DynamicRate => budget.dynamic_rate,
        }
    }
}

/// A quoted magnitude attached to one budget field.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatedMagnitude {
    pub name: String,
    pub quantity: BudgetQuantity,
    pub stated: f64,
    pub unit: String,
}

impl StatedMagnitude {
    fn new(name: &str, quantity: BudgetQuantity, stated: f64, unit: &str) -> Self {
        StatedMagnitude {
            name: name.to_owned(),
            quantity,
            stated,
            unit: unit.to_owned(),
        }
    }
}

/// Every magnitude quoted for the default inputs.
///
/// The dynamic rate appears twice: once as the worked product (3.6e11 J/s)
/// and once as the headline claim (≫ 1e25 J/s). Both are kept.
pub fn stated_magnitudes() -> Vec<StatedMagnitude> {
    use BudgetQuantity::*;
    vec![
        StatedMagnitude::new("erase_per_bit", ErasePerBit, 3e-21, "J"),
        StatedMagnitude::new("erase_total", EraseTotal, 3e-15, "J"),
        StatedMagnitude::new("decoherence_rate", DecoherenceRate, 4e12, "Hz"),
        StatedMagnitude::new("min_sustain", MinSustain, 1e-31, "J"),
        StatedMagnitude::new("per_frame", PerFrame, 1e20, "J"),
        StatedMagnitude::new("dynamic_rate", DynamicRate, 3.6e11, "J/s"),
        StatedMagnitude::new("dynamic_rate_claimed", DynamicRate, 1e25, "J/s"),
    ]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscrepancyRecord {
    pub quantity_name: String,
    pub computed: f64,
    pub paper_stated: f64,
    pub unit: String,
    /// `|computed − stated| / |stated|`.
    pub relative_gap: f64,
    /// `log10(computed / stated)`, the gap in orders of magnitude.
    pub log10_ratio: f64,
    pub flagged: bool,
}

impl DiscrepancyRecord {
    pub fn new(name: &str, computed: f64, stated: f64, unit: &str) -> Self {
        let relative_gap = (computed - stated).abs() / stated.abs();
        DiscrepancyRecord {
            quantity_name: name.to_owned(),
            computed,
            paper_stated: stated,
            unit: unit.to_owned(),
            relative_gap,
            log10_ratio: (computed / stated).log10(),
            flagged: relative_gap > DISCREPANCY_THRESHOLD,
        }
    }
}

pub fn audit_against_paper(
    budget: &EnergyBudget,
    stated: &[StatedMagnitude],
) -> Vec<DiscrepancyRecord> {
    stated
        .iter()
        .map(|s| DiscrepancyRecord::new(&s.name, s.quantity.value(budget), s.stated, &s.unit))
        .collect()
}
