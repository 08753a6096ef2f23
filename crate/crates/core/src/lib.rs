//! Collapse-solvency calculus, thermodynamic energy bounds, alpha-track
//! statistics and seeded Monte Carlo harnesses.
//!
//! Everything is SI at module boundaries. Physical constants come from
//! [`constants::get_consts`]; the rounded reference figures used as audit
//! targets live in [`constants::PaperValues`].

pub mod constants;
pub mod error;
pub mod manifest;
pub mod montecarlo;
pub mod solvency;
pub mod thermo;
pub mod tracks;

pub use constants::{get_consts, ConstantsSnapshot, PaperValues, PhysConsts};
pub use error::{QtfError, Result};
pub use manifest::RunManifest;
pub use solvency::{
    action_index, collapse_test, momentum_from_energy, renderable, ActionIndex, Boundary,
    ParticleSpec, SolvencyResult,
};
pub use thermo::{compute_budget, DiscrepancyRecord, EnergyBudget, ThermoQuery};
pub use tracks::{
    compute_stats, emit_summary, parse_dataset, solvency_report, Format, MomentumSource,
    SolvencyReport, TrackDataset, TrackRecord, TrackStats,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
