//! Seeded stochastic harnesses: synthetic track populations censored at an
//! action floor, and discrete-time budget accrual toward collapse.

mod accrual;
mod ks;
mod population;
pub mod rng;

pub use accrual::{
    closed_form_collapse_time, is_monotone_nondecreasing, run_accrual, sweep_initial_budget,
    sweep_prediction_1, AccrualConfig, AccrualOutcome, SweepPoint,
};
pub use ks::ks_statistic;
pub use population::{censor_at_floor, generate_tracks, RadiusDistribution, SimConfig};
