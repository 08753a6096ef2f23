use serde::{Deserialize, Serialize};

use crate::error::{QtfError, Result};

/// Linear budget accrual. Cost accumulates as `cost_rate · t`; the available
/// budget is `initial_budget + budget_rate · t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AccrualConfig {
    /// J
    pub initial_budget: f64,
    /// J/s
    pub budget_rate: f64,
    /// J/s
    pub cost_rate: f64,
    /// s
    pub time_step: f64,
    /// s
    pub max_time: f64,
}

impl AccrualConfig {
    pub fn validate(&self) -> Result<()> {
        let finite = [
            self.initial_budget,
            self.budget_rate,
            self.cost_rate,
            self.time_step,
            self.max_time,
        ]
        .iter()
        .all(|v| v.is_finite());
        if !finite {
            return Err(QtfError::Config("accrual parameters must be finite".into()));
        }
        if self.time_step <= 0.0 {
            return Err(QtfError::Config(format!(
                "time_step must be > 0, got {}",
                self.time_step
            )));
        }
        if self.max_time < self.time_step {
            return Err(QtfError::Config(format!(
                "max_time ({}) must be >= time_step ({})",
                self.max_time, self.time_step
            )));
        }
        if self.budget_rate < 0.0 || self.cost_rate < 0.0 {
            return Err(QtfError::Config("rates must be >= 0".into()));
        }
        if self.initial_budget < 0.0 {
            return Err(QtfError::Config("initial_budget must be >= 0".into()));
        }
        Ok(())
    }

    /// Number of steps that fit in `max_time`.
    pub fn max_steps(&self) -> u64 {
        // Tolerate max_time being a float multiple of time_step.
        (self.max_time / self.time_step * (1.0 + 1e-12)).floor() as u64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AccrualOutcome {
    pub collapsed: bool,
    pub collapse_time: Option<f64>,
    pub steps_run: u64,
}

/// `B / (c − a)` when cost outpaces income, otherwise `None`.
pub fn closed_form_collapse_time(config: &AccrualConfig) -> Option<f64> {
    let net = config.cost_rate - config.budget_rate;
    (net > 0.0).then(|| config.initial_budget / net)
}

/// Steps `t = k·Δt` for `k = 1, 2, …` and stops at the first step where the
/// cumulative cost strictly exceeds the available budget.
///
/// The comparison is `W_cum > W_avail` rather than a ratio so that an empty
/// budget (`W_avail = 0`) with any positive cost counts as insolvent.
pub fn run_accrual(config: &AccrualConfig) -> Result<AccrualOutcome> {
    config.validate()?;
    let max_steps = config.max_steps();

    // With c <= a and B >= 0, c·t <= a·t <= B + a·t holds under rounding too,
    // so no step can ever be insolvent.
    if config.cost_rate <= config.budget_rate {
        return Ok(AccrualOutcome {
            collapsed: false,
            collapse_time: None,
            steps_run: max_steps,
        });
    }

    for k in 1..=max_steps {
        let t = k as f64 * config.time_step;
        let w_cum = config.cost_rate * t;
        let w_avail = config.initial_budget + config.budget_rate * t;
        if w_cum > w_avail {
            return Ok(AccrualOutcome {
                collapsed: true,
                collapse_time: Some(t),
                steps_run: k,
            });
        }
    }
    Ok(AccrualOutcome {
        collapsed: false,
        collapse_time: None,
        steps_run: max_steps,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepPoint {
    /// The swept parameter value.
    pub value: f64,
    pub outcome: AccrualOutcome,
}

/// Runs one accrual per budget rate, in input order.
pub fn sweep_prediction_1(base: &AccrualConfig, budget_rates: &[f64]) -> Result<Vec<SweepPoint>> {
    budget_rates
        .iter()
        .map(|&rate| {
            let outcome = run_accrual(&AccrualConfig {
                budget_rate: rate,
                ..*base
            })?;
            Ok(SweepPoint {
                value: rate,
                outcome,
            })
        })
        .collect()
}

/// Runs one accrual per initial budget, in input order.
pub fn sweep_initial_budget(base: &AccrualConfig, budgets: &[f64]) -> Result<Vec<SweepPoint>> {
    budgets
        .iter()
        .map(|&budget| {
            let outcome = run_accrual(&AccrualConfig {
                initial_budget: budget,
                ..*base
            })?;
            Ok(SweepPoint {
                value: budget,
                outcome,
            })
        })
        .collect()
}

/// Whether collapse times never decrease as the swept value grows. A run
/// that never collapses counts as an infinite time.
pub fn is_monotone_nondecreasing(points: &[SweepPoint]) -> bool {
    let mut sorted: Vec<(f64, f64)> = points
        .iter()
        .map(|p| (p.value, p.outcome.collapse_time.unwrap_or(f64::INFINITY)))
        .collect();
    sorted.sort_by(|a, b| a.0.total_cmp(&b.0));
    sorted.windows(2).all(|w| w[0].1 <= w[1].1)
}
