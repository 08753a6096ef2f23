use rand_distr::{Distribution, LogNormal, Uniform};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::rng;
use crate::constants::{PaperValues, PhysConsts};
use crate::error::{require_positive, QtfError, Result};
use crate::solvency::{action_index, ParticleSpec};
use crate::tracks::{MomentumSource, TrackDataset};

/// Radius distribution, parameters in meters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RadiusDistribution {
    /// `ln r ~ Normal(mu, sigma)`.
    Lognormal {
        mu: f64,
        sigma: f64,
    },
    /// Lognormal given by its arithmetic mean and standard deviation.
    LognormalMoments {
        mean: f64,
        sd: f64,
    },
    Uniform {
        lo: f64,
        hi: f64,
    },
}

impl RadiusDistribution {
    /// Moment-matched lognormal: `σ² = ln(1 + sd²/mean²)`, `μ = ln mean − σ²/2`.
    pub fn lognormal_from_moments(mean: f64, sd: f64) -> Result<Self> {
        require_positive("mean", mean)?;
        if !(sd.is_finite() && sd >= 0.0) {
            return Err(QtfError::Config(format!(
                "lognormal sd must be >= 0, got {sd}"
            )));
        }
        let var_log = (1.0 + (sd / mean).powi(2)).ln();
        Ok(RadiusDistribution::Lognormal {
            mu: mean.ln() - 0.5 * var_log,
            sigma: var_log.sqrt(),
        })
    }

    /// Lognormal matched to the published mean and σ of the track radii.
    pub fn paper_lognormal() -> Self {
        let pv = PaperValues::get();
        Self::lognormal_from_moments(pv.paper_mean_radius, pv.paper_radius_sigma)
            .expect("published moments are positive")
    }

    /// Resolves moment form into `(mu, sigma)` form; other variants unchanged.
    pub fn normalized(self) -> Result<Self> {
        match self {
            RadiusDistribution::LognormalMoments { mean, sd } => {
                Self::lognormal_from_moments(mean, sd)
            }
            other => Ok(other),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self.normalized()? {
            RadiusDistribution::Lognormal { mu, sigma } => {
                if !mu.is_finite() || !sigma.is_finite() || sigma < 0.0 {
                    return Err(QtfError::Config(format!(
                        "lognormal needs finite mu and sigma >= 0, got mu={mu}, sigma={sigma}"
                    )));
                }
            }
            RadiusDistribution::Uniform { lo, hi } => {
                if !(lo.is_finite() && hi.is_finite() && lo > 0.0 && lo < hi) {
                    return Err(QtfError::Config(format!(
                        "uniform needs 0 < lo < hi, got lo={lo}, hi={hi}"
                    )));
                }
            }
            RadiusDistribution::LognormalMoments { .. } => unreachable!(),
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimConfig {
    pub seed: u64,
    pub n_tracks: usize,
    pub radius_distribution: RadiusDistribution,
    pub particle: ParticleSpec,
    pub momentum_source: MomentumSource,
    pub floor_n: f64,
}

impl Default for SimConfig {
    fn default() -> Self {
        let pv = PaperValues::get();
        SimConfig {
            seed: 42,
            n_tracks: pv.paper_track_count,
            radius_distribution: RadiusDistribution::paper_lognormal(),
            particle: ParticleSpec::alpha_5mev(),
            momentum_source: MomentumSource::PaperStated,
            floor_n: pv.paper_floor_n,
        }
    }
}

impl SimConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_tracks == 0 {
            return Err(QtfError::Config("n_tracks must be >= 1".into()));
        }
        self.radius_distribution.validate()?;
        self.particle.validate()?;
        if self.floor_n.is_nan() || self.floor_n < 0.0 {
            return Err(QtfError::Config(format!(
                "floor_n must be >= 0, got {}",
                self.floor_n
            )));
        }
        Ok(())
    }

    pub fn momentum(&self) -> Result<f64> {
        self.momentum_source.resolve(self.particle)
    }
}

const MAX_REDRAWS: usize = 64;

enum Sampler {
    Lognormal(LogNormal<f64>),
    Uniform(Uniform<f64>),
}

impl Sampler {
    fn new(dist: RadiusDistribution) -> Result<Self> {
        let bad = |e: &dyn std::fmt::Display| QtfError::Config(format!("radius distribution: {e}"));
        match dist.normalized()? {
            RadiusDistribution::Lognormal { mu, sigma } => LogNormal::new(mu, sigma)
                .map(Sampler::Lognormal)
                .map_err(|e| bad(&e)),
            RadiusDistribution::Uniform { lo, hi } => Uniform::new(lo, hi)
                .map(Sampler::Uniform)
                .map_err(|e| bad(&e)),
            RadiusDistribution::LognormalMoments { .. } => unreachable!(),
        }
    }

    fn sample(&self, seed: u64, index: u64) -> Option<f64> {
        let mut rng = rng::stream(seed, index);
        // Extreme lognormal parameters can underflow to 0 or overflow; redraw
        // on the same stream a bounded number of times.
        (0..MAX_REDRAWS).find_map(|_| {
            let r = match self {
                Sampler::Lognormal(d) => d.sample(&mut rng),
                Sampler::Uniform(d) => d.sample(&mut rng),
            };
            (r > 0.0 && r.is_finite()).then_some(r)
        })
    }
}

/// Draws `n_tracks` radii. Track `i` uses stream `i` of the seeded generator,
/// so the result depends only on the config.
pub fn generate_tracks(config: &SimConfig) -> Result<TrackDataset> {
    config.validate()?;
    let sampler = Sampler::new(config.radius_distribution)?;
    let radii: Vec<f64> = (0..config.n_tracks as u64)
        .into_par_iter()
        .map(|i| sampler.sample(config.seed, i))
        .collect::<Option<_>>()
        .ok_or_else(|| {
            QtfError::Config("radius distribution does not yield finite positive radii".into())
        })?;
    Ok(TrackDataset::from_radii(
        format!("synthetic-seed-{}", config.seed),
        radii,
    ))
}

/// Keeps exactly the tracks whose `n_real` reaches `floor_n`; order and ids
/// are preserved and removed tracks are counted as dropped rows.
pub fn censor_at_floor(
    dataset: &TrackDataset,
    floor_n: f64,
    momentum: f64,
    consts: &PhysConsts,
) -> Result<TrackDataset> {
    require_positive("momentum", momentum)?;
    let kept = dataset
        .records
        .par_iter()
        .map(|rec| action_index(rec.radius, momentum, consts).map(|ix| (rec, ix.n_real >= floor_n)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter_map(|(rec, keep)| keep.then_some(*rec))
        .collect::<Vec<_>>();
    let removed = dataset.records.len() - kept.len();
    Ok(TrackDataset {
        records: kept,
        source_label: format!("{} (censored at n >= {floor_n:e})", dataset.source_label),
        rows_read: dataset.rows_read,
        rows_dropped: dataset.rows_dropped + removed,
    })
}
