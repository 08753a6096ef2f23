//! Collapse-solvency calculus.
//!
//! Two views of the same threshold live here. The continuous one compares the
//! work needed to keep a system coherent with the work the system can supply
//! ([`collapse_test`]). The discrete one counts how many whole action quanta a
//! particle track represents ([`action_index`]) and whether that count clears
//! an empirical floor ([`renderable`]).

use serde::{Deserialize, Serialize};

use crate::constants::PhysConsts;
use crate::error::{require_non_negative, require_positive, QtfError, Result};

/// How a threshold comparison treats equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Boundary {
    /// `value > threshold`
    Strict,
    /// `value >= threshold`
    #[default]
    Inclusive,
}

impl Boundary {
    #[inline]
    pub fn passes(self, value: f64, threshold: f64) -> bool {
        match self {
            Boundary::Strict => value > threshold,
            Boundary::Inclusive => value >= threshold,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParticleSpec {
    /// Rest mass (kg).
    pub mass: f64,
    /// Kinetic energy (J).
    pub kinetic_energy: f64,
}

impl ParticleSpec {
    pub fn new(mass: f64, kinetic_energy: f64) -> Result<Self> {
        let spec = ParticleSpec {
            mass,
            kinetic_energy,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// A 5 MeV alpha particle with the quoted mass and energy.
    pub fn alpha_5mev() -> Self {
        let pv = crate::constants::PaperValues::get();
        ParticleSpec {
            mass: pv.alpha_mass,
            kinetic_energy: pv.alpha_energy,
        }
    }

    pub fn validate(&self) -> Result<()> {
        require_positive("mass", self.mass)?;
        require_non_negative("kinetic_energy", self.kinetic_energy)?;
        Ok(())
    }

    pub fn momentum(&self) -> Result<f64> {
        momentum_from_energy(*self)
    }
}

impl Default for ParticleSpec {
    fn default() -> Self {
        Self::alpha_5mev()
    }
}

/// Indices at or above 2^53 have no exact whole-quantum count in `f64`.
pub const MAX_EXACT_INDEX: f64 = 9_007_199_254_740_992.0;

/// Solvency index of a single track, continuous and quantized.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ActionIndex {
    pub n_real: f64,
    /// `floor(n_real)`; only whole quanta count.
    pub n_quanta: u64,
    /// `n_quanta × h` (J·s).
    pub action: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolvencyResult {
    pub w_cumulative: f64,
    pub w_available: f64,
    pub ratio: f64,
    pub collapsed: bool,
}

/// Non-relativistic momentum `√(2 m E)`.
pub fn momentum_from_energy(particle: ParticleSpec) -> Result<f64> {
    particle.validate()?;
    Ok((2.0 * particle.mass * particle.kinetic_energy).sqrt())
}

/// `n = r · p / ħ`, with the whole-quantum count and its action `n_quanta · h`.
pub fn action_index(radius: f64, momentum: f64, consts: &PhysConsts) -> Result<ActionIndex> {
    require_non_negative("radius", radius)?;
    require_non_negative("momentum", momentum)?;
    let n_real = radius * momentum / consts.hbar;
    if n_real.is_nan() || n_real >= MAX_EXACT_INDEX {
        return Err(QtfError::Domain {
            name: "n_real",
            value: n_real,
            reason: "exceeds the representable quantum count",
        });
    }
    let n_quanta = n_real.floor() as u64;
    Ok(ActionIndex {
        n_real,
        n_quanta,
        action: n_quanta as f64 * consts.h,
    })
}

/// Declares collapse when `w_cumulative / w_available > 1`.
pub fn collapse_test(w_cumulative: f64, w_available: f64) -> Result<SolvencyResult> {
    collapse_test_with(w_cumulative, w_available, Boundary::Strict)
}

/// [`collapse_test`] with a selectable boundary rule, for sensitivity runs.
pub fn collapse_test_with(
    w_cumulative: f64,
    w_available: f64,
    boundary: Boundary,
) -> Result<SolvencyResult> {
    require_non_negative("w_cumulative", w_cumulative)?;
    // An interface with no budget is malformed rather than collapsed.
    require_positive("w_available", w_available)?;
    let ratio = w_cumulative / w_available;
    Ok(SolvencyResult {
        w_cumulative,
        w_available,
        ratio,
        collapsed: boundary.passes(ratio, 1.0),
    })
}

/// True when the index reaches the floor (`n_real >= floor_n`).
pub fn renderable(index: &ActionIndex, floor_n: f64) -> bool {
    renderable_with(index, floor_n, Boundary::Inclusive)
}

pub fn renderable_with(index: &ActionIndex, floor_n: f64, boundary: Boundary) -> bool {
    boundary.passes(index.n_real, floor_n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::get_consts;
    use approx::assert_relative_eq;

    // Frozen from a 40-digit mpmath evaluation of sqrt(2 * 6.644e-27 * 8.01e-13).
    const ORACLE_ALPHA_MOMENTUM: f64 = 1.031_682_509_302_159_3e-19;

    #[test]
    fn alpha_momentum_matches_oracle() {
        let p = momentum_from_energy(ParticleSpec::new(6.644e-27, 8.01e-13).unwrap()).unwrap();
        assert_relative_eq!(p, ORACLE_ALPHA_MOMENTUM, max_relative = 1e-14);
        assert_eq!(format!("{p:.4e}"), "1.0317e-19");
    }

    #[test]
    fn zero_energy_gives_zero_momentum() {
        let p = momentum_from_energy(ParticleSpec::new(6.644e-27, 0.0).unwrap()).unwrap();
        assert_eq!(p, 0.0);
    }

    #[test]
    fn unit_momentum_case() {
        assert_eq!(
            momentum_from_energy(ParticleSpec::new(2.0, 1.0).unwrap()).unwrap(),
            2.0
        );
    }

    #[test]
    fn momentum_rejects_bad_inputs() {
        for (m, e) in [
            (-1.0, 1.0),
            (1.0, -1.0),
            (f64::NAN, 1.0),
            (1.0, f64::INFINITY),
            (0.0, 1.0),
        ] {
            let spec = ParticleSpec {
                mass: m,
                kinetic_energy: e,
            };
            assert!(momentum_from_energy(spec).is_err(), "{m} {e}");
        }
    }

    #[test]
    fn quoted_median_and_mean_indices() {
        let c = get_consts();
        let med = action_index(6.67e-3, 3.26e-19, &c).unwrap();
        assert_relative_eq!(med.n_real, 2.061e13, max_relative = 1e-3);
        let mean = action_index(7.42e-3, 3.26e-19, &c).unwrap();
        assert_relative_eq!(mean.n_real, 2.293e13, max_relative = 1e-3);
    }

    #[test]
    fn rounded_hbar_reproduces_hand_arithmetic() {
        // 6.67e-3 * 3.26e-19 / 1.055e-34, 40-digit oracle.
        let c = crate::constants::PhysConsts::rounded_hbar();
        let med = action_index(6.67e-3, 3.26e-19, &c).unwrap();
        assert_relative_eq!(med.n_real, 2.061_061_611_374_407_6e13, max_relative = 1e-13);
    }

    #[test]
    fn derived_momentum_index() {
        // 6.67e-3 * oracle momentum / (h / 2π), 40-digit oracle.
        let n = action_index(6.67e-3, ORACLE_ALPHA_MOMENTUM, &get_consts()).unwrap();
        assert_relative_eq!(n.n_real, 6.525_228_743_932_083e12, max_relative = 1e-13);
    }

    #[test]
    fn zero_radius() {
        let n = action_index(0.0, 3.26e-19, &get_consts()).unwrap();
        assert_eq!(n.n_real, 0.0);
        assert_eq!(n.n_quanta, 0);
        assert_eq!(n.action, 0.0);
    }

    #[test]
    fn action_index_rejects_negative_and_nan() {
        let c = get_consts();
        assert!(action_index(-1e-3, 1e-19, &c).is_err());
        assert!(action_index(1e-3, -1e-19, &c).is_err());
        assert!(action_index(f64::NAN, 1e-19, &c).is_err());
        assert!(action_index(1e300, 1e300, &c).is_err());
        assert!(action_index(0.1, 1e-17, &c).is_err());
    }

    #[test]
    fn collapse_boundaries() {
        let r = collapse_test(2.0, 1.0).unwrap();
        assert_eq!(r.ratio, 2.0);
        assert!(r.collapsed);
        let r = collapse_test(1.0, 2.0).unwrap();
        assert_eq!(r.ratio, 0.5);
        assert!(!r.collapsed);
        let r = collapse_test(1.0, 1.0).unwrap();
        assert_eq!(r.ratio, 1.0);
        assert!(!r.collapsed);
        assert!(
            collapse_test_with(1.0, 1.0, Boundary::Inclusive)
                .unwrap()
                .collapsed
        );
    }

    #[test]
    fn collapse_rejects_empty_budget() {
        assert!(collapse_test(1.0, 0.0).is_err());
        assert!(collapse_test(1.0, -1.0).is_err());
        assert!(collapse_test(-1.0, 1.0).is_err());
    }

    #[test]
    fn floor_comparison() {
        let at = |n_real: f64| ActionIndex {
            n_real,
            n_quanta: n_real.floor() as u64,
            action: 0.0,
        };
        assert!(renderable(&at(2.06e13), 1e12));
        assert!(!renderable(&at(9.9e11), 1e12));
        assert!(renderable(&at(1e12), 1e12));
        assert!(!renderable_with(&at(1e12), 1e12, Boundary::Strict));
    }
}
