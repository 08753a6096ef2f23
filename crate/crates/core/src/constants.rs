//! Physical constants and the reference values quoted for the alpha-track
//! analysis.
//!
//! [`PhysConsts`] carries full-precision SI values and is what every formula
//! in this crate consumes. [`PaperValues`] holds the rounded figures quoted
//! alongside the original cloud-chamber analysis; they are comparison targets
//! and are never fed back into a derivation unless a caller asks for it
//! explicitly (see [`PhysConsts::rounded_hbar`]).

use serde::{Deserialize, Serialize};

/// Planck constant, exact in SI since 2019 (J·s).
pub const PLANCK: f64 = 6.626_070_15e-34;

/// Boltzmann constant, exact in SI since 2019 (J/K).
pub const BOLTZMANN: f64 = 1.380_649e-23;

/// Reduced Planck constant `h / 2π` (J·s).
pub const HBAR: f64 = PLANCK / (2.0 * std::f64::consts::PI);

/// Ambient temperature used as the default thermal bath (K).
pub const DEFAULT_TEMPERATURE: f64 = 300.0;

/// One electronvolt in joules.
pub const ELECTRON_VOLT: f64 = 1.602_176_634e-19;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysConsts {
    /// Planck constant (J·s).
    pub h: f64,
    /// Reduced Planck constant (J·s).
    pub hbar: f64,
    /// Boltzmann constant (J/K).
    pub k_b: f64,
    /// Default bath temperature (K).
    pub default_temperature: f64,
}

impl PhysConsts {
    /// Constant set built around the rounded `ħ = 1.055e-34 J·s` quoted with
    /// the track analysis. `h` is rescaled to keep `ħ = h / 2π`.
    ///
    /// Only meant for reproducing hand arithmetic digit for digit.
    pub fn rounded_hbar() -> Self {
        let hbar = PaperValues::get().paper_hbar;
        PhysConsts {
            h: hbar * 2.0 * std::f64::consts::PI,
            hbar,
            ..get_consts()
        }
    }
}

impl Default for PhysConsts {
    fn default() -> Self {
        get_consts()
    }
}

/// The canonical constant set.
pub fn get_consts() -> PhysConsts {
    PhysConsts {
        h: PLANCK,
        hbar: HBAR,
        k_b: BOLTZMANN,
        default_temperature: DEFAULT_TEMPERATURE,
    }
}

/// Values transcribed verbatim from the original alpha-track analysis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PaperValues {
    /// Alpha particle mass (kg).
    pub alpha_mass: f64,
    /// Alpha kinetic energy, 5 MeV (J).
    pub alpha_energy: f64,
    /// Momentum as stated (kg·m/s). Not reproducible from `alpha_mass` and
    /// `alpha_energy`, which give ~1.03e-19.
    pub paper_momentum: f64,
    /// Rounded reduced Planck constant (J·s).
    pub paper_hbar: f64,
    /// Median track radius (m).
    pub paper_median_radius: f64,
    /// Mean track radius (m), also quoted as the 1σ-band mean.
    pub paper_mean_radius: f64,
    /// Standard deviation of track radii (m).
    pub paper_radius_sigma: f64,
    /// Number of valid tracks.
    pub paper_track_count: usize,
    /// Number of tracks inside the 1σ band.
    pub paper_filtered_count: usize,
    pub paper_n_median: f64,
    pub paper_n_mean: f64,
    /// Lowest observed solvency index.
    pub paper_floor_n: f64,
}

impl PaperValues {
    pub const fn get() -> Self {
        PaperValues {
            alpha_mass: 6.644e-27,
            alpha_energy: 8.01e-13,
            paper_momentum: 3.26e-19,
            paper_hbar: 1.055e-34,
            paper_median_radius: 6.67e-3,
            paper_mean_radius: 7.42e-3,
            paper_radius_sigma: 5.05e-3,
            paper_track_count: 228,
            paper_filtered_count: 161,
            paper_n_median: 2.06e13,
            paper_n_mean: 2.29e13,
            paper_floor_n: 1e12,
        }
    }
}

impl Default for PaperValues {
    fn default() -> Self {
        Self::get()
    }
}

/// The `constants.json` audit snapshot.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantsSnapshot {
    pub physical: PhysConsts,
    pub paper: PaperValues,
}

impl ConstantsSnapshot {
    pub fn current() -> Self {
        ConstantsSnapshot {
            physical: get_consts(),
            paper: PaperValues::get(),
        }
    }
}
