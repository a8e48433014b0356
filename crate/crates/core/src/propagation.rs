//! dB-domain link-budget terms: free-space path loss, EIRP, rain and
//! atmospheric attenuation, and thermal noise.

use core::fmt;

use crate::math;

/// Free-space path-loss constant for distance in km and frequency in MHz.
pub const FSPL_K_KM_MHZ: f64 = 32.45;

/// Boltzmann constant in J/K.
pub const BOLTZMANN_J_PER_K: f64 = 1.380649e-23;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropagationError {
    /// Distance, frequency, bandwidth or temperature must be positive.
    NonPositiveInput,
    /// Elevation must lie in (0, 90] degrees.
    InvalidElevation,
}

impl fmt::Display for PropagationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NonPositiveInput => write!(f, "input must be positive"),
            Self::InvalidElevation => write!(f, "elevation must be in (0, 90] degrees"),
        }
    }
}

/// Power-law rain attenuation, `path_scale · k · rate^gamma` dB.
#[derive(Debug, Clone, Copy)]
pub struct RainParams {
    /// Rain rate in mm/h.
    pub rate_mm_per_h: f64,
    /// Specific attenuation coefficient for the carrier band.
    pub k_coeff: f64,
    /// Frequency-dependent exponent.
    pub gamma_exp: f64,
    /// Dimensionless effective rain-path multiplier.
    pub path_scale: f64,
}

impl RainParams {
    /// Coefficients for the 2 GHz band at the given rain rate.
    pub fn s_band_2ghz(rate_mm_per_h: f64) -> Self {
        Self { rate_mm_per_h, k_coeff: 0.0000847, gamma_exp: 1.0664, path_scale: 1.0 }
    }

    /// Coefficients for the 2.7 GHz band at the given rain rate.
    pub fn s_band_2_7ghz(rate_mm_per_h: f64) -> Self {
        Self { rate_mm_per_h, k_coeff: 0.000265, gamma_exp: 1.312, path_scale: 1.0 }
    }

    pub fn is_valid(&self) -> bool {
        self.rate_mm_per_h >= 0.0
            && self.k_coeff > 0.0
            && self.gamma_exp > 0.0
            && self.path_scale > 0.0
            && self.rate_mm_per_h.is_finite()
    }
}

/// Combined oxygen and water-vapor attenuation: a configurable zenith value
/// scaled by the cosecant of the elevation angle.
#[derive(Debug, Clone, Copy)]
pub struct AtmosParams {
    pub zenith_att_db: f64,
    /// Elevation floor applied inside the airmass scaling, avoiding the
    /// cosecant singularity at grazing angles.
    pub min_elevation_deg: f64,
}

impl Default for AtmosParams {
    fn default() -> Self {
        Self { zenith_att_db: 0.5, min_elevation_deg: 10.0 }
    }
}

/// All dB-domain terms entering the SINR for one service link.
#[derive(Debug, Clone, Copy)]
pub struct LinkBudget {
    pub distance_km: f64,
    pub frequency_mhz: f64,
    pub path_loss_db: f64,
    pub eirp_dbw: f64,
    pub rain_att_db: f64,
    pub atmos_att_db: f64,
    pub noise_dbw: f64,
    pub elevation_deg: f64,
}

impl LinkBudget {
    /// Received signal power in dBW: EIRP minus path loss and attenuations.
    pub fn signal_dbw(&self) -> f64 {
        self.eirp_dbw - self.path_loss_db - self.rain_att_db - self.atmos_att_db
    }
}

/// Free-space path loss, `20·log10(d) + 20·log10(f) + K` dB, with d in km
/// and f in MHz.
pub fn free_space_path_loss_db(
    distance_km: f64,
    frequency_mhz: f64,
    k_const: f64,
) -> Result<f64, PropagationError> {
    if distance_km <= 0.0 || frequency_mhz <= 0.0 {
        return Err(PropagationError::NonPositiveInput);
    }
    Ok(20.0 * math::log10(distance_km) + 20.0 * math::log10(frequency_mhz) + k_const)
}

/// EIRP in dBW; the dB-domain sum of transmit power and antenna gain.
pub fn eirp_dbw(tx_power_dbw: f64, antenna_gain_dbi: f64) -> f64 {
    tx_power_dbw + antenna_gain_dbi
}

/// Rain attenuation in dB. Zero rain rate gives exactly zero.
pub fn rain_attenuation_db(p: &RainParams) -> f64 {
    if p.rate_mm_per_h == 0.0 {
        return 0.0;
    }
    p.path_scale * p.k_coeff * math::pow(p.rate_mm_per_h, p.gamma_exp)
}

/// Atmospheric attenuation in dB: zenith value divided by sin(elevation),
/// with the elevation floored at `min_elevation_deg`.
pub fn atmospheric_attenuation_db(
    p: &AtmosParams,
    elevation_deg: f64,
) -> Result<f64, PropagationError> {
    if elevation_deg <= 0.0 || elevation_deg > 90.0 {
        return Err(PropagationError::InvalidElevation);
    }
    let eff = elevation_deg.max(p.min_elevation_deg);
    Ok(p.zenith_att_db / math::sin(eff.to_radians()))
}

/// Thermal noise power in dBW: `10·log10(k_B·T·B) + NF`.
pub fn noise_power_dbw(
    bandwidth_hz: f64,
    noise_figure_db: f64,
    temperature_k: f64,
) -> Result<f64, PropagationError> {
    if bandwidth_hz <= 0.0 || temperature_k <= 0.0 {
        return Err(PropagationError::NonPositiveInput);
    }
    Ok(math::linear_to_db(BOLTZMANN_J_PER_K * temperature_k * bandwidth_hz) + noise_figure_db)
}

// ============================================================================
// Tests
// ============================================================================
