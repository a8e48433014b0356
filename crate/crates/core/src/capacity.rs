//! SINR, spectral-efficiency mapping and the beam → satellite → per-km² →
//! per-user capacity chain, plus the inverse dimensioning query.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::constellation::EarthModel;
use crate::math;
use crate::propagation::LinkBudget;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapacityError {
    /// SE table rows must be strictly increasing in threshold and SE, with a
    /// -inf sentinel row mapping to SE 0 first.
    MalformedTable,
    ZeroFootprint,
    ZeroDensity,
    /// Dimensioning with zero achieved spectral efficiency.
    NonPositiveCapacity,
}

impl fmt::Display for CapacityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::MalformedTable => write!(
                f,
                "SE table must start with a -inf sentinel at SE 0 and be strictly increasing in both columns"
            ),
            Self::ZeroFootprint => write!(f, "footprint area must be positive"),
            Self::ZeroDensity => write!(f, "active user density must be positive"),
            Self::NonPositiveCapacity => write!(f, "achieved spectral efficiency must be positive"),
        }
    }
}

/// One row of the SINR → SE mapping.
#[derive(Debug, Clone, PartialEq)]
pub struct SeRow {
    pub min_sinr_db: f64,
    pub se_bps_per_hz: f64,
    pub label: String,
}

/// Ordered SINR → spectral-efficiency step table.
#[derive(Debug, Clone, PartialEq)]
pub struct SeTable {
    rows: Vec<SeRow>,
}

/// Built-in table data: CQI thresholds and efficiencies for the 256-QAM
/// table of TS 38.214, plus a high-order extension row used for dimensioning
/// calibration. The first row is the outage sentinel.
const DEFAULT_SE_ROWS: &[(f64, f64, &str)] = &[
    (f64::NEG_INFINITY, 0.0, "outage"),
    (-9.478, 0.1523, "qpsk-78"),
    (-6.658, 0.377, "qpsk-193"),
    (-4.098, 0.877, "qpsk-449"),
    (-1.798, 1.4766, "16qam-378"),
    (0.399, 1.9141, "16qam-490"),
    (2.424, 2.4063, "16qam-616"),
    (4.489, 2.7305, "64qam-466"),
    (6.367, 3.3223, "64qam-567"),
    (8.456, 3.9023, "64qam-666"),
    (10.266, 4.5234, "64qam-772"),
    (12.218, 5.1152, "64qam-873"),
    (14.122, 5.5547, "256qam-711"),
    (15.849, 6.2266, "256qam-797"),
    (17.786, 6.9141, "256qam-885"),
    (19.809, 7.4063, "256qam-948"),
    (29.6, 9.8366, "1024qam-ext"),
];

impl SeTable {
    /// Validates ordering and the sentinel row.
    pub fn new(rows: Vec<SeRow>) -> Result<Self, CapacityError> {
        if rows.is_empty() || rows[0].min_sinr_db != f64::NEG_INFINITY || rows[0].se_bps_per_hz != 0.0
        {
            return Err(CapacityError::MalformedTable);
        }
        for w in rows.windows(2) {
            if !(w[0].min_sinr_db < w[1].min_sinr_db && w[0].se_bps_per_hz < w[1].se_bps_per_hz) {
                return Err(CapacityError::MalformedTable);
            }
        }
        if rows.iter().skip(1).any(|r| !r.min_sinr_db.is_finite() || !(r.se_bps_per_hz > 0.0)) {
            return Err(CapacityError::MalformedTable);
        }
        Ok(Self { rows })
    }

    /// The built-in mapping shipped with the tool.
    pub fn builtin() -> Self {
        let rows = DEFAULT_SE_ROWS
            .iter()
            .map(|&(min_sinr_db, se_bps_per_hz, label)| SeRow {
                min_sinr_db,
                se_bps_per_hz,
                label: String::from(label),
            })
            .collect();
        Self::new(rows).expect("builtin table is well-formed")
    }

    pub fn rows(&self) -> &[SeRow] {
        &self.rows
    }
}

/// Per-satellite radio design.
#[derive(Debug, Clone)]
pub struct SystemDesign {
    pub name: String,
    pub num_beams: u32,
    pub bandwidth_per_beam_mhz: f64,
    pub carrier_mhz: f64,
    pub eirp_dbw: f64,
    pub half_beamwidth_deg: f64,
    pub satellite_mass_kg: f64,
}

/// Output of the capacity chain for one link.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacityResult {
    pub sinr_db: f64,
    pub se: f64,
    pub beam_cap_mbps: f64,
    pub sat_cap_mbps: f64,
    pub area_cap_mbps_per_km2: f64,
    pub user_cap_mbps: f64,
}

/// SINR at the receiver in dB.
///
/// The signal is EIRP minus path loss, rain and atmospheric attenuation; the
/// denominator is thermal noise plus interference, combined in watts.
pub fn sinr_db(link: &LinkBudget, interference_w: f64) -> f64 {
    let signal_w = math::db_to_linear(link.signal_dbw());
    let noise_w = math::db_to_linear(link.noise_dbw);
    math::linear_to_db(signal_w / (noise_w + interference_w))
}

/// Spectral efficiency for a SINR: the SE of the highest row whose threshold
/// does not exceed `sinr_db`. The sentinel row guarantees a match.
pub fn se_from_sinr(sinr_db: f64, table: &SeTable) -> f64 {
    let rows = table.rows();
    let idx = rows.partition_point(|r| r.min_sinr_db <= sinr_db);
    rows[idx - 1].se_bps_per_hz
}

/// Single-beam capacity in Mbps (bps/Hz × MHz).
pub fn beam_capacity_mbps(se: f64, bandwidth_mhz: f64) -> f64 {
    se * bandwidth_mhz
}

/// Whole-satellite capacity in Mbps.
pub fn satellite_capacity_mbps(beam_cap_mbps: f64, num_beams: u32) -> f64 {
    num_beams as f64 * beam_cap_mbps
}

/// Capacity density over the footprint, Mbps/km².
pub fn area_capacity(sat_cap_mbps: f64, footprint_km2: f64) -> Result<f64, CapacityError> {
    if footprint_km2 <= 0.0 {
        return Err(CapacityError::ZeroFootprint);
    }
    Ok(sat_cap_mbps / footprint_km2)
}

/// Capacity per simultaneously active user, Mbps.
pub fn user_capacity(area_cap: f64, active_density: f64) -> Result<f64, CapacityError> {
    if active_density <= 0.0 {
        return Err(CapacityError::ZeroDensity);
    }
    Ok(area_cap / active_density)
}

/// Satellites required to guarantee `target_rate_mbps` per active user
/// globally: total demand over Earth's surface divided by per-satellite
/// capacity, rounded up.
pub fn required_satellites(
    target_rate_mbps: f64,
    active_density: f64,
    design: &SystemDesign,
    achieved_se: f64,
    earth: &EarthModel,
) -> Result<u64, CapacityError> {
    if achieved_se <= 0.0 {
        return Err(CapacityError::NonPositiveCapacity);
    }
    let demand_mbps = earth.surface_area_km2() * active_density * target_rate_mbps;
    let per_sat_mbps =
        design.num_beams as f64 * design.bandwidth_per_beam_mhz * achieved_se;
    Ok(math::ceil(demand_mbps / per_sat_mbps) as u64)
}

// ============================================================================
// Tests
// ============================================================================
