//! Interference power at a ground receiver: the sum of inter-satellite
//! interference from the dominant visible interferers and intra-satellite
//! inter-beam interference.
//!
//! Powers are combined in linear watts; dB conversion happens only at the
//! edges.

use alloc::vec::Vec;

use crate::constellation::{
    nearest_satellite, visible_satellites, EarthModel, GeometryError, GroundReceiver,
    SatellitePosition,
};
use crate::math;
use crate::propagation::free_space_path_loss_db;

/// Cosine-squared main lobe with a flat suppression floor outside it.
///
/// Inside the main lobe the gain is floored at `sidelobe_floor_linear`, so
/// gain(θ) ∈ [floor, 1] everywhere and gain(0) = 1.
#[derive(Debug, Clone, Copy)]
pub struct GainPattern {
    pub sidelobe_floor_linear: f64,
    pub main_lobe_half_angle_deg: f64,
}

impl Default for GainPattern {
    fn default() -> Self {
        // -30 dB sidelobe floor.
        Self { sidelobe_floor_linear: 1e-3, main_lobe_half_angle_deg: 90.0 }
    }
}

impl GainPattern {
    /// Pattern with no sidelobe suppression floor.
    pub fn without_floor() -> Self {
        Self { sidelobe_floor_linear: 0.0, main_lobe_half_angle_deg: 90.0 }
    }
}

/// Beams spread across one coverage sector of a satellite.
///
/// Beam 1 is the serving beam at 0 degrees; the remaining beams are placed
/// uniformly out to the sector edge.
#[derive(Debug, Clone, Copy)]
pub struct BeamLayout {
    pub num_beams: u32,
    pub sector_width_deg: f64,
    pub beam_width_deg: f64,
}

impl BeamLayout {
    pub fn new(num_beams: u32) -> Self {
        Self { num_beams, sector_width_deg: 90.0, beam_width_deg: 90.0 }
    }

    /// Center angle of beam `i` (1-based) in degrees.
    pub fn beam_center_deg(&self, i: u32) -> f64 {
        let denom = self.num_beams.saturating_sub(1).max(1) as f64;
        (i - 1) as f64 * self.sector_width_deg / denom
    }
}

/// Interference decomposition in watts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterferenceResult {
    pub inter_satellite_w: f64,
    pub inter_beam_w: f64,
    pub total_w: f64,
}

/// Off-axis antenna gain, linear.
pub fn off_axis_gain(theta_deg: f64, pattern: &GainPattern) -> f64 {
    if math::fabs(theta_deg) <= pattern.main_lobe_half_angle_deg {
        let c = math::cos(theta_deg.to_radians());
        (c * c).max(pattern.sidelobe_floor_linear)
    } else {
        pattern.sidelobe_floor_linear
    }
}

/// Total inter-satellite interference power in watts.
///
/// The `top_n` closest visible satellites other than the serving one are the
/// dominant interferers. Each contributes EIRP_lin · G(θ) / PL_lin, where θ
/// is measured at the receiver between the serving-satellite direction and
/// the interferer direction, and PL is free-space path loss over the
/// interferer's slant range.
#[allow(clippy::too_many_arguments)]
pub fn inter_satellite_interference_w(
    receiver: &GroundReceiver,
    sats: &[SatellitePosition],
    serving: &SatellitePosition,
    eirp_dbw: f64,
    frequency_mhz: f64,
    pattern: &GainPattern,
    top_n: usize,
    k_const: f64,
    earth: &EarthModel,
) -> f64 {
    let rx = receiver.position(earth);
    let zenith = rx.normalized();
    let serving_dir = serving.position.sub(&rx);

    let mut candidates: Vec<(f64, &SatellitePosition)> = sats
        .iter()
        .filter(|s| (s.orbit_index, s.slot_index) != (serving.orbit_index, serving.slot_index))
        .filter(|s| zenith.dot(&s.position.sub(&rx)) > 0.0)
        .map(|s| (s.position.sub(&rx).norm(), s))
        .collect();
    candidates.sort_by(|a, b| {
        a.0.partial_cmp(&b.0)
            .unwrap_or(core::cmp::Ordering::Equal)
            .then_with(|| (a.1.orbit_index, a.1.slot_index).cmp(&(b.1.orbit_index, b.1.slot_index)))
    });

    let eirp_lin = math::db_to_linear(eirp_dbw);
    let mut total = 0.0;
    for (dist, sat) in candidates.into_iter().take(top_n) {
        let theta = serving_dir.angle_deg(&sat.position.sub(&rx));
        let gain = off_axis_gain(theta, pattern);
        // Distance is positive for any satellite above the horizon.
        let pl_db = free_space_path_loss_db(dist, frequency_mhz, k_const)
            .expect("positive slant range and frequency");
        total += eirp_lin * gain / math::db_to_linear(pl_db);
    }
    total
}

/// Intra-satellite inter-beam interference power in watts.
///
/// Non-primary beams (i = 2..B) contribute EIRP_lin · G(θ_i) / PL_lin with
/// the serving link's path loss, since all beams originate on one satellite.
pub fn inter_beam_interference_w(
    layout: &BeamLayout,
    eirp_dbw: f64,
    path_loss_db: f64,
    pattern: &GainPattern,
) -> f64 {
    if layout.num_beams <= 1 {
        return 0.0;
    }
    let eirp_lin = math::db_to_linear(eirp_dbw);
    let pl_lin = math::db_to_linear(path_loss_db);
    let mut total = 0.0;
    for i in 2..=layout.num_beams {
        let gain = off_axis_gain(layout.beam_center_deg(i), pattern);
        total += eirp_lin * gain / pl_lin;
    }
    total
}

/// Combined interference at the receiver; total is the exact sum of parts.
#[allow(clippy::too_many_arguments)]
pub fn total_interference(
    receiver: &GroundReceiver,
    constellation: &[SatellitePosition],
    serving: &SatellitePosition,
    layout: &BeamLayout,
    eirp_dbw: f64,
    frequency_mhz: f64,
    serving_path_loss_db: f64,
    pattern: &GainPattern,
    top_n: usize,
    k_const: f64,
    earth: &EarthModel,
) -> InterferenceResult {
    let inter_satellite_w = inter_satellite_interference_w(
        receiver,
        constellation,
        serving,
        eirp_dbw,
        frequency_mhz,
        pattern,
        top_n,
        k_const,
        earth,
    );
    let inter_beam_w = inter_beam_interference_w(layout, eirp_dbw, serving_path_loss_db, pattern);
    InterferenceResult {
        inter_satellite_w,
        inter_beam_w,
        total_w: inter_satellite_w + inter_beam_w,
    }
}

/// Mean inter-satellite interference over a lat/lon grid of receivers.
///
/// Receivers sit at cell centers of a `lat_step_deg` × `lon_step_deg` grid,
/// 1 m above the surface; each connects to its nearest visible satellite.
/// Cells with no visible satellite are excluded from the mean. Returns
/// (mean watts, covered cells, total cells).
#[allow(clippy::too_many_arguments)]
pub fn grid_mean_inter_satellite_w(
    sats: &[SatellitePosition],
    lat_step_deg: f64,
    lon_step_deg: f64,
    eirp_dbw: f64,
    frequency_mhz: f64,
    pattern: &GainPattern,
    top_n: usize,
    k_const: f64,
    earth: &EarthModel,
) -> Result<(f64, u32, u32), GeometryError> {
    if lat_step_deg <= 0.0 || lon_step_deg <= 0.0 {
        return Err(GeometryError::InvalidReceiver);
    }
    let n_lat = math::round(180.0 / lat_step_deg) as i32;
    let n_lon = math::round(360.0 / lon_step_deg) as i32;
    let mut sum = 0.0;
    let mut covered = 0u32;
    let mut total = 0u32;
    for i in 0..n_lat {
        let lat = -90.0 + (i as f64 + 0.5) * lat_step_deg;
        for j in 0..n_lon {
            let lon = -180.0 + (j as f64 + 0.5) * lon_step_deg;
            total += 1;
            let rx = GroundReceiver::at(lat, lon)?;
            let serving = match nearest_satellite(&rx, sats, earth) {
                Ok(s) => s,
                Err(GeometryError::NoVisibleSatellite) => continue,
                Err(e) => return Err(e),
            };
            sum += inter_satellite_interference_w(
                &rx, sats, &serving, eirp_dbw, frequency_mhz, pattern, top_n, k_const, earth,
            );
            covered += 1;
        }
    }
    let mean = if covered > 0 { sum / covered as f64 } else { 0.0 };
    Ok((mean, covered, total))
}

// ============================================================================
// Tests
// ============================================================================
