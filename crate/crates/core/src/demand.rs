//! Regional population data and active-user demand arithmetic.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DemandError {
    /// A region field violates its invariant; the message names the field.
    Validation(String),
}

impl fmt::Display for DemandError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Validation(msg) => write!(f, "{msg}"),
        }
    }
}

/// One administrative region with its population density.
#[derive(Debug, Clone, PartialEq)]
pub struct Region {
    pub region_id: String,
    pub name: String,
    pub country: String,
    pub area_km2: f64,
    pub population: f64,
    pub density_per_km2: f64,
}

impl Region {
    /// Builds a region, computing the density when it is not supplied and
    /// checking consistency when it is.
    pub fn new(
        region_id: String,
        name: String,
        country: String,
        area_km2: f64,
        population: f64,
        density_per_km2: Option<f64>,
    ) -> Result<Self, DemandError> {
        if !(area_km2 > 0.0) {
            return Err(DemandError::Validation(String::from("area_km2 must be > 0")));
        }
        if !(population >= 0.0) {
            return Err(DemandError::Validation(String::from("population must be >= 0")));
        }
        let computed = population / area_km2;
        let density = match density_per_km2 {
            None => computed,
            Some(d) => {
                if !(d >= 0.0) {
                    return Err(DemandError::Validation(String::from(
                        "density_per_km2 must be >= 0",
                    )));
                }
                if libm::fabs(d - computed) > 1e-6 * d {
                    return Err(DemandError::Validation(String::from(
                        "density_per_km2 inconsistent with population/area_km2",
                    )));
                }
                d
            }
        };
        Ok(Self { region_id, name, country, area_km2, population, density_per_km2: density })
    }
}

/// Service adoption and peak-hour activity model.
#[derive(Debug, Clone, Copy)]
pub struct TrafficModel {
    /// Fraction of the population subscribing, in [0, 1].
    pub adoption_rate: f64,
    /// Overbooking factor: subscribed over simultaneously active users, >= 1.
    pub obf: f64,
    pub target_rate_mbps: f64,
}

impl TrafficModel {
    pub fn validate(&self) -> Result<(), DemandError> {
        if !(0.0..=1.0).contains(&self.adoption_rate) {
            return Err(DemandError::Validation(String::from("adoption_rate must be in [0, 1]")));
        }
        if !(self.obf >= 1.0) {
            return Err(DemandError::Validation(String::from("obf must be >= 1")));
        }
        if !(self.target_rate_mbps > 0.0) {
            return Err(DemandError::Validation(String::from("target_rate_mbps must be > 0")));
        }
        Ok(())
    }
}

/// Simultaneously active users per km²: density × adoption / OBF.
pub fn active_user_density(avg_density: f64, t: &TrafficModel) -> f64 {
    avg_density * t.adoption_rate / t.obf
}

/// Per-region capacity figures at a uniform per-km² supply.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionReport {
    pub region_id: String,
    pub active_density: f64,
    /// None for uncontended regions (no active users).
    pub user_capacity_mbps: Option<f64>,
    pub uncontended: bool,
}

/// Per-region user capacity at a uniform supply density, ordered by
/// region_id. Regions with zero active density are flagged uncontended.
pub fn regional_report(
    regions: &[Region],
    t: &TrafficModel,
    per_km2_supply: f64,
) -> Vec<RegionReport> {
    let mut rows: Vec<RegionReport> = regions
        .iter()
        .map(|r| {
            let active = active_user_density(r.density_per_km2, t);
            if active > 0.0 {
                RegionReport {
                    region_id: r.region_id.clone(),
                    active_density: active,
                    user_capacity_mbps: Some(per_km2_supply / active),
                    uncontended: false,
                }
            } else {
                RegionReport {
                    region_id: r.region_id.clone(),
                    active_density: 0.0,
                    user_capacity_mbps: None,
                    uncontended: true,
                }
            }
        })
        .collect();
    rows.sort_by(|a, b| a.region_id.cmp(&b.region_id));
    rows
}

// ============================================================================
// Tests
// ============================================================================
