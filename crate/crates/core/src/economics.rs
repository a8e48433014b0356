//! Architecture-dependent Capex/Opex assembly, NPV, subscriber pricing and
//! ROI for a global D2D constellation.
//!
//! Monetary ledger values are exact [`Money`]; NPV and the per-subscriber
//! metrics are real-valued.

use core::fmt;

use crate::capacity::SystemDesign;
use crate::demand::TrafficModel;
use crate::math;
use crate::money::Money;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EconError {
    ZeroSubscribers,
    /// A ledger value is negative or the margin is out of range.
    InvalidLedger,
}

impl fmt::Display for EconError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ZeroSubscribers => write!(f, "population x adoption rate must be positive"),
            Self::InvalidLedger => {
                write!(f, "ledger values must be non-negative and margin within [0, 5]")
            }
        }
    }
}

/// NTN architecture options.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Architecture {
    /// Transparent repeater in the sky; gNBs stay on the ground.
    BentPipe,
    /// Full gNB onboard the satellite, with inter-satellite links.
    Regenerative,
    /// Disaggregated gNB: RU/DU onboard, CUs on the ground.
    OpenRan3D,
}

impl Architecture {
    /// Canonical report ordering.
    pub const ALL: [Architecture; 3] =
        [Architecture::BentPipe, Architecture::Regenerative, Architecture::OpenRan3D];

    pub fn name(&self) -> &'static str {
        match self {
            Self::BentPipe => "bent_pipe",
            Self::Regenerative => "regenerative",
            Self::OpenRan3D => "open_ran_3d",
        }
    }
}

/// Per-architecture design modifiers.
///
/// Backhaul factors scale the feeder traffic the ground segment must carry.
/// Bent-pipe relays raw air-interface data; the two regenerative-style
/// options carry processed RAN traffic and are dimensioned alike here, which
/// is what keeps ground-segment savings consistent with their extra space
/// cost across very different fleet sizes.
#[derive(Debug, Clone, Copy)]
pub struct ArchModifiers {
    pub backhaul_factor: f64,
    pub gnb_cost_factor: f64,
    pub onboard_gnb_mass_kg: f64,
    pub isls_per_sat: u32,
    pub dus_per_cu: u32,
}

impl ArchModifiers {
    pub fn for_architecture(arch: Architecture) -> Self {
        match arch {
            Architecture::BentPipe => Self {
                backhaul_factor: 1.0,
                gnb_cost_factor: 1.0,
                onboard_gnb_mass_kg: 0.0,
                isls_per_sat: 0,
                dus_per_cu: 16,
            },
            Architecture::Regenerative => Self {
                backhaul_factor: 0.7,
                gnb_cost_factor: 1.0,
                onboard_gnb_mass_kg: 35.0,
                isls_per_sat: 4,
                dus_per_cu: 16,
            },
            Architecture::OpenRan3D => Self {
                backhaul_factor: 0.7,
                gnb_cost_factor: 0.75,
                onboard_gnb_mass_kg: 20.0,
                isls_per_sat: 0,
                dus_per_cu: 16,
            },
        }
    }
}

/// Every Capex/Opex line item, in exact USD.
#[derive(Debug, Clone, Copy)]
pub struct CostLedger {
    pub launch_fixed: Money,
    pub payload_per_kg: Money,
    pub monolithic_gnb: Money,
    pub gs_equipment_per_link: Money,
    pub gs_antenna_per_link: Money,
    pub isl_per_link: Money,
    pub gs_build: Money,
    pub spectrum_acquisition: Money,
    pub platform_cost: Money,
    pub replenishment_per_sat_per_year: Money,
    pub regulation: Money,
    pub digital_infra: Money,
    pub marketing_per_year: Money,
    pub staff_per_year: Money,
    pub rnd_per_year: Money,
    pub maintenance_per_year: Money,
    pub profit_margin: f64,
    pub spectrum_maintenance_per_year: Money,
    /// Fraction of the fleet replaced per year.
    pub replenishment_fraction: f64,
    /// Feeder link capacity in Mbps.
    pub backhaul_link_capacity_mbps: f64,
    /// Maximum feeder links terminating at one ground station.
    pub max_links_per_gs: u32,
}

impl Default for CostLedger {
    fn default() -> Self {
        Self {
            launch_fixed: Money::from_usd_int(500_000),
            payload_per_kg: Money::from_usd_int(10_000),
            monolithic_gnb: Money::from_usd_int(100_000),
            gs_equipment_per_link: Money::from_usd_int(100_000),
            gs_antenna_per_link: Money::from_usd_int(20_000),
            isl_per_link: Money::from_usd_int(25_000),
            gs_build: Money::from_usd_int(500_000),
            spectrum_acquisition: Money::from_usd_int(300_000_000),
            platform_cost: Money::from_usd_int(3_000_000),
            replenishment_per_sat_per_year: Money::from_usd_int(1_000_000),
            regulation: Money::from_usd_int(1_000_000),
            digital_infra: Money::from_usd_int(2_500_000),
            marketing_per_year: Money::from_usd_int(50_000_000),
            staff_per_year: Money::from_usd_int(10_000_000),
            rnd_per_year: Money::from_usd_int(50_000_000),
            maintenance_per_year: Money::from_usd_int(15_000_000),
            profit_margin: 0.60,
            spectrum_maintenance_per_year: Money::ZERO,
            replenishment_fraction: 0.2,
            backhaul_link_capacity_mbps: 2000.0,
            max_links_per_gs: 4,
        }
    }
}

impl CostLedger {
    pub fn validate(&self) -> Result<(), EconError> {
        let all_money = [
            self.launch_fixed,
            self.payload_per_kg,
            self.monolithic_gnb,
            self.gs_equipment_per_link,
            self.gs_antenna_per_link,
            self.isl_per_link,
            self.gs_build,
            self.spectrum_acquisition,
            self.platform_cost,
            self.replenishment_per_sat_per_year,
            self.regulation,
            self.digital_infra,
            self.marketing_per_year,
            self.staff_per_year,
            self.rnd_per_year,
            self.maintenance_per_year,
            self.spectrum_maintenance_per_year,
        ];
        if all_money.iter().any(|m| *m < Money::ZERO) {
            return Err(EconError::InvalidLedger);
        }
        if !(0.0..=5.0).contains(&self.profit_margin)
            || !(0.0..=1.0).contains(&self.replenishment_fraction)
            || !(self.backhaul_link_capacity_mbps > 0.0)
            || self.max_links_per_gs < 1
        {
            return Err(EconError::InvalidLedger);
        }
        Ok(())
    }
}

/// Launch pricing: a fixed component plus a per-kg rate.
#[derive(Debug, Clone, Copy)]
pub struct LaunchModel {
    pub per_kg_usd: f64,
    pub fixed: Money,
}

impl LaunchModel {
    /// Conventional launch pricing.
    pub fn baseline() -> Self {
        Self { per_kg_usd: 2700.0, fixed: Money::from_usd_int(500_000) }
    }

    /// Heavy-lift pricing at 200 USD/kg, same fixed component.
    pub fn heavy(&self) -> Self {
        Self { per_kg_usd: 200.0, fixed: self.fixed }
    }
}

/// Launch cost for one satellite of the given mass.
pub fn launch_cost(mass_kg: f64, lm: &LaunchModel) -> Money {
    lm.fixed + Money::from_usd(mass_kg * lm.per_kg_usd)
}

/// RU/DU (onboard) and CU (ground) shares of the disaggregated gNB split.
///
/// The disaggregated total per satellite-equivalent is 75% of a monolithic
/// gNB: 60% flies as RU/DU, and one ground CU worth 16 x 15% serves 16
/// satellites.
pub fn disaggregated_split(ledger: &CostLedger) -> (Money, Money) {
    let ru_du_per_sat = ledger.monolithic_gnb.mul_f64(0.60);
    let cu_unit = ledger.monolithic_gnb.mul_f64(16.0 * 0.15);
    (ru_du_per_sat, cu_unit)
}

fn onboard_radio_cost(arch: Architecture, ledger: &CostLedger) -> Money {
    match arch {
        Architecture::BentPipe => Money::ZERO,
        Architecture::Regenerative => ledger.monolithic_gnb,
        Architecture::OpenRan3D => disaggregated_split(ledger).0,
    }
}

/// Space-segment line items for one architecture, exact.
#[derive(Debug, Clone, Copy)]
pub struct SpaceSegment {
    pub platform: Money,
    pub payload: Money,
    pub launch: Money,
    pub isl: Money,
    pub onboard_radio: Money,
    pub total: Money,
}

/// Space-segment capex for the whole fleet.
///
/// Per satellite: platform, payload priced per kg on the full satellite plus
/// onboard-radio mass, launch of that mass, ISL terminals, and the onboard
/// radio electronics for the architecture.
pub fn space_segment_capex(
    n_sats: u64,
    design: &SystemDesign,
    arch: Architecture,
    ledger: &CostLedger,
    lm: &LaunchModel,
) -> SpaceSegment {
    let m = ArchModifiers::for_architecture(arch);
    let wet_mass = design.satellite_mass_kg + m.onboard_gnb_mass_kg;
    let platform = ledger.platform_cost.mul_u64(n_sats);
    let payload = ledger.payload_per_kg.mul_f64(wet_mass).mul_u64(n_sats);
    let launch = launch_cost(wet_mass, lm).mul_u64(n_sats);
    let isl = ledger.isl_per_link.mul_u64(m.isls_per_sat as u64).mul_u64(n_sats);
    let onboard_radio = onboard_radio_cost(arch, ledger).mul_u64(n_sats);
    let total = platform + payload + launch + isl + onboard_radio;
    SpaceSegment { platform, payload, launch, isl, onboard_radio, total }
}

/// Ground-segment line items for one architecture, exact.
#[derive(Debug, Clone, Copy)]
pub struct GroundSegment {
    pub n_links: u64,
    pub n_ground_stations: u64,
    pub gs_build: Money,
    pub gs_equipment: Money,
    pub gs_antenna: Money,
    pub ground_radio: Money,
    pub total: Money,
}

/// Ground-segment capex from total feeder traffic.
///
/// Links carry `backhaul_link_capacity_mbps` each and at most
/// `max_links_per_gs` terminate per ground station. The ground radio is a
/// gNB per satellite (bent-pipe), nothing (regenerative), or one CU per 16
/// satellites (3D Open RAN).
pub fn ground_segment_capex(
    total_backhaul_demand_mbps: f64,
    arch: Architecture,
    ledger: &CostLedger,
    n_sats: u64,
) -> GroundSegment {
    let m = ArchModifiers::for_architecture(arch);
    let effective = total_backhaul_demand_mbps * m.backhaul_factor;
    let n_links = if effective > 0.0 {
        math::ceil(effective / ledger.backhaul_link_capacity_mbps) as u64
    } else {
        0
    };
    let n_ground_stations = n_links.div_ceil(ledger.max_links_per_gs as u64);
    let gs_build = ledger.gs_build.mul_u64(n_ground_stations);
    let gs_equipment = ledger.gs_equipment_per_link.mul_u64(n_links);
    let gs_antenna = ledger.gs_antenna_per_link.mul_u64(n_links);
    let ground_radio = match arch {
        Architecture::BentPipe => ledger.monolithic_gnb.mul_u64(n_sats),
        Architecture::Regenerative => Money::ZERO,
        Architecture::OpenRan3D => {
            let (_, cu_unit) = disaggregated_split(ledger);
            cu_unit.mul_u64(n_sats.div_ceil(m.dus_per_cu as u64))
        }
    };
    let total = gs_build + gs_equipment + gs_antenna + ground_radio;
    GroundSegment { n_links, n_ground_stations, gs_build, gs_equipment, gs_antenna, ground_radio, total }
}

/// Annual Opex: fleet replenishment plus the fixed yearly lines.
pub fn annual_opex(n_sats: u64, ledger: &CostLedger, _arch: Architecture) -> Money {
    let replenishment = ledger
        .replenishment_per_sat_per_year
        .mul_u64(n_sats)
        .mul_f64(ledger.replenishment_fraction);
    replenishment
        + ledger.marketing_per_year
        + ledger.staff_per_year
        + ledger.rnd_per_year
        + ledger.maintenance_per_year
        + ledger.spectrum_maintenance_per_year
}

/// Present-value factor for `years` level annual payments, the first one
/// undiscounted: Σ_{i=0}^{Y−1} (1+r)^−i.
pub fn discount_sum(rate: f64, years: u32) -> f64 {
    let mut sum = 0.0;
    let mut factor = 1.0;
    for _ in 0..years {
        sum += factor;
        factor /= 1.0 + rate;
    }
    sum
}

/// Net present value of ownership: capex plus discounted opex stream.
pub fn npv(capex_usd: f64, opex_annual_usd: f64, rate: f64, years: u32) -> f64 {
    capex_usd + opex_annual_usd * discount_sum(rate, years)
}

/// Economic summary for one system/architecture pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EconResult {
    pub capex: Money,
    pub opex_annual: Money,
    pub npv_usd: f64,
    pub subscribers: f64,
    pub cost_per_sub_monthly: f64,
    pub price_monthly: f64,
    pub revenue_npv: f64,
    pub roi: f64,
}

/// Pricing and ROI from an NPV cost and the subscriber base.
///
/// Pricing is cost-proportional: the monthly price is the break-even monthly
/// cost loaded with the profit margin, so the ROI depends only on the
/// margin, discount rate and horizon.
pub fn subscriber_economics(
    capex: Money,
    opex_annual: Money,
    npv_usd: f64,
    population: f64,
    t: &TrafficModel,
    ledger: &CostLedger,
    rate: f64,
    years: u32,
) -> Result<EconResult, EconError> {
    let subscribers = population * t.adoption_rate;
    if !(subscribers > 0.0) {
        return Err(EconError::ZeroSubscribers);
    }
    let months = 12.0 * years as f64;
    let cost_per_sub_monthly = npv_usd / (subscribers * months);
    let price_monthly = cost_per_sub_monthly * (1.0 + ledger.profit_margin);
    let revenue_npv = 12.0 * price_monthly * subscribers * discount_sum(rate, years);
    let roi = (revenue_npv - npv_usd) / npv_usd;
    Ok(EconResult {
        capex,
        opex_annual,
        npv_usd,
        subscribers,
        cost_per_sub_monthly,
        price_monthly,
        revenue_npv,
        roi,
    })
}

/// Full line-item trace of one evaluation; all Money fields sum exactly to
/// the reported totals.
#[derive(Debug, Clone, Copy)]
pub struct CostBreakdown {
    pub space: SpaceSegment,
    pub ground: GroundSegment,
    pub spectrum_acquisition: Money,
    pub regulation: Money,
    pub digital_infra: Money,
    pub capex_total: Money,
    pub opex_annual: Money,
}

/// Scenario-level economic inputs shared across architectures.
#[derive(Debug, Clone, Copy)]
pub struct EconContext {
    pub demand_mbps: f64,
    pub population: f64,
    pub traffic: TrafficModel,
    pub discount_rate: f64,
    pub horizon_years: u32,
}

/// Composes the full cost model for one architecture.
pub fn evaluate_architecture(
    design: &SystemDesign,
    n_sats: u64,
    arch: Architecture,
    ledger: &CostLedger,
    lm: &LaunchModel,
    ctx: &EconContext,
) -> Result<(EconResult, CostBreakdown), EconError> {
    ledger.validate()?;
    let space = space_segment_capex(n_sats, design, arch, ledger, lm);
    let ground = ground_segment_capex(ctx.demand_mbps, arch, ledger, n_sats);
    let capex_total =
        space.total + ground.total + ledger.spectrum_acquisition + ledger.regulation + ledger.digital_infra;
    let opex = annual_opex(n_sats, ledger, arch);
    let npv_usd = npv(capex_total.as_usd(), opex.as_usd(), ctx.discount_rate, ctx.horizon_years);
    let result = subscriber_economics(
        capex_total,
        opex,
        npv_usd,
        ctx.population,
        &ctx.traffic,
        ledger,
        ctx.discount_rate,
        ctx.horizon_years,
    )?;
    let breakdown = CostBreakdown {
        space,
        ground,
        spectrum_acquisition: ledger.spectrum_acquisition,
        regulation: ledger.regulation,
        digital_infra: ledger.digital_infra,
        capex_total,
        opex_annual: opex,
    };
    Ok((result, breakdown))
}

// ============================================================================
// Tests
// ============================================================================
