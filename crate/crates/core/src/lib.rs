//! Core models for dimensioning a LEO direct-to-device (D2D) network.
//!
//! Everything in this crate is a pure function of its inputs: constellation
//! geometry, dB-domain link budgets, inter-satellite and inter-beam
//! interference, the SINR → spectral-efficiency → capacity chain, demand
//! arithmetic, and the Capex/Opex/NPV/ROI cost model. IO, file formats and
//! the CLI live in the companion `ntnsim` crate.
//!
//! The crate is `no_std` (with `alloc`); float transcendentals go through
//! [`libm`] so results are bit-identical across platforms.

#![no_std]

extern crate alloc;

pub mod capacity;
pub mod constellation;
pub mod demand;
pub mod economics;
pub mod interference;
pub mod money;
pub mod propagation;
pub mod vec3;

mod math;

pub use constellation::{EarthModel, GroundReceiver, OrbitShell, SatellitePosition};
pub use money::Money;
pub use vec3::Vec3;
