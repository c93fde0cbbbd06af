//! Physical constants (CODATA 2018) and the fixed set of input-unit
//! conversions. Everything downstream works in SI.

use crate::{Error, Result};
use std::str::FromStr;

/// SI constant table. Values are fixed literals, never recomputed.
#[derive(Debug, Clone, Copy)]
pub struct PhysicalConstants {
    /// Reduced Planck constant, J s
    pub hbar: f64,
    /// Boltzmann constant, J/K
    pub k_b: f64,
    /// Vacuum permittivity, C²/(J m)
    pub epsilon0: f64,
    /// Atomic mass unit, kg
    pub amu: f64,
    /// Debye, C m
    pub debye: f64,
    /// 4πε₀ × 10⁻³⁰: polarizability volume in Å³ to SI polarizability
    pub polarizability_a3: f64,
}

pub const CONSTANTS: PhysicalConstants = PhysicalConstants {
    hbar: 1.054_571_817e-34,
    k_b: 1.380_649e-23,
    epsilon0: 8.854_187_812_8e-12,
    amu: 1.660_539_066_60e-27,
    debye: 3.335_640_951_981_52e-30,
    polarizability_a3: 1.112_650_055_447_870_4e-40,
};

/// Input units accepted at the configuration boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Unit {
    Amu,
    Kelvin,
    Pascal,
    MilliPascal,
    Debye,
    /// polarizability volume α/4πε₀ in Å³
    PolarizabilityVolumeA3,
    Nanometer,
    MeterPerSecond,
}

impl Unit {
    /// Multiplicative factor taking a value in this unit to SI.
    pub fn si_factor(self) -> f64 {
        match self {
            Unit::Amu => CONSTANTS.amu,
            Unit::Kelvin => 1.0,
            Unit::Pascal => 1.0,
            Unit::MilliPascal => 1e-3,
            Unit::Debye => CONSTANTS.debye,
            Unit::PolarizabilityVolumeA3 => CONSTANTS.polarizability_a3,
            Unit::Nanometer => 1e-9,
            Unit::MeterPerSecond => 1.0,
        }
    }
}

impl FromStr for Unit {
    type Err = Error;

    fn from_str(tag: &str) -> Result<Self> {
        match tag {
            "amu" => Ok(Unit::Amu),
            "K" => Ok(Unit::Kelvin),
            "Pa" => Ok(Unit::Pascal),
            "mPa" => Ok(Unit::MilliPascal),
            "D" => Ok(Unit::Debye),
            "A3" => Ok(Unit::PolarizabilityVolumeA3),
            "nm" => Ok(Unit::Nanometer),
            "m/s" => Ok(Unit::MeterPerSecond),
            other => Err(Error::UnknownUnit(other.to_string())),
        }
    }
}

/// Exact multiplication into SI.
pub fn to_internal(value: f64, unit: Unit) -> f64 {
    value * unit.si_factor()
}

/// Inverse of [`to_internal`].
pub fn from_internal(value: f64, unit: Unit) -> f64 {
    value / unit.si_factor()
}

/// Ideal-gas number density n = P/(k_B T), in m⁻³.
pub fn ideal_gas_density(pressure_pa: f64, temperature_k: f64) -> Result<f64> {
    if !(pressure_pa > 0.0) {
        return Err(Error::invalid("pressure", "must be positive"));
    }
    if !(temperature_k > 0.0) {
        return Err(Error::invalid("temperature", "must be positive"));
    }
    Ok(pressure_pa / (CONSTANTS.k_b * temperature_k))
}
