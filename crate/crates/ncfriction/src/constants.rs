//! Physical constants (CODATA 2018, exact SI values where applicable).
//!
//! Single source of truth for every module; all quantities are SI.

/// Elementary charge (C). Exact by SI definition.
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;

/// Vacuum permittivity (F/m).
pub const VACUUM_PERMITTIVITY: f64 = 8.854_187_812_8e-12;

/// Planck constant (J s). Exact by SI definition.
pub const PLANCK: f64 = 6.626_070_15e-34;

/// Reduced Planck constant ħ = h/(2π) (J s), derived so the h = 2πħ
/// identity holds to rounding.
pub const HBAR: f64 = PLANCK / (2.0 * std::f64::consts::PI);

/// Boltzmann constant (J/K). Exact by SI definition.
pub const BOLTZMANN: f64 = 1.380_649e-23;

/// Speed of light in vacuum (m/s). Exact by SI definition.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Mass of a He-4 ion, He+ (kg).
pub const HELIUM_ION_MASS: f64 = 6.646e-27;

/// Immutable table of the constants above, for callers that want to pass
/// the whole set around as a value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Elementary charge (C).
    pub e: f64,
    /// Vacuum permittivity (F/m).
    pub eps0: f64,
    /// Reduced Planck constant (J s).
    pub hbar: f64,
    /// Planck constant (J s).
    pub h: f64,
    /// Boltzmann constant (J/K).
    pub k_b: f64,
    /// Speed of light (m/s).
    pub c: f64,
    /// He+ ion mass (kg).
    pub m_he: f64,
}

/// The CODATA-2018 constants table.
pub const fn constants() -> PhysicalConstants {
    PhysicalConstants {
        e: ELEMENTARY_CHARGE,
        eps0: VACUUM_PERMITTIVITY,
        hbar: HBAR,
        h: PLANCK,
        k_b: BOLTZMANN,
        c: SPEED_OF_LIGHT,
        m_he: HELIUM_ION_MASS,
    }
}
