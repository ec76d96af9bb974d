//! Non-contact friction coefficients and image-charge potentials for an
//! ion moving parallel to one or two conducting surfaces.
//!
//! Single wall at distance 𝒵:  η = (Ze)² L/(32π ε₀ 𝒵³).
//! Two plates:                 η₍₂₎ = (Ze)² L D(𝒵)/(32π ε₀),
//! with D(𝒵) from [`crate::mirror`]. The drag force is F = −η v, acting on
//! the velocity component parallel to the surface, and is independent of
//! the ion's mass.

use std::f64::consts::PI;

use crate::constants::{ELEMENTARY_CHARGE, VACUUM_PERMITTIVITY};
use crate::error::{Error, Result};
use crate::mirror::{self, PlatePair};

/// A projectile ion. Only the charge magnitude enters the friction
/// formulas (they are even in the charge), so `charge_number` is stored
/// unsigned.
#[derive(Debug, Clone, PartialEq)]
pub struct IonSpecies {
    pub name: String,
    /// Mass (kg).
    pub mass: f64,
    /// Charge number Z; the charge magnitude is Z e.
    pub charge_number: u32,
}

impl IonSpecies {
    pub fn new(name: impl Into<String>, mass: f64, charge_number: u32) -> Result<Self> {
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::domain(format!("ion mass must be > 0 kg, got {mass}")));
        }
        if charge_number == 0 {
            return Err(Error::domain("charge number must be >= 1".to_string()));
        }
        Ok(Self {
            name: name.into(),
            mass,
            charge_number,
        })
    }

    /// Singly charged helium, the reference projectile.
    pub fn helium_ion() -> Self {
        Self {
            name: "He+".to_string(),
            mass: crate::constants::HELIUM_ION_MASS,
            charge_number: 1,
        }
    }

    /// Charge magnitude q = Z e (C).
    pub fn charge(&self) -> f64 {
        f64::from(self.charge_number) * ELEMENTARY_CHARGE
    }

    /// Z² as an exact float, kept separate from e² so that η scales
    /// bit-exactly with the squared charge number.
    fn charge_number_squared(&self) -> f64 {
        let z = f64::from(self.charge_number);
        z * z
    }
}

/// Which geometry a friction coefficient was computed for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Configuration {
    SingleWall,
    TwoPlate,
}

/// A friction coefficient together with the ingredients that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrictionResult {
    /// Damping coefficient η (kg/s) in F = −η v.
    pub eta: f64,
    pub configuration: Configuration,
    /// Loss coefficient L used ((rad/s)⁻¹).
    pub l_used: f64,
    /// 1/𝒵³ or D(𝒵) (1/m³).
    pub geometry_factor: f64,
}

fn check_l(l: f64) -> Result<()> {
    if !(l.is_finite() && l >= 0.0) {
        return Err(Error::domain(format!(
            "loss coefficient L must be finite and >= 0, got {l}"
        )));
    }
    Ok(())
}

/// η = (Ze)² L/(32π ε₀ 𝒵³) for a single wall at distance `distance`.
pub fn eta_single_wall(ion: &IonSpecies, l: f64, distance: f64) -> Result<FrictionResult> {
    check_l(l)?;
    if !(distance.is_finite() && distance > 0.0) {
        return Err(Error::domain(format!(
            "wall distance must be > 0 m, got {distance}"
        )));
    }
    let geometry_factor = 1.0 / (distance * distance * distance);
    Ok(FrictionResult {
        eta: ion.charge_number_squared() * unit_charge_eta(l, geometry_factor),
        configuration: Configuration::SingleWall,
        l_used: l,
        geometry_factor,
    })
}

/// η₍₂₎ = (Ze)² L D(𝒵)/(32π ε₀) for two parallel plates.
pub fn eta_two_plate(ion: &IonSpecies, l: f64, geom: PlatePair) -> Result<FrictionResult> {
    check_l(l)?;
    let geometry_factor = mirror::d_factor(geom)?;
    Ok(FrictionResult {
        eta: ion.charge_number_squared() * unit_charge_eta(l, geometry_factor),
        configuration: Configuration::TwoPlate,
        l_used: l,
        geometry_factor,
    })
}

/// e² L g/(32π ε₀): the friction coefficient of a unit charge number.
fn unit_charge_eta(l: f64, geometry_factor: f64) -> f64 {
    ELEMENTARY_CHARGE * ELEMENTARY_CHARGE * l * geometry_factor
        / (32.0 * PI * VACUUM_PERMITTIVITY)
}

/// Single-wall friction for a conductor of DC conductivity σ:
/// η = (Ze)²/(16π σ 𝒵³), equal to `eta_single_wall` with L = 2ε₀/σ.
pub fn eta_conductor(ion: &IonSpecies, sigma: f64, distance: f64) -> Result<FrictionResult> {
    if !(sigma.is_finite() && sigma > 0.0) {
        return Err(Error::domain(format!(
            "conductivity must be > 0 (ohm*m)^-1, got {sigma}"
        )));
    }
    eta_single_wall(ion, 2.0 * VACUUM_PERMITTIVITY / sigma, distance)
}

/// Image-charge interaction energy V = −(Ze)² C(𝒵)/(4π ε₀) between the
/// plates; always negative, stationary at the midplane.
pub fn image_potential(ion: &IonSpecies, geom: PlatePair) -> Result<f64> {
    let q = ion.charge();
    Ok(-q * q * mirror::c_factor(geom)? / (4.0 * PI * VACUUM_PERMITTIVITY))
}

/// Default finite-difference step for [`kernel_limit_check`], as a
/// fraction of 𝒵. Truncation error is 3(h/2𝒵)² ≈ 1.9e-7 here.
const KERNEL_STEP_FRACTION: f64 = 5e-4;

/// Numerically verifies the coincident-point limit
/// ∇ₓ∇'ₓ 1/|r′ − r + 2n⊥(r·n⊥)| → 1/(8𝒵³)
/// by central finite differences, and returns the ratio of the two sides.
///
/// The computation is carried out in units of 𝒵, so the ratio is exactly
/// scale-invariant. A ratio outside 1 ± 1e-4 reports a step-size failure.
pub fn kernel_limit_check(distance: f64) -> Result<f64> {
    if !(distance.is_finite() && distance > 0.0) {
        return Err(Error::domain(format!(
            "distance must be > 0 m, got {distance}"
        )));
    }
    let ratio = kernel_mixed_derivative_ratio(KERNEL_STEP_FRACTION);
    if (ratio - 1.0).abs() > 1e-4 {
        return Err(Error::StepSize(format!(
            "image-kernel mixed derivative off by {:.3e} relative",
            ratio - 1.0
        )));
    }
    Ok(ratio)
}

/// Ratio of the central-difference mixed x-derivative of the image
/// kernel to the analytic value 1/(8𝒵³), at step h = `step_fraction`·𝒵.
/// Nondimensionalized: 𝒵 = 1.
pub fn kernel_mixed_derivative_ratio(step_fraction: f64) -> f64 {
    let h = step_fraction;
    // image kernel between r = (x, 0, 1) and r' = (x', 0, 1) with the
    // surface normal along z: 1/sqrt((x'−x)² + (Z+Z')²), Z = Z' = 1
    let kernel = |x: f64, xp: f64| 1.0 / ((xp - x) * (xp - x) + 4.0).sqrt();
    let mixed = (kernel(h, h) - kernel(h, -h) - kernel(-h, h) + kernel(-h, -h)) / (4.0 * h * h);
    mixed / 0.125
}
