//! End-to-end model of the compensated two-plate ("sniper") beamline:
//! an ion is accelerated through a voltage U, flies a region of length ℓ
//! midway between two plates, loses velocity to non-contact friction at
//! rate Γ = η₍₂₎/m, drifts to a circular aperture, and the fractional
//! velocity loss r = 1 − exp(−Γ Δt) is compared against the geometric
//! velocity resolution ξ = ½ (a_s/D_drift)² through the figure of merit
//! f = r/ξ.

use crate::constants::{HBAR, PLANCK, SPEED_OF_LIGHT};
use crate::error::{Error, Result};
use crate::friction::{eta_two_plate, IonSpecies};
use crate::matdb::Material;
use crate::mirror::PlatePair;

/// Full parameter set of one beamline run.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub ion: IonSpecies,
    /// Accelerating voltage U (V).
    pub accel_voltage: f64,
    /// Interaction-region length ℓ (m). Zero is allowed as the degenerate
    /// no-region limit.
    pub region_length: f64,
    /// Plate geometry (gap and ion height).
    pub geom: PlatePair,
    /// Loss coefficient L of the plate material ((rad/s)⁻¹).
    pub material_l: f64,
    /// Detector aperture diameter a_s (m).
    pub aperture_diameter: f64,
    /// Free drift distance from region exit to the aperture (m).
    pub drift_distance: f64,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        let mut issues = Vec::new();
        if !(self.accel_voltage.is_finite() && self.accel_voltage > 0.0) {
            issues.push(format!("accel_voltage must be > 0 V, got {}", self.accel_voltage));
        }
        if !(self.region_length.is_finite() && self.region_length >= 0.0) {
            issues.push(format!(
                "region_length must be >= 0 m, got {}",
                self.region_length
            ));
        }
        if !(self.material_l.is_finite() && self.material_l >= 0.0) {
            issues.push(format!("material_l must be >= 0, got {}", self.material_l));
        }
        if !(self.aperture_diameter.is_finite() && self.aperture_diameter > 0.0) {
            issues.push(format!(
                "aperture_diameter must be > 0 m, got {}",
                self.aperture_diameter
            ));
        }
        if !(self.drift_distance.is_finite() && self.drift_distance > 0.0) {
            issues.push(format!(
                "drift_distance must be > 0 m, got {}",
                self.drift_distance
            ));
        }
        if self.aperture_diameter >= self.drift_distance {
            issues.push(format!(
                "aperture_diameter ({}) must be smaller than drift_distance ({})",
                self.aperture_diameter, self.drift_distance
            ));
        }
        if issues.is_empty() {
            Ok(())
        } else {
            Err(Error::Validation(issues))
        }
    }

    /// The reference configuration: He⁺ at 20 V, 10 cm region, 1 μm gap
    /// with the ion at the midplane, 50 μm aperture, 1 m drift.
    pub fn reference(material_l: f64) -> Self {
        Self {
            ion: IonSpecies::helium_ion(),
            accel_voltage: 20.0,
            region_length: 0.1,
            geom: PlatePair::new(1e-6, 0.5e-6).expect("reference geometry is valid"),
            material_l,
            aperture_diameter: 50e-6,
            drift_distance: 1.0,
        }
    }
}

/// Derived quantities of one beamline run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExperimentResult {
    /// Entry speed v = sqrt(2 Z e U/m) (m/s).
    pub entry_speed: f64,
    /// Flight time Δt = ℓ/v (s).
    pub flight_time: f64,
    /// Velocity damping rate Γ = η₍₂₎/m (1/s).
    pub damping_rate: f64,
    /// Fractional velocity loss r = 1 − exp(−Γ Δt).
    pub velocity_loss_fraction: f64,
    /// Fractional kinetic-energy loss 1 − (1−r)², ≈ 2r for small r.
    pub energy_loss_fraction: f64,
    /// Geometric velocity resolution ξ = ½ (a_s/D_drift)².
    pub resolution: f64,
    /// Figure of merit f = r/ξ.
    pub figure_of_merit: f64,
    /// Reduced de Broglie wavelength ħ/(m v) (m).
    pub de_broglie_reduced: f64,
    /// Conventional de Broglie wavelength h/(m v) (m).
    pub de_broglie: f64,
    /// Retardation parameter ξ′ = v/c.
    pub retardation_parameter: f64,
}

/// Nonrelativistic entry speed v = sqrt(2 Z e U/m).
pub fn entry_speed(ion: &IonSpecies, voltage: f64) -> Result<f64> {
    if !(voltage.is_finite() && voltage > 0.0) {
        return Err(Error::domain(format!(
            "accelerating voltage must be > 0 V, got {voltage}"
        )));
    }
    Ok((2.0 * ion.charge() * voltage / ion.mass).sqrt())
}

/// Run the beamline model for one configuration.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentResult> {
    cfg.validate()?;
    let v = entry_speed(&cfg.ion, cfg.accel_voltage)?;
    let flight_time = cfg.region_length / v;
    let eta2 = eta_two_plate(&cfg.ion, cfg.material_l, cfg.geom)?;
    let gamma = eta2.eta / cfg.ion.mass;
    let r = -(-gamma * flight_time).exp_m1();
    let xi = 0.5 * (cfg.aperture_diameter / cfg.drift_distance).powi(2);
    Ok(ExperimentResult {
        entry_speed: v,
        flight_time,
        damping_rate: gamma,
        velocity_loss_fraction: r,
        energy_loss_fraction: 1.0 - (1.0 - r) * (1.0 - r),
        resolution: xi,
        figure_of_merit: r / xi,
        de_broglie_reduced: HBAR / (cfg.ion.mass * v),
        de_broglie: PLANCK / (cfg.ion.mass * v),
        retardation_parameter: v / SPEED_OF_LIGHT,
    })
}

/// One row of a material comparison table.
#[derive(Debug, Clone, PartialEq)]
pub struct MaterialRow {
    pub material: String,
    /// Loss coefficient resolved for this material ((rad/s)⁻¹).
    pub l: f64,
    pub result: ExperimentResult,
}

/// A batch run over several materials, plus the ones that could not be
/// resolved to a loss coefficient.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MaterialTable {
    pub rows: Vec<MaterialRow>,
    /// (material name, reason) for every skipped entry.
    pub skipped: Vec<(String, String)>,
}

/// Run the experiment for each material, in input order. Materials whose
/// loss coefficient cannot be resolved are skipped with a report instead
/// of failing the whole table.
pub fn material_table(materials: &[Material], template: &ExperimentConfig) -> Result<MaterialTable> {
    let mut table = MaterialTable::default();
    for mat in materials {
        match mat.resolve_l() {
            Ok(l) => {
                let cfg = ExperimentConfig {
                    material_l: l,
                    ..template.clone()
                };
                table.rows.push(MaterialRow {
                    material: mat.name.clone(),
                    l,
                    result: run_experiment(&cfg)?,
                });
            }
            Err(e) => table.skipped.push((mat.name.clone(), e.to_string())),
        }
    }
    Ok(table)
}
