//! Material records: a name plus exactly one way to obtain the loss
//! coefficient L — a DC conductivity, a dielectric model, or a direct L
//! value. Ships the built-in set used throughout the crate and a JSON
//! loader with full-file validation.
//!
//! JSON schema (SI units spelled out in the field names):
//!
//! ```json
//! [
//!   {"name": "Au", "kind": "conductor", "sigma_dc_per_ohm_m": 2.30e7,
//!    "notes": "..."},
//!   {"name": "glassy", "kind": "insulator_model",
//!    "model": {"terms": [{"omega_n": 1.0e15, "a_n": 1.0e30, "b_n": 0.0,
//!                         "gamma_n": 1.0e12}]}},
//!   {"name": "quartz-o", "kind": "direct_l", "l_per_rad_per_s": 1.40e-17}
//! ]
//! ```

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::constants::VACUUM_PERMITTIVITY;
use crate::dielectric::{l_coefficient_closed, DielectricModel};
use crate::error::{Error, Result};

/// How a material's loss coefficient is specified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MaterialKind {
    /// DC conductivity given; L = 2ε₀/σ.
    Conductor,
    /// Drude–Lorentz model given; L from the closed-form sum.
    InsulatorModel,
    /// L given directly.
    DirectL,
}

/// A named material. Exactly one of `sigma_dc`, `model`, `l_value` must be
/// populated, matching `kind`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Material {
    pub name: String,
    pub kind: MaterialKind,
    /// DC conductivity σ ((Ω·m)⁻¹).
    #[serde(rename = "sigma_dc_per_ohm_m", skip_serializing_if = "Option::is_none", default)]
    pub sigma_dc: Option<f64>,
    /// Dielectric model (rates in rad/s, amplitudes in (rad/s)²).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub model: Option<DielectricModel>,
    /// Loss coefficient L ((rad/s)⁻¹).
    #[serde(rename = "l_per_rad_per_s", skip_serializing_if = "Option::is_none", default)]
    pub l_value: Option<f64>,
    #[serde(default)]
    pub notes: String,
}

impl Material {
    pub fn conductor(name: impl Into<String>, sigma_dc: f64, notes: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            kind: MaterialKind::Conductor,
            sigma_dc: Some(sigma_dc),
            model: None,
            l_value: None,
            notes: notes.into(),
        }
    }

    pub fn insulator(
        name: impl Into<String>,
        model: DielectricModel,
        notes: impl Into<String>,
    ) -> Self {
        Self {
            name: name.into(),
            kind: MaterialKind::InsulatorModel,
            sigma_dc: None,
            model: Some(model),
            l_value: None,
            notes: notes.into(),
        }
    }

    pub fn direct_l(name: impl Into<String>, l_value: f64, notes: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            kind: MaterialKind::DirectL,
            sigma_dc: None,
            model: None,
            l_value: Some(l_value),
            notes: notes.into(),
        }
    }

    /// Check the exactly-one-source invariant and value signs. Problems
    /// are returned as a list so a whole file can be reported at once.
    pub fn validate(&self) -> Vec<String> {
        let mut issues = Vec::new();
        let who = &self.name;
        if who.is_empty() {
            issues.push("material with empty name".to_string());
        }
        let expect = |field_set: bool, field: &str, wanted: bool, issues: &mut Vec<String>| {
            if field_set != wanted {
                let verb = if wanted { "requires" } else { "forbids" };
                issues.push(format!("{who}: kind {:?} {verb} field {field}", self.kind));
            }
        };
        match self.kind {
            MaterialKind::Conductor => {
                expect(self.sigma_dc.is_some(), "sigma_dc_per_ohm_m", true, &mut issues);
                expect(self.model.is_some(), "model", false, &mut issues);
                expect(self.l_value.is_some(), "l_per_rad_per_s", false, &mut issues);
                if let Some(s) = self.sigma_dc {
                    if !(s.is_finite() && s > 0.0) {
                        issues.push(format!("{who}: sigma_dc_per_ohm_m must be > 0, got {s}"));
                    }
                }
            }
            MaterialKind::InsulatorModel => {
                expect(self.model.is_some(), "model", true, &mut issues);
                expect(self.sigma_dc.is_some(), "sigma_dc_per_ohm_m", false, &mut issues);
                expect(self.l_value.is_some(), "l_per_rad_per_s", false, &mut issues);
                if let Some(m) = &self.model {
                    if let Err(Error::Validation(mut model_issues)) =
                        DielectricModel::new(m.terms.clone())
                    {
                        issues.extend(model_issues.drain(..).map(|i| format!("{who}: {i}")));
                    }
                }
            }
            MaterialKind::DirectL => {
                expect(self.l_value.is_some(), "l_per_rad_per_s", true, &mut issues);
                expect(self.sigma_dc.is_some(), "sigma_dc_per_ohm_m", false, &mut issues);
                expect(self.model.is_some(), "model", false, &mut issues);
                if let Some(l) = self.l_value {
                    if !(l.is_finite() && l >= 0.0) {
                        issues.push(format!("{who}: l_per_rad_per_s must be >= 0, got {l}"));
                    }
                }
            }
        }
        issues
    }

    /// The loss coefficient for this material, by kind.
    pub fn resolve_l(&self) -> Result<f64> {
        match self.kind {
            MaterialKind::Conductor => self
                .sigma_dc
                .map(|s| 2.0 * VACUUM_PERMITTIVITY / s)
                .ok_or_else(|| {
                    Error::domain(format!("{}: conductor without sigma_dc_per_ohm_m", self.name))
                }),
            MaterialKind::InsulatorModel => self
                .model
                .as_ref()
                .map(l_coefficient_closed)
                .ok_or_else(|| Error::domain(format!("{}: insulator without model", self.name))),
            MaterialKind::DirectL => self.l_value.ok_or_else(|| {
                Error::domain(format!("{}: direct_l without l_per_rad_per_s", self.name))
            }),
        }
    }
}

/// The built-in materials: four conductors by room-temperature DC
/// conductivity (averages over commercial samples; measure a specific
/// sample for precision work) and the two optic-axis loss coefficients of
/// crystalline alpha-quartz.
pub fn builtin_materials() -> Vec<Material> {
    vec![
        Material::conductor("Au", 2.30e7, "gold; room-temperature DC conductivity"),
        Material::conductor("V", 5.08e6, "vanadium; room-temperature DC conductivity"),
        Material::conductor("Ti", 1.27e6, "titanium; room-temperature DC conductivity"),
        Material::conductor(
            "graphite",
            1.28e5,
            "graphite, basal plane parallel to the surface; room-temperature DC conductivity",
        ),
        Material::direct_l("quartz-o", 1.40e-17, "alpha-quartz, ordinary axis"),
        Material::direct_l("quartz-e", 2.14e-17, "alpha-quartz, extraordinary axis"),
    ]
}

/// Case-insensitive lookup in a material list.
pub fn find_material<'a>(materials: &'a [Material], name: &str) -> Option<&'a Material> {
    materials.iter().find(|m| m.name.eq_ignore_ascii_case(name))
}

/// Load and validate a JSON array of materials. All validation problems
/// in the file are reported together; duplicate names are rejected.
pub fn load_materials(path: impl AsRef<Path>) -> Result<Vec<Material>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)?;
    let materials: Vec<Material> = serde_json::from_str(&text).map_err(|e| Error::Parse {
        path: path.display().to_string(),
        detail: e.to_string(),
    })?;
    let mut issues: Vec<String> = materials.iter().flat_map(|m| m.validate()).collect();
    let mut seen = std::collections::BTreeSet::new();
    for m in &materials {
        if !seen.insert(m.name.to_ascii_lowercase()) {
            issues.push(format!("duplicate material name: {}", m.name));
        }
    }
    if issues.is_empty() {
        Ok(materials)
    } else {
        Err(Error::Validation(issues))
    }
}

/// Write a material list as pretty-printed JSON. Round-trips losslessly.
pub fn save_materials(path: impl AsRef<Path>, materials: &[Material]) -> Result<()> {
    let text = serde_json::to_string_pretty(materials)
        .expect("material serialization cannot fail");
    fs::write(path, text)?;
    Ok(())
}
