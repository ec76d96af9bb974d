//! Generalized Drude–Lorentz permittivity models and the low-frequency
//! loss coefficient
//!
//!   L = lim_{ω→0} Im[(ε(ω)−1)/(ε(ω)+1)] / ω ,
//!
//! the single material parameter the friction coefficient depends on.
//!
//! ε(ω) = 1 + Σ_n (a_n − i b_n ω)/(ω_n² − ω² − i γ_n ω). A term with
//! ω_n = 0 is the Drude (conduction) term; at most one is allowed. L has
//! closed forms for both conductors (2γ₀/ω_p² = 2ε₀/σ) and insulators;
//! `l_coefficient_numeric` evaluates the defining limit independently and
//! the two must agree to 0.1 %.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::constants::{HBAR, VACUUM_PERMITTIVITY};
use crate::error::{Error, Result};

/// One resonance of the generalized Drude–Lorentz model,
/// (a_n − i b_n ω)/(ω_n² − ω² − i γ_n ω). All rates in rad/s, a_n in
/// (rad/s)².
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResonanceTerm {
    /// Resonance frequency ω_n; 0 marks the Drude/conduction term.
    pub omega_n: f64,
    /// Amplitude a_n = Δε_n ω_n² (or ω_p² for the Drude term).
    pub a_n: f64,
    /// Complex-amplitude part b_n = Δε_n γ′_n.
    #[serde(default)]
    pub b_n: f64,
    /// Damping rate γ_n.
    pub gamma_n: f64,
}

impl ResonanceTerm {
    /// Lorentz term from oscillator-strength form (Δε, ω_n, γ_n), with
    /// b_n = 0.
    pub fn lorentz(delta_eps: f64, omega_n: f64, gamma_n: f64) -> Self {
        Self {
            omega_n,
            a_n: delta_eps * omega_n * omega_n,
            b_n: 0.0,
            gamma_n,
        }
    }

    /// Drude (conduction) term with plasma frequency ω_p and relaxation
    /// rate γ₀.
    pub fn drude(omega_p: f64, gamma_0: f64) -> Self {
        Self {
            omega_n: 0.0,
            a_n: omega_p * omega_p,
            b_n: 0.0,
            gamma_n: gamma_0,
        }
    }

    pub fn is_drude(&self) -> bool {
        self.omega_n == 0.0
    }

    /// Δε_n = a_n/ω_n², defined for ω_n > 0.
    pub fn delta_eps(&self) -> Option<f64> {
        (!self.is_drude()).then(|| self.a_n / (self.omega_n * self.omega_n))
    }

    /// γ′_n = b_n/Δε_n, defined for ω_n > 0 with Δε_n ≠ 0.
    pub fn gamma_prime(&self) -> Option<f64> {
        let de = self.delta_eps()?;
        (de != 0.0).then(|| self.b_n / de)
    }
}

/// An atomic transition line used to build a dilute-gas dielectric model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralLine {
    /// Excitation energy E_n0 (J).
    pub energy: f64,
    /// Line width Γ_n (J).
    pub width: f64,
    /// Dipole oscillator strength f_n0 (SI).
    pub oscillator_strength: f64,
}

/// A permittivity model as an ordered list of resonance terms. The empty
/// model is vacuum, ε ≡ 1.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct DielectricModel {
    pub terms: Vec<ResonanceTerm>,
}

impl DielectricModel {
    /// Validated model; rejects multiple Drude terms, negative amplitudes
    /// or damping rates, and a Drude term without amplitude.
    pub fn new(terms: Vec<ResonanceTerm>) -> Result<Self> {
        let mut issues = Vec::new();
        let mut drude_count = 0usize;
        for (i, t) in terms.iter().enumerate() {
            if !(t.omega_n.is_finite() && t.a_n.is_finite() && t.b_n.is_finite() && t.gamma_n.is_finite()) {
                issues.push(format!("term {i}: non-finite parameter"));
                continue;
            }
            if t.omega_n < 0.0 {
                issues.push(format!("term {i}: omega_n must be >= 0, got {}", t.omega_n));
            }
            if t.a_n < 0.0 {
                issues.push(format!("term {i}: a_n must be >= 0, got {}", t.a_n));
            }
            if t.gamma_n < 0.0 {
                issues.push(format!("term {i}: gamma_n must be >= 0, got {}", t.gamma_n));
            }
            if t.is_drude() {
                drude_count += 1;
                if t.a_n <= 0.0 {
                    issues.push(format!("term {i}: Drude term needs a_n > 0"));
                }
            }
        }
        if drude_count > 1 {
            issues.push(format!("at most one Drude term allowed, found {drude_count}"));
        }
        if issues.is_empty() {
            Ok(Self { terms })
        } else {
            Err(Error::Validation(issues))
        }
    }

    /// The vacuum model, ε ≡ 1.
    pub fn vacuum() -> Self {
        Self::default()
    }

    /// Drude model equivalent to a DC conductivity σ (in (Ω·m)⁻¹):
    /// ω_p² = σ γ₀/ε₀, so that L = 2ε₀/σ regardless of γ₀.
    pub fn drude_from_conductivity(sigma_dc: f64, gamma_0: f64) -> Result<Self> {
        if sigma_dc <= 0.0 || !sigma_dc.is_finite() {
            return Err(Error::domain(format!(
                "conductivity must be > 0, got {sigma_dc}"
            )));
        }
        if gamma_0 <= 0.0 || !gamma_0.is_finite() {
            return Err(Error::domain(format!("gamma_0 must be > 0, got {gamma_0}")));
        }
        let omega_p2 = sigma_dc * gamma_0 / VACUUM_PERMITTIVITY;
        Self::new(vec![ResonanceTerm {
            omega_n: 0.0,
            a_n: omega_p2,
            b_n: 0.0,
            gamma_n: gamma_0,
        }])
    }

    /// Insulator model from spectroscopic data: ω_n = E_n0/ħ, γ_n = Γ_n/ħ,
    /// Δε_n = N_V f_n0/(ε₀ E_n0²), γ′_n = 0.
    pub fn from_spectroscopy(lines: &[SpectralLine], number_density: f64) -> Result<Self> {
        if number_density <= 0.0 || !number_density.is_finite() {
            return Err(Error::domain(format!(
                "number density must be > 0, got {number_density}"
            )));
        }
        let mut terms = Vec::with_capacity(lines.len());
        for (i, line) in lines.iter().enumerate() {
            if line.energy <= 0.0 || !line.energy.is_finite() {
                return Err(Error::domain(format!(
                    "line {i}: excitation energy must be > 0, got {}",
                    line.energy
                )));
            }
            if line.width < 0.0 || !line.width.is_finite() {
                return Err(Error::domain(format!(
                    "line {i}: width must be >= 0, got {}",
                    line.width
                )));
            }
            let delta_eps = number_density * line.oscillator_strength
                / (VACUUM_PERMITTIVITY * line.energy * line.energy);
            terms.push(ResonanceTerm::lorentz(
                delta_eps,
                line.energy / HBAR,
                line.width / HBAR,
            ));
        }
        Self::new(terms)
    }

    pub fn has_drude_term(&self) -> bool {
        self.terms.iter().any(ResonanceTerm::is_drude)
    }

    /// Σ Δε_n over the Lorentz terms.
    fn delta_eps_sum(&self) -> f64 {
        self.terms.iter().filter_map(ResonanceTerm::delta_eps).sum()
    }
}

/// Complex relative permittivity ε(ω).
///
/// ω = 0 is a pole when the model contains a Drude term.
pub fn permittivity(model: &DielectricModel, omega: f64) -> Result<Complex64> {
    if !omega.is_finite() {
        return Err(Error::domain(format!("omega must be finite, got {omega}")));
    }
    if omega == 0.0 && model.has_drude_term() {
        return Err(Error::Pole(
            "permittivity of a conductor diverges at omega = 0".into(),
        ));
    }
    let mut eps = Complex64::new(1.0, 0.0);
    for t in &model.terms {
        let numer = Complex64::new(t.a_n, -t.b_n * omega);
        let denom = Complex64::new(t.omega_n * t.omega_n - omega * omega, -t.gamma_n * omega);
        eps += numer / denom;
    }
    if !(eps.re.is_finite() && eps.im.is_finite()) {
        return Err(Error::Pole(format!(
            "permittivity not finite at omega = {omega:e}"
        )));
    }
    Ok(eps)
}

/// Surface reflection factor (ε(ω)−1)/(ε(ω)+1); 0 for vacuum, 1 for a
/// perfect conductor.
pub fn surface_response(model: &DielectricModel, omega: f64) -> Result<Complex64> {
    let eps = permittivity(model, omega)?;
    let denom = eps + 1.0;
    if denom.norm() == 0.0 {
        return Err(Error::Pole(format!(
            "surface response diverges: epsilon = -1 at omega = {omega}"
        )));
    }
    let r = (eps - 1.0) / denom;
    if !(r.re.is_finite() && r.im.is_finite()) {
        return Err(Error::Pole(format!(
            "surface response not finite at omega = {omega:e}"
        )));
    }
    Ok(r)
}

/// Loss coefficient L in closed form, in (rad/s)⁻¹.
///
/// Conductor (Drude term present): L = 2γ₀/ω_p². Insulator:
/// L = Σ_n 2Δε_n(γ_n − γ′_n)/[(2 + Σ_m Δε_m)² ω_n²]. Vacuum: 0.
pub fn l_coefficient_closed(model: &DielectricModel) -> f64 {
    if let Some(drude) = model.terms.iter().find(|t| t.is_drude()) {
        return 2.0 * drude.gamma_n / drude.a_n;
    }
    let denom = 2.0 + model.delta_eps_sum();
    let denom2 = denom * denom;
    model
        .terms
        .iter()
        .map(|t| {
            let de = t.delta_eps().unwrap_or(0.0);
            let gp = t.gamma_prime().unwrap_or(0.0);
            2.0 * de * (t.gamma_n - gp) / (denom2 * t.omega_n * t.omega_n)
        })
        .sum()
}

/// Closed-form L for a single Lorentz resonance with b₁ = 0:
/// L = 2 a₁ γ₁/(a₁ + 2ω₁²)². Valid when the lowest resonance dominates.
pub fn l_single_resonance(a_1: f64, omega_1: f64, gamma_1: f64) -> f64 {
    let s = a_1 + 2.0 * omega_1 * omega_1;
    2.0 * a_1 * gamma_1 / (s * s)
}

/// How far successive Richardson extrapolants may differ, relative.
const LIMIT_TOLERANCE: f64 = 1e-3;

/// Loss coefficient by direct evaluation of the defining ω → 0 limit.
///
/// Samples Im[(ε−1)/(ε+1)]/ω on ω_k = ω_ref 2⁻ᵏ and applies two-point
/// Richardson extrapolation in ω² (the integrand is even in ω). Errors
/// out if the extrapolants have not settled to 0.1 % by k = 20.
pub fn l_coefficient_numeric(model: &DielectricModel) -> Result<f64> {
    if model.terms.is_empty() {
        return Ok(0.0);
    }
    let omega_ref = reference_frequency(model);
    let f = |omega: f64| -> Result<f64> { Ok(surface_response(model, omega)?.im / omega) };

    let mut prev_f = f(omega_ref)?;
    let mut prev_r: Option<f64> = None;
    let mut omega = omega_ref;
    for _ in 1..=20 {
        omega *= 0.5;
        let cur_f = f(omega)?;
        // error is O(ω²), so halving ω quarters it: R = (4 f(ω/2) − f(ω))/3
        let r = (4.0 * cur_f - prev_f) / 3.0;
        if let Some(p) = prev_r {
            if (r - p).abs() <= LIMIT_TOLERANCE * r.abs().max(p.abs()) + f64::MIN_POSITIVE {
                return Ok(r);
            }
        }
        prev_r = Some(r);
        prev_f = cur_f;
    }
    Err(Error::NoConvergence(
        "low-frequency limit of Im[(eps-1)/(eps+1)]/omega did not settle to 0.1 %".into(),
    ))
}

/// Start of the ω → 0 ladder: two decades below the slowest scale of the
/// model (lowest resonance, or the Drude relaxation rate).
fn reference_frequency(model: &DielectricModel) -> f64 {
    let lowest = model
        .terms
        .iter()
        .filter(|t| !t.is_drude())
        .map(|t| t.omega_n)
        .fold(f64::INFINITY, f64::min);
    let drude_gamma = model
        .terms
        .iter()
        .find(|t| t.is_drude())
        .map(|t| t.gamma_n)
        .unwrap_or(f64::INFINITY);
    let scale = lowest.min(drude_gamma);
    if scale.is_finite() && scale > 0.0 {
        scale / 100.0
    } else {
        1.0
    }
}
