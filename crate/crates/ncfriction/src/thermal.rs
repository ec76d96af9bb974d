//! Bosonic occupation numbers and the Kallen–Welton thermal factor.

use crate::constants::{BOLTZMANN, HBAR};
use crate::error::{Error, Result};

/// A heat bath at fixed temperature. T = 0 is allowed and handled as an
/// explicit limit rather than through infinite β arithmetic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalState {
    temperature: f64,
}

impl ThermalState {
    pub fn new(temperature: f64) -> Result<Self> {
        if !temperature.is_finite() || temperature < 0.0 {
            return Err(Error::domain(format!(
                "temperature must be finite and >= 0 K, got {temperature}"
            )));
        }
        Ok(Self { temperature })
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    /// Inverse thermal energy β = 1/(k_B T); +∞ at T = 0.
    pub fn beta(&self) -> f64 {
        if self.temperature == 0.0 {
            f64::INFINITY
        } else {
            1.0 / (BOLTZMANN * self.temperature)
        }
    }
}

/// Bose–Einstein occupation number n(ω) = 1/(exp(βħω) − 1).
///
/// At T = 0 this is 0 for ω > 0 and −1 for ω < 0. ω = 0 is a pole.
pub fn occupation(state: ThermalState, omega: f64) -> Result<f64> {
    if !omega.is_finite() {
        return Err(Error::domain(format!("occupation: omega must be finite, got {omega}")));
    }
    if omega == 0.0 {
        return Err(Error::Pole("occupation diverges at omega = 0".into()));
    }
    if state.temperature == 0.0 {
        return Ok(if omega > 0.0 { 0.0 } else { -1.0 });
    }
    // exp_m1 keeps the small-argument regime (n ≈ 1/(βħω)) fully accurate
    Ok(1.0 / (state.beta() * HBAR * omega).exp_m1())
}

/// Kallen–Welton factor Θ(ω, T) = ħω (½ + n(|ω|)) = ½ ħ|ω| coth(½ βħ|ω|)
/// carried odd into ω < 0, so that Θ(−ω) = −Θ(ω) and Θ/ω is even and
/// positive. Tends to ±k_B T as ω → 0± and to ħω/2 at T = 0.
pub fn kallen_welton(state: ThermalState, omega: f64) -> Result<f64> {
    if !omega.is_finite() {
        return Err(Error::domain(format!(
            "kallen_welton: omega must be finite, got {omega}"
        )));
    }
    if state.temperature == 0.0 {
        return Ok(0.5 * HBAR * omega);
    }
    let x = state.beta() * HBAR * omega.abs();
    let magnitude = if x < 1e-6 {
        // Laurent expansion around βħω = 0: k_B T + (ħω)² β / 12
        BOLTZMANN * state.temperature * (1.0 + x * x / 12.0)
    } else {
        0.5 * HBAR * omega.abs() / (0.5 * x).tanh()
    };
    Ok(if omega < 0.0 { -magnitude } else { magnitude })
}
