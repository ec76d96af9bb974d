//! Image-charge sums for an ion between two parallel conducting plates.
//!
//! A charge at height 𝒵 between grounded plates at z = 0 and z = a induces
//! an infinite ladder of image charges. Summing their contributions gives
//!
//!   * `c_factor` C(𝒵), the 1/length factor in the interaction potential
//!     V = −(Ze)² C(𝒵)/(4πε₀),
//!   * `d_factor` D(𝒵), the 1/length³ factor that replaces 1/𝒵³ in the
//!     two-plate friction coefficient,
//!   * `c_gradient` dC/d𝒵 for trajectory forces.
//!
//! Both sums have closed forms in the digamma and second polygamma
//! functions; the raw series are kept in the test suite as oracles.

use crate::error::{Error, Result};
use crate::specfun::{digamma, polygamma, EULER_GAMMA, ZETA_3};

/// Two parallel conducting plates a gap `a` apart, with the ion at height
/// 0 < 𝒵 < a above the lower plate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlatePair {
    gap: f64,
    height: f64,
}

/// Computations are refused closer to a plate than this fraction of the
/// gap; the point-image model has broken down there anyway.
pub const EDGE_GUARD: f64 = 1e-9;

impl PlatePair {
    pub fn new(gap: f64, height: f64) -> Result<Self> {
        if !(gap.is_finite() && height.is_finite()) || gap <= 0.0 {
            return Err(Error::domain(format!(
                "plate pair needs finite gap > 0, got gap = {gap}, height = {height}"
            )));
        }
        if height <= 0.0 || height >= gap {
            return Err(Error::domain(format!(
                "ion height must satisfy 0 < height < gap, got height = {height}, gap = {gap}"
            )));
        }
        Ok(Self { gap, height })
    }

    pub fn gap(&self) -> f64 {
        self.gap
    }

    pub fn height(&self) -> f64 {
        self.height
    }

    /// Same gap, different ion height.
    pub fn at_height(&self, height: f64) -> Result<Self> {
        Self::new(self.gap, height)
    }

    /// Scaled height u = 𝒵/a, after the edge-guard check.
    fn scaled_height(&self) -> Result<f64> {
        let u = self.height / self.gap;
        if !(EDGE_GUARD..=1.0 - EDGE_GUARD).contains(&u) {
            return Err(Error::domain(format!(
                "ion height {} is within {EDGE_GUARD} * gap of a plate; the image model is not valid there",
                self.height
            )));
        }
        Ok(u)
    }
}

/// Interaction-potential factor C(𝒵) = −[Ψ(𝒵/a) + Ψ(1−𝒵/a) + 2γ]/(4a).
///
/// C(a/2) = ln(2)/a; C → 1/(4𝒵) + ζ(3)𝒵²/(2a³) near a plate.
pub fn c_factor(geom: PlatePair) -> Result<f64> {
    let u = geom.scaled_height()?;
    Ok(-(digamma(u)? + digamma(1.0 - u)? + 2.0 * EULER_GAMMA) / (4.0 * geom.gap))
}

/// Friction geometry factor D(𝒵) = −[Ψ⁽²⁾(𝒵/a) + Ψ⁽²⁾(1−𝒵/a) + 4ζ(3)]/(2a³).
///
/// Symmetric under 𝒵 → a−𝒵, with D(a/2) = 12ζ(3)/a³ ≈ 14.4247/a³ and
/// D → 1/𝒵³ + 12ζ(5)𝒵²/a⁵ toward a plate, matching the single-wall law.
pub fn d_factor(geom: PlatePair) -> Result<f64> {
    let u = geom.scaled_height()?;
    let a3 = geom.gap * geom.gap * geom.gap;
    Ok(-(polygamma(2, u)? + polygamma(2, 1.0 - u)? + 4.0 * ZETA_3) / (2.0 * a3))
}

/// Height derivative dC/d𝒵 = −[Ψ⁽¹⁾(𝒵/a) − Ψ⁽¹⁾(1−𝒵/a)]/(4a²).
///
/// Zero at the midplane and antisymmetric about it; negative below the
/// midplane (the ion is pulled toward the nearer, lower plate).
pub fn c_gradient(geom: PlatePair) -> Result<f64> {
    let u = geom.scaled_height()?;
    let a2 = geom.gap * geom.gap;
    Ok(-(polygamma(1, u)? - polygamma(1, 1.0 - u)?) / (4.0 * a2))
}
