//! Non-contact friction for ions near conducting and dielectric surfaces.
//!
//! An ion moving parallel to a surface drags its image charge through the
//! material; the Ohmic losses of that image current show up as a velocity
//! damping force F = −η v on the ion, without any physical contact. This
//! crate computes the damping coefficient η from first-principles inputs
//! and models a beamline experiment designed to measure the effect:
//!
//! * [`dielectric`] — Drude–Lorentz permittivity models and the
//!   low-frequency loss coefficient L = lim Im[(ε−1)/(ε+1)]/ω that sets
//!   the friction magnitude, by closed form and by numeric limit;
//! * [`mirror`] — the infinite image-charge sums C(𝒵) and D(𝒵) for an ion
//!   between two parallel conducting plates, in closed form via digamma
//!   and polygamma functions;
//! * [`friction`] — η for single-wall and two-plate geometries, the
//!   image-charge potential, and a finite-difference check of the
//!   coincident-point kernel 1/(8𝒵³);
//! * [`beamline`] — the compensated two-plate experiment: entry
//!   kinematics, fractional velocity loss r, and figure of merit f;
//! * [`trajectory`] — adaptive integration of (x, z) ion motion to
//!   quantify misalignment sensitivity and aperture acceptance;
//! * [`specfun`] — the digamma/polygamma/Hurwitz-zeta implementations
//!   backing the closed forms;
//! * [`thermal`] — Bose occupation and the Kallen–Welton factor;
//! * [`matdb`] — material records and JSON ingestion;
//! * [`cli`] — the `ncf` command-line tool.
//!
//! Everything is SI; see [`constants`] for the CODATA values used.
//!
//! ```
//! use ncfriction::{beamline::ExperimentConfig, beamline::run_experiment};
//!
//! // He+ at 20 V between graphite plates 1 um apart
//! let graphite_l = 1.383e-16;
//! let result = run_experiment(&ExperimentConfig::reference(graphite_l)).unwrap();
//! assert!((result.velocity_loss_fraction - 2.8e-5).abs() / 2.8e-5 < 0.02);
//! ```

pub mod beamline;
pub mod cli;
pub mod constants;
pub mod dielectric;
mod error;
pub mod friction;
pub mod matdb;
pub mod mirror;
pub mod specfun;
pub mod thermal;
pub mod trajectory;

pub use error::{Error, Result};
