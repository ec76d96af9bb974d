//! Time-domain integration of an ion's (x, z) motion between the plates:
//! the image-charge force acts in z (the midplane is an unstable
//! equilibrium), height-dependent friction acts on vₓ only. Used to
//! quantify how sensitive the beamline is to entry misalignment and what
//! fraction of offset ions still reaches the detector aperture.
//!
//! Equations of motion:
//!   m dvₓ/dt = −η₍₂₎(z) vₓ,     η₍₂₎(z) = (Ze)² L D(z)/(32π ε₀),
//!   m dv_z/dt = (Ze)²/(4π ε₀) · dC/dz .
//!
//! Integrated with an adaptive embedded Dormand–Prince 5(4) pair.

use std::f64::consts::PI;

use crate::beamline::{entry_speed, ExperimentConfig};
use crate::constants::VACUUM_PERMITTIVITY;
use crate::error::{Error, Result};
use crate::mirror;

/// Phase-space point along a trajectory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryState {
    pub x: f64,
    pub z: f64,
    pub vx: f64,
    pub vz: f64,
    pub t: f64,
}

/// How a run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    /// Reached x = ℓ with 0 < z < a throughout.
    Exited,
    LowerPlateImpact,
    UpperPlateImpact,
}

/// Result of one trajectory, including the straight-line drift to the
/// aperture plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryOutcome {
    pub status: ExitStatus,
    /// State at region exit, or at plate impact.
    pub exit_state: TrajectoryState,
    /// Whether the drifted ion falls inside the circular aperture.
    /// Always false after a plate impact.
    pub passed_aperture: bool,
    /// (vₓ(0) − vₓ(end))/vₓ(0).
    pub velocity_loss_fraction: f64,
}

/// Default per-step relative tolerance. Excursions near the unstable
/// midplane grow exponentially, so the default is tight.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Ions closer to a plate than this fraction of the gap count as having
/// struck it; the point-image force law is not meaningful below this
/// scale and diverges at the surface.
pub const IMPACT_MARGIN: f64 = 1e-6;

struct Dynamics {
    /// (Ze)²/(4π ε₀ m): prefactor of dC/dz in the z acceleration.
    k_image: f64,
    /// (Ze)² L/(32π ε₀ m): prefactor of D(z) vₓ in the x deceleration.
    k_friction: f64,
    geom_template: mirror::PlatePair,
}

impl Dynamics {
    fn from_config(cfg: &ExperimentConfig) -> Self {
        let q = cfg.ion.charge();
        Self {
            k_image: q * q / (4.0 * PI * VACUUM_PERMITTIVITY * cfg.ion.mass),
            k_friction: q * q * cfg.material_l
                / (32.0 * PI * VACUUM_PERMITTIVITY * cfg.ion.mass),
            geom_template: cfg.geom,
        }
    }

    /// d/dt [x, z, vx, vz]. Errors if z has left the valid strip, which
    /// the step controller treats as "step too large".
    fn deriv(&self, y: &[f64; 4]) -> Result<[f64; 4]> {
        let geom = self.geom_template.at_height(y[1])?;
        let az = self.k_image * mirror::c_gradient(geom)?;
        let ax = if self.k_friction == 0.0 {
            0.0
        } else {
            -self.k_friction * mirror::d_factor(geom)? * y[2]
        };
        Ok([y[2], y[3], ax, az])
    }
}

// Dormand–Prince 5(4) tableau.
const A: [[f64; 6]; 6] = [
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];
const B5: [f64; 7] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
    0.0,
];
const B4: [f64; 7] = [
    5179.0 / 57600.0,
    0.0,
    7571.0 / 16695.0,
    393.0 / 640.0,
    -92097.0 / 339200.0,
    187.0 / 2100.0,
    1.0 / 40.0,
];

/// One trial Dormand–Prince step from `y`: the 5th-order solution plus
/// the embedded error estimate. `k1` is the derivative at `y` (the system
/// is autonomous, so it can be reused across trial step sizes).
fn dp_step(dyn_: &Dynamics, y: &[f64; 4], k1: &[f64; 4], h: f64) -> Result<([f64; 4], [f64; 4])> {
    let mut k = [[0.0f64; 4]; 7];
    k[0] = *k1;
    for (stage, row) in A.iter().enumerate() {
        let mut ys = *y;
        for (j, a) in row.iter().enumerate().take(stage + 1) {
            if *a != 0.0 {
                for i in 0..4 {
                    ys[i] += h * a * k[j][i];
                }
            }
        }
        k[stage + 1] = dyn_.deriv(&ys)?;
    }
    let mut y5 = *y;
    let mut err = [0.0f64; 4];
    for j in 0..7 {
        for i in 0..4 {
            y5[i] += h * B5[j] * k[j][i];
            err[i] += h * (B5[j] - B4[j]) * k[j][i];
        }
    }
    Ok((y5, err))
}

/// Integrate one ion through the interaction region, then drift it to
/// the aperture plane.
///
/// `entry_offset` is the entry height relative to the midplane (must stay
/// inside the gap), `entry_vz` the entry transverse velocity, `tolerance`
/// the per-step relative error target.
pub fn integrate(
    cfg: &ExperimentConfig,
    entry_offset: f64,
    entry_vz: f64,
    tolerance: f64,
) -> Result<TrajectoryOutcome> {
    integrate_traced(cfg, entry_offset, entry_vz, tolerance, None)
}

/// Like [`integrate`], but appends every accepted step to `trace`.
pub fn integrate_traced(
    cfg: &ExperimentConfig,
    entry_offset: f64,
    entry_vz: f64,
    tolerance: f64,
    mut trace: Option<&mut Vec<TrajectoryState>>,
) -> Result<TrajectoryOutcome> {
    cfg.validate()?;
    if !(tolerance.is_finite() && tolerance > 0.0 && tolerance < 1e-2) {
        return Err(Error::domain(format!(
            "step tolerance must be in (0, 1e-2), got {tolerance}"
        )));
    }
    let a = cfg.geom.gap();
    if !entry_offset.is_finite() || entry_offset.abs() >= 0.5 * a {
        return Err(Error::domain(format!(
            "entry offset must satisfy |offset| < gap/2, got {entry_offset}"
        )));
    }
    if !entry_vz.is_finite() {
        return Err(Error::domain("entry vz must be finite".to_string()));
    }

    let v0 = entry_speed(&cfg.ion, cfg.accel_voltage)?;
    let dynamics = Dynamics::from_config(cfg);
    let ell = cfg.region_length;
    let z_lo = IMPACT_MARGIN * a;
    let z_hi = a - z_lo;

    let mut y = [0.0, 0.5 * a + entry_offset, v0, entry_vz];
    let mut t = 0.0;
    if let Some(tr) = trace.as_deref_mut() {
        tr.push(state_of(&y, t));
    }

    let mut h = if ell > 0.0 { 1e-3 * ell / v0 } else { 0.0 };
    let h_min = 1e-22;
    let scale = [a.max(ell), a, v0, v0.max(entry_vz.abs())];

    let mut status = ExitStatus::Exited;
    let mut steps: u64 = 0;
    const MAX_STEPS: u64 = 50_000_000;

    while y[0] < ell {
        steps += 1;
        if steps > MAX_STEPS {
            return Err(Error::NoConvergence(format!(
                "trajectory exceeded {MAX_STEPS} steps"
            )));
        }
        let k1 = dynamics.deriv(&y)?;
        let trial = dp_step(&dynamics, &y, &k1, h);
        let (y_new, err) = match trial {
            Ok(pair) => pair,
            Err(_) => {
                // a stage left the valid strip: shorten, or concede impact
                h *= 0.5;
                if h < h_min {
                    if let Some(s) = near_plate_status(y[1], a) {
                        status = s;
                        break;
                    }
                    return Err(Error::StepSize(format!(
                        "step size underflow at t = {t}, z/a = {}",
                        y[1] / a
                    )));
                }
                continue;
            }
        };
        let mut err_norm = 0.0f64;
        for i in 0..4 {
            let s = tolerance * (scale[i] + y[i].abs() + y_new[i].abs());
            err_norm = err_norm.max((err[i] / s).abs());
        }
        if err_norm > 1.0 {
            h *= (0.9 * err_norm.powf(-0.2)).max(0.2);
            if h < h_min {
                if let Some(s) = near_plate_status(y[1], a) {
                    status = s;
                    break;
                }
                return Err(Error::StepSize(format!(
                    "step size underflow at t = {t}, z/a = {}",
                    y[1] / a
                )));
            }
            continue;
        }

        if y_new[0] >= ell {
            // crossing the exit plane: solve x(h_cut) = ℓ within the step
            let (y_exit, h_cut) = refine_exit(&dynamics, &y, &k1, h, y_new, ell, a)?;
            if y_exit[1] > z_lo && y_exit[1] < z_hi {
                y = y_exit;
                t += h_cut;
                if let Some(tr) = trace.as_deref_mut() {
                    tr.push(state_of(&y, t));
                }
                break;
            }
            // the plate was struck before the exit plane
            let (y_imp, h_imp, s) =
                refine_impact(&dynamics, &y, &k1, h_cut, y_exit, z_lo, z_hi)?;
            y = y_imp;
            t += h_imp;
            status = s;
            if let Some(tr) = trace.as_deref_mut() {
                tr.push(state_of(&y, t));
            }
            break;
        }

        if y_new[1] <= z_lo || y_new[1] >= z_hi {
            let (y_imp, h_imp, s) = refine_impact(&dynamics, &y, &k1, h, y_new, z_lo, z_hi)?;
            y = y_imp;
            t += h_imp;
            status = s;
            if let Some(tr) = trace.as_deref_mut() {
                tr.push(state_of(&y, t));
            }
            break;
        }

        y = y_new;
        t += h;
        if let Some(tr) = trace.as_deref_mut() {
            tr.push(state_of(&y, t));
        }
        let grow = if err_norm > 0.0 {
            (0.9 * err_norm.powf(-0.2)).clamp(0.2, 5.0)
        } else {
            5.0
        };
        h *= grow;
    }

    let exit_state = state_of(&y, t);
    let passed_aperture = status == ExitStatus::Exited && {
        // straight-line drift to the aperture plane, circular aperture of
        // diameter a_s centred on the midplane
        let miss =
            (exit_state.z - 0.5 * a) + exit_state.vz / exit_state.vx * cfg.drift_distance;
        miss.abs() <= 0.5 * cfg.aperture_diameter
    };
    Ok(TrajectoryOutcome {
        status,
        exit_state,
        passed_aperture,
        velocity_loss_fraction: (v0 - exit_state.vx) / v0,
    })
}

fn near_plate_status(z: f64, gap: f64) -> Option<ExitStatus> {
    if z < 1e-3 * gap {
        Some(ExitStatus::LowerPlateImpact)
    } else if z > gap - 1e-3 * gap {
        Some(ExitStatus::UpperPlateImpact)
    } else {
        None
    }
}

/// Shrink the step until it lands on x = ℓ (secant with bracketing; x is
/// monotone in the step size).
fn refine_exit(
    dynamics: &Dynamics,
    y: &[f64; 4],
    k1: &[f64; 4],
    h: f64,
    y_full: [f64; 4],
    ell: f64,
    gap: f64,
) -> Result<([f64; 4], f64)> {
    let mut h_lo = 0.0;
    let mut x_lo = y[0];
    let mut h_hi = h;
    let mut x_hi = y_full[0];
    let mut best = (y_full, h);
    for _ in 0..64 {
        let frac = ((ell - x_lo) / (x_hi - x_lo)).clamp(1e-3, 1.0);
        let h_cut = h_lo + frac * (h_hi - h_lo);
        let (y_try, _) = dp_step(dynamics, y, k1, h_cut)?;
        let miss = y_try[0] - ell;
        if miss >= 0.0 {
            best = (y_try, h_cut);
        }
        if miss.abs() <= 1e-13 * ell.max(gap) {
            return Ok((y_try, h_cut));
        }
        if miss > 0.0 {
            h_hi = h_cut;
            x_hi = y_try[0];
        } else {
            h_lo = h_cut;
            x_lo = y_try[0];
        }
        if h_hi - h_lo <= f64::EPSILON * h {
            break;
        }
    }
    Ok(best)
}

/// Bisect the step until it lands on the impact margin.
fn refine_impact(
    dynamics: &Dynamics,
    y: &[f64; 4],
    k1: &[f64; 4],
    h: f64,
    y_full: [f64; 4],
    z_lo: f64,
    z_hi: f64,
) -> Result<([f64; 4], f64, ExitStatus)> {
    let lower = y_full[1] <= z_lo;
    let status = if lower {
        ExitStatus::LowerPlateImpact
    } else {
        ExitStatus::UpperPlateImpact
    };
    let crossed = |z: f64| if lower { z <= z_lo } else { z >= z_hi };
    let mut lo = 0.0;
    let mut hi = h;
    let mut best = (y_full, h);
    for _ in 0..48 {
        let mid = 0.5 * (lo + hi);
        let (y_try, _) = dp_step(dynamics, y, k1, mid)?;
        if crossed(y_try[1]) {
            hi = mid;
            best = (y_try, mid);
        } else {
            lo = mid;
        }
        if hi - lo < 1e-9 * h {
            break;
        }
    }
    Ok((best.0, best.1, status))
}

fn state_of(y: &[f64; 4], t: f64) -> TrajectoryState {
    TrajectoryState {
        x: y[0],
        z: y[1],
        vx: y[2],
        vz: y[3],
        t,
    }
}

/// Run [`integrate`] for each entry offset, in input order, with zero
/// entry transverse velocity and the default tolerance.
pub fn acceptance_scan(cfg: &ExperimentConfig, offsets: &[f64]) -> Result<Vec<TrajectoryOutcome>> {
    offsets
        .iter()
        .map(|&d| integrate(cfg, d, 0.0, DEFAULT_TOLERANCE))
        .collect()
}

/// Bisect for the entry offset separating exiting from plate-striking
/// trajectories. Returns `None` if even an ion entering just inside the
/// gap edge still exits.
pub fn impact_threshold(cfg: &ExperimentConfig, tolerance: f64) -> Result<Option<f64>> {
    let a = cfg.geom.gap();
    let mut hi = 0.499 * a;
    if integrate(cfg, hi, 0.0, tolerance)?.status == ExitStatus::Exited {
        return Ok(None);
    }
    let mut lo = 0.0; // the centred ion never impacts
    for _ in 0..48 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if integrate(cfg, mid, 0.0, tolerance)?.status == ExitStatus::Exited {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Some(0.5 * (lo + hi)))
}
