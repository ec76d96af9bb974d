//! Building Drude–Lorentz permittivity models and evaluating ε(ω) and
//! the surface response (ε−1)/(ε+1).
//!
//! Run with: cargo run --example permittivity_models

use ncfriction::constants::ELEMENTARY_CHARGE;
use ncfriction::dielectric::{
    permittivity, surface_response, DielectricModel, ResonanceTerm, SpectralLine,
};

fn main() -> ncfriction::Result<()> {
    // a conductor: graphite as a Drude model from its DC conductivity
    let graphite = DielectricModel::drude_from_conductivity(1.28e5, 1e14)?;
    println!("graphite (Drude from sigma = 1.28e5 (ohm m)^-1):");
    print_sweep(&graphite, &[1e10, 1e12, 1e14, 1e16])?;

    // an insulator: two Lorentz resonances
    let glassy = DielectricModel::new(vec![
        ResonanceTerm::lorentz(1.1, 8.0e13, 3.0e12),
        ResonanceTerm::lorentz(0.9, 2.0e16, 9.0e13),
    ])?;
    println!("\ntwo-resonance insulator:");
    println!("  eps(0) = {:.6} (static limit 1 + sum of delta_eps)", permittivity(&glassy, 0.0)?.re);
    print_sweep(&glassy, &[1e12, 8.0e13, 1e15, 2.0e16])?;

    // a dilute gas from spectroscopic data: one strong line at 10 eV
    let ev = ELEMENTARY_CHARGE;
    let lines = [SpectralLine {
        energy: 10.0 * ev,
        width: 0.02 * ev,
        oscillator_strength: 1.0e-57,
    }];
    let gas = DielectricModel::from_spectroscopy(&lines, 2.7e25)?;
    let term = &gas.terms[0];
    println!("\ndilute gas from one spectral line (10 eV, 0.02 eV wide):");
    println!(
        "  omega_1 = {:.4e} rad/s, gamma_1 = {:.4e} rad/s, delta_eps_1 = {:.4e}",
        term.omega_n,
        term.gamma_n,
        term.delta_eps().unwrap()
    );
    println!("  eps(0) = 1 + {:.4e}", permittivity(&gas, 0.0)?.re - 1.0);
    Ok(())
}

fn print_sweep(model: &DielectricModel, omegas: &[f64]) -> ncfriction::Result<()> {
    println!(
        "  {:>10}  {:>24}  {:>24}",
        "omega", "eps(omega)", "(eps-1)/(eps+1)"
    );
    for &omega in omegas {
        let eps = permittivity(model, omega)?;
        let r = surface_response(model, omega)?;
        println!(
            "  {omega:>10.1e}  {:>11.4e} {:+.4e}i  {:>11.4e} {:+.4e}i",
            eps.re, eps.im, r.re, r.im
        );
    }
    Ok(())
}
