//! Bose occupation numbers and the Kallen–Welton factor Θ(ω, T) across
//! the quantum-to-classical crossover.
//!
//! Run with: cargo run --example thermal_factors

use ncfriction::constants::{BOLTZMANN, HBAR};
use ncfriction::thermal::{kallen_welton, occupation, ThermalState};

fn main() -> ncfriction::Result<()> {
    let room = ThermalState::new(300.0)?;
    let kt = BOLTZMANN * room.temperature();
    println!("T = 300 K, k_B T = {kt:.4e} J, thermal frequency k_B T/hbar = {:.4e} rad/s", kt / HBAR);
    println!();
    println!(
        "{:>10}  {:>13}  {:>13}  {:>13}  {:>10}",
        "omega", "n(omega)", "Theta (J)", "Theta/kT", "hw/2kT"
    );
    let mut omega = 1e10;
    while omega <= 1e16 {
        let n = occupation(room, omega)?;
        let theta = kallen_welton(room, omega)?;
        println!(
            "{omega:>10.1e}  {n:>13.4e}  {theta:>13.4e}  {:>13.6}  {:>10.4}",
            theta / kt,
            HBAR * omega / (2.0 * kt)
        );
        omega *= 10.0;
    }
    println!();
    println!("low-frequency limit:  Theta -> k_B T:");
    for omega in [1.0, 1e3, 1e6] {
        let theta = kallen_welton(room, omega)?;
        println!("  omega = {omega:>7.1e}: Theta/kT - 1 = {:+.3e}", theta / kt - 1.0);
    }
    println!();
    println!("zero temperature:     Theta -> hbar*omega/2:");
    let cold = ThermalState::new(0.0)?;
    for omega in [1e13, 1e15] {
        let theta = kallen_welton(cold, omega)?;
        println!(
            "  omega = {omega:>7.1e}: Theta/(hw/2) - 1 = {:+.3e}, n = {}",
            theta / (0.5 * HBAR * omega) - 1.0,
            occupation(cold, omega)?
        );
    }
    println!();
    println!("symmetry: Theta(-omega) = -Theta(omega):");
    let plus = kallen_welton(room, 1e13)?;
    let minus = kallen_welton(room, -1e13)?;
    println!("  Theta(+1e13) = {plus:+.6e} J");
    println!("  Theta(-1e13) = {minus:+.6e} J");
    Ok(())
}
