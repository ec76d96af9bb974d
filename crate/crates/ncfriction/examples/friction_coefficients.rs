//! Friction coefficients for He+ near real surfaces: single wall vs two
//! plates, the conductivity route vs the L route, and the image-kernel
//! consistency check.
//!
//! Run with: cargo run --example friction_coefficients

use ncfriction::friction::{
    eta_conductor, eta_single_wall, eta_two_plate, image_potential, kernel_limit_check,
    IonSpecies,
};
use ncfriction::matdb::builtin_materials;
use ncfriction::mirror::PlatePair;

fn main() -> ncfriction::Result<()> {
    let he = IonSpecies::helium_ion();
    let z = 0.5e-6;
    let gap = 1e-6;

    println!("He+ at Z = {z:.1e} m from each surface (gap a = {gap:.1e} m):");
    println!(
        "{:<10}  {:>14}  {:>14}  {:>14}",
        "material", "L ((rad/s)^-1)", "eta 1-wall", "eta 2-plate"
    );
    for mat in builtin_materials() {
        let l = mat.resolve_l()?;
        let one = eta_single_wall(&he, l, z)?;
        let two = eta_two_plate(&he, l, PlatePair::new(gap, z)?)?;
        println!(
            "{:<10}  {:>14.4e}  {:>14.4e}  {:>14.4e}",
            mat.name, l, one.eta, two.eta
        );
    }
    println!("(two plates at the midpoint exceed one wall by 12 zeta(3)/8 = 1.803)");

    println!("\ndual route for gold, sigma = 2.30e7 (ohm m)^-1:");
    let via_sigma = eta_conductor(&he, 2.30e7, z)?.eta;
    let via_l = eta_single_wall(&he, 2.0 * ncfriction::constants::VACUUM_PERMITTIVITY / 2.30e7, z)?.eta;
    println!("  eta via sigma : {via_sigma:.15e} kg/s");
    println!("  eta via L     : {via_l:.15e} kg/s");
    println!("  rel diff      : {:.1e}", (via_sigma - via_l).abs() / via_l);

    println!("\nscaling laws (exact):");
    let base = eta_single_wall(&he, 1.38e-16, z)?.eta;
    let far = eta_single_wall(&he, 1.38e-16, 2.0 * z)?.eta;
    println!("  eta(Z)/eta(2Z) = {} (expect 8)", base / far);
    let he2 = IonSpecies::new("He2+", he.mass, 2)?;
    let charged = eta_single_wall(&he2, 1.38e-16, z)?.eta;
    println!("  eta(2e)/eta(e) = {} (expect 4)", charged / base);

    println!("\nimage potential between graphite plates:");
    for frac in [0.1, 0.25, 0.5] {
        let v = image_potential(&he, PlatePair::new(gap, frac * gap)?)?;
        println!("  z/a = {frac:>4.2}: V = {v:.6e} J = {:.4} eV", v / 1.602176634e-19);
    }

    println!("\ncoincident-point kernel check (mixed derivative vs 1/(8Z^3)):");
    for z in [1.0, 1e-6] {
        println!("  Z = {z:>6.0e} m: ratio = {:.9}", kernel_limit_check(z)?);
    }
    Ok(())
}
