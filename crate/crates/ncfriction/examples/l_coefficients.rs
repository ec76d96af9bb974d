//! The loss coefficient L = lim Im[(ε−1)/(ε+1)]/ω for every built-in
//! material, by closed form and by the numeric low-frequency limit.
//!
//! Run with: cargo run --example l_coefficients

use ncfriction::dielectric::{
    l_coefficient_closed, l_coefficient_numeric, l_single_resonance, DielectricModel,
    ResonanceTerm,
};
use ncfriction::matdb::builtin_materials;

fn main() -> ncfriction::Result<()> {
    println!(
        "{:<10}  {:>14}  {:>14}  {:>10}",
        "material", "L closed", "L numeric", "rel diff"
    );
    for mat in builtin_materials() {
        let closed = mat.resolve_l()?;
        // conductors get promoted to a Drude model for the numeric route;
        // the result is independent of the assumed relaxation rate
        let numeric = match mat.sigma_dc {
            Some(sigma) => {
                let model = DielectricModel::drude_from_conductivity(sigma, 1e14)?;
                Some(l_coefficient_numeric(&model)?)
            }
            None => mat.model.as_ref().map(l_coefficient_numeric).transpose()?,
        };
        match numeric {
            Some(numeric) => println!(
                "{:<10}  {closed:>14.6e}  {numeric:>14.6e}  {:>10.2e}",
                mat.name,
                (numeric - closed).abs() / closed
            ),
            None => println!("{:<10}  {closed:>14.6e}  {:>14}  {:>10}", mat.name, "(direct)", "-"),
        }
    }

    // a custom single-resonance insulator, three ways
    let (a1, w1, g1) = (1e30, 1e16, 1e13);
    let model = DielectricModel::new(vec![ResonanceTerm {
        omega_n: w1,
        a_n: a1,
        b_n: 0.0,
        gamma_n: g1,
    }])?;
    println!("\nsingle resonance (a1 = {a1:.0e}, omega_1 = {w1:.0e}, gamma_1 = {g1:.0e}):");
    println!("  closed-form sum        : {:.9e}", l_coefficient_closed(&model));
    println!("  single-resonance form  : {:.9e}", l_single_resonance(a1, w1, g1));
    println!("  numeric omega->0 limit : {:.9e}", l_coefficient_numeric(&model)?);

    // the superconductor limit: L falls with conductivity
    println!("\nconductor limit (L = 2 eps0/sigma):");
    for sigma in [1e5, 1e7, 1e9, 1e12] {
        let model = DielectricModel::drude_from_conductivity(sigma, 1e14)?;
        println!("  sigma = {sigma:>8.1e} (ohm m)^-1  ->  L = {:.4e}", l_coefficient_closed(&model));
    }
    Ok(())
}
