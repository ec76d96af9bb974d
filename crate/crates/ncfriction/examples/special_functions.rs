//! The special functions behind the mirror-charge closed forms:
//! digamma, polygamma of orders 1 and 2, and Hurwitz zeta.
//!
//! Run with: cargo run --example special_functions

use ncfriction::specfun::{digamma, hurwitz_zeta, polygamma, special_constants, ZETA_3};

fn main() -> ncfriction::Result<()> {
    let c = special_constants();
    println!("constants: gamma_E = {:.15}", c.euler_gamma);
    println!("           zeta(3) = {:.15}", c.zeta3);
    println!("           zeta(5) = {:.15}", c.zeta5);
    println!();

    println!("{:>8}  {:>22}  {:>22}  {:>22}", "x", "psi(x)", "psi'(x)", "psi''(x)");
    for x in [0.1, 0.25, 0.5, 1.0, 2.0, 3.7, 10.0, 100.0] {
        println!(
            "{:>8}  {:>22.15e}  {:>22.15e}  {:>22.15e}",
            x,
            digamma(x)?,
            polygamma(1, x)?,
            polygamma(2, x)?
        );
    }
    println!();

    // classic identities
    println!("psi(1) + gamma_E          = {:+.3e}", digamma(1.0)? + c.euler_gamma);
    println!(
        "psi(1/2) + gamma_E + 2ln2 = {:+.3e}",
        digamma(0.5)? + c.euler_gamma + 2.0 * std::f64::consts::LN_2
    );
    println!(
        "psi'(1) - pi^2/6          = {:+.3e}",
        polygamma(1, 1.0)? - std::f64::consts::PI.powi(2) / 6.0
    );
    println!(
        "psi''(1/2) + 14 zeta(3)   = {:+.3e}",
        polygamma(2, 0.5)? + 14.0 * ZETA_3
    );
    println!();

    // the Hurwitz route reproduces the polygamma route
    println!("{:>6}  {:>22}  {:>22}  {:>11}", "x", "zeta(3,x)", "-psi''(x)/2", "rel diff");
    for i in 1..=9 {
        let x = 0.1 * f64::from(i);
        let via_zeta = hurwitz_zeta(3, x)?;
        let via_poly = -0.5 * polygamma(2, x)?;
        println!(
            "{:>6.1}  {:>22.15e}  {:>22.15e}  {:>11.3e}",
            x,
            via_zeta,
            via_poly,
            (via_zeta - via_poly).abs() / via_poly
        );
    }
    Ok(())
}
