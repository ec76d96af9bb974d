//! Image-charge sums between two parallel plates: the potential factor
//! C(𝒵), the friction factor D(𝒵), and the force gradient dC/d𝒵,
//! with the raw series as a cross-check.
//!
//! Run with: cargo run --example mirror_factors

use ncfriction::mirror::{c_factor, c_gradient, d_factor, PlatePair};
use ncfriction::specfun::{ZETA_3, ZETA_5};

/// Direct mirror-charge series for D, truncated.
fn d_series(u: f64, terms: u64) -> f64 {
    let cube = |x: f64| x * x * x;
    (1..=terms)
        .map(|n| {
            let nf = n as f64;
            1.0 / cube(nf - 1.0 + u) + 1.0 / cube(nf - u) - 2.0 / cube(nf)
        })
        .sum()
}

fn main() -> ncfriction::Result<()> {
    let a = 1.0; // everything scales; print in units of the gap
    println!(
        "{:>6}  {:>18}  {:>18}  {:>18}",
        "z/a", "C*a", "D*a^3", "dC/dz*a^2"
    );
    for i in 1..=19 {
        let u = 0.05 * f64::from(i);
        let geom = PlatePair::new(a, u)?;
        println!(
            "{u:>6.2}  {:>18.12}  {:>18.12}  {:>18.12}",
            c_factor(geom)?,
            d_factor(geom)?,
            c_gradient(geom)?
        );
    }

    println!("\nsymmetric point z = a/2:");
    let mid = PlatePair::new(a, 0.5)?;
    println!("  C*a   = {:.12}  (ln 2 = {:.12})", c_factor(mid)?, std::f64::consts::LN_2);
    println!("  D*a^3 = {:.12}  (12 zeta(3) = {:.12})", d_factor(mid)?, 12.0 * ZETA_3);
    println!("  two-nearest-image estimate would give 16; the full ladder trims ~10%");

    println!("\nnear-plate asymptotics at z/a = 0.01:");
    let z = 0.01;
    let geom = PlatePair::new(a, z)?;
    let c_asym = 1.0 / (4.0 * z) + ZETA_3 * z * z / 2.0;
    let d_asym = 1.0 / (z * z * z) + 12.0 * ZETA_5 * z * z;
    println!(
        "  C: closed {:.12e} vs 1/(4z) + zeta(3) z^2/2 = {c_asym:.12e}",
        c_factor(geom)?
    );
    println!(
        "  D: closed {:.12e} vs 1/z^3 + 12 zeta(5) z^2 = {d_asym:.12e}",
        d_factor(geom)?
    );

    println!("\nclosed form vs truncated raw series at z = a/3:");
    let third = PlatePair::new(a, 1.0 / 3.0)?;
    let closed = d_factor(third)?;
    for terms in [10, 100, 10_000, 1_000_000] {
        let series = d_series(1.0 / 3.0, terms);
        println!(
            "  {terms:>9} terms: {series:.12}   (closed {closed:.12}, diff {:+.2e})",
            series - closed
        );
    }
    Ok(())
}
