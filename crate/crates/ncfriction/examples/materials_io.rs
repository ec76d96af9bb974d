//! Material records: the built-in set, JSON round-tripping, and building
//! an insulator entry from spectroscopic line data.
//!
//! Run with: cargo run --example materials_io

use ncfriction::constants::ELEMENTARY_CHARGE;
use ncfriction::dielectric::{DielectricModel, SpectralLine};
use ncfriction::matdb::{builtin_materials, load_materials, save_materials, Material};

fn main() -> ncfriction::Result<()> {
    println!("built-in materials:");
    println!("{:<10}  {:>14}  {:>14}  notes", "name", "sigma_dc", "L");
    for mat in builtin_materials() {
        let sigma = mat
            .sigma_dc
            .map(|s| format!("{s:.3e}"))
            .unwrap_or_else(|| "-".into());
        println!(
            "{:<10}  {sigma:>14}  {:>14.4e}  {}",
            mat.name,
            mat.resolve_l()?,
            mat.notes
        );
    }

    // build a custom insulator from two spectral lines and save it
    let ev = ELEMENTARY_CHARGE;
    let lines = [
        SpectralLine {
            energy: 8.0 * ev,
            width: 0.05 * ev,
            oscillator_strength: 9.0e-58,
        },
        SpectralLine {
            energy: 14.0 * ev,
            width: 0.10 * ev,
            oscillator_strength: 4.0e-58,
        },
    ];
    let model = DielectricModel::from_spectroscopy(&lines, 3.0e28)?;
    let custom = Material::insulator("custom-glass", model, "two-line fit, lab data");
    println!("\ncustom insulator resolves to L = {:.4e} (rad/s)^-1", custom.resolve_l()?);

    let dir = std::env::temp_dir().join("ncfriction-materials-demo");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("materials.json");
    let mut all = builtin_materials();
    all.push(custom);
    save_materials(&path, &all)?;
    println!("\nwrote {} materials to {}", all.len(), path.display());

    let loaded = load_materials(&path)?;
    println!("reloaded {} materials; round-trip equal: {}", loaded.len(), loaded == all);
    println!("\nuse this file from the CLI with:");
    println!("  ncf materials --materials {}", path.display());
    println!("or set NCF_MATERIALS_PATH.");
    Ok(())
}
