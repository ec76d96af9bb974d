//! Command-line front end. The `ncf` binary is a thin wrapper around
//! [`run`]; everything here delegates to the library modules.
//!
//! Subcommands: `lcoeff`, `mirror`, `eta`, `experiment`, `trajectory`,
//! `materials`. Global flags: `--format {csv|json}`, `--materials <path>`
//! (default from `NCF_MATERIALS_PATH`), `--paper-defaults`.
//!
//! Exit codes: 0 success, 2 usage or validation error, 3 numerical
//! failure.

mod output;

pub use output::{CellValue, Document, OutputFormat, Quantity};

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::beamline::{self, ExperimentConfig};
use crate::dielectric::{
    l_coefficient_closed, l_coefficient_numeric, DielectricModel, ResonanceTerm,
};
use crate::error::{Error, Result};
use crate::friction::{self, IonSpecies};
use crate::matdb::{self, Material, MaterialKind};
use crate::mirror::{self, PlatePair};
use crate::trajectory;

/// Relaxation rate assumed when a DC conductivity has to be promoted to
/// a full Drude model for the numeric-limit route. L is independent of
/// this choice.
const DEFAULT_DRUDE_GAMMA: f64 = 1e14;

#[derive(Debug, Parser)]
#[command(
    name = "ncf",
    version,
    about = "Non-contact friction for ions near conducting and dielectric surfaces"
)]
struct Cli {
    /// Output format for tables and records.
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: OutputFormat,

    /// Extra materials file (JSON array); entries override built-ins of
    /// the same name.
    #[arg(long, global = true, env = "NCF_MATERIALS_PATH", value_name = "PATH")]
    materials: Option<PathBuf>,

    /// Use the built-in reference setup: He+ at 20 V, 10 cm region, 1 um
    /// gap with the ion at the midplane, 50 um aperture, 1 m drift.
    #[arg(long, global = true)]
    paper_defaults: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Loss coefficient L of a material or dielectric model, by closed
    /// form and by the numeric low-frequency limit.
    Lcoeff(LcoeffArgs),
    /// Image-charge factors C, D and dC/dZ on a grid of heights.
    Mirror(MirrorArgs),
    /// Friction coefficient for a single wall or two plates.
    Eta(EtaArgs),
    /// Beamline energy-loss table over one or more materials.
    Experiment(ExperimentArgs),
    /// Integrate ion trajectories for a set of entry offsets.
    Trajectory(TrajectoryArgs),
    /// List the active material set with resolved loss coefficients.
    Materials,
}

#[derive(Debug, Args)]
struct LcoeffArgs {
    /// Material name from the active set.
    #[arg(long, conflicts_with = "model")]
    material: Option<String>,
    /// JSON file {"name": ..., "terms": [{"omega_n", "a_n", "b_n",
    /// "gamma_n"}, ...]} in SI units.
    #[arg(long, value_name = "PATH")]
    model: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct MirrorArgs {
    /// Plate gap a (m).
    #[arg(long, default_value_t = 1e-6)]
    gap: f64,
    /// Height grid as start:stop:count in fractions of the gap,
    /// endpoints exclusive of 0 and 1.
    #[arg(long, default_value = "0.1:0.9:9", conflicts_with = "points")]
    grid: String,
    /// Explicit comma-separated list of heights as fractions of the gap.
    #[arg(long)]
    points: Option<String>,
}

#[derive(Debug, Args)]
struct EtaArgs {
    /// Material name from the active set.
    #[arg(long)]
    material: Option<String>,
    /// Loss coefficient L ((rad/s)^-1), instead of a material.
    #[arg(long, conflicts_with = "material")]
    l: Option<f64>,
    /// DC conductivity ((ohm*m)^-1), instead of a material.
    #[arg(long, conflicts_with_all = ["material", "l"])]
    sigma: Option<f64>,
    /// Ion charge number Z.
    #[arg(long, default_value_t = 1)]
    charge_number: u32,
    /// Ion mass (kg); only the derived damping rate depends on it.
    #[arg(long, default_value_t = crate::constants::HELIUM_ION_MASS)]
    ion_mass: f64,
    /// Single-wall distance Z (m).
    #[arg(long, conflicts_with_all = ["gap", "height"])]
    distance: Option<f64>,
    /// Plate gap a (m) for the two-plate configuration.
    #[arg(long)]
    gap: Option<f64>,
    /// Ion height (m) between the plates; defaults to the midplane.
    #[arg(long, requires = "gap")]
    height: Option<f64>,
}

#[derive(Debug, Args, Clone)]
struct BeamArgs {
    /// Accelerating voltage U (V).
    #[arg(long, default_value_t = 20.0)]
    voltage: f64,
    /// Interaction region length l (m).
    #[arg(long, default_value_t = 0.1)]
    length: f64,
    /// Plate gap a (m).
    #[arg(long, default_value_t = 1e-6)]
    gap: f64,
    /// Ion height (m); defaults to the midplane.
    #[arg(long)]
    height: Option<f64>,
    /// Aperture diameter a_s (m).
    #[arg(long, default_value_t = 50e-6)]
    aperture: f64,
    /// Drift distance to the aperture (m).
    #[arg(long, default_value_t = 1.0)]
    drift: f64,
    /// Ion mass (kg).
    #[arg(long, default_value_t = crate::constants::HELIUM_ION_MASS)]
    ion_mass: f64,
    /// Ion charge number Z.
    #[arg(long, default_value_t = 1)]
    charge_number: u32,
}

impl BeamArgs {
    fn config(&self, material_l: f64) -> Result<ExperimentConfig> {
        let height = self.height.unwrap_or(0.5 * self.gap);
        let cfg = ExperimentConfig {
            ion: IonSpecies::new("ion", self.ion_mass, self.charge_number)?,
            accel_voltage: self.voltage,
            region_length: self.length,
            geom: PlatePair::new(self.gap, height)?,
            material_l,
            aperture_diameter: self.aperture,
            drift_distance: self.drift,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Debug, Args)]
struct ExperimentArgs {
    #[command(flatten)]
    beam: BeamArgs,
    /// Restrict the table to these materials (repeatable); default is
    /// the whole active set.
    #[arg(long = "material")]
    material: Vec<String>,
}

#[derive(Debug, Args)]
struct TrajectoryArgs {
    #[command(flatten)]
    beam: BeamArgs,
    /// Material providing the loss coefficient.
    #[arg(long, default_value = "graphite")]
    material: String,
    /// Loss coefficient L ((rad/s)^-1), instead of a material.
    #[arg(long, conflicts_with = "material")]
    l: Option<f64>,
    /// Comma-separated entry offsets from the midplane (m).
    #[arg(long, default_value = "0", conflicts_with = "offsets_file")]
    offsets: String,
    /// File with one entry offset (m) per line.
    #[arg(long, value_name = "PATH")]
    offsets_file: Option<PathBuf>,
    /// Entry transverse velocity (m/s).
    #[arg(long, default_value_t = 0.0)]
    entry_vz: f64,
    /// Per-step relative tolerance of the integrator.
    #[arg(long, default_value_t = trajectory::DEFAULT_TOLERANCE)]
    tolerance: f64,
    /// Bisect for the offset beyond which ions strike a plate, instead
    /// of scanning offsets.
    #[arg(long, conflicts_with_all = ["offsets", "offsets_file"])]
    bisect: bool,
}

/// Parse argv, run the selected command, print the document to stdout
/// and warnings to stderr. Returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version on stdout with success
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(doc) => {
            for w in &doc.warnings {
                eprintln!("warning: {w}");
            }
            print!("{}", doc.render(cli.format));
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Document> {
    let (materials, mut material_warnings) = active_materials(cli)?;
    let mut doc = match &cli.command {
        Command::Lcoeff(args) => cmd_lcoeff(args, &materials)?,
        Command::Mirror(args) => cmd_mirror(args)?,
        Command::Eta(args) => cmd_eta(args, &materials)?,
        Command::Experiment(args) => cmd_experiment(args, &materials)?,
        Command::Trajectory(args) => cmd_trajectory(args, &materials)?,
        Command::Materials => cmd_materials(&materials)?,
    };
    material_warnings.append(&mut doc.warnings);
    doc.warnings = material_warnings;
    Ok(doc)
}

/// Built-in materials, with entries from the user file (if any)
/// overriding by name.
fn active_materials(cli: &Cli) -> Result<(Vec<Material>, Vec<String>)> {
    let mut materials = matdb::builtin_materials();
    let mut warnings = Vec::new();
    if let Some(path) = &cli.materials {
        let extra = matdb::load_materials(path)?;
        for mat in extra {
            if let Some(slot) = materials
                .iter_mut()
                .find(|m| m.name.eq_ignore_ascii_case(&mat.name))
            {
                warnings.push(format!(
                    "material '{}' from {} overrides the built-in entry",
                    mat.name,
                    path.display()
                ));
                *slot = mat;
            } else {
                materials.push(mat);
            }
        }
    }
    Ok((materials, warnings))
}

fn lookup<'a>(materials: &'a [Material], name: &str) -> Result<&'a Material> {
    matdb::find_material(materials, name).ok_or_else(|| {
        Error::domain(format!(
            "unknown material '{name}'; see `ncf materials` for the active set"
        ))
    })
}

/// Both L routes for a material: closed form, and the numeric limit when
/// a dispersion model exists (conductors are promoted to a Drude model).
fn l_both_routes(mat: &Material) -> Result<(f64, f64, Option<String>)> {
    let closed = mat.resolve_l()?;
    match mat.kind {
        MaterialKind::Conductor => {
            let sigma = mat.sigma_dc.expect("validated conductor");
            let model = DielectricModel::drude_from_conductivity(sigma, DEFAULT_DRUDE_GAMMA)?;
            Ok((closed, l_coefficient_numeric(&model)?, None))
        }
        MaterialKind::InsulatorModel => {
            let model = mat.model.as_ref().expect("validated insulator");
            Ok((closed, l_coefficient_numeric(model)?, None))
        }
        MaterialKind::DirectL => Ok((
            closed,
            closed,
            Some(format!(
                "material '{}' stores L directly; no dispersion model to take the numeric limit of",
                mat.name
            )),
        )),
    }
}

/// File schema for `lcoeff --model`.
#[derive(Debug, serde::Deserialize)]
struct NamedModelFile {
    name: String,
    terms: Vec<ResonanceTerm>,
}

fn cmd_lcoeff(args: &LcoeffArgs, materials: &[Material]) -> Result<Document> {
    let (name, closed, numeric, note) = match (&args.material, &args.model) {
        (Some(name), None) => {
            let mat = lookup(materials, name)?;
            let (c, n, note) = l_both_routes(mat)?;
            (mat.name.clone(), c, n, note)
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)?;
            let file: NamedModelFile = serde_json::from_str(&text).map_err(|e| Error::Parse {
                path: path.display().to_string(),
                detail: e.to_string(),
            })?;
            let model = DielectricModel::new(file.terms)?;
            let closed = l_coefficient_closed(&model);
            let numeric = l_coefficient_numeric(&model)?;
            (file.name, closed, numeric, None)
        }
        _ => {
            return Err(Error::domain(
                "lcoeff needs exactly one of --material or --model".to_string(),
            ))
        }
    };
    let rel_diff = if closed == numeric {
        0.0
    } else {
        (numeric - closed).abs() / closed.abs().max(numeric.abs())
    };
    let mut doc = Document::new("lcoeff");
    doc.context.push(Quantity::text("material", name));
    doc.columns = vec![
        ("l_closed".into(), "(rad/s)^-1".into()),
        ("l_numeric".into(), "(rad/s)^-1".into()),
        ("rel_diff".into(), "1".into()),
    ];
    doc.rows
        .push(vec![CellValue::num(closed), CellValue::num(numeric), CellValue::num(rel_diff)]);
    if let Some(note) = note {
        doc.warn(note);
    }
    Ok(doc)
}

fn parse_fraction_grid(args: &MirrorArgs) -> Result<Vec<f64>> {
    let parse_one = |s: &str| -> Result<f64> {
        s.trim()
            .parse::<f64>()
            .map_err(|_| Error::domain(format!("not a number: '{s}'")))
    };
    let fractions: Vec<f64> = if let Some(points) = &args.points {
        points
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(parse_one)
            .collect::<Result<_>>()?
    } else {
        let parts: Vec<&str> = args.grid.split(':').collect();
        if parts.len() != 3 {
            return Err(Error::domain(format!(
                "grid must be start:stop:count, got '{}'",
                args.grid
            )));
        }
        let start = parse_one(parts[0])?;
        let stop = parse_one(parts[1])?;
        let count: usize = parts[2]
            .trim()
            .parse()
            .map_err(|_| Error::domain(format!("bad grid count '{}'", parts[2])))?;
        if count == 0 {
            return Err(Error::domain("grid count must be >= 1".to_string()));
        }
        if count == 1 {
            vec![start]
        } else {
            (0..count)
                .map(|i| start + (stop - start) * i as f64 / (count - 1) as f64)
                .collect()
        }
    };
    for &u in &fractions {
        if !(u > 0.0 && u < 1.0) {
            return Err(Error::domain(format!(
                "height fraction {u} outside the open interval (0, 1)"
            )));
        }
    }
    Ok(fractions)
}

fn cmd_mirror(args: &MirrorArgs) -> Result<Document> {
    if !(args.gap.is_finite() && args.gap > 0.0) {
        return Err(Error::domain(format!("gap must be > 0 m, got {}", args.gap)));
    }
    let fractions = parse_fraction_grid(args)?;
    let a = args.gap;
    let mut doc = Document::new("mirror");
    doc.context.push(Quantity::num("gap", a, "m"));
    doc.columns = vec![
        ("z_over_a".into(), "1".into()),
        ("c_times_a".into(), "1".into()),
        ("d_times_a3".into(), "1".into()),
        ("dc_dz_times_a2".into(), "1".into()),
    ];
    for &u in &fractions {
        let geom = PlatePair::new(a, u * a)?;
        doc.rows.push(vec![
            CellValue::num(u),
            CellValue::num(mirror::c_factor(geom)? * a),
            CellValue::num(mirror::d_factor(geom)? * a * a * a),
            CellValue::num(mirror::c_gradient(geom)? * a * a),
        ]);
    }
    doc.warn(
        "midplane value D(a/2) = 12 zeta(3)/a^3 = 14.4247/a^3; quoted forms scaling as \
         1/Z^3 at the midplane disagree with the mirror-charge series by 8x and are not used",
    );
    Ok(doc)
}

fn cmd_eta(args: &EtaArgs, materials: &[Material]) -> Result<Document> {
    let ion = IonSpecies::new("ion", args.ion_mass, args.charge_number)?;
    let (l, l_source) = match (&args.material, args.l, args.sigma) {
        (Some(name), None, None) => {
            let mat = lookup(materials, name)?;
            (mat.resolve_l()?, mat.name.clone())
        }
        (None, Some(l), None) => (l, "direct L".to_string()),
        (None, None, Some(sigma)) => {
            if !(sigma.is_finite() && sigma > 0.0) {
                return Err(Error::domain(format!("sigma must be > 0, got {sigma}")));
            }
            (
                2.0 * crate::constants::VACUUM_PERMITTIVITY / sigma,
                format!("sigma = {sigma} (ohm*m)^-1"),
            )
        }
        _ => {
            return Err(Error::domain(
                "eta needs exactly one of --material, --l, --sigma".to_string(),
            ))
        }
    };
    let result = match (args.distance, args.gap) {
        (Some(z), None) => friction::eta_single_wall(&ion, l, z)?,
        (None, Some(gap)) => {
            let height = args.height.unwrap_or(0.5 * gap);
            friction::eta_two_plate(&ion, l, PlatePair::new(gap, height)?)?
        }
        (None, None) => {
            return Err(Error::domain(
                "eta needs --distance (single wall) or --gap [--height] (two plates)".to_string(),
            ))
        }
        (Some(_), Some(_)) => unreachable!("clap conflicts prevent this"),
    };
    let mut doc = Document::new("eta");
    doc.context.push(Quantity::text("l_source", l_source));
    doc.context
        .push(Quantity::num("charge_number", f64::from(args.charge_number), "1"));
    doc.context.push(Quantity::num("ion_mass", args.ion_mass, "kg"));
    doc.columns = vec![
        ("configuration".into(), "text".into()),
        ("l_used".into(), "(rad/s)^-1".into()),
        ("geometry_factor".into(), "1/m^3".into()),
        ("eta".into(), "kg/s".into()),
        ("damping_rate".into(), "1/s".into()),
    ];
    let config_name = match result.configuration {
        friction::Configuration::SingleWall => "single_wall",
        friction::Configuration::TwoPlate => "two_plate",
    };
    doc.rows.push(vec![
        CellValue::text(config_name),
        CellValue::num(result.l_used),
        CellValue::num(result.geometry_factor),
        CellValue::num(result.eta),
        CellValue::num(result.eta / ion.mass),
    ]);
    Ok(doc)
}

fn beam_context(cfg: &ExperimentConfig) -> Vec<Quantity> {
    vec![
        Quantity::num("voltage", cfg.accel_voltage, "V"),
        Quantity::num("region_length", cfg.region_length, "m"),
        Quantity::num("gap", cfg.geom.gap(), "m"),
        Quantity::num("height", cfg.geom.height(), "m"),
        Quantity::num("aperture", cfg.aperture_diameter, "m"),
        Quantity::num("drift", cfg.drift_distance, "m"),
        Quantity::num("ion_mass", cfg.ion.mass, "kg"),
        Quantity::num("charge_number", f64::from(cfg.ion.charge_number), "1"),
    ]
}

fn cmd_experiment(args: &ExperimentArgs, materials: &[Material]) -> Result<Document> {
    let template = args.beam.config(0.0)?;
    let selected: Vec<Material> = if args.material.is_empty() {
        materials.to_vec()
    } else {
        args.material
            .iter()
            .map(|name| lookup(materials, name).cloned())
            .collect::<Result<_>>()?
    };
    let table = beamline::material_table(&selected, &template)?;

    let mut doc = Document::new("experiment");
    doc.context = beam_context(&template);
    if let Some(first) = table.rows.first() {
        let res = &first.result;
        doc.context.push(Quantity::num("entry_speed", res.entry_speed, "m/s"));
        doc.context
            .push(Quantity::num("de_broglie_reduced", res.de_broglie_reduced, "m"));
        doc.context.push(Quantity::num("de_broglie", res.de_broglie, "m"));
        doc.context.push(Quantity::num(
            "retardation_parameter",
            res.retardation_parameter,
            "1",
        ));
    }
    doc.columns = vec![
        ("material".into(), "text".into()),
        ("l".into(), "(rad/s)^-1".into()),
        ("damping_rate".into(), "1/s".into()),
        ("flight_time".into(), "s".into()),
        ("r".into(), "1".into()),
        ("energy_loss".into(), "1".into()),
        ("xi".into(), "1".into()),
        ("f".into(), "1".into()),
    ];
    let mut quartz_present = false;
    for row in &table.rows {
        quartz_present |= row.material.to_ascii_lowercase().starts_with("quartz");
        let res = &row.result;
        doc.rows.push(vec![
            CellValue::text(row.material.clone()),
            CellValue::num(row.l),
            CellValue::num(res.damping_rate),
            CellValue::num(res.flight_time),
            CellValue::num(res.velocity_loss_fraction),
            CellValue::num(res.energy_loss_fraction),
            CellValue::num(res.resolution),
            CellValue::num(res.figure_of_merit),
        ]);
    }
    doc.warn(
        "damping-rate convention: Gamma = eta_2/m from m dv/dt = -eta_2 v; conventions \
         inserting an extra factor 2 in Gamma would double every r in this table",
    );
    if quartz_present {
        doc.warn(
            "quartz figures of merit follow f = r/xi at the configured aperture; published \
             reference values f_o = 9.04e3 and f_e = 1.37e4 differ by about 4x and are not \
             reproduced by this formula",
        );
    }
    for (name, reason) in &table.skipped {
        doc.warn(format!("skipped material '{name}': {reason}"));
    }
    Ok(doc)
}

fn parse_offsets(args: &TrajectoryArgs) -> Result<Vec<f64>> {
    if let Some(path) = &args.offsets_file {
        let text = std::fs::read_to_string(path)?;
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| {
                l.parse::<f64>()
                    .map_err(|_| Error::domain(format!("bad offset line: '{l}'")))
            })
            .collect()
    } else {
        args.offsets
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::domain(format!("bad offset: '{s}'")))
            })
            .collect()
    }
}

fn cmd_trajectory(args: &TrajectoryArgs, materials: &[Material]) -> Result<Document> {
    let l = match args.l {
        Some(l) => l,
        None => lookup(materials, &args.material)?.resolve_l()?,
    };
    let cfg = args.beam.config(l)?;

    let mut doc = Document::new("trajectory");
    doc.context = beam_context(&cfg);
    doc.context.push(Quantity::num("material_l", l, "(rad/s)^-1"));
    doc.context
        .push(Quantity::num("tolerance", args.tolerance, "1"));

    if args.bisect {
        doc.columns = vec![("threshold_offset".into(), "m".into())];
        match trajectory::impact_threshold(&cfg, args.tolerance)? {
            Some(threshold) => doc.rows.push(vec![CellValue::num(threshold)]),
            None => {
                doc.rows.push(vec![CellValue::text("none")]);
                doc.warn("no impact threshold: even ions at the gap edge exit the region");
            }
        }
        return Ok(doc);
    }

    let offsets = parse_offsets(args)?;
    doc.columns = vec![
        ("offset".into(), "m".into()),
        ("exit_z".into(), "m".into()),
        ("exit_vx".into(), "m/s".into()),
        ("impact_flag".into(), "bool".into()),
        ("passed_aperture".into(), "bool".into()),
        ("r".into(), "1".into()),
    ];
    for &offset in &offsets {
        let out = trajectory::integrate(&cfg, offset, args.entry_vz, args.tolerance)?;
        doc.rows.push(vec![
            CellValue::num(offset),
            CellValue::num(out.exit_state.z),
            CellValue::num(out.exit_state.vx),
            CellValue::Flag(out.status != trajectory::ExitStatus::Exited),
            CellValue::Flag(out.passed_aperture),
            CellValue::num(out.velocity_loss_fraction),
        ]);
    }
    Ok(doc)
}

fn cmd_materials(materials: &[Material]) -> Result<Document> {
    let mut doc = Document::new("materials");
    doc.columns = vec![
        ("material".into(), "text".into()),
        ("kind".into(), "text".into()),
        ("sigma_dc".into(), "(ohm*m)^-1".into()),
        ("l".into(), "(rad/s)^-1".into()),
        ("notes".into(), "text".into()),
    ];
    for mat in materials {
        let kind = match mat.kind {
            MaterialKind::Conductor => "conductor",
            MaterialKind::InsulatorModel => "insulator_model",
            MaterialKind::DirectL => "direct_l",
        };
        let sigma = mat
            .sigma_dc
            .map(CellValue::num)
            .unwrap_or_else(|| CellValue::text(""));
        let l = mat
            .resolve_l()
            .map(CellValue::num)
            .unwrap_or_else(|_| CellValue::text("unresolvable"));
        doc.rows.push(vec![
            CellValue::text(mat.name.clone()),
            CellValue::text(kind),
            sigma,
            l,
            CellValue::text(mat.notes.clone()),
        ]);
    }
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(args).expect("args parse")
    }

    #[test]
    fn lcoeff_graphite_both_routes() {
        let cli = parse(&["ncf", "lcoeff", "--material", "graphite"]);
        let doc = dispatch(&cli).unwrap();
        let (closed, numeric, diff) = match &doc.rows[0][..] {
            [CellValue::Num(c), CellValue::Num(n), CellValue::Num(d)] => (*c, *n, *d),
            other => panic!("unexpected row {other:?}"),
        };
        assert!((closed - 1.38e-16).abs() / 1.38e-16 < 0.01);
        assert!(diff < 1e-3);
        assert!((numeric - closed).abs() / closed < 1e-3);
    }

    #[test]
    fn lcoeff_unknown_material_is_domain_error() {
        let cli = parse(&["ncf", "lcoeff", "--material", "unobtainium"]);
        let err = dispatch(&cli).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn mirror_midplane_row() {
        let cli = parse(&["ncf", "mirror", "--points", "0.5"]);
        let doc = dispatch(&cli).unwrap();
        match &doc.rows[0][..] {
            [CellValue::Num(u), CellValue::Num(ca), CellValue::Num(da3), CellValue::Num(g)] => {
                assert_eq!(*u, 0.5);
                assert!((ca - std::f64::consts::LN_2).abs() < 1e-12);
                assert!((da3 - 12.0 * crate::specfun::ZETA_3).abs() < 1e-10);
                assert_eq!(*g, 0.0);
            }
            other => panic!("unexpected row {other:?}"),
        }
    }

    #[test]
    fn mirror_rejects_grid_endpoints() {
        for bad in [
            vec!["ncf", "mirror", "--points", "0.0,0.5"],
            vec!["ncf", "mirror", "--points", "0.5,1.0"],
            vec!["ncf", "mirror", "--grid", "0:0.9:5"],
        ] {
            let cli = parse(&bad);
            let err = dispatch(&cli).unwrap_err();
            assert_eq!(err.exit_code(), 2, "{bad:?}");
        }
    }

    #[test]
    fn eta_dual_route_consistency() {
        let by_sigma = dispatch(&parse(&[
            "ncf", "eta", "--sigma", "2.30e7", "--distance", "5e-7",
        ]))
        .unwrap();
        let by_material = dispatch(&parse(&[
            "ncf", "eta", "--material", "Au", "--distance", "5e-7",
        ]))
        .unwrap();
        let eta_of = |doc: &Document| match doc.rows[0][3] {
            CellValue::Num(x) => x,
            _ => panic!(),
        };
        let a = eta_of(&by_sigma);
        let b = eta_of(&by_material);
        assert!((a - b).abs() / b < 1e-14);
    }

    #[test]
    fn experiment_defaults_match_reference_lists() {
        let cli = parse(&["ncf", "experiment", "--paper-defaults"]);
        let doc = dispatch(&cli).unwrap();
        assert_eq!(doc.rows.len(), 6);
        let r_of = |row: &Vec<CellValue>| match row[4] {
            CellValue::Num(x) => x,
            _ => panic!(),
        };
        let expected = [1.55e-7, 7.03e-7, 2.82e-6, 2.80e-5, 2.82e-6, 4.30e-6];
        for (row, want) in doc.rows.iter().zip(expected) {
            assert!((r_of(row) - want).abs() / want < 0.03);
        }
        assert!(doc.warnings.iter().any(|w| w.contains("quartz")));
        assert!(doc.warnings.iter().any(|w| w.contains("Gamma = eta_2/m")));
    }

    #[test]
    fn experiment_rejects_zero_voltage() {
        let cli = parse(&["ncf", "experiment", "--voltage", "0"]);
        let err = dispatch(&cli).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn trajectory_centered_matches_experiment() {
        let doc = dispatch(&parse(&["ncf", "trajectory", "--material", "V"])).unwrap();
        let (impact, passed, r) = match &doc.rows[0][..] {
            [_, _, _, CellValue::Flag(i), CellValue::Flag(p), CellValue::Num(r)] => (*i, *p, *r),
            other => panic!("unexpected row {other:?}"),
        };
        assert!(!impact);
        assert!(passed);
        let exp = dispatch(&parse(&["ncf", "experiment", "--material", "V"])).unwrap();
        let r_exp = match exp.rows[0][4] {
            CellValue::Num(x) => x,
            _ => panic!(),
        };
        assert!((r - r_exp).abs() / r_exp < 1e-6);
    }

    #[test]
    fn materials_table_lists_builtins() {
        let doc = dispatch(&parse(&["ncf", "materials"])).unwrap();
        assert_eq!(doc.rows.len(), 6);
        let names: Vec<String> = doc
            .rows
            .iter()
            .map(|r| match &r[0] {
                CellValue::Text(s) => s.clone(),
                _ => panic!(),
            })
            .collect();
        assert_eq!(names, ["Au", "V", "Ti", "graphite", "quartz-o", "quartz-e"]);
    }
}
