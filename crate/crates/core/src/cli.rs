//! The `pentatile` command line.
//!
//! Exit codes: 0 on success, 1 when a tiling fails validation or the
//! parameters are geometrically invalid, 2 for usage, I/O and schema errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::convert::{convert_patch, tiling_from_json, tiling_to_json};
use crate::pentagon::{build_shape, ShapeClass};
use crate::render::{render_svg, RenderStyle};
use crate::rhombic::{load_patch, multigrid_patch, save_patch, wheel_patch, Family};
use crate::subdivide::DivisionSpec;
use crate::validate::full_check;

#[derive(Debug, Parser)]
#[command(name = "pentatile", version, about = "Pentagonal tilings from rhombic tilings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the angles, shape class and edge e of the (n, theta) pentagon.
    Pentagon {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        theta: f64,
    },
    /// Generate a 5-, 8- or 12-fold rhombic patch by the multigrid method.
    Generate {
        #[arg(long)]
        family: Family,
        /// Keep rhombi whose grid crossing lies within this distance of the center.
        #[arg(long)]
        radius: Option<f64>,
        /// Grid offset in (0, 1).
        #[arg(long)]
        offset: Option<f64>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Generate the n-fold wheel of 360/n rhombi, each cut into u x u copies.
    Wheel {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        u: u32,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Convert a patch file into a pentagonal tiling and validate it.
    Convert {
        patch: PathBuf,
        #[arg(long)]
        theta: f64,
        /// Division parameter: each rhombus becomes 4u^2 rhombi (0 = direct).
        #[arg(long, default_value_t = 0)]
        u: u32,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Write outputs even if validation fails.
        #[arg(long)]
        force: bool,
        /// Outline the rhombi in red.
        #[arg(long)]
        overlay: bool,
        /// Do not mark posterior trapezoids with an asterisk.
        #[arg(long)]
        no_asterisk: bool,
    },
    /// Validate a tiling file; prints the report as JSON.
    Validate { tiling: PathBuf },
}

enum Failure {
    /// Geometric or validation failure.
    Invalid(String),
    /// Usage, I/O or schema problem.
    Input(String),
}

type CmdResult = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn write_or_print(path: Option<&Path>, text: &str, out: &mut dyn Write) -> CmdResult {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", p.display()))),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Input(e.to_string())),
    }
}

fn class_name(c: ShapeClass) -> &'static str {
    match c {
        ShapeClass::ConvexPentagon => "convex pentagon",
        ShapeClass::ConcaveAtE => "concave pentagon (E > 180)",
        ShapeClass::ConcaveAtB => "concave pentagon (B > 180)",
        ShapeClass::ConcaveAtD => "concave pentagon (D > 180)",
        ShapeClass::Trapezoid => "trapezoid",
        ShapeClass::Parallelogram => "parallelogram",
    }
}

/// Angle table for one `(n, theta)`, angles to two decimals.
pub fn pentagon_table(n: u32, theta: f64) -> Result<String, crate::ShapeError> {
    let s = build_shape(n, theta)?;
    let a = s.angles;
    Ok(format!(
        "{:>4} {:>8} {:>8} {:>8} {:>8} {:>8}\n{:>4} {:>8.2} {:>8.2} {:>8.2} {:>8.2} {:>8.2}\nshape: {}\ne: {:.6}\n",
        "n", "A", "B", "C", "D", "E", n, a.a, a.b, a.c, a.d, a.e,
        class_name(s.shape_class),
        s.edge_e
    ))
}

fn cmd_pentagon(n: u32, theta: f64, out: &mut dyn Write) -> CmdResult {
    let table = pentagon_table(n, theta).map_err(|e| Failure::Invalid(e.to_string()))?;
    write_or_print(None, &table, out)
}

fn cmd_generate(
    family: Family,
    radius: Option<f64>,
    offset: Option<f64>,
    path: Option<&Path>,
    out: &mut dyn Write,
) -> CmdResult {
    let radius = radius.unwrap_or(family.default_radius());
    let offset = offset.unwrap_or(family.default_offset());
    let patch =
        multigrid_patch(family, radius, offset).map_err(|e| Failure::Invalid(e.to_string()))?;
    write_or_print(path, &save_patch(&patch), out)
}

fn cmd_wheel(n: u32, u: u32, path: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    let patch = wheel_patch(n, u).map_err(|e| Failure::Invalid(e.to_string()))?;
    write_or_print(path, &save_patch(&patch), out)
}

#[allow(clippy::too_many_arguments)]
fn cmd_convert(
    patch_file: &Path,
    theta: f64,
    u: u32,
    json: Option<&Path>,
    svg: Option<&Path>,
    force: bool,
    style: &RenderStyle,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let patch = load_patch(&read(patch_file)?).map_err(|e| Failure::Input(e.to_string()))?;
    let tiling = convert_patch(&patch, theta, DivisionSpec::new(u))
        .map_err(|e| Failure::Invalid(e.to_string()))?;
    let report = full_check(&tiling, &patch.tolerance());
    if (theta - 90.0).abs() <= 1e-6 {
        let _ = writeln!(
            err,
            "note: theta = 90 degenerates every pentagon to a parallelogram; each rhombus is bisected"
        );
    }
    if !report.all_ok() {
        let _ = writeln!(err, "{}", report.to_json());
        if !force {
            return Err(Failure::Invalid("validation failed; nothing written (use --force)".into()));
        }
    }
    let json_text = tiling_to_json(&tiling);
    if json.is_some() || svg.is_none() {
        write_or_print(json, &json_text, out)?;
    }
    if let Some(p) = svg {
        write_or_print(Some(p), &render_svg(&tiling, style), out)?;
    }
    let _ = writeln!(
        err,
        "{} pentagons, families {:?}, validation {}",
        tiling.pentagons.len(),
        tiling.families,
        if report.all_ok() { "passed" } else { "FAILED" }
    );
    Ok(())
}

fn cmd_validate(path: &Path, out: &mut dyn Write) -> CmdResult {
    let tiling = tiling_from_json(&read(path)?).map_err(|e| Failure::Input(e.to_string()))?;
    let report = full_check(&tiling, &tiling.source_patch.tolerance());
    write_or_print(None, &(report.to_json() + "\n"), out)?;
    if report.all_ok() {
        Ok(())
    } else {
        Err(Failure::Invalid("validation failed".into()))
    }
}

/// Parses `args` (program name first) and runs the subcommand, returning
/// the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Pentagon { n, theta } => cmd_pentagon(n, theta, out),
        Command::Generate {
            family,
            radius,
            offset,
            out: path,
        } => cmd_generate(family, radius, offset, path.as_deref(), out),
        Command::Wheel { n, u, out: path } => cmd_wheel(n, u, path.as_deref(), out),
        Command::Convert {
            patch,
            theta,
            u,
            json,
            svg,
            force,
            overlay,
            no_asterisk,
        } => {
            let style = RenderStyle {
                show_rhombus_overlay: overlay,
                asterisk: !no_asterisk,
                ..RenderStyle::default()
            };
            cmd_convert(
                &patch,
                theta,
                u,
                json.as_deref(),
                svg.as_deref(),
                force,
                &style,
                out,
                err,
            )
        }
        Command::Validate { tiling } => cmd_validate(&tiling, out),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}
