//! Converts a multigrid patch and writes the tiling as JSON and SVG.
//!
//! cargo run --example convert_and_render -- eightfold 45 1 out

use std::path::PathBuf;

use pentatile::convert::tiling_to_json;
use pentatile::render::{render_svg, RenderStyle};
use pentatile::rhombic::{multigrid_patch, Family};
use pentatile::subdivide::{Chirality, DivisionSpec};
use pentatile::{convert_patch, full_check};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let family: Family = args.first().map_or(Family::Twelvefold, |s| s.parse().unwrap());
    let theta: f64 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(30.0);
    let u: u32 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(1);
    let dir = PathBuf::from(args.get(3).map_or("target/tilings", String::as_str));

    let patch = multigrid_patch(family, family.default_radius(), family.default_offset()).unwrap();
    let tiling = convert_patch(&patch, theta, DivisionSpec::new(u)).unwrap();
    let report = full_check(&tiling, &patch.tolerance());
    println!(
        "{family} theta={theta} u={u}: {} pentagons ({} anterior, {} posterior), valid: {}",
        tiling.pentagons.len(),
        tiling.count(Chirality::Anterior),
        tiling.count(Chirality::Posterior),
        report.all_ok()
    );

    std::fs::create_dir_all(&dir).unwrap();
    let stem = format!("{family}_{theta}_u{u}");
    let style = RenderStyle {
        show_rhombus_overlay: true,
        ..RenderStyle::default()
    };
    std::fs::write(dir.join(format!("{stem}.json")), tiling_to_json(&tiling)).unwrap();
    std::fs::write(dir.join(format!("{stem}.svg")), render_svg(&tiling, &style)).unwrap();
    println!("wrote {}/{stem}.{{json,svg}}", dir.display());
}
