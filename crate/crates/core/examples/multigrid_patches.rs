//! Generates the three multigrid patches and checks them.

use pentatile::rhombic::{multigrid_patch, save_patch, Family};
use pentatile::validate::check_patch;

fn main() {
    for family in Family::ALL {
        let patch = multigrid_patch(family, family.default_radius(), family.default_offset())
            .expect("default windows are regular");
        let mut inventory = std::collections::BTreeMap::new();
        for t in &patch.tiles {
            *inventory.entry(t.acute_deg.to_string()).or_insert(0) += 1;
        }
        let report = check_patch(&patch, &patch.tolerance());
        println!(
            "{family}: {} rhombi {inventory:?}, {}-fold, valid: {}",
            patch.tiles.len(),
            patch.symmetry_order,
            report.all_ok()
        );
    }

    // a grid line through a crossing is reported with a nearby offset to try
    match multigrid_patch(Family::Fivefold, 1.0, 1.0 - 1e-12) {
        Err(e) => println!("singular: {e}"),
        Ok(p) => println!("unexpectedly regular: {} rhombi", p.tiles.len()),
    }

    let json = save_patch(&multigrid_patch(Family::Eightfold, 1.0, 0.5).unwrap());
    println!("small eightfold patch is {} bytes of JSON", json.len());
}
