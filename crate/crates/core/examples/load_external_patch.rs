//! Loads a rhombic patch written by hand (or by another program) and
//! converts it at several subdivision levels.
//!
//! cargo run --example load_external_patch -- my_patch.json 50

use pentatile::rhombic::load_patch;
use pentatile::subdivide::DivisionSpec;
use pentatile::{convert_patch, full_check};

const ROSETTE: &str = r#"{
  "symmetry_order": 4,
  "side_len": 1.0,
  "center": [0, 0],
  "tiles": [
    {"id": 0, "acute_deg": 90, "corners": [[0, 0], [1, 0], [1, 1], [0, 1]]},
    {"id": 1, "acute_deg": 90, "corners": [[0, 0], [0, 1], [-1, 1], [-1, 0]]},
    {"id": 2, "acute_deg": 90, "corners": [[0, 0], [-1, 0], [-1, -1], [0, -1]]},
    {"id": 3, "acute_deg": 90, "corners": [[0, -1], [1, -1], [1, 0], [0, 0]]}
  ]
}"#;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let text = match args.first() {
        Some(path) => std::fs::read_to_string(path).expect("readable patch file"),
        None => ROSETTE.to_string(),
    };
    let theta: f64 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(61.0);
    let patch = match load_patch(&text) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("cannot load patch: {e}");
            std::process::exit(2);
        }
    };
    println!("{} rhombi, families {:?}", patch.tiles.len(), patch.families());
    for u in 0..=3 {
        match convert_patch(&patch, theta, DivisionSpec::new(u)) {
            Ok(t) => println!(
                "u = {u}: {:>4} pentagons, valid: {}",
                t.pentagons.len(),
                full_check(&t, &patch.tolerance()).all_ok()
            ),
            Err(e) => println!("u = {u}: {e}"),
        }
    }
}
