//! Shows the standard-unit pattern of a subdivided rhombus and the pentagon
//! counts for u = 0..3.

use pentatile::convert::plan;
use pentatile::rhombic::{multigrid_patch, Family};
use pentatile::subdivide::{Chirality, DivisionSpec};

fn main() {
    let patch = multigrid_patch(Family::Fivefold, 2.0, 0.29).unwrap();
    for u in 0..=3 {
        let spec = DivisionSpec::new(u);
        println!(
            "u = {u}: {} pentagons per rhombus, {} in the patch",
            spec.pentagons_per_rhombus(),
            spec.pentagons_per_rhombus() * patch.tiles.len()
        );
    }

    let (refined, sides) = plan(&patch, 68.0, DivisionSpec::new(2)).unwrap();
    let patterns = sides.per_base_patterns(&refined);
    let (base, cells) = patterns.iter().next().unwrap();
    println!("\nbase rhombus {base}, cell (i, j) -> chirality/axis:");
    for j in (0..4).rev() {
        let row: Vec<String> = (0..4)
            .map(|i| {
                let s = cells[&(i, j)];
                format!("{}{}", s.chirality.letter(), if s.axis == pentatile::Axis::FirstPair { 1 } else { 2 })
            })
            .collect();
        println!("  {}", row.join(" "));
    }
    let identical = patterns.values().all(|p| p == cells);
    let rooted = sides.base_chirality.values().all(|&c| c == Chirality::Anterior);
    println!("identical in every base rhombus: {identical}; all bases anterior-rooted: {rooted}");
}
