//! Converts n-fold wheels for a range of orders and writes one as SVG.
//!
//! cargo run --example wheel_tiling -- 7 40 wheel.svg

use pentatile::render::{render_svg, RenderStyle};
use pentatile::rhombic::wheel_patch;
use pentatile::subdivide::DivisionSpec;
use pentatile::{convert_patch, full_check};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: u32 = args.first().and_then(|s| s.parse().ok()).unwrap_or(7);
    let theta: f64 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(40.0);

    for order in 3..=12 {
        let patch = wheel_patch(order, 2).unwrap();
        match convert_patch(&patch, theta, DivisionSpec::DIRECT) {
            Ok(t) => {
                let ok = full_check(&t, &patch.tolerance()).all_ok();
                println!("n = {order:>2}: {:>3} pentagons, valid: {ok}", t.pentagons.len());
            }
            Err(e) => println!("n = {order:>2}: {e}"),
        }
    }

    if let Some(path) = args.get(2) {
        let patch = wheel_patch(n, 3).unwrap();
        let tiling = convert_patch(&patch, theta, DivisionSpec::DIRECT).unwrap();
        std::fs::write(path, render_svg(&tiling, &RenderStyle::default())).unwrap();
        println!("wrote {path}");
    }
}
