//! Prints the angle table, shape class and edge `e` for each order of a family.
//!
//! cargo run --example angle_tables -- 12 44

use pentatile::pentagon::{build_shape, equilateral_theta};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let family: u32 = args.first().and_then(|s| s.parse().ok()).unwrap_or(5);
    let theta: f64 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(35.0);
    let orders: &[u32] = match family {
        8 => &[4, 8],
        12 => &[4, 6, 12],
        _ => &[5, 10],
    };
    println!("theta = {theta}");
    println!("{:>4} {:>8} {:>8} {:>8} {:>8} {:>8} {:>10}  shape", "n", "A", "B", "C", "D", "E", "e");
    for &n in orders {
        match build_shape(n, theta) {
            Ok(s) => {
                let a = s.angles;
                println!(
                    "{n:>4} {:>8.2} {:>8.2} {:>8.2} {:>8.2} {:>8.2} {:>10.6}  {:?}",
                    a.a, a.b, a.c, a.d, a.e, s.edge_e, s.shape_class
                );
            }
            Err(e) => println!("{n:>4} {e}"),
        }
    }
    for n in 3..=8 {
        match equilateral_theta(n) {
            Some(t) => println!("equilateral at n = {n}: theta = {t:.2}"),
            None => println!("equilateral at n = {n}: none"),
        }
    }
}
