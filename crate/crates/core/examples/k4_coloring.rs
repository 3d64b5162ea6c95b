//! The product coloring of K_n and its palette against 3^d m^2.
//!
//! Usage: cargo run --release --example k4_coloring -- [n ...]

use graphcodes::coloring::{admits_even_chromatic_copy, build_k4_coloring, K4ColoringParams};
use graphcodes::LabeledGraph;

fn main() -> graphcodes::Result<()> {
    let ns: Vec<usize> = std::env::args().skip(1).map(|s| s.parse().expect("n")).collect();
    let ns = if ns.is_empty() { vec![4, 8, 16, 32, 64] } else { ns };
    let k4 = LabeledGraph::complete(4);
    println!("{:>5} {:>3} {:>4} {:>8} {:>8} {:>10}", "n", "d", "m", "colors", "bound", "even K4");
    for n in ns {
        let p = K4ColoringParams::for_n(n);
        let chi = build_k4_coloring(n);
        let even = if n >= 4 { admits_even_chromatic_copy(&chi, &k4)? } else { false };
        println!("{:>5} {:>3} {:>4} {:>8} {:>8} {:>10}", n, p.d, p.m, chi.palette_size(), p.palette_bound(), even);
    }
    Ok(())
}
