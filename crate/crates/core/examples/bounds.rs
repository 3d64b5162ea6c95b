//! The bound formulas next to the sizes of the explicit coloring.
//!
//! Usage: cargo run --example bounds

use graphcodes::bounds::{bound_even_decomp, bound_general_log, bound_k4_colors, bound_maxmin, shrunken_host};
use graphcodes::build_k4_coloring;

fn main() -> graphcodes::Result<()> {
    println!("{:>6} {:>8} {:>10} {:>12}", "n", "colors", "3^d m^2", "n^(1/2)");
    for n in [4usize, 16, 64, 128, 256] {
        let chi = build_k4_coloring(n);
        println!("{:>6} {:>8} {:>10} {:>12.3}", n, chi.palette_size(), bound_k4_colors(n)?, bound_even_decomp(4, n as f64)?);
    }
    let n = 9f64.exp();
    let f = |m: f64| m.ln().sqrt().exp();
    let best = bound_maxmin(f, f, 1, n)?;
    println!("max-min at n = e^9 with r(m) = exp(sqrt(ln m)): {:.6} at m = {}", best.value, best.m);
    let (colors, density) = bound_general_log(1.0, 1e6)?;
    println!("c ln n at n = 10^6, c = 1: {colors:.4} colors, density at most {density:.4}");
    println!("ln of n exp(-ln^(3/4) n) at n = e^16: {:.4}", shrunken_host(1.0, 16f64.exp())?.ln());
    Ok(())
}
