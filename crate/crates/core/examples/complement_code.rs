//! The triangle-free code obtained from the complement map.
//!
//! Usage: cargo run --release --example complement_code

use graphcodes::codes::{verify_complement_code_exhaustive, verify_complement_code_sampled, ComplementMapCode};

fn main() -> graphcodes::Result<()> {
    for n in [4, 5] {
        let code = ComplementMapCode::new(n)?;
        let r = verify_complement_code_exhaustive(&code)?;
        println!("n = {n}: |C| = {}, {} pairs, {} triangle sums, passed {}", r.cardinality, r.pairs_checked, r.triangle_differences, r.passed());
    }
    for n in [8, 9] {
        let code = ComplementMapCode::new(n)?;
        let r = verify_complement_code_sampled(&code, 10_000, 100_000, 1)?;
        println!("n = {n}: |C| = {}, {} sampled pairs, {} triangle sums", r.cardinality, r.pairs_checked, r.triangle_differences);
    }
    Ok(())
}
