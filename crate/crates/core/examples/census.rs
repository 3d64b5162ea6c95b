//! Exhaustive even-decomposition census for small vertex counts.
//!
//! Usage: cargo run --example census -- [max_v] [workers]

use graphcodes::decomp::{decomposition_census, CensusMode};

fn main() -> graphcodes::Result<()> {
    let mut args = std::env::args().skip(1);
    let max_v: usize = args.next().map_or(6, |s| s.parse().expect("max_v"));
    let workers: usize = args.next().map_or(1, |s| s.parse().expect("workers"));
    println!("{:>2} {:>10} {:>14} {:>12}", "v", "even", "undecomposable", "proportion");
    for v in 1..=max_v {
        let r = decomposition_census(v, CensusMode::Exhaustive { workers })?;
        println!(
            "{:>2} {:>10} {:>14} {:>12}",
            r.v,
            r.total_even,
            r.undecomposable,
            format!("{}/{}", r.proportion_num, r.proportion_den)
        );
    }
    Ok(())
}
