//! Random parity-check matrices with H-free kernels.
//!
//! Usage: cargo run --release --example random_code -- [seed]

use graphcodes::codes::code_summary;
use graphcodes::{random_code_search, LabeledGraph};

fn main() -> graphcodes::Result<()> {
    let seed: u64 = std::env::args().nth(1).map_or(0, |s| s.parse().expect("seed"));
    let cases = [
        ("K3", LabeledGraph::complete(3), 5, 1),
        ("K4", LabeledGraph::complete(4), 6, 11),
        ("C4", LabeledGraph::cycle(4), 6, 8),
    ];
    for (name, h, n, t) in cases {
        match random_code_search(&h, n, t, seed, 10_000)? {
            Some(found) => {
                let s = code_summary(&found.matrix, &h)?;
                println!("{name} in K_{n}, t = {t}: found at attempt {}, density 2^{}", found.attempt, s.density_log2);
            }
            None => println!("{name} in K_{n}, t = {t}: nothing in 10000 attempts"),
        }
    }
    Ok(())
}
