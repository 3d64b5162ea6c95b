//! The randomized nine-step procedure on G(n, 1/2).
//!
//! Usage: cargo run --release --example greedy_decomposition -- [trials] [n]

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use graphcodes::decomp::AlgorithmParams;
use graphcodes::{is_even_decomposition, run_greedy_algorithm, LabeledGraph};

fn main() -> graphcodes::Result<()> {
    let mut args = std::env::args().skip(1);
    let trials: u64 = args.next().map_or(50, |s| s.parse().expect("trials"));
    let n = args.next().map_or_else(AlgorithmParams::smallest_runnable_n, |s| s.parse().expect("n"));
    let base = AlgorithmParams::for_n(n, 0);
    println!("n = {n}, p = {}, m = {}, q = {}, |X| = {}", base.p, base.m, base.q, base.x_size);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut by_step: BTreeMap<String, (u64, u64)> = BTreeMap::new();
    for seed in 0..trials {
        let g = LabeledGraph::random(n, 0.5, &mut rng);
        let report = run_greedy_algorithm(&g, &AlgorithmParams { seed, ..base })?;
        if let Some(d) = &report.decomposition {
            assert!(is_even_decomposition(&g, d)?);
        }
        let key = report.failed_step.map_or("success".to_string(), |s| format!("failed at step {s}"));
        let entry = by_step.entry(key).or_default();
        if g.edge_count().is_multiple_of(2) {
            entry.0 += 1;
        } else {
            entry.1 += 1;
        }
    }
    println!("{:<18} {:>6} {:>6}", "outcome", "even", "odd");
    for (k, (even, odd)) in by_step {
        println!("{k:<18} {even:>6} {odd:>6}");
    }
    Ok(())
}
