//! A K4-free linear code from the product coloring.
//!
//! Each color gets a vector of a family with no zero sum of at most six
//! vectors; the vectors become the columns of a parity-check matrix.
//!
//! Usage: cargo run --release --example coloring_to_code -- [n]

use graphcodes::codes::{bch_budget, check_independence, code_summary};
use graphcodes::{build_k4_coloring, code_from_coloring, greedy_vector_family, LabeledGraph};

fn main() -> graphcodes::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(16, |s| s.parse().expect("n"));
    let chi = build_k4_coloring(n);
    let r = chi.palette_size();
    let fam = greedy_vector_family(r, 6)?;
    println!("n = {n}: {r} colors, family of dimension {} ({:?}), budget {}", fam.dimension(), fam.construction(), bch_budget(r, 6));
    println!("no zero sum of <= 6 vectors: {}", check_independence(&fam, 0).holds());
    let m = code_from_coloring(&chi, &fam)?;
    let s = code_summary(&m, &LabeledGraph::complete(4))?;
    println!("kernel dimension {} of {}, density 2^{}, K4-free: {}", s.kernel_dim, m.column_count(), s.density_log2, s.h_free);
    Ok(())
}
