//! Exact r, d^lin and d for every pattern on four vertices, then a few at n = 5.
//!
//! Usage: cargo run --release --example extremal_values

use graphcodes::extremal::{check_inequalities, exact_d, exact_dlin, exact_r, ExtremalValue};
use graphcodes::graph::enumerate_graphs;
use graphcodes::graph::is_isomorphic;
use graphcodes::LabeledGraph;

fn show(v: &ExtremalValue) -> String {
    match v {
        ExtremalValue::Unbounded => "inf".into(),
        ExtremalValue::Integer(k) => k.to_string(),
        ExtremalValue::GreaterThan(k) => format!(">{k}"),
        ExtremalValue::Density(f) => f.to_string(),
        ExtremalValue::Bracket { lower, upper } => format!("[{lower}, {upper}]"),
    }
}

fn main() -> graphcodes::Result<()> {
    let mut classes: Vec<LabeledGraph> = Vec::new();
    for g in enumerate_graphs(4, |_| true)? {
        if !classes.iter().any(|c| is_isomorphic(c, &g)) {
            classes.push(g);
        }
    }
    let mut results = Vec::new();
    println!("{:<28} {:>4} {:>6} {:>6}", "pattern (n = 4)", "r", "dlin", "d");
    for h in &classes {
        let r = exact_r(h, 4, 6)?;
        let dl = exact_dlin(h, 4)?;
        let d = exact_d(h, 4)?;
        println!("{:<28} {:>4} {:>6} {:>6}", format!("{:?}", h.edge_list()), show(&r.value), show(&dl.value), show(&d.value));
        results.extend([r, dl, d]);
    }
    let report = check_inequalities(&results);
    println!("inequalities: {} failures, {} undetermined", report.failures, report.undetermined);

    println!();
    println!("{:<28} {:>4} {:>12} {:>12}", "pattern (n = 5)", "r", "dlin", "d");
    for h in [LabeledGraph::path(3), LabeledGraph::complete(3), LabeledGraph::cycle(4), LabeledGraph::complete(4)] {
        let t = std::time::Instant::now();
        let r = exact_r(&h, 5, 6)?;
        let dl = exact_dlin(&h, 5)?;
        let d = exact_d(&h, 5)?;
        println!(
            "{:<28} {:>4} {:>12} {:>12}  ({:.1?})",
            format!("{:?}", h.edge_list()),
            show(&r.value),
            show(&dl.value),
            show(&d.value),
            t.elapsed()
        );
    }
    Ok(())
}
