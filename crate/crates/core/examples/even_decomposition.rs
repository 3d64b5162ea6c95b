//! Exact even decompositions of a few small graphs.
//!
//! Usage: cargo run --example even_decomposition

use graphcodes::decomp::find_even_decomposition_unrestricted;
use graphcodes::{find_even_decomposition, is_even_decomposition, LabeledGraph};

fn main() -> graphcodes::Result<()> {
    let mut k6_minus_matching = LabeledGraph::complete(6);
    for i in 0..3 {
        k6_minus_matching.set_edge(2 * i, 2 * i + 1, false);
    }
    let graphs = [
        ("K4", LabeledGraph::complete(4)),
        ("C4", LabeledGraph::cycle(4)),
        ("C6", LabeledGraph::cycle(6)),
        ("K6 minus a perfect matching", k6_minus_matching),
        ("K6 + K1", LabeledGraph::complete(6).disjoint_union(&LabeledGraph::empty(1))),
        ("K3,3 minus an edge", LabeledGraph::from_edges(6, &[(0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])?),
    ];
    for (name, g) in graphs {
        match find_even_decomposition(&g)? {
            Some(d) => {
                assert!(is_even_decomposition(&g, &d)?);
                println!("{name}: layers {:?}", d.layers());
            }
            None => {
                let oracle = find_even_decomposition_unrestricted(&g)?;
                println!("{name}: none (unrestricted search agrees: {})", oracle.is_none());
            }
        }
    }
    Ok(())
}
