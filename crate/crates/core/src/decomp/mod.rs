//! Even decompositions.
//!
//! A chain `V_0 = V ⊃ V_1 ⊃ ... ⊃ V_k = ∅` is an even decomposition of `G`
//! when every layer `V_{i-1} \ V_i` is independent and sends an even number of
//! edges to `V_i`.

mod census;
mod exact;
mod greedy;

pub use census::{decomposition_census, CensusMode, CensusRecord, MAX_EXHAUSTIVE_CENSUS};
pub use exact::{
    find_even_decomposition, find_even_decomposition_unrestricted, Decomposer, MAX_DP_VERTICES,
    MAX_UNRESTRICTED_VERTICES,
};
pub use greedy::{run_greedy_algorithm, AlgorithmParams, Outcome, Removal, RunReport};

use serde::Serialize;

use crate::bits::BitVector;
use crate::error::{invalid, Result};
use crate::graph::LabeledGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvenDecomposition {
    chain: Vec<Vec<usize>>,
}

impl EvenDecomposition {
    /// Wraps a chain of vertex sets, each sorted on construction; nothing else is checked.
    pub fn from_chain(chain: Vec<Vec<usize>>) -> Self {
        let chain = chain
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s
            })
            .collect();
        EvenDecomposition { chain }
    }

    /// The chain obtained by removing `layers` in order from `0..n`.
    pub fn from_layers(n: usize, layers: &[Vec<usize>]) -> Self {
        let mut alive = vec![true; n];
        let mut current: Vec<usize> = (0..n).collect();
        let mut chain = vec![current.clone()];
        for layer in layers {
            for &x in layer {
                if x < n {
                    alive[x] = false;
                }
            }
            current.retain(|&x| alive[x]);
            chain.push(current.clone());
        }
        EvenDecomposition { chain }
    }

    pub fn chain(&self) -> &[Vec<usize>] {
        &self.chain
    }

    /// The removed sets `V_{i-1} \ V_i`.
    pub fn layers(&self) -> Vec<Vec<usize>> {
        self.chain
            .windows(2)
            .map(|w| w[0].iter().copied().filter(|x| w[1].binary_search(x).is_err()).collect())
            .collect()
    }
}

/// Checks the three conditions on `d` against `g`.
pub fn is_even_decomposition(g: &LabeledGraph, d: &EvenDecomposition) -> Result<bool> {
    let n = g.vertex_count();
    if let Some(&x) = d.chain.iter().flatten().find(|&&x| x >= n) {
        return invalid(format!("chain mentions vertex {x} but the graph has {n} vertices"));
    }
    let sets: Vec<BitVector> = d.chain.iter().map(|s| BitVector::from_indices(n, s.iter().copied())).collect();
    if sets.iter().zip(&d.chain).any(|(b, s)| b.count_ones() != s.len()) {
        return Ok(false); // repeated vertex inside one set
    }
    let Some(first) = sets.first() else {
        return Ok(false);
    };
    if first.count_ones() != n || !sets.last().unwrap().is_zero() {
        return Ok(false);
    }
    let adj = g.adjacency();
    for w in sets.windows(2) {
        let (outer, inner) = (&w[0], &w[1]);
        let mut layer = outer.clone();
        layer.xor_assign(inner);
        // inner must be a proper subset of outer
        if inner.ones_iter().any(|x| !outer.get(x)) || layer.is_zero() {
            return Ok(false);
        }
        let mut cut = 0;
        for x in layer.ones_iter() {
            if adj[x].words().iter().zip(layer.words()).any(|(a, b)| a & b != 0) {
                return Ok(false);
            }
            cut += adj[x].words().iter().zip(inner.words()).map(|(a, b)| (a & b).count_ones()).sum::<u32>();
        }
        if cut % 2 == 1 {
            return Ok(false);
        }
    }
    Ok(true)
}
