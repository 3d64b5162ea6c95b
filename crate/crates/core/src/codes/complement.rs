//! The non-linear triangle-free code built from the complement map.
//!
//! `phi` sends each edge to its complement in `K_n`; on a graph it is the
//! identity for an even number of edges and complementation for an odd one.
//! For `n = 0, 1 (mod 4)` it is an involution, and the code is the preimage of
//! all graphs with at most `C(n,2)/2 - 2` edges.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::family::binomial;
use crate::error::{capacity, invalid, Result};
use crate::graph::{is_copy_of, num_edges, LabeledGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComplementMapCode {
    n: usize,
}

/// Largest edge count for which the code is listed element by element.
pub const MAX_LISTED_EDGES: usize = 20;

impl ComplementMapCode {
    pub fn new(n: usize) -> Result<Self> {
        if matches!(n % 4, 2 | 3) {
            return invalid(format!("the complement map is not invertible for n = {n} (n mod 4 = {})", n % 4));
        }
        Ok(ComplementMapCode { n })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Largest edge count of `phi(G)` for members `G`; negative means the code is empty.
    pub fn threshold(&self) -> i64 {
        num_edges(self.n) as i64 / 2 - 2
    }

    pub fn phi(&self, g: &LabeledGraph) -> LabeledGraph {
        assert_eq!(g.vertex_count(), self.n);
        if g.edge_count() % 2 == 1 {
            g.complement()
        } else {
            g.clone()
        }
    }

    /// `phi` on an edge mask (`C(n,2) <= 64`).
    pub fn phi_mask(&self, mask: u64) -> u64 {
        let len = num_edges(self.n);
        debug_assert!(len <= 64);
        if mask.count_ones() % 2 == 1 {
            let full = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
            mask ^ full
        } else {
            mask
        }
    }

    pub fn contains(&self, g: &LabeledGraph) -> bool {
        (self.phi(g).edge_count() as i64) <= self.threshold()
    }

    pub fn contains_mask(&self, mask: u64) -> bool {
        (self.phi_mask(mask).count_ones() as i64) <= self.threshold()
    }

    /// `|C| = sum_{k <= C(n,2)/2 - 2} C(C(n,2), k)`.
    pub fn cardinality(&self) -> u128 {
        let len = num_edges(self.n) as u64;
        (0..=self.threshold()).map(|k| binomial(len, k as u64)).sum()
    }

    /// Every member as an edge mask, ascending.
    pub fn element_masks(&self) -> Result<Vec<u64>> {
        let len = num_edges(self.n);
        if len > MAX_LISTED_EDGES {
            return capacity(format!("listing the code needs C(n,2) <= {MAX_LISTED_EDGES}"));
        }
        Ok((0..1u64 << len).filter(|&m| self.contains_mask(m)).collect())
    }

    pub fn elements(&self) -> Result<Vec<LabeledGraph>> {
        Ok(self
            .element_masks()?
            .into_iter()
            .map(|m| LabeledGraph::from_edge_mask(self.n, m))
            .collect())
    }

    /// A uniform member: a uniform graph with few edges, mapped through `phi`.
    pub fn sample_mask<R: Rng>(&self, rng: &mut R) -> u64 {
        let len = num_edges(self.n);
        assert!(len <= 64 && self.threshold() >= 0);
        let full = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        loop {
            let m = rng.gen::<u64>() & full;
            if (m.count_ones() as i64) <= self.threshold() {
                return self.phi_mask(m);
            }
        }
    }
}

/// Outcome of checking the complement-map code against triangles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplementReport {
    pub n: usize,
    pub mode: &'static str,
    pub cardinality: String,
    pub expected_cardinality: String,
    pub involution_checked: u64,
    pub involution_failures: u64,
    pub pairs_checked: u64,
    pub triangle_differences: u64,
    pub seed: Option<u64>,
}

impl ComplementReport {
    pub fn passed(&self) -> bool {
        self.involution_failures == 0
            && self.triangle_differences == 0
            && self.cardinality == self.expected_cardinality
    }
}

fn is_triangle_copy(n: usize, mask: u64) -> bool {
    mask.count_ones() == 3 && is_copy_of(&LabeledGraph::from_edge_mask(n, mask), &LabeledGraph::complete(3))
}

/// Exhaustive check: involution on all graphs, size, and all ordered pairs of members.
pub fn verify_complement_code_exhaustive(code: &ComplementMapCode) -> Result<ComplementReport> {
    let n = code.vertex_count();
    let members = code.element_masks()?;
    let len = num_edges(n);
    let mut involution_failures = 0;
    for m in 0..1u64 << len {
        if code.phi_mask(code.phi_mask(m)) != m {
            involution_failures += 1;
        }
    }
    let mut triangle_differences = 0;
    for &a in &members {
        for &b in &members {
            if is_triangle_copy(n, a ^ b) {
                triangle_differences += 1;
            }
        }
    }
    Ok(ComplementReport {
        n,
        mode: "exhaustive",
        cardinality: members.len().to_string(),
        expected_cardinality: code.cardinality().to_string(),
        involution_checked: 1 << len,
        involution_failures,
        pairs_checked: (members.len() * members.len()) as u64,
        triangle_differences,
        seed: None,
    })
}

/// Seeded spot checks for codes too large to list.
pub fn verify_complement_code_sampled(
    code: &ComplementMapCode,
    involution_samples: u64,
    pairs: u64,
    seed: u64,
) -> Result<ComplementReport> {
    let n = code.vertex_count();
    let len = num_edges(n);
    if len > 64 {
        return capacity("sampled verification supports C(n,2) <= 64");
    }
    if code.threshold() < 0 {
        return invalid("the code is empty");
    }
    let full = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut involution_failures = 0;
    for _ in 0..involution_samples {
        let m = rng.gen::<u64>() & full;
        if code.phi_mask(code.phi_mask(m)) != m {
            involution_failures += 1;
        }
    }
    let mut triangle_differences = 0;
    for _ in 0..pairs {
        let a = code.sample_mask(&mut rng);
        let b = code.sample_mask(&mut rng);
        if is_triangle_copy(n, a ^ b) {
            triangle_differences += 1;
        }
    }
    Ok(ComplementReport {
        n,
        mode: "sampled",
        cardinality: code.cardinality().to_string(),
        expected_cardinality: code.cardinality().to_string(),
        involution_checked: involution_samples,
        involution_failures,
        pairs_checked: pairs,
        triangle_differences,
        seed: Some(seed),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_vertices() {
        let code = ComplementMapCode::new(5).unwrap();
        assert_eq!(code.cardinality(), 176);
        assert_eq!(code.element_masks().unwrap().len(), 176);
        let report = verify_complement_code_exhaustive(&code).unwrap();
        assert_eq!(report.involution_checked, 1024);
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn four_vertices() {
        let code = ComplementMapCode::new(4).unwrap();
        assert_eq!(code.cardinality(), 7);
        assert!(verify_complement_code_exhaustive(&code).unwrap().passed());
    }

    #[test]
    fn bad_residues_are_rejected() {
        for n in [2, 3, 6, 7, 10] {
            assert!(ComplementMapCode::new(n).is_err());
        }
    }

    #[test]
    fn phi_images_have_few_edges() {
        let code = ComplementMapCode::new(8).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..2000 {
            let m = code.sample_mask(&mut rng);
            let g = LabeledGraph::from_edge_mask(8, m);
            assert!(code.contains(&g));
            assert!(code.phi(&g).edge_count() <= num_edges(8) - 4);
            assert_eq!(code.phi(&code.phi(&g)), g);
        }
    }
}
