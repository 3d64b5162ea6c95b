use std::ops::ControlFlow;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::family::VectorFamily;
use super::matrix::ParityCheckMatrix;
use crate::bits::{words_for, BitVector};
use crate::coloring::EdgeColoring;
use crate::copies::CopyFamily;
use crate::error::{invalid, Result};
use crate::graph::{num_edges, Embedding, LabeledGraph};

/// Name of the generator behind every seeded run in this crate.
pub const RNG_NAME: &str = "ChaCha8Rng::seed_from_u64";

/// The matrix whose column `j` is the family vector of the color of edge `j`.
///
/// If `chi` admits no even-chromatic copy of `h` and `fam.order() >= e(h)`,
/// the kernel contains no copy of `h`.
pub fn code_from_coloring(chi: &EdgeColoring, fam: &VectorFamily) -> Result<ParityCheckMatrix> {
    if fam.len() < chi.palette_size() {
        return invalid(format!(
            "family has {} vectors but the coloring uses {} colors",
            fam.len(),
            chi.palette_size()
        ));
    }
    let cols: Vec<u64> = chi.colors().iter().map(|&c| fam.vectors()[c as usize]).collect();
    ParityCheckMatrix::from_columns(chi.vertex_count(), fam.dimension(), &cols)
}

/// Verdict of [`verify_h_free`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FreeCheck {
    Free,
    /// The first copy (subsets in lexicographic order) lying in the kernel.
    Contains(Embedding),
}

impl FreeCheck {
    pub fn is_free(&self) -> bool {
        matches!(self, FreeCheck::Free)
    }

    pub fn witness(&self) -> Option<&Embedding> {
        match self {
            FreeCheck::Free => None,
            FreeCheck::Contains(e) => Some(e),
        }
    }
}

/// Checks `M x != 0` for the indicator `x` of every copy of `h` in `K_n`.
pub fn verify_h_free(m: &ParityCheckMatrix, h: &LabeledGraph) -> Result<FreeCheck> {
    let fam = CopyFamily::new(h, m.vertex_count())?;
    let (stride, cols) = m.column_words();
    let mut acc = vec![0u64; stride];
    let mut hit = None;
    let _ = fam.try_for_each(|edges, subset, pid| {
        acc.iter_mut().for_each(|w| *w = 0);
        for &j in edges {
            for (a, c) in acc.iter_mut().zip(&cols[j * stride..(j + 1) * stride]) {
                *a ^= c;
            }
        }
        if acc.iter().all(|&w| w == 0) {
            hit = Some(fam.embedding(subset, pid));
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(hit.map_or(FreeCheck::Free, FreeCheck::Contains))
}

/// A uniformly random `t x C(n,2)` matrix from the generator.
pub fn random_matrix<R: Rng>(n: usize, t: usize, rng: &mut R) -> ParityCheckMatrix {
    let len = num_edges(n);
    let rows = (0..t)
        .map(|_| BitVector::from_words(len, (0..words_for(len)).map(|_| rng.gen()).collect()))
        .collect();
    ParityCheckMatrix::new(n, rows).expect("row lengths match")
}

#[derive(Clone, Debug)]
pub struct RandomCodeFind {
    pub matrix: ParityCheckMatrix,
    /// Zero-based index of the successful attempt.
    pub attempt: u64,
}

/// Samples matrices until one has an `h`-free kernel or `attempts` run out.
pub fn random_code_search(
    h: &LabeledGraph,
    n: usize,
    t: usize,
    seed: u64,
    attempts: u64,
) -> Result<Option<RandomCodeFind>> {
    if h.vertex_count() > n {
        return invalid(format!("pattern on {} vertices does not fit into K_{n}", h.vertex_count()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..attempts {
        let matrix = random_matrix(n, t, &mut rng);
        if verify_h_free(&matrix, h)?.is_free() {
            return Ok(Some(RandomCodeFind { matrix, attempt }));
        }
    }
    Ok(None)
}

/// Dimension, density and verdict of a code for one pattern.
///
/// The density is exactly `2^density_log2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeSummary {
    pub n: usize,
    pub t: usize,
    pub kernel_dim: usize,
    pub density_log2: i64,
    pub h_free: bool,
    pub witness: Option<Vec<(usize, usize)>>,
}

pub fn code_summary(m: &ParityCheckMatrix, h: &LabeledGraph) -> Result<CodeSummary> {
    let check = verify_h_free(m, h)?;
    let kernel_dim = m.kernel_dimension();
    Ok(CodeSummary {
        n: m.vertex_count(),
        t: m.row_count(),
        kernel_dim,
        density_log2: kernel_dim as i64 - m.column_count() as i64,
        h_free: check.is_free(),
        witness: check.witness().map(|e| e.image_edges()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::build_k4_coloring;
    use crate::codes::family::greedy_vector_family;

    #[test]
    fn all_ones_row_examples() {
        let m = ParityCheckMatrix::all_ones_row(4);
        let k4 = LabeledGraph::complete(4);
        let check = verify_h_free(&m, &k4).unwrap();
        assert_eq!(check.witness().unwrap().map(), &[0, 1, 2, 3]);
        for n in 3..8 {
            assert!(verify_h_free(&ParityCheckMatrix::all_ones_row(n), &LabeledGraph::complete(3)).unwrap().is_free());
        }
        let full = ParityCheckMatrix::zeros(5, 0);
        assert!(!verify_h_free(&full, &LabeledGraph::path(3)).unwrap().is_free());
        assert!(verify_h_free(&full, &LabeledGraph::complete(6)).is_err());
    }

    #[test]
    fn monochromatic_code_repeats_one_column() {
        let chi = EdgeColoring::monochromatic(5);
        let fam = VectorFamily::new(3, 1, vec![0b101]).unwrap();
        let m = code_from_coloring(&chi, &fam).unwrap();
        assert!(m.columns().iter().all(|c| c.words()[0] == 0b101));
        assert!(code_from_coloring(&EdgeColoring::rainbow(3), &fam).is_err());
    }

    #[test]
    fn rainbow_k4_code_is_k4_free() {
        let fam = greedy_vector_family(6, 6).unwrap();
        let m = code_from_coloring(&EdgeColoring::rainbow(4), &fam).unwrap();
        assert!(verify_h_free(&m, &LabeledGraph::complete(4)).unwrap().is_free());
    }

    #[test]
    fn k4_pipeline_at_sixteen() {
        let chi = build_k4_coloring(16);
        let fam = greedy_vector_family(chi.palette_size(), 6).unwrap();
        let m = code_from_coloring(&chi, &fam).unwrap();
        let s = code_summary(&m, &LabeledGraph::complete(4)).unwrap();
        assert!(s.h_free);
        assert_eq!(s.density_log2, -(m.rank() as i64));
        assert_eq!(m.rank(), fam.dimension());
    }

    #[test]
    fn summary_examples() {
        let k3 = LabeledGraph::complete(3);
        let s = code_summary(&ParityCheckMatrix::zeros(4, 0), &k3).unwrap();
        assert_eq!((s.kernel_dim, s.density_log2, s.h_free), (6, 0, false));
        let s = code_summary(&ParityCheckMatrix::all_ones_row(4), &k3).unwrap();
        assert_eq!((s.kernel_dim, s.density_log2, s.h_free), (5, -1, true));
        assert!(s.witness.is_none());
    }

    #[test]
    fn random_search_examples() {
        let k3 = LabeledGraph::complete(3);
        let found = random_code_search(&k3, 5, 1, 3, 2000).unwrap().unwrap();
        assert!(verify_h_free(&found.matrix, &k3).unwrap().is_free());
        let k4 = LabeledGraph::complete(4);
        let found = random_code_search(&k4, 6, 11, 0, 20).unwrap().unwrap();
        assert!(verify_h_free(&found.matrix, &k4).unwrap().is_free());
        assert!(random_code_search(&k4, 6, 11, 0, 0).unwrap().is_none());
        // same seed, same answer
        let again = random_code_search(&k4, 6, 11, 0, 20).unwrap().unwrap();
        assert_eq!(again.matrix, found.matrix);
    }
}
