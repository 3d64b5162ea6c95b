//! Edge colorings of `K_n` and even-chromatic copies.
//!
//! An embedding of `H` is even-chromatic when every color occurs on an even
//! number of its image edges. [`build_k4_coloring`] produces a coloring with
//! `exp(O(sqrt(log n)))` colors that admits no even-chromatic `K_4`.

use std::collections::HashMap;
use std::hash::Hash;

use crate::codes::ParityCheckMatrix;
use crate::error::{invalid, Result};
use crate::graph::{edge_endpoints, num_edges, pair_index, Embedding, LabeledGraph};

/// A total coloring of the edges of `K_n`, surjective onto `0..palette_size`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    colors: Vec<u32>,
    palette_size: usize,
}

/// Relabels arbitrary labels to `0, 1, ...` in order of first appearance.
pub fn canonical_relabel<T: Hash + Eq + Clone>(labels: &[T]) -> Vec<u32> {
    let mut ids: HashMap<T, u32> = HashMap::new();
    labels
        .iter()
        .map(|l| {
            let next = ids.len() as u32;
            *ids.entry(l.clone()).or_insert(next)
        })
        .collect()
}

impl EdgeColoring {
    /// Colors indexed by canonical edge index; the values used must be exactly `0..r`.
    pub fn new(n: usize, colors: Vec<u32>) -> Result<Self> {
        if colors.len() != num_edges(n) {
            return invalid(format!(
                "coloring of K_{n} needs {} colors, got {}",
                num_edges(n),
                colors.len()
            ));
        }
        let r = colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        let mut used = vec![false; r];
        for &c in &colors {
            used[c as usize] = true;
        }
        if let Some(missing) = used.iter().position(|u| !u) {
            return invalid(format!("color {missing} is unused but {} is used", r - 1));
        }
        Ok(EdgeColoring {
            n,
            colors,
            palette_size: r,
        })
    }

    /// Coloring from arbitrary labels, compacted in first-appearance order.
    pub fn from_labels<T: Hash + Eq + Clone>(n: usize, labels: &[T]) -> Result<Self> {
        Self::new(n, canonical_relabel(labels))
    }

    pub fn monochromatic(n: usize) -> Self {
        Self::new(n, vec![0; num_edges(n)]).expect("valid")
    }

    pub fn rainbow(n: usize) -> Self {
        Self::new(n, (0..num_edges(n) as u32).collect()).expect("valid")
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    #[inline]
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    #[inline]
    pub fn color_of_index(&self, j: usize) -> u32 {
        self.colors[j]
    }

    pub fn color(&self, u: usize, v: usize) -> u32 {
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        self.colors[pair_index(lo, hi)]
    }

    /// Coloring induced on the first `m` vertices, recompacted.
    pub fn restrict(&self, m: usize) -> EdgeColoring {
        assert!(m <= self.n);
        EdgeColoring::from_labels(m, &self.colors[..num_edges(m)]).expect("valid")
    }

    pub fn is_canonical(&self) -> bool {
        canonical_relabel(&self.colors) == self.colors
    }
}

/// Relabels colors to first-appearance order along ascending edge index.
pub fn canonicalize_coloring(chi: &EdgeColoring) -> EdgeColoring {
    EdgeColoring {
        n: chi.n,
        colors: canonical_relabel(&chi.colors),
        palette_size: chi.palette_size,
    }
}

struct EvenSearch<'a> {
    chi: &'a EdgeColoring,
    /// back[i]: pattern neighbours of vertex i that precede it
    back: Vec<Vec<usize>>,
    /// twins[i]: earlier vertices j with (i j) an automorphism; f(j) < f(i) is imposed
    twins: Vec<Vec<usize>>,
    remaining_after: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
    parity: Vec<bool>,
    odd: usize,
}

impl EvenSearch<'_> {
    fn run(&mut self, i: usize) -> bool {
        if i == self.map.len() {
            return self.odd == 0;
        }
        let n = self.chi.n;
        let lo = self.twins[i]
            .iter()
            .map(|&j| self.map[j] + 1)
            .max()
            .unwrap_or(0);
        for w in lo..n {
            if self.used[w] {
                continue;
            }
            for k in 0..self.back[i].len() {
                let c = self.chi.color(self.map[self.back[i][k]], w) as usize;
                self.toggle(c);
            }
            // each edge still to be placed can fix at most one odd color
            if self.odd <= self.remaining_after[i] {
                self.map[i] = w;
                self.used[w] = true;
                if self.run(i + 1) {
                    return true;
                }
                self.used[w] = false;
            }
            for k in 0..self.back[i].len() {
                let c = self.chi.color(self.map[self.back[i][k]], w) as usize;
                self.toggle(c);
            }
        }
        false
    }

    #[inline]
    fn toggle(&mut self, c: usize) {
        self.parity[c] = !self.parity[c];
        if self.parity[c] {
            self.odd += 1;
        } else {
            self.odd -= 1;
        }
    }
}

/// The lexicographically least embedding of `h` (in pattern-vertex order) whose
/// image carries every color an even number of times, if any exists.
pub fn find_even_chromatic_embedding(
    chi: &EdgeColoring,
    h: &LabeledGraph,
) -> Result<Option<Embedding>> {
    let v = h.vertex_count();
    if v > chi.n {
        return invalid(format!(
            "pattern on {v} vertices does not fit into K_{}",
            chi.n
        ));
    }
    let adj = h.adjacency();
    let back: Vec<Vec<usize>> = (0..v).map(|i| (0..i).filter(|&j| adj[i].get(j)).collect()).collect();
    let twins: Vec<Vec<usize>> = (0..v)
        .map(|i| {
            (0..i)
                .filter(|&j| (0..v).all(|k| k == i || k == j || adj[i].get(k) == adj[j].get(k)))
                .collect()
        })
        .collect();
    let total = h.edge_count();
    let mut placed = 0;
    let remaining_after = back
        .iter()
        .map(|b| {
            placed += b.len();
            total - placed
        })
        .collect();
    let mut search = EvenSearch {
        chi,
        back,
        twins,
        remaining_after,
        map: vec![0; v],
        used: vec![false; chi.n],
        parity: vec![false; chi.palette_size],
        odd: 0,
    };
    if search.run(0) {
        Ok(Some(Embedding::new(h.clone(), search.map, chi.n)?))
    } else {
        Ok(None)
    }
}

pub fn admits_even_chromatic_copy(chi: &EdgeColoring, h: &LabeledGraph) -> Result<bool> {
    Ok(find_even_chromatic_embedding(chi, h)?.is_some())
}

/// Dimensions of the product coloring: `d = ceil(sqrt(log2 n))`, `m = 2^d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct K4ColoringParams {
    pub n: usize,
    pub d: u32,
    pub m: u64,
}

impl K4ColoringParams {
    pub fn for_n(n: usize) -> Self {
        // smallest d with d^2 >= log2 n, i.e. 2^(d^2) >= n
        let mut d = 0u32;
        while d * d < 64 && (1u128 << (d * d)) < n as u128 {
            d += 1;
        }
        K4ColoringParams {
            n,
            d,
            m: 1u64 << d,
        }
    }

    /// `3^d * m^2`, the palette bound the construction stays strictly below.
    pub fn palette_bound(&self) -> u128 {
        3u128.pow(self.d) * (self.m as u128) * (self.m as u128)
    }

    /// Coordinates (1-based) of vertex `k`: the `k`-th tuple of `[m]^d` in lexicographic order.
    pub fn tuple(&self, k: usize) -> Vec<u64> {
        let mut digits = vec![0u64; self.d as usize];
        let mut x = k as u64;
        for slot in digits.iter_mut().rev() {
            *slot = x % self.m + 1;
            x /= self.m;
        }
        digits
    }
}

/// Colors `K_n` by `(psi(vw), {v_delta, w_delta})` on the first `n` tuples of `[m]^d`.
///
/// For `v < w`, `psi_i` is `1`, `-1` or `0` as `v_i` is below, above or equal
/// to `w_i`; `delta` is the first coordinate where the tuples differ.
pub fn build_k4_coloring(n: usize) -> EdgeColoring {
    let params = K4ColoringParams::for_n(n);
    let tuples: Vec<Vec<u64>> = (0..n).map(|k| params.tuple(k)).collect();
    let mut labels: Vec<(Vec<i8>, u64, u64)> = Vec::with_capacity(num_edges(n));
    for j in 0..num_edges(n) {
        let (a, b) = edge_endpoints(j);
        // vertex order equals lexicographic order of the tuples
        let (v, w) = (&tuples[a], &tuples[b]);
        let psi: Vec<i8> = v
            .iter()
            .zip(w)
            .map(|(x, y)| match x.cmp(y) {
                std::cmp::Ordering::Less => 1,
                std::cmp::Ordering::Greater => -1,
                std::cmp::Ordering::Equal => 0,
            })
            .collect();
        let delta = psi.iter().position(|&p| p != 0).expect("distinct tuples");
        let (x, y) = (v[delta], w[delta]);
        labels.push((psi, x.min(y), x.max(y)));
    }
    EdgeColoring::from_labels(n, &labels).expect("valid")
}

/// The coloring `e -> M e`: each edge gets its column of `M`.
pub fn coloring_from_matrix(m: &ParityCheckMatrix) -> EdgeColoring {
    let cols = m.columns();
    EdgeColoring::from_labels(m.vertex_count(), &cols).expect("valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn proper_k4() -> EdgeColoring {
        // perfect matchings {01,23}, {02,13}, {03,12}
        let mut c = vec![0u32; 6];
        for (u, v, col) in [(0, 1, 0), (2, 3, 0), (0, 2, 1), (1, 3, 1), (0, 3, 2), (1, 2, 2)] {
            c[pair_index(u, v)] = col;
        }
        EdgeColoring::new(4, c).unwrap()
    }

    #[test]
    fn even_chromatic_examples() {
        let mono = EdgeColoring::monochromatic(4);
        assert!(find_even_chromatic_embedding(&mono, &LabeledGraph::complete(4)).unwrap().is_some());
        assert!(find_even_chromatic_embedding(&mono, &LabeledGraph::complete(3)).unwrap().is_none());
        assert!(find_even_chromatic_embedding(&proper_k4(), &LabeledGraph::path(3)).unwrap().is_none());
        assert!(admits_even_chromatic_copy(&EdgeColoring::monochromatic(5), &LabeledGraph::cycle(4)).unwrap());
        assert!(!admits_even_chromatic_copy(&EdgeColoring::rainbow(4), &LabeledGraph::complete(4)).unwrap());
        assert!(find_even_chromatic_embedding(&mono, &LabeledGraph::complete(5)).is_err());
    }

    #[test]
    fn witness_is_lexicographically_least() {
        let mono = EdgeColoring::monochromatic(6);
        let e = find_even_chromatic_embedding(&mono, &LabeledGraph::cycle(4)).unwrap().unwrap();
        assert_eq!(e.map(), &[0, 1, 2, 3]);
    }

    #[test]
    fn k4_coloring_small_cases() {
        assert_eq!(build_k4_coloring(2).palette_size(), 1);
        let c4 = build_k4_coloring(4);
        assert_eq!(c4.palette_size(), 6);
        let p = K4ColoringParams::for_n(4);
        assert_eq!((p.d, p.m), (2, 4));
        assert_eq!(p.tuple(3), vec![1, 4]);
        let p81 = K4ColoringParams::for_n(81);
        assert_eq!((p81.d, p81.m, p81.palette_bound()), (3, 8, 1728));
        assert_eq!(K4ColoringParams::for_n(16).d, 2);
        assert_eq!(K4ColoringParams::for_n(17).d, 3);
    }

    #[test]
    fn k4_coloring_avoids_even_k4_at_16() {
        let chi = build_k4_coloring(16);
        assert!(!admits_even_chromatic_copy(&chi, &LabeledGraph::complete(4)).unwrap());
        assert!((chi.palette_size() as u128) < K4ColoringParams::for_n(16).palette_bound());
        assert!(chi.is_canonical());
    }

    #[test]
    fn relabel_examples() {
        assert_eq!(canonical_relabel(&[5, 5, 2]), vec![0, 0, 1]);
        assert_eq!(canonical_relabel(&[1, 0, 1, 2]), vec![0, 1, 0, 2]);
        let chi = EdgeColoring::new(3, vec![1, 0, 1]).unwrap();
        let c = canonicalize_coloring(&chi);
        assert_eq!(c.colors(), &[0, 1, 0]);
        assert_eq!(canonicalize_coloring(&c), c);
        assert_eq!(c.palette_size(), chi.palette_size());
    }

    #[test]
    fn sparse_labels_are_rejected_by_new() {
        assert!(EdgeColoring::new(3, vec![5, 5, 2]).is_err());
        assert!(EdgeColoring::new(3, vec![0, 0]).is_err());
        assert_eq!(EdgeColoring::from_labels(3, &[5, 5, 2]).unwrap().colors(), &[0, 0, 1]);
    }

    #[test]
    fn matrix_colorings() {
        let zero = ParityCheckMatrix::zeros(4, 3);
        assert_eq!(coloring_from_matrix(&zero).palette_size(), 1);
        let ones = ParityCheckMatrix::all_ones_row(4);
        assert_eq!(coloring_from_matrix(&ones).palette_size(), 1);
        let id = ParityCheckMatrix::identity(4);
        assert_eq!(coloring_from_matrix(&id).palette_size(), 6);
    }
}
