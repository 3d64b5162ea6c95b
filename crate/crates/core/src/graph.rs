//! Graphs on a labeled vertex set as vectors of the GF(2) edge space.
//!
//! Edge `{u, v}` with `u < v` lives at index `v(v-1)/2 + u`. The index does
//! not depend on `n`, so the edges of `K_m` are exactly the first `C(m, 2)`
//! indices of `K_n` for every `m <= n`, and a graph embeds into a larger vertex
//! set by zero extension.

use rand::Rng;

use crate::bits::BitVector;
use crate::error::{capacity, invalid, Result};

/// Number of edges of `K_n`.
#[inline]
pub const fn num_edges(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Canonical index of the pair `{u, v}`; `u < v` is required.
#[inline]
pub const fn pair_index(u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    v * (v - 1) / 2 + u
}

/// Canonical index of the unordered pair `{u, v}` inside `K_n`.
pub fn edge_index(u: usize, v: usize, n: usize) -> Result<usize> {
    if u == v {
        return invalid(format!("loop {u}-{v} has no edge index"));
    }
    if u >= n || v >= n {
        return invalid(format!("pair {u}-{v} out of range for {n} vertices"));
    }
    let (lo, hi) = if u < v { (u, v) } else { (v, u) };
    Ok(pair_index(lo, hi))
}

/// Inverse of [`pair_index`]: the endpoints `(u, v)`, `u < v`, of edge `j`.
pub fn edge_endpoints(j: usize) -> (usize, usize) {
    // v is the largest integer with v(v-1)/2 <= j.
    let mut v = ((1.0 + (1.0 + 8.0 * j as f64).sqrt()) / 2.0) as usize;
    while num_edges(v) > j {
        v -= 1;
    }
    while num_edges(v + 1) <= j {
        v += 1;
    }
    (j - num_edges(v), v)
}

/// A graph on `{0, ..., n-1}`, stored as an element of `F_2^{K_n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    n: usize,
    edges: BitVector,
}

impl std::fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LabeledGraph(n={}, edges={:?})", self.n, self.edge_list())
    }
}

impl LabeledGraph {
    pub fn empty(n: usize) -> Self {
        LabeledGraph {
            n,
            edges: BitVector::zeros(num_edges(n)),
        }
    }

    pub fn complete(n: usize) -> Self {
        LabeledGraph {
            n,
            edges: BitVector::ones(num_edges(n)),
        }
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.set_edge(v - 1, v, true);
        }
        g
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Self::path(n);
        g.set_edge(0, n - 1, true);
        g
    }

    /// Star with centre 0 and leaves `1..n`.
    pub fn star(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.set_edge(0, v, true);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            let j = edge_index(u, v, n)?;
            if g.edges.get(j) {
                return invalid(format!("duplicate edge {u}-{v}"));
            }
            g.edges.set(j, true);
        }
        Ok(g)
    }

    pub fn from_bits(n: usize, edges: BitVector) -> Result<Self> {
        if edges.len() != num_edges(n) {
            return invalid(format!(
                "edge vector has length {}, expected {}",
                edges.len(),
                num_edges(n)
            ));
        }
        Ok(LabeledGraph { n, edges })
    }

    /// Graph whose edge indicator is the low `C(n,2)` bits of `mask`; needs `C(n,2) <= 64`.
    /// `G(n, p)`: each edge independently with probability `p`, in edge index order.
    pub fn random<R: Rng>(n: usize, p: f64, rng: &mut R) -> Self {
        let len = num_edges(n);
        let bits = if p == 0.5 {
            let words = (0..len.div_ceil(64)).map(|_| rng.gen()).collect();
            BitVector::from_words(len, words)
        } else {
            BitVector::from_indices(len, (0..len).filter(|_| rng.gen_bool(p)))
        };
        LabeledGraph { n, edges: bits }
    }

    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        assert!(num_edges(n) <= 64, "edge mask needs C(n,2) <= 64");
        LabeledGraph {
            n,
            edges: BitVector::from_words(num_edges(n), vec![mask]),
        }
    }

    /// Edge indicator as a single word when `C(n,2) <= 64`.
    pub fn edge_mask(&self) -> Option<u64> {
        (self.edges.len() <= 64).then(|| self.edges.words().first().copied().unwrap_or(0))
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.count_ones()
    }

    #[inline]
    pub fn bits(&self) -> &BitVector {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v || u >= self.n || v >= self.n {
            return false;
        }
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        self.edges.get(pair_index(lo, hi))
    }

    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        let j = edge_index(u, v, self.n).expect("edge endpoints out of range");
        self.edges.set(j, present);
    }

    /// Edges in ascending canonical index order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.ones_iter().map(edge_endpoints)
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for (u, v) in self.edges() {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_edge(u, v)).count()
    }

    /// Adjacency rows as bit vectors of length `n`.
    pub fn adjacency(&self) -> Vec<BitVector> {
        let mut rows = vec![BitVector::zeros(self.n); self.n];
        for (u, v) in self.edges() {
            rows[u].set(v, true);
            rows[v].set(u, true);
        }
        rows
    }

    /// Adjacency rows as single words; requires `n <= 64`.
    pub fn neighbor_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "neighbor masks need n <= 64");
        let mut rows = vec![0u64; self.n];
        for (u, v) in self.edges() {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        rows
    }

    /// Symmetric difference of the edge sets.
    pub fn sum(&self, other: &LabeledGraph) -> Result<LabeledGraph> {
        if self.n != other.n {
            return invalid(format!(
                "cannot add graphs on {} and {} vertices",
                self.n, other.n
            ));
        }
        let mut edges = self.edges.clone();
        edges.xor_assign(&other.edges);
        Ok(LabeledGraph { n: self.n, edges })
    }

    pub fn complement(&self) -> LabeledGraph {
        let mut edges = BitVector::ones(self.edges.len());
        edges.xor_assign(&self.edges);
        LabeledGraph { n: self.n, edges }
    }

    /// Vertices of degree at least one, ascending.
    pub fn non_isolated_vertices(&self) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        for (u, v) in self.edges() {
            seen[u] = true;
            seen[v] = true;
        }
        (0..self.n).filter(|&v| seen[v]).collect()
    }

    /// Subgraph induced on `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> LabeledGraph {
        let k = vertices.len();
        let mut g = LabeledGraph::empty(k);
        for j in 1..k {
            for i in 0..j {
                if self.has_edge(vertices[i], vertices[j]) {
                    g.edges.set(pair_index(i, j), true);
                }
            }
        }
        g
    }

    /// Graph with vertex `v` renamed to `perm[v]`; `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> LabeledGraph {
        assert_eq!(perm.len(), self.n);
        let mut g = LabeledGraph::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v], true);
        }
        g
    }

    /// Same edges on a vertex set enlarged to `n` (zero extension of the edge vector).
    pub fn padded(&self, n: usize) -> LabeledGraph {
        assert!(n >= self.n);
        let mut edges = BitVector::zeros(num_edges(n));
        for j in self.edges.ones_iter() {
            edges.set(j, true);
        }
        LabeledGraph { n, edges }
    }

    /// Vertex-disjoint union; vertices of `other` are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &LabeledGraph) -> LabeledGraph {
        let mut g = self.padded(self.n + other.n);
        for (u, v) in other.edges() {
            g.set_edge(u + self.n, v + self.n, true);
        }
        g
    }

    /// Pattern with its isolated vertices removed, and the original labels of the survivors.
    pub fn core(&self) -> (LabeledGraph, Vec<usize>) {
        let keep = self.non_isolated_vertices();
        (self.induced_subgraph(&keep), keep)
    }

    pub fn is_bipartite(&self) -> bool {
        let adj = self.adjacency();
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for y in adj[x].ones_iter() {
                    if side[y] == u8::MAX {
                        side[y] = 1 - side[x];
                        stack.push(y);
                    } else if side[y] == side[x] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whether some `k` vertices are pairwise adjacent (not necessarily induced).
    pub fn contains_clique(&self, k: usize) -> bool {
        fn extend(adj: &[BitVector], cand: &[usize], need: usize) -> bool {
            if need == 0 {
                return true;
            }
            for (i, &x) in cand.iter().enumerate() {
                let next: Vec<usize> = cand[i + 1..]
                    .iter()
                    .copied()
                    .filter(|&y| adj[x].get(y))
                    .collect();
                if next.len() + 1 >= need && extend(adj, &next, need - 1) {
                    return true;
                }
            }
            false
        }
        let adj = self.adjacency();
        let all: Vec<usize> = (0..self.n).collect();
        extend(&adj, &all, k)
    }
}

/// Graph sum in `F_2^{K_n}`.
pub fn graph_sum(a: &LabeledGraph, b: &LabeledGraph) -> Result<LabeledGraph> {
    a.sum(b)
}

pub fn non_isolated_vertices(g: &LabeledGraph) -> Vec<usize> {
    g.non_isolated_vertices()
}

/// An injective map from the vertices of a pattern into a host vertex range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pattern: LabeledGraph,
    map: Vec<usize>,
}

impl Embedding {
    pub fn new(pattern: LabeledGraph, map: Vec<usize>, host_n: usize) -> Result<Self> {
        if map.len() != pattern.vertex_count() {
            return invalid(format!(
                "map has {} entries for a pattern on {} vertices",
                map.len(),
                pattern.vertex_count()
            ));
        }
        let mut used = vec![false; host_n];
        for &x in &map {
            if x >= host_n {
                return invalid(format!("image vertex {x} outside host of size {host_n}"));
            }
            if std::mem::replace(&mut used[x], true) {
                return invalid(format!("map is not injective at host vertex {x}"));
            }
        }
        Ok(Embedding { pattern, map })
    }

    pub fn pattern(&self) -> &LabeledGraph {
        &self.pattern
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Host edges `f(E(H))`, each as `(u, v)` with `u < v`, in pattern edge order.
    pub fn image_edges(&self) -> Vec<(usize, usize)> {
        self.pattern
            .edges()
            .map(|(a, b)| {
                let (u, v) = (self.map[a], self.map[b]);
                if u < v {
                    (u, v)
                } else {
                    (v, u)
                }
            })
            .collect()
    }

    /// The copy `f(H)` as a graph on the host vertex set.
    pub fn image(&self, host_n: usize) -> LabeledGraph {
        let mut g = LabeledGraph::empty(host_n);
        for (u, v) in self.image_edges() {
            g.set_edge(u, v, true);
        }
        g
    }
}

fn vertex_order(adj: &[BitVector], deg: &[usize]) -> Vec<usize> {
    // Greedy connectivity order: each next vertex has the most already-placed neighbours.
    let n = adj.len();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by(|&x, &y| {
                (links[x], deg[x])
                    .cmp(&(links[y], deg[y]))
                    .then(y.cmp(&x))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
        for w in adj[next].ones_iter() {
            links[w] += 1;
        }
    }
    order
}

fn signatures(adj: &[BitVector], deg: &[usize]) -> Vec<(usize, Vec<usize>)> {
    adj.iter()
        .enumerate()
        .map(|(v, row)| {
            let mut nd: Vec<usize> = row.ones_iter().map(|w| deg[w]).collect();
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect()
}

/// Whether some vertex bijection maps the edges of `a` onto the edges of `b`.
///
/// Backtracking over a connectivity-driven vertex order; candidates must match
/// on degree and on the multiset of neighbour degrees.
pub fn is_isomorphic(a: &LabeledGraph, b: &LabeledGraph) -> bool {
    if a.n != b.n || a.edge_count() != b.edge_count() {
        return false;
    }
    let (da, db) = (a.degrees(), b.degrees());
    let mut sa = da.clone();
    let mut sb = db.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }
    let (adj_a, adj_b) = (a.adjacency(), b.adjacency());
    let (sig_a, sig_b) = (signatures(&adj_a, &da), signatures(&adj_b, &db));
    let mut ms_a = sig_a.clone();
    let mut ms_b = sig_b.clone();
    ms_a.sort();
    ms_b.sort();
    if ms_a != ms_b {
        return false;
    }
    let order = vertex_order(&adj_a, &da);
    let n = a.n;
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    #[allow(clippy::too_many_arguments)]
    fn go(
        depth: usize,
        order: &[usize],
        adj_a: &[BitVector],
        adj_b: &[BitVector],
        sig_a: &[(usize, Vec<usize>)],
        sig_b: &[(usize, Vec<usize>)],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let x = order[depth];
        for y in 0..adj_b.len() {
            if used[y] || sig_a[x] != sig_b[y] {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&p| adj_a[x].get(p) == adj_b[y].get(map[p]));
            if !consistent {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if go(depth + 1, order, adj_a, adj_b, sig_a, sig_b, map, used) {
                return true;
            }
            used[y] = false;
            map[x] = usize::MAX;
        }
        false
    }

    go(0, &order, &adj_a, &adj_b, &sig_a, &sig_b, &mut map, &mut used)
}

/// Whether `g` is a copy of `h`: some vertex set `S` induces a graph isomorphic
/// to `h` and every vertex outside `S` is isolated in `g`.
pub fn is_copy_of(g: &LabeledGraph, h: &LabeledGraph) -> bool {
    let support = g.non_isolated_vertices();
    if support.len() > h.n || h.n > g.n || g.edge_count() != h.edge_count() {
        return false;
    }
    let sub = g.induced_subgraph(&support).padded(h.n);
    is_isomorphic(&sub, h)
}

/// Largest vertex count accepted by [`enumerate_graphs`].
pub const MAX_ENUMERATION_VERTICES: usize = 8;

/// Every labeled graph on `v` vertices accepted by `filter`, in edge-mask order.
pub fn enumerate_graphs<F>(v: usize, filter: F) -> Result<impl Iterator<Item = LabeledGraph>>
where
    F: Fn(&LabeledGraph) -> bool,
{
    if v > MAX_ENUMERATION_VERTICES {
        return capacity(format!(
            "full enumeration supports at most {MAX_ENUMERATION_VERTICES} vertices, got {v}"
        ));
    }
    let total = 1u64 << num_edges(v);
    Ok((0..total)
        .map(move |mask| LabeledGraph::from_edge_mask(v, mask))
        .filter(move |g| filter(g)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_index_examples() {
        assert_eq!(edge_index(0, 1, 4).unwrap(), 0);
        assert_eq!(edge_index(2, 3, 4).unwrap(), 5);
        assert_eq!(edge_index(1, 3, 5).unwrap(), 4);
        assert_eq!(edge_index(3, 1, 5).unwrap(), 4);
        assert!(edge_index(2, 2, 5).is_err());
        assert!(edge_index(1, 5, 5).is_err());
    }

    #[test]
    fn edge_index_round_trip() {
        for n in 0..=64 {
            for j in 0..num_edges(n) {
                let (u, v) = edge_endpoints(j);
                assert!(u < v && v < n);
                assert_eq!(edge_index(u, v, n).unwrap(), j);
            }
        }
    }

    #[test]
    fn sum_examples() {
        let tri = LabeledGraph::complete(3);
        let p = LabeledGraph::path(3);
        let s = graph_sum(&tri, &p).unwrap();
        assert_eq!(s.edge_list(), vec![(0, 2)]);
        assert_eq!(tri.sum(&tri).unwrap(), LabeledGraph::empty(3));
        assert_eq!(tri.sum(&LabeledGraph::empty(3)).unwrap(), tri);
        assert!(tri.sum(&LabeledGraph::empty(4)).is_err());
    }

    #[test]
    fn group_laws_on_four_vertices() {
        let all: Vec<_> = enumerate_graphs(4, |_| true).unwrap().collect();
        for a in &all {
            assert!(a.sum(a).unwrap().bits().is_zero());
            for b in &all {
                assert_eq!(a.sum(b).unwrap(), b.sum(a).unwrap());
            }
        }
        // associativity on a sub-sample keeps the test quick
        for a in all.iter().step_by(5) {
            for b in all.iter().step_by(3) {
                for c in all.iter().step_by(7) {
                    let l = a.sum(b).unwrap().sum(c).unwrap();
                    let r = a.sum(&b.sum(c).unwrap()).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn non_isolated_examples() {
        assert!(LabeledGraph::empty(5).non_isolated_vertices().is_empty());
        let e = LabeledGraph::from_edges(5, &[(0, 1)]).unwrap();
        assert_eq!(e.non_isolated_vertices(), vec![0, 1]);
        let s = LabeledGraph::from_edges(6, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(s.non_isolated_vertices(), vec![0, 1, 2]);
    }

    #[test]
    fn isomorphism_examples() {
        let p = LabeledGraph::path(3);
        let q = LabeledGraph::from_edges(3, &[(1, 2), (2, 0)]).unwrap();
        assert!(is_isomorphic(&p, &q));
        assert!(!is_isomorphic(&LabeledGraph::complete(3), &p));
        let c1 = LabeledGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let c2 = LabeledGraph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert!(is_isomorphic(&c1, &c2));
        // same degree sequence, different structure: C6 vs two triangles
        let two_tri = LabeledGraph::complete(3).disjoint_union(&LabeledGraph::complete(3));
        assert!(!is_isomorphic(&LabeledGraph::cycle(6), &two_tri));
    }

    #[test]
    fn copy_examples() {
        let k3 = LabeledGraph::complete(3);
        assert!(is_copy_of(&k3.padded(7), &k3));
        let mut extra = k3.padded(5);
        extra.set_edge(3, 4, true);
        assert!(!is_copy_of(&extra, &k3));
        let mut g = LabeledGraph::empty(6);
        for &(u, v) in &[(1, 2), (1, 4), (1, 5), (2, 4), (2, 5), (4, 5)] {
            g.set_edge(u, v, true);
        }
        assert!(is_copy_of(&g, &LabeledGraph::complete(4)));
        // pattern with isolated vertices needs room for them
        let h = LabeledGraph::from_edges(4, &[(0, 1)]).unwrap();
        assert!(is_copy_of(&LabeledGraph::from_edges(4, &[(2, 3)]).unwrap(), &h));
        assert!(!is_copy_of(&LabeledGraph::from_edges(3, &[(0, 2)]).unwrap(), &h));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_graphs(2, |_| true).unwrap().count(), 2);
        assert_eq!(
            enumerate_graphs(3, |g| g.edge_count() % 2 == 0).unwrap().count(),
            4
        );
        assert_eq!(enumerate_graphs(4, |_| true).unwrap().count(), 64);
        assert!(enumerate_graphs(9, |_| true).is_err());
    }

    #[test]
    fn clique_and_bipartite_helpers() {
        assert!(LabeledGraph::complete(4).contains_clique(4));
        assert!(!LabeledGraph::cycle(5).contains_clique(3));
        assert!(LabeledGraph::cycle(6).is_bipartite());
        assert!(!LabeledGraph::cycle(5).is_bipartite());
    }
}
