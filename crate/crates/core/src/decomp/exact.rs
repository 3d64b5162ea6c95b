use super::EvenDecomposition;
use crate::error::{capacity, Result};
use crate::graph::LabeledGraph;

pub const MAX_DP_VERTICES: usize = 24;
pub const MAX_UNRESTRICTED_VERTICES: usize = 12;

const UNKNOWN: u8 = 0;
const YES: u8 = 1;
const NO: u8 = 2;

/// Memoized search over remaining-vertex subsets, reusable across graphs.
///
/// From a state `S` the restricted search removes one vertex of even degree
/// in `G[S]`, or two non-adjacent vertices whose degrees in `G[S]` have equal
/// parity. Every even decomposition refines to such steps, so nothing is lost.
#[derive(Default)]
pub struct Decomposer {
    nb: Vec<u32>,
    memo: Vec<u8>,
    unrestricted: bool,
}

impl Decomposer {
    pub fn new() -> Self {
        Self::default()
    }

    /// Loads the graph given by neighbor masks (`v <= 24`) and clears the memo.
    pub fn load(&mut self, nb: &[u32]) {
        assert!(nb.len() <= MAX_DP_VERTICES);
        self.nb.clear();
        self.nb.extend_from_slice(nb);
        let size = 1usize << nb.len();
        self.memo.clear();
        self.memo.resize(size, UNKNOWN);
    }

    fn full(&self) -> u32 {
        ((1u64 << self.nb.len()) - 1) as u32
    }

    /// Whether the loaded graph has an even decomposition.
    pub fn decomposable(&mut self) -> bool {
        let full = self.full();
        if self.unrestricted {
            self.solve_unrestricted(full)
        } else {
            self.solve(full)
        }
    }

    #[inline]
    fn deg(&self, x: usize, s: u32) -> u32 {
        (self.nb[x] & s).count_ones()
    }

    fn edge_parity(&self, s: u32) -> u32 {
        let mut total = 0;
        let mut rest = s;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            total += self.deg(x, s);
        }
        (total / 2) % 2
    }

    /// Successor states of `s`, in the fixed order used for witnesses.
    fn moves(&self, s: u32, out: &mut Vec<u32>) {
        out.clear();
        let mut rest = s;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.deg(x, s).is_multiple_of(2) {
                out.push(s & !(1 << x));
            }
        }
        let mut xs = s;
        while xs != 0 {
            let x = xs.trailing_zeros() as usize;
            xs &= xs - 1;
            let px = self.deg(x, s) % 2;
            let mut ys = xs & !self.nb[x];
            while ys != 0 {
                let y = ys.trailing_zeros() as usize;
                ys &= ys - 1;
                if self.deg(y, s) % 2 == px {
                    out.push(s & !(1 << x) & !(1 << y));
                }
            }
        }
    }

    fn solve(&mut self, s: u32) -> bool {
        if s == 0 {
            return true;
        }
        match self.memo[s as usize] {
            YES => return true,
            NO => return false,
            _ => {}
        }
        let mut ok = false;
        // an odd number of edges can never be cleared by even cuts
        if self.edge_parity(s) == 0 {
            let mut next = Vec::with_capacity(16);
            self.moves(s, &mut next);
            ok = next.into_iter().any(|t| self.solve(t));
        }
        self.memo[s as usize] = if ok { YES } else { NO };
        ok
    }

    /// Independent nonempty `I ⊆ S` with an even cut to `S \ I`, largest mask first.
    fn unrestricted_moves(&self, s: u32, out: &mut Vec<u32>) {
        out.clear();
        let mut sub = s;
        while sub != 0 {
            let rest = s & !sub;
            let mut independent = true;
            let mut cut = 0;
            let mut xs = sub;
            while xs != 0 {
                let x = xs.trailing_zeros() as usize;
                xs &= xs - 1;
                if self.nb[x] & sub != 0 {
                    independent = false;
                    break;
                }
                cut += self.deg(x, rest);
            }
            if independent && cut % 2 == 0 {
                out.push(rest);
            }
            sub = (sub - 1) & s;
        }
    }

    fn solve_unrestricted(&mut self, s: u32) -> bool {
        if s == 0 {
            return true;
        }
        match self.memo[s as usize] {
            YES => return true,
            NO => return false,
            _ => {}
        }
        let mut next = Vec::new();
        self.unrestricted_moves(s, &mut next);
        let ok = next.into_iter().any(|t| self.solve_unrestricted(t));
        self.memo[s as usize] = if ok { YES } else { NO };
        ok
    }

    /// Layers of a witness for the loaded graph, if one exists.
    pub fn witness_layers(&mut self) -> Option<Vec<Vec<usize>>> {
        if !self.decomposable() {
            return None;
        }
        let mut s = self.full();
        let mut layers = Vec::new();
        let mut next = Vec::new();
        while s != 0 {
            if self.unrestricted {
                self.unrestricted_moves(s, &mut next);
            } else {
                self.moves(s, &mut next);
            }
            let unrestricted = self.unrestricted;
            let t = *next
                .iter()
                .find(|&&t| if unrestricted { self.solve_unrestricted(t) } else { self.solve(t) })
                .expect("a decomposable state has a decomposable successor");
            let removed = s & !t;
            layers.push((0..32).filter(|&x| removed >> x & 1 == 1).collect());
            s = t;
        }
        Some(layers)
    }
}

fn neighbor_masks32(g: &LabeledGraph) -> Vec<u32> {
    g.neighbor_masks().into_iter().map(|m| m as u32).collect()
}

fn run(g: &LabeledGraph, unrestricted: bool) -> Option<EvenDecomposition> {
    let mut d = Decomposer { unrestricted, ..Decomposer::default() };
    d.load(&neighbor_masks32(g));
    d.witness_layers().map(|layers| EvenDecomposition::from_layers(g.vertex_count(), &layers))
}

/// An even decomposition with layers of size at most two, if any exists.
pub fn find_even_decomposition(g: &LabeledGraph) -> Result<Option<EvenDecomposition>> {
    if g.vertex_count() > MAX_DP_VERTICES {
        return capacity(format!("exact decomposition search supports at most {MAX_DP_VERTICES} vertices"));
    }
    Ok(run(g, false))
}

/// Same verdict as [`find_even_decomposition`], searching layers of any size.
pub fn find_even_decomposition_unrestricted(g: &LabeledGraph) -> Result<Option<EvenDecomposition>> {
    if g.vertex_count() > MAX_UNRESTRICTED_VERTICES {
        return capacity(format!(
            "unrestricted decomposition search supports at most {MAX_UNRESTRICTED_VERTICES} vertices"
        ));
    }
    Ok(run(g, true))
}

impl Decomposer {
    /// A decomposer searching arbitrary independent layers.
    pub fn unrestricted() -> Self {
        Decomposer { unrestricted: true, ..Decomposer::default() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::is_even_decomposition;

    #[test]
    fn k4_is_not_decomposable() {
        let k4 = LabeledGraph::complete(4);
        assert!(find_even_decomposition(&k4).unwrap().is_none());
        assert!(find_even_decomposition_unrestricted(&k4).unwrap().is_none());
    }

    #[test]
    fn empty_graph_takes_one_step_unrestricted() {
        let e = LabeledGraph::empty(6);
        let d = find_even_decomposition_unrestricted(&e).unwrap().unwrap();
        assert_eq!(d.chain(), &[(0..6).collect::<Vec<_>>(), vec![]]);
    }

    #[test]
    fn k6_minus_matching() {
        let mut g = LabeledGraph::complete(6);
        for i in 0..3 {
            g.set_edge(2 * i, 2 * i + 1, false);
        }
        let d = find_even_decomposition(&g).unwrap().unwrap();
        assert!(is_even_decomposition(&g, &d).unwrap());
        assert!(d.layers().iter().all(|l| l.len() <= 2));
    }

    #[test]
    fn witnesses_validate_and_odd_graphs_fail() {
        for g in crate::graph::enumerate_graphs(5, |_| true).unwrap() {
            let r = find_even_decomposition(&g).unwrap();
            let u = find_even_decomposition_unrestricted(&g).unwrap();
            assert_eq!(r.is_some(), u.is_some());
            if g.edge_count() % 2 == 1 {
                assert!(r.is_none());
            }
            for d in r.iter().chain(u.iter()) {
                assert!(is_even_decomposition(&g, d).unwrap());
            }
        }
    }

    #[test]
    fn capacity_limits() {
        assert!(find_even_decomposition(&LabeledGraph::empty(25)).is_err());
        assert!(find_even_decomposition_unrestricted(&LabeledGraph::empty(13)).is_err());
        assert!(find_even_decomposition(&LabeledGraph::empty(24)).unwrap().is_some());
    }
}
