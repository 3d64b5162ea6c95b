//! Enumeration of all copies of a pattern inside `K_n`.
//!
//! A copy of `H` is determined by its non-isolated part, so only the core of
//! the pattern (isolated vertices dropped) is placed. Each vertex subset of the
//! core's size carries one placement per distinct relabeling of the core.

use std::collections::HashSet;
use std::ops::ControlFlow;

use crate::error::{capacity, invalid, Result};
use crate::graph::{num_edges, pair_index, Embedding, LabeledGraph};

/// Largest core size whose relabelings are enumerated.
pub const MAX_CORE_VERTICES: usize = 9;

#[derive(Clone, Debug)]
struct Placement {
    /// Slot pairs `(a, b)`, `a < b`, into the sorted vertex subset.
    slots: Vec<(usize, usize)>,
    /// Core vertex `i` sits at slot `perm[i]`.
    perm: Vec<usize>,
}

/// All copies of a fixed pattern in `K_n`.
#[derive(Clone, Debug)]
pub struct CopyFamily {
    pattern: LabeledGraph,
    core_labels: Vec<usize>,
    placements: Vec<Placement>,
    host_n: usize,
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(k), &mut vec![false; k], &mut out);
    out
}

impl CopyFamily {
    pub fn new(pattern: &LabeledGraph, host_n: usize) -> Result<Self> {
        if pattern.vertex_count() > host_n {
            return invalid(format!(
                "pattern on {} vertices does not fit into {host_n} vertices",
                pattern.vertex_count()
            ));
        }
        let (core, core_labels) = pattern.core();
        let k = core.vertex_count();
        if k > MAX_CORE_VERTICES {
            return capacity(format!(
                "copy enumeration supports patterns with at most {MAX_CORE_VERTICES} non-isolated vertices"
            ));
        }
        let core_edges = core.edge_list();
        let mut seen = HashSet::new();
        let mut placements = Vec::new();
        for perm in permutations(k) {
            let mut slots: Vec<(usize, usize)> = core_edges
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (perm[a], perm[b]);
                    if x < y {
                        (x, y)
                    } else {
                        (y, x)
                    }
                })
                .collect();
            slots.sort_unstable();
            if seen.insert(slots.clone()) {
                placements.push(Placement { slots, perm });
            }
        }
        Ok(CopyFamily {
            pattern: pattern.clone(),
            core_labels,
            placements,
            host_n,
        })
    }

    pub fn pattern(&self) -> &LabeledGraph {
        &self.pattern
    }

    pub fn host_n(&self) -> usize {
        self.host_n
    }

    pub fn core_size(&self) -> usize {
        self.core_labels.len()
    }

    /// Distinct placements of the core on a fixed vertex subset.
    pub fn placements_per_subset(&self) -> usize {
        self.placements.len()
    }

    /// Visits every copy as `(host edge indices, vertex subset, placement id)`.
    ///
    /// Subsets come in lexicographic order, placements in a fixed order per subset.
    pub fn try_for_each<F>(&self, mut f: F) -> ControlFlow<()>
    where
        F: FnMut(&[usize], &[usize], usize) -> ControlFlow<()>,
    {
        let k = self.core_size();
        let n = self.host_n;
        let mut subset: Vec<usize> = (0..k).collect();
        let mut edges = Vec::new();
        loop {
            for (pid, p) in self.placements.iter().enumerate() {
                edges.clear();
                edges.extend(p.slots.iter().map(|&(a, b)| pair_index(subset[a], subset[b])));
                f(&edges, &subset, pid)?;
            }
            // next k-combination of 0..n
            let mut i = k;
            loop {
                if i == 0 {
                    return ControlFlow::Continue(());
                }
                i -= 1;
                if subset[i] < n - k + i {
                    break;
                }
            }
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
        }
    }

    /// The embedding behind a copy reported by [`CopyFamily::try_for_each`].
    pub fn embedding(&self, subset: &[usize], placement: usize) -> Embedding {
        let v = self.pattern.vertex_count();
        let perm = &self.placements[placement].perm;
        let mut map = vec![usize::MAX; v];
        for (i, &label) in self.core_labels.iter().enumerate() {
            map[label] = subset[perm[i]];
        }
        let mut spare = (0..self.host_n).filter(|x| !subset.contains(x));
        for slot in map.iter_mut() {
            if *slot == usize::MAX {
                *slot = spare.next().expect("host has room for isolated vertices");
            }
        }
        Embedding::new(self.pattern.clone(), map, self.host_n).expect("valid embedding")
    }

    /// Every distinct copy as an edge mask, sorted; requires `C(n,2) <= 64`.
    pub fn masks(&self) -> Vec<u64> {
        assert!(num_edges(self.host_n) <= 64);
        let mut out = Vec::new();
        let _ = self.try_for_each(|edges, _, _| {
            out.push(edges.iter().fold(0u64, |m, &j| m | (1 << j)));
            ControlFlow::Continue(())
        });
        out.sort_unstable();
        out.dedup();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_copy_of;

    fn count(h: &LabeledGraph, n: usize) -> usize {
        let fam = CopyFamily::new(h, n).unwrap();
        let mut c = 0;
        let _ = fam.try_for_each(|_, _, _| {
            c += 1;
            ControlFlow::Continue(())
        });
        c
    }

    #[test]
    fn copy_counts() {
        // labeled copies: C(n,k) * k!/|Aut|
        assert_eq!(count(&LabeledGraph::complete(4), 6), 15);
        assert_eq!(count(&LabeledGraph::complete(3), 5), 10);
        assert_eq!(count(&LabeledGraph::cycle(4), 5), 5 * 3);
        assert_eq!(count(&LabeledGraph::path(3), 4), 4 * 3);
        // isolated vertices do not multiply copies
        assert_eq!(count(&LabeledGraph::complete(3).padded(5), 6), 20);
        assert_eq!(count(&LabeledGraph::empty(3), 4), 1);
    }

    #[test]
    fn masks_are_exactly_the_copies() {
        let h = LabeledGraph::path(4).padded(4);
        let fam = CopyFamily::new(&h, 5).unwrap();
        let masks: HashSet<u64> = fam.masks().into_iter().collect();
        for mask in 0..(1u64 << 10) {
            let g = LabeledGraph::from_edge_mask(5, mask);
            assert_eq!(masks.contains(&mask), is_copy_of(&g, &h), "mask {mask:b}");
        }
    }

    #[test]
    fn embeddings_reproduce_the_copy() {
        let h = LabeledGraph::from_edges(5, &[(1, 3), (3, 4)]).unwrap();
        let fam = CopyFamily::new(&h, 7).unwrap();
        let _ = fam.try_for_each(|edges, subset, pid| {
            let e = fam.embedding(subset, pid);
            let mut image: Vec<usize> = e
                .image_edges()
                .iter()
                .map(|&(u, v)| pair_index(u, v))
                .collect();
            image.sort_unstable();
            let mut want = edges.to_vec();
            want.sort_unstable();
            assert_eq!(image, want);
            ControlFlow::Continue(())
        });
    }

    #[test]
    fn pattern_larger_than_host_is_rejected() {
        assert!(CopyFamily::new(&LabeledGraph::complete(5), 4).is_err());
    }
}
