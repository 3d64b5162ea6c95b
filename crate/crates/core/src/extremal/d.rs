use super::dlin::exact_dlin_with_limit;
use super::{copy_masks, Certificate, ExtremalResult, ExtremalValue, Fraction, Quantity, DEFAULT_NODE_LIMIT, NOTE_EMPTY_COPY, NOTE_NO_COPIES};
use crate::error::{capacity, Result};
use crate::graph::{num_edges, LabeledGraph};

pub const MAX_D_VERTICES: usize = 5;

/// Node budget of the clique search; its nodes cost far more than the linear search's.
pub const DEFAULT_D_NODE_LIMIT: u64 = 2_000_000;

/// Ratio bound `V (-l_min) / (deg - l_min)` on codes avoiding the sums in
/// `forbidden`, using the characters of `F_2^len` as eigenvectors.
pub fn hoffman_bound(len: usize, forbidden: &[u64]) -> u64 {
    let size = 1u64 << len;
    let deg = forbidden.len() as i64;
    if deg == 0 {
        return size;
    }
    let l_min = (0..size)
        .map(|chi| forbidden.iter().map(|&c| if (chi & c).count_ones() % 2 == 0 { 1 } else { -1 }).sum::<i64>())
        .min()
        .unwrap();
    (size as i64 * -l_min / (deg - l_min)) as u64
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn first(&self) -> Option<usize> {
        self.0.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_not(&mut self, other: &Bits) {
        self.0.iter_mut().zip(&other.0).for_each(|(a, b)| *a &= !b);
    }
}

/// Maximum clique with greedy-coloring bounds.
struct CliqueSearch {
    adj: Vec<Bits>,
    best: Vec<usize>,
    target: usize,
    nodes: u64,
    limit: u64,
    aborted: bool,
}

impl CliqueSearch {
    /// Vertices of `p` by nondecreasing color and their colors.
    fn color_sort(&self, p: &Bits) -> Vec<(usize, usize)> {
        let mut uncolored = p.clone();
        let mut out = Vec::new();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.first() {
                q.clear(v);
                q.and_not(&self.adj[v]);
                uncolored.clear(v);
                out.push((v, color));
            }
        }
        out
    }

    fn expand(&mut self, r: &mut Vec<usize>, mut p: Bits) {
        for &(v, color) in self.color_sort(&p).iter().rev() {
            if self.aborted || self.best.len() >= self.target || r.len() + color <= self.best.len() {
                return;
            }
            self.nodes += 1;
            if self.nodes > self.limit {
                self.aborted = true;
                return;
            }
            r.push(v);
            let next = p.and(&self.adj[v]);
            if next.is_empty() {
                if r.len() > self.best.len() {
                    self.best = r.clone();
                }
            } else {
                self.expand(r, next);
            }
            r.pop();
            p.clear(v);
        }
    }
}

/// Largest density of a code none of whose pairwise sums is a copy of `h`.
pub fn exact_d(h: &LabeledGraph, n: usize) -> Result<ExtremalResult> {
    exact_d_with_limit(h, n, DEFAULT_D_NODE_LIMIT)
}

/// Maximum clique in the graph on `F_2^N` joining `x` and `y` when `x + y` is
/// not a copy. The graph is vertex-transitive, so `0` is fixed in the clique;
/// the best linear code seeds the incumbent and the ratio bound caps the search.
pub fn exact_d_with_limit(h: &LabeledGraph, n: usize, node_limit: u64) -> Result<ExtremalResult> {
    if n > MAX_D_VERTICES {
        return capacity(format!("exact d supports n <= {MAX_D_VERTICES}"));
    }
    let len = num_edges(n);
    let size = 1usize << len;
    let forbidden: Vec<u64> = copy_masks(h, n)?.into_iter().filter(|&c| c != 0).collect();
    let mut result = ExtremalResult {
        quantity: Quantity::D,
        pattern: h.clone(),
        n,
        value: ExtremalValue::Density(Fraction::ONE),
        certificate: None,
        note: None,
    };
    if forbidden.is_empty() {
        let all = (0..size as u64).map(|m| LabeledGraph::from_edge_mask(n, m)).collect();
        result.certificate = Some(Certificate::Code(all));
        result.note = Some(if h.vertex_count() > n { NOTE_NO_COPIES } else { NOTE_EMPTY_COPY });
        return Ok(result);
    }
    let words = size.div_ceil(64);
    let mut is_forbidden = vec![false; size];
    for &c in &forbidden {
        is_forbidden[c as usize] = true;
    }
    let adj: Vec<Bits> = (0..size)
        .map(|x| {
            let mut b = vec![0u64; words];
            for y in 0..size {
                if y != x && !is_forbidden[x ^ y] {
                    b[y / 64] |= 1 << (y % 64);
                }
            }
            Bits(b)
        })
        .collect();

    // kernel of the best parity-check matrix found for the linear problem
    let seed: Vec<usize> = match exact_dlin_with_limit(h, n, DEFAULT_NODE_LIMIT)?.certificate {
        Some(Certificate::Matrix(m)) => {
            let cols: Vec<u64> = m.columns().iter().map(|c| {
                c.words().first().copied().unwrap_or(0)
            }).collect();
            (0..size)
                .filter(|&x| {
                    let mut acc = 0u64;
                    let mut rest = x as u64;
                    while rest != 0 {
                        acc ^= cols[rest.trailing_zeros() as usize];
                        rest &= rest - 1;
                    }
                    acc == 0
                })
                .collect()
        }
        _ => vec![0],
    };
    let bound = hoffman_bound(len, &forbidden) as usize;
    let mut search = CliqueSearch { adj, best: seed, target: bound, nodes: 0, limit: node_limit, aborted: false };
    if search.best.len() < bound {
        let p = search.adj[0].clone();
        search.expand(&mut vec![0], p);
    }
    let found = search.best.len() as u64;
    let lower = Fraction::new(found, size as u64);
    result.value = if search.aborted {
        ExtremalValue::Bracket { lower, upper: Fraction::new(bound as u64, size as u64) }
    } else {
        ExtremalValue::Density(lower)
    };
    let mut code = search.best;
    code.sort_unstable();
    result.certificate = Some(Certificate::Code(code.into_iter().map(|m| LabeledGraph::from_edge_mask(n, m as u64)).collect()));
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_copy_of;

    fn check_code(h: &LabeledGraph, res: &ExtremalResult) {
        let Some(Certificate::Code(code)) = &res.certificate else { panic!("no code") };
        for (i, a) in code.iter().enumerate() {
            for b in &code[i + 1..] {
                assert!(!is_copy_of(&a.sum(b).unwrap(), h));
            }
        }
        let (lo, _) = res.value.density_interval().unwrap();
        assert_eq!(lo, Fraction::new(code.len() as u64, 1 << num_edges(res.n)));
    }

    /// Plain exhaustive clique search without bounds.
    fn brute_force(h: &LabeledGraph, n: usize) -> usize {
        let len = num_edges(n);
        let copies: Vec<u64> = copy_masks(h, n).unwrap();
        let ok = |x: u64, y: u64| !copies.contains(&(x ^ y));
        fn rec(cand: &[u64], chosen: &mut Vec<u64>, ok: &dyn Fn(u64, u64) -> bool, best: &mut usize) {
            *best = (*best).max(chosen.len());
            if chosen.len() + cand.len() <= *best {
                return;
            }
            for (i, &x) in cand.iter().enumerate() {
                let rest: Vec<u64> = cand[i + 1..].iter().copied().filter(|&y| ok(x, y)).collect();
                chosen.push(x);
                rec(&rest, chosen, ok, best);
                chosen.pop();
            }
        }
        let cand: Vec<u64> = (1..1u64 << len).filter(|&y| ok(0, y)).collect();
        let mut best = 0;
        rec(&cand, &mut vec![0], &ok, &mut best);
        best
    }

    #[test]
    fn anchors_and_oracle() {
        for h in [LabeledGraph::complete(4), LabeledGraph::complete(3), LabeledGraph::path(3), LabeledGraph::cycle(4), LabeledGraph::from_edges(2, &[(0, 1)]).unwrap()] {
            let res = exact_d(&h, 4).unwrap();
            check_code(&h, &res);
            let (lo, hi) = res.value.density_interval().unwrap();
            assert_eq!(lo, hi);
            if h.vertex_count() <= 3 {
                assert_eq!(lo.num() * 64 / lo.den(), brute_force(&h, 4) as u64);
            }
        }
        assert_eq!(exact_d(&LabeledGraph::complete(4), 4).unwrap().value, ExtremalValue::Density(Fraction::new(1, 2)));
        assert_eq!(exact_d(&LabeledGraph::complete(3), 4).unwrap().value, ExtremalValue::Density(Fraction::new(1, 2)));
    }

    #[test]
    fn odd_patterns_at_five_meet_the_ratio_bound() {
        let res = exact_d(&LabeledGraph::complete(3), 5).unwrap();
        assert_eq!(res.value, ExtremalValue::Density(Fraction::new(1, 2)));
    }

    #[test]
    fn edgeless_pattern_allows_everything() {
        assert_eq!(exact_d(&LabeledGraph::empty(2), 3).unwrap().value, ExtremalValue::Density(Fraction::ONE));
    }

    #[test]
    fn ratio_bound_of_the_all_ones_sum() {
        // only the complete graph is forbidden: the bound is half the space
        assert_eq!(hoffman_bound(6, &[63]), 32);
    }
}
