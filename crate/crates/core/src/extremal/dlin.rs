use super::{copy_masks, Certificate, ExtremalResult, ExtremalValue, Fraction, Quantity, DEFAULT_NODE_LIMIT, NOTE_EMPTY_COPY, NOTE_NO_COPIES};
use crate::bits::BitVector;
use crate::codes::ParityCheckMatrix;
use crate::error::{capacity, Result};
use crate::graph::{num_edges, LabeledGraph};

pub const MAX_DLIN_VERTICES: usize = 5;

/// Largest host for which every subspace is listed.
const MAX_ENUMERATED_VERTICES: usize = 4;

/// `sum_k [len choose k]_2`, the number of subspaces of `F_2^len`.
pub fn gaussian_binomial_total(len: usize) -> u128 {
    // [len k]_2 via the q-Pascal rule [a b] = [a-1 b-1] + 2^b [a-1 b]
    let mut row = vec![1u128];
    for a in 1..=len {
        let mut next = vec![1u128; a + 1];
        for b in 1..a {
            next[b] = row[b - 1] + (1u128 << b) * row[b];
        }
        row = next;
    }
    row.iter().sum()
}

/// A subspace of `F_2^len` with `len <= 6`, given by its reduced echelon basis
/// and the indicator mask of its `2^dim` elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub basis: Vec<u64>,
    pub elements: u64,
}

fn span_mask(basis: &[u64]) -> u64 {
    let mut elems = vec![0u64];
    for &b in basis {
        let more: Vec<u64> = elems.iter().map(|&e| e ^ b).collect();
        elems.extend(more);
    }
    elems.iter().fold(0, |m, &e| m | 1 << e)
}

/// Every subspace of the edge space of `K_n`, `n <= 4`, by reduced echelon form.
pub fn enumerate_subspaces(n: usize) -> Result<Vec<Subspace>> {
    let len = num_edges(n);
    if n > MAX_ENUMERATED_VERTICES {
        return capacity(format!("subspace enumeration supports n <= {MAX_ENUMERATED_VERTICES}"));
    }
    let mut out = Vec::new();
    for pivots in 0u64..(1 << len) {
        let piv: Vec<usize> = (0..len).filter(|&i| pivots >> i & 1 == 1).collect();
        // free coordinates of row i: non-pivot positions after its pivot
        let free: Vec<Vec<usize>> = piv
            .iter()
            .map(|&p| (p + 1..len).filter(|&c| pivots >> c & 1 == 0).collect())
            .collect();
        let total_free: usize = free.iter().map(Vec::len).sum();
        for assign in 0u64..(1 << total_free) {
            let mut bit = 0;
            let basis: Vec<u64> = piv
                .iter()
                .zip(&free)
                .map(|(&p, f)| {
                    let mut row = 1u64 << p;
                    for &c in f {
                        if assign >> bit & 1 == 1 {
                            row |= 1 << c;
                        }
                        bit += 1;
                    }
                    row
                })
                .collect();
            out.push(Subspace { elements: span_mask(&basis), basis });
        }
    }
    Ok(out)
}

/// A parity-check matrix whose kernel is the span of `basis`.
fn checks_for(n: usize, basis: &[u64]) -> Result<ParityCheckMatrix> {
    let len = num_edges(n);
    let rows = basis.iter().map(|&b| BitVector::from_words(len, vec![b])).collect();
    let perp = ParityCheckMatrix::new(n, rows)?.kernel_basis();
    ParityCheckMatrix::new(n, perp)
}

/// Reduced-echelon column assignment: column `j` lies in the span of the
/// pivots so far or opens the next pivot. Checks fire when a copy's last edge is set.
struct ColumnSearch {
    cols: Vec<u64>,
    closing: Vec<Vec<u64>>,
    t: usize,
    nodes: u64,
    limit: u64,
    aborted: bool,
}

impl ColumnSearch {
    fn ok(&self, j: usize) -> bool {
        self.closing[j].iter().all(|&m| {
            let mut acc = 0;
            let mut rest = m;
            while rest != 0 {
                acc ^= self.cols[rest.trailing_zeros() as usize];
                rest &= rest - 1;
            }
            acc != 0
        })
    }

    fn run(&mut self, j: usize, rank: usize) -> bool {
        if j == self.cols.len() {
            return true;
        }
        self.nodes += 1;
        if self.nodes > self.limit {
            self.aborted = true;
            return false;
        }
        let choices = (0..1u64 << rank).map(|c| (c, rank)).chain((rank < self.t).then_some((1 << rank, rank + 1)));
        for (c, next_rank) in choices {
            self.cols[j] = c;
            if self.ok(j) && self.run(j + 1, next_rank) {
                return true;
            }
            if self.aborted {
                return false;
            }
        }
        false
    }
}

fn degenerate(h: &LabeledGraph, n: usize, copies: &[u64], result: &mut ExtremalResult) -> bool {
    if copies.is_empty() {
        result.value = ExtremalValue::Density(Fraction::ONE);
        result.certificate = Some(Certificate::Matrix(ParityCheckMatrix::zeros(n, 0)));
        result.note = Some(NOTE_NO_COPIES);
        return true;
    }
    if copies[0] == 0 {
        // every subspace contains the empty graph
        debug_assert_eq!(h.edge_count(), 0);
        result.value = ExtremalValue::Density(Fraction::ZERO);
        result.note = Some(NOTE_EMPTY_COPY);
        return true;
    }
    false
}

fn new_result(h: &LabeledGraph, n: usize) -> ExtremalResult {
    ExtremalResult {
        quantity: Quantity::Dlin,
        pattern: h.clone(),
        n,
        value: ExtremalValue::Density(Fraction::ZERO),
        certificate: None,
        note: None,
    }
}

/// Largest density of a subspace containing no copy of `h`.
///
/// Lists all subspaces for `n <= 4`; at `n = 5` searches parity-check
/// matrices with the default node limit.
pub fn exact_dlin(h: &LabeledGraph, n: usize) -> Result<ExtremalResult> {
    if n > MAX_ENUMERATED_VERTICES {
        return exact_dlin_with_limit(h, n, DEFAULT_NODE_LIMIT);
    }
    let copies = copy_masks(h, n)?;
    let mut result = new_result(h, n);
    if degenerate(h, n, &copies, &mut result) {
        return Ok(result);
    }
    let copy_set = copies.iter().fold(0u64, |m, &c| m | 1 << c);
    let best = enumerate_subspaces(n)?
        .into_iter()
        .filter(|s| s.elements & copy_set == 0)
        .fold(None::<Subspace>, |best, s| match &best {
            Some(b) if b.basis.len() >= s.basis.len() => best,
            _ => Some(s),
        })
        .expect("the zero subspace avoids nonzero copies");
    let len = num_edges(n) as u32;
    result.value = ExtremalValue::Density(Fraction::inverse_power_of_two(len - best.basis.len() as u32));
    result.certificate = Some(Certificate::Matrix(checks_for(n, &best.basis)?));
    Ok(result)
}

/// Branch and bound over parity-check matrices with `t = 0, 1, 2, ...` rows.
///
/// A row count whose search runs out of nodes is left undecided and the
/// result becomes a bracket.
pub fn exact_dlin_with_limit(h: &LabeledGraph, n: usize, node_limit: u64) -> Result<ExtremalResult> {
    if n > MAX_DLIN_VERTICES {
        return capacity(format!("exact d^lin supports n <= {MAX_DLIN_VERTICES}"));
    }
    let copies = copy_masks(h, n)?;
    let mut result = new_result(h, n);
    if degenerate(h, n, &copies, &mut result) {
        return Ok(result);
    }
    let len = num_edges(n);
    let mut closing = vec![Vec::new(); len];
    for &m in &copies {
        closing[63 - m.leading_zeros() as usize].push(m);
    }
    let mut first_undecided = None;
    for t in 0..=len {
        let mut s = ColumnSearch { cols: vec![0; len], closing: closing.clone(), t, nodes: 0, limit: node_limit, aborted: false };
        if s.run(0, 0) {
            let lower = Fraction::inverse_power_of_two(t as u32);
            result.value = match first_undecided {
                None => ExtremalValue::Density(lower),
                Some(u) => ExtremalValue::Bracket { lower, upper: Fraction::inverse_power_of_two(u as u32) },
            };
            result.certificate = Some(Certificate::Matrix(ParityCheckMatrix::from_columns(n, t, &s.cols)?));
            return Ok(result);
        }
        if s.aborted && first_undecided.is_none() {
            first_undecided = Some(t);
        }
    }
    // every row count ran out of nodes; the identity matrix still qualifies
    let upper = Fraction::inverse_power_of_two(first_undecided.expect("t = len is feasible") as u32);
    result.value = ExtremalValue::Bracket { lower: Fraction::inverse_power_of_two(len as u32), upper };
    result.certificate = Some(Certificate::Matrix(ParityCheckMatrix::identity(n)));
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::verify_h_free;

    #[test]
    fn subspace_count() {
        assert_eq!(gaussian_binomial_total(6), 2825);
        assert_eq!(enumerate_subspaces(4).unwrap().len(), 2825);
        assert_eq!(gaussian_binomial_total(3), enumerate_subspaces(3).unwrap().len() as u128);
        assert_eq!(gaussian_binomial_total(0), 1);
    }

    #[test]
    fn anchors() {
        let half = ExtremalValue::Density(Fraction::new(1, 2));
        assert_eq!(exact_dlin(&LabeledGraph::complete(4), 4).unwrap().value, half);
        assert_eq!(exact_dlin(&LabeledGraph::complete(3), 4).unwrap().value, half);
        assert_eq!(exact_dlin(&LabeledGraph::empty(3), 4).unwrap().value, ExtremalValue::Density(Fraction::ZERO));
    }

    #[test]
    fn search_matches_enumeration() {
        for mask in 0u64..64 {
            let h = LabeledGraph::from_edge_mask(4, mask);
            let a = exact_dlin(&h, 4).unwrap();
            let b = exact_dlin_with_limit(&h, 4, DEFAULT_NODE_LIMIT).unwrap();
            assert_eq!(a.value, b.value, "{:?}", h.edge_list());
            for res in [a, b] {
                if let Some(Certificate::Matrix(m)) = &res.certificate {
                    assert!(verify_h_free(m, &h).unwrap().is_free());
                    let (lo, _) = res.value.density_interval().unwrap();
                    assert_eq!(Fraction::inverse_power_of_two(m.rank() as u32), lo);
                }
            }
        }
    }

    #[test]
    fn tiny_node_limit_gives_a_bracket() {
        let res = exact_dlin_with_limit(&LabeledGraph::complete(3), 5, 3).unwrap();
        let (lo, hi) = res.value.density_interval().unwrap();
        assert!(lo <= Fraction::new(1, 2) && Fraction::new(1, 2) <= hi);
    }
}
