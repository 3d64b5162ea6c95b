use crate::bits::{words_for, BitVector};
use crate::error::{invalid, Result};
use crate::graph::{num_edges, LabeledGraph};

/// A `t x C(n,2)` matrix over GF(2); column `j` belongs to canonical edge `j`.
///
/// Its kernel is a linear graph code. `t = 0` describes the full space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityCheckMatrix {
    n: usize,
    rows: Vec<BitVector>,
}

impl ParityCheckMatrix {
    pub fn new(n: usize, rows: Vec<BitVector>) -> Result<Self> {
        let len = num_edges(n);
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != len) {
            return invalid(format!("row {i} has length {}, expected {len}", r.len()));
        }
        Ok(ParityCheckMatrix { n, rows })
    }

    pub fn zeros(n: usize, t: usize) -> Self {
        ParityCheckMatrix { n, rows: vec![BitVector::zeros(num_edges(n)); t] }
    }

    /// The single parity check "even number of edges".
    pub fn all_ones_row(n: usize) -> Self {
        ParityCheckMatrix { n, rows: vec![BitVector::ones(num_edges(n))] }
    }

    /// `C(n,2)` unit rows; the kernel is `{0}`.
    pub fn identity(n: usize) -> Self {
        let len = num_edges(n);
        ParityCheckMatrix {
            n,
            rows: (0..len).map(|i| BitVector::from_indices(len, [i])).collect(),
        }
    }

    /// Builds the matrix from packed columns (`t <= 64`): bit `i` of `cols[j]` is entry `(i, j)`.
    pub fn from_columns(n: usize, t: usize, cols: &[u64]) -> Result<Self> {
        if t > 64 {
            return invalid("packed columns support at most 64 rows");
        }
        let len = num_edges(n);
        if cols.len() != len {
            return invalid(format!("{} columns given, expected {len}", cols.len()));
        }
        let mut rows = vec![BitVector::zeros(len); t];
        for (j, &c) in cols.iter().enumerate() {
            if t < 64 && c >> t != 0 {
                return invalid(format!("column {j} has bits above row {t}"));
            }
            for (i, row) in rows.iter_mut().enumerate() {
                if (c >> i) & 1 == 1 {
                    row.set(j, true);
                }
            }
        }
        Ok(ParityCheckMatrix { n, rows })
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn column_count(&self) -> usize {
        num_edges(self.n)
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    /// Column `j` as a vector of length `t`, for every `j`.
    pub fn columns(&self) -> Vec<BitVector> {
        let t = self.rows.len();
        let mut cols = vec![BitVector::zeros(t); self.column_count()];
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.ones_iter() {
                cols[j].set(i, true);
            }
        }
        cols
    }

    /// Columns packed with a stride of `words_for(t)` words.
    pub(crate) fn column_words(&self) -> (usize, Vec<u64>) {
        let stride = words_for(self.rows.len());
        let mut out = vec![0u64; stride * self.column_count()];
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.ones_iter() {
                out[j * stride + i / 64] |= 1 << (i % 64);
            }
        }
        (stride, out)
    }

    /// Syndrome `M x`.
    pub fn multiply(&self, x: &BitVector) -> BitVector {
        assert_eq!(x.len(), self.column_count());
        let t = self.rows.len();
        let mut s = BitVector::zeros(t);
        for (i, row) in self.rows.iter().enumerate() {
            if row.dot(x) {
                s.set(i, true);
            }
        }
        s
    }

    /// Whether the graph lies in the kernel.
    pub fn contains(&self, g: &LabeledGraph) -> bool {
        g.vertex_count() == self.n && self.rows.iter().all(|r| !r.dot(g.bits()))
    }

    /// Reduced row echelon form of the row space, and the pivot columns.
    pub fn row_echelon(&self) -> (Vec<BitVector>, Vec<usize>) {
        let mut rows: Vec<BitVector> = self.rows.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.column_count() {
            let Some(p) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row.get(col) {
                    row.xor_assign(&pivot);
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rows.truncate(rank);
        (rows, pivots)
    }

    pub fn rank(&self) -> usize {
        self.row_echelon().1.len()
    }

    /// `C(n,2) - rank(M)`.
    pub fn kernel_dimension(&self) -> usize {
        self.column_count() - self.rank()
    }

    /// A basis of the kernel, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<BitVector> {
        let (rows, pivots) = self.row_echelon();
        let len = self.column_count();
        let mut is_pivot = vec![false; len];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..len)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = BitVector::zeros(len);
                x.set(f, true);
                for (row, &p) in rows.iter().zip(&pivots) {
                    if row.get(f) {
                        x.set(p, true);
                    }
                }
                x
            })
            .collect()
    }
}

/// `N - rank(M)`.
pub fn kernel_dimension(m: &ParityCheckMatrix) -> usize {
    m.kernel_dimension()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_dimension_examples() {
        assert_eq!(kernel_dimension(&ParityCheckMatrix::zeros(4, 0)), 6);
        assert_eq!(kernel_dimension(&ParityCheckMatrix::zeros(4, 3)), 6);
        assert_eq!(kernel_dimension(&ParityCheckMatrix::all_ones_row(4)), 5);
        let row = BitVector::ones(6);
        let twice = ParityCheckMatrix::new(4, vec![row.clone(), row]).unwrap();
        assert_eq!(kernel_dimension(&twice), 5);
        assert_eq!(kernel_dimension(&ParityCheckMatrix::identity(5)), 0);
    }

    #[test]
    fn kernel_basis_lies_in_kernel() {
        let cols: Vec<u64> = (0..10).map(|j| (j * 7 + 3) % 16).collect();
        let m = ParityCheckMatrix::from_columns(5, 4, &cols).unwrap();
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), m.kernel_dimension());
        for x in &basis {
            assert!(m.multiply(x).is_zero());
        }
    }

    #[test]
    fn columns_round_trip() {
        let cols: Vec<u64> = (0..6).map(|j| j as u64 % 4).collect();
        let m = ParityCheckMatrix::from_columns(4, 2, &cols).unwrap();
        let (stride, words) = m.column_words();
        assert_eq!(stride, 1);
        assert_eq!(words, cols);
        assert!(ParityCheckMatrix::from_columns(4, 1, &cols).is_err());
    }

    #[test]
    fn wrong_row_length_is_rejected() {
        assert!(ParityCheckMatrix::new(4, vec![BitVector::zeros(5)]).is_err());
    }
}
