use super::{copy_masks, Certificate, ExtremalResult, ExtremalValue, Quantity, NOTE_EMPTY_COPY, NOTE_NO_COPIES};
use crate::coloring::EdgeColoring;
use crate::error::{capacity, Result};
use crate::graph::{num_edges, LabeledGraph};

pub const MAX_R_VERTICES: usize = 6;
pub const MAX_R_COLORS: usize = 6;

/// Colorings in first-use canonical form: edge `j` takes a color at most one
/// above the largest used so far. A copy is checked once its last edge is colored.
struct ColorSearch {
    colors: Vec<u8>,
    /// Copies indexed by their largest edge.
    closing: Vec<Vec<u64>>,
    palette: u8,
}

impl ColorSearch {
    fn even_chromatic(&self, mask: u64) -> bool {
        let mut parity = 0u8;
        let mut rest = mask;
        while rest != 0 {
            parity ^= 1 << self.colors[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        parity == 0
    }

    fn run(&mut self, j: usize, max_used: u8) -> bool {
        if j == self.colors.len() {
            return true;
        }
        let top = (max_used + 1).min(self.palette - 1);
        for c in 0..=top {
            self.colors[j] = c;
            if self.closing[j].iter().any(|&m| self.even_chromatic(m)) {
                continue;
            }
            if self.run(j + 1, max_used.max(c)) {
                return true;
            }
        }
        false
    }
}

fn search(closing: &[Vec<u64>], len: usize, palette: usize) -> Option<Vec<u32>> {
    if len == 0 {
        return Some(Vec::new());
    }
    let mut s = ColorSearch { colors: vec![0; len], closing: closing.to_vec(), palette: palette as u8 };
    // edge 0 takes color 0 in canonical form
    if s.closing[0].iter().any(|&m| s.even_chromatic(m)) {
        return None;
    }
    s.run(1, 0).then(|| s.colors.iter().map(|&c| c as u32).collect())
}

/// Least number of colors of an edge coloring of `K_n` without an even-chromatic copy of `h`.
pub fn exact_r(h: &LabeledGraph, n: usize, max_colors: usize) -> Result<ExtremalResult> {
    if n > MAX_R_VERTICES || max_colors > MAX_R_COLORS {
        return capacity(format!(
            "exact r supports n <= {MAX_R_VERTICES} and at most {MAX_R_COLORS} colors"
        ));
    }
    let mut result = ExtremalResult {
        quantity: Quantity::R,
        pattern: h.clone(),
        n,
        value: ExtremalValue::GreaterThan(max_colors as u64),
        certificate: None,
        note: None,
    };
    if h.vertex_count() > n {
        result.value = ExtremalValue::Integer(1);
        result.certificate = Some(Certificate::Coloring(EdgeColoring::monochromatic(n)));
        result.note = Some(NOTE_NO_COPIES);
        return Ok(result);
    }
    if h.edge_count() == 0 {
        result.value = ExtremalValue::Unbounded;
        result.note = Some(NOTE_EMPTY_COPY);
        return Ok(result);
    }
    let len = num_edges(n);
    let mut closing = vec![Vec::new(); len];
    for m in copy_masks(h, n)? {
        closing[63 - m.leading_zeros() as usize].push(m);
    }
    for c in 1..=max_colors {
        if let Some(colors) = search(&closing, len, c) {
            result.value = ExtremalValue::Integer(c as u64);
            result.certificate = Some(Certificate::Coloring(EdgeColoring::new(n, colors)?));
            break;
        }
    }
    Ok(result)
}
