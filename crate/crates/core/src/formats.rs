//! Plain-text formats for graphs (GL1), colorings (CL1) and matrices (PM1).
//!
//! All three share a header line of integers followed by body lines. Blank
//! lines and lines starting with `#` are skipped. Errors carry 1-based line
//! and column numbers of the offending token.

use std::fmt::Write as _;
use std::path::Path;

use crate::bits::BitVector;
use crate::codes::ParityCheckMatrix;
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{num_edges, pair_index, LabeledGraph};

struct Line<'a> {
    number: usize,
    text: &'a str,
}

struct Token<'a> {
    line: usize,
    column: usize,
    text: &'a str,
}

fn content_lines(src: &str) -> impl Iterator<Item = Line<'_>> {
    src.lines().enumerate().filter_map(|(i, text)| {
        let t = text.trim_start();
        (!t.is_empty() && !t.starts_with('#')).then_some(Line { number: i + 1, text })
    })
}

fn tokens<'a>(line: &Line<'a>) -> Vec<Token<'a>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.text.char_indices().chain(std::iter::once((line.text.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token { line: line.number, column: s + 1, text: &line.text[s..i] });
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn err<T>(format: &'static str, line: usize, column: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { format, line, column, message: message.into() })
}

fn int(format: &'static str, tok: &Token) -> Result<usize> {
    tok.text.parse().or_else(|_| err(format, tok.line, tok.column, format!("expected a non-negative integer, found `{}`", tok.text)))
}

/// Parses a line of exactly `want` integers.
fn ints(format: &'static str, line: &Line, want: usize, what: &str) -> Result<Vec<usize>> {
    let toks = tokens(line);
    if toks.len() != want {
        let column = toks.get(want).map_or(line.text.len() + 1, |t| t.column);
        return err(format, line.number, column, format!("expected {what}, found {} fields", toks.len()));
    }
    toks.iter().map(|t| int(format, t)).collect()
}

fn end_of_input<T>(format: &'static str, src: &str, message: impl Into<String>) -> Result<T> {
    err(format, src.lines().count() + 1, 1, message)
}

/// Checks `u < v < n` and maps the pair to its edge index.
fn pair(format: &'static str, line: &Line, u: usize, v: usize, n: usize) -> Result<usize> {
    let toks = tokens(line);
    if u >= v {
        return err(format, line.number, toks[0].column, format!("need u < v, found {u} {v}"));
    }
    if v >= n {
        return err(format, line.number, toks[1].column, format!("vertex {v} out of range for n = {n}"));
    }
    Ok(pair_index(u, v))
}

pub fn parse_gl1(src: &str) -> Result<LabeledGraph> {
    const F: &str = "GL1";
    let mut lines = content_lines(src);
    let Some(header) = lines.next() else {
        return end_of_input(F, src, "missing header line `n`");
    };
    let n = ints(F, &header, 1, "header `n`")?[0];
    let mut bits = BitVector::zeros(num_edges(n));
    for line in lines {
        let uv = ints(F, &line, 2, "an edge `u v`")?;
        let j = pair(F, &line, uv[0], uv[1], n)?;
        if bits.get(j) {
            return err(F, line.number, 1, format!("duplicate edge {} {}", uv[0], uv[1]));
        }
        bits.set(j, true);
    }
    LabeledGraph::from_bits(n, bits)
}

pub fn write_gl1(g: &LabeledGraph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_cl1(src: &str) -> Result<EdgeColoring> {
    const F: &str = "CL1";
    let mut lines = content_lines(src);
    let Some(header) = lines.next() else {
        return end_of_input(F, src, "missing header line `n r`");
    };
    let nr = ints(F, &header, 2, "header `n r`")?;
    let (n, r) = (nr[0], nr[1]);
    let total = num_edges(n);
    let mut colors = vec![u32::MAX; total];
    let mut seen = 0;
    for line in lines {
        let uvc = ints(F, &line, 3, "an edge color `u v c`")?;
        let j = pair(F, &line, uvc[0], uvc[1], n)?;
        if colors[j] != u32::MAX {
            return err(F, line.number, 1, format!("pair {} {} colored twice", uvc[0], uvc[1]));
        }
        if uvc[2] >= r {
            return err(F, line.number, tokens(&line)[2].column, format!("color {} not below r = {r}", uvc[2]));
        }
        colors[j] = uvc[2] as u32;
        seen += 1;
    }
    if seen != total {
        let j = colors.iter().position(|&c| c == u32::MAX).unwrap();
        let (u, v) = crate::graph::edge_endpoints(j);
        return end_of_input(F, src, format!("pair {u} {v} has no color ({seen} of {total} pairs given)"));
    }
    let mut used = vec![false; r];
    for &c in &colors {
        used[c as usize] = true;
    }
    if let Some(c) = used.iter().position(|u| !u) {
        return err(F, header.number, tokens(&header)[1].column, format!("color {c} below r = {r} is never used"));
    }
    EdgeColoring::new(n, colors)
}

/// One line per edge in canonical index order.
pub fn write_cl1(chi: &EdgeColoring) -> String {
    let n = chi.vertex_count();
    let mut out = format!("{n} {}\n", chi.palette_size());
    for v in 1..n {
        for u in 0..v {
            let _ = writeln!(out, "{u} {v} {}", chi.color(u, v));
        }
    }
    out
}

/// Rows of a PM1 file as bit vectors, with the header values `(n, t)`.
fn parse_rows(src: &str) -> Result<(usize, Vec<BitVector>)> {
    const F: &str = "PM1";
    let mut lines = content_lines(src);
    let Some(header) = lines.next() else {
        return end_of_input(F, src, "missing header line `n t`");
    };
    let nt = ints(F, &header, 2, "header `n t`")?;
    let (n, t) = (nt[0], nt[1]);
    let len = num_edges(n);
    let mut rows = Vec::with_capacity(t);
    for line in lines {
        if rows.len() == t {
            return err(F, line.number, 1, format!("more than t = {t} rows"));
        }
        let toks = tokens(&line);
        if toks.len() != 1 {
            return err(F, line.number, toks[1].column, "a row is one token of 0s and 1s");
        }
        let tok = &toks[0];
        let mut row = BitVector::zeros(len);
        for (i, ch) in tok.text.chars().enumerate() {
            match ch {
                '0' => {}
                '1' if i < len => row.set(i, true),
                '1' => {}
                _ => return err(F, line.number, tok.column + i, format!("unexpected character `{ch}`")),
            }
        }
        if tok.text.len() != len {
            return err(F, line.number, tok.column + tok.text.len().min(len), format!("row has {} entries, expected {len}", tok.text.len()));
        }
        rows.push(row);
    }
    if rows.len() != t {
        return end_of_input(F, src, format!("expected {t} rows, found {}", rows.len()));
    }
    Ok((n, rows))
}

pub fn parse_pm1(src: &str) -> Result<ParityCheckMatrix> {
    let (n, rows) = parse_rows(src)?;
    ParityCheckMatrix::new(n, rows)
}

pub fn write_pm1(m: &ParityCheckMatrix) -> String {
    write_rows(m.vertex_count(), m.rows())
}

fn write_rows(n: usize, rows: &[BitVector]) -> String {
    let len = num_edges(n);
    let mut out = String::with_capacity(rows.len() * (len + 1) + 16);
    let _ = writeln!(out, "{n} {}", rows.len());
    for row in rows {
        out.extend((0..len).map(|i| if row.get(i) { '1' } else { '0' }));
        out.push('\n');
    }
    out
}

/// A list of graphs in PM1 layout, one codeword per row.
pub fn write_code_listing(n: usize, words: &[LabeledGraph]) -> String {
    let rows: Vec<BitVector> = words.iter().map(|g| g.bits().clone()).collect();
    write_rows(n, &rows)
}

pub fn parse_code_listing(src: &str) -> Result<Vec<LabeledGraph>> {
    let (n, rows) = parse_rows(src)?;
    rows.into_iter().map(|r| LabeledGraph::from_bits(n, r)).collect()
}

pub fn read_gl1(path: impl AsRef<Path>) -> Result<LabeledGraph> {
    parse_gl1(&std::fs::read_to_string(path)?)
}

pub fn read_cl1(path: impl AsRef<Path>) -> Result<EdgeColoring> {
    parse_cl1(&std::fs::read_to_string(path)?)
}

pub fn read_pm1(path: impl AsRef<Path>) -> Result<ParityCheckMatrix> {
    parse_pm1(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn position(e: Error) -> (usize, usize) {
        match e {
            Error::Parse { line, column, .. } => (line, column),
            other => panic!("not a parse error: {other}"),
        }
    }

    #[test]
    fn gl1_round_trip() {
        let g = LabeledGraph::cycle(5);
        let text = write_gl1(&g);
        assert_eq!(text, "5\n0 1\n1 2\n2 3\n0 4\n3 4\n");
        assert_eq!(parse_gl1(&text).unwrap(), g);
        assert_eq!(parse_gl1("# c4\n4\n\n0 1\n# x\n1 2\n").unwrap().edge_count(), 2);
    }

    #[test]
    fn gl1_diagnostics() {
        assert_eq!(position(parse_gl1("4\n0 1\n1 0\n").unwrap_err()), (3, 1));
        assert_eq!(position(parse_gl1("4\n0 9\n").unwrap_err()), (2, 3));
        assert_eq!(position(parse_gl1("4\n0 1\n0 1\n").unwrap_err()), (2 + 1, 1));
        assert_eq!(position(parse_gl1("4\n0 x\n").unwrap_err()), (2, 3));
        assert_eq!(position(parse_gl1("4\n0 1 2\n").unwrap_err()), (2, 5));
        assert_eq!(position(parse_gl1("").unwrap_err()), (1, 1));
    }

    #[test]
    fn cl1_round_trip() {
        let chi = crate::coloring::build_k4_coloring(6);
        assert_eq!(parse_cl1(&write_cl1(&chi)).unwrap(), chi);
    }

    #[test]
    fn cl1_rejects_missing_and_duplicate_pairs() {
        assert!(parse_cl1("3 1\n0 1 0\n0 2 0\n").is_err());
        assert_eq!(position(parse_cl1("3 1\n0 1 0\n0 1 0\n1 2 0\n").unwrap_err()), (3, 1));
        assert_eq!(position(parse_cl1("3 1\n0 1 0\n0 2 1\n1 2 0\n").unwrap_err()), (3, 5));
        assert_eq!(position(parse_cl1("3 2\n0 1 0\n0 2 0\n1 2 0\n").unwrap_err()), (1, 3));
    }

    #[test]
    fn pm1_round_trip() {
        let m = ParityCheckMatrix::identity(4);
        let text = write_pm1(&ParityCheckMatrix::all_ones_row(4));
        assert_eq!(text, "4 1\n111111\n");
        assert_eq!(parse_pm1(&write_pm1(&m)).unwrap(), m);
        assert_eq!(parse_pm1("3 0\n").unwrap().row_count(), 0);
    }

    #[test]
    fn pm1_diagnostics() {
        assert_eq!(position(parse_pm1("3 1\n1021\n").unwrap_err()), (2, 3));
        assert_eq!(position(parse_pm1("3 1\n10\n").unwrap_err()), (2, 3));
        assert_eq!(position(parse_pm1("3 1\n101\n111\n").unwrap_err()), (3, 1));
        assert_eq!(position(parse_pm1("3 2\n101\n").unwrap_err()), (3, 1));
    }

    #[test]
    fn code_listing_round_trip() {
        let words = vec![LabeledGraph::empty(4), LabeledGraph::complete(4)];
        assert_eq!(parse_code_listing(&write_code_listing(4, &words)).unwrap(), words);
    }
}
