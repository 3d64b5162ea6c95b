//! Main terms of the asymptotic bounds, for comparison with computed values.
//!
//! All constants left implicit by the theorems are explicit arguments.

use crate::coloring::K4ColoringParams;
use crate::error::{invalid, Result};

/// `n^(1/(v_h - 2))`, the main term of the lower bound on `r_H(n)` for
/// evenly decomposable `H`; the `1 - o(1)` factor is dropped.
pub fn bound_even_decomp(v_h: u32, n: f64) -> Result<f64> {
    if v_h < 3 {
        return invalid(format!("bound needs v(H) >= 3, got {v_h}"));
    }
    if n.is_nan() || n < 1.0 {
        return invalid(format!("host size must be at least 1, got {n}"));
    }
    Ok(n.powf(1.0 / (v_h - 2) as f64))
}

/// Best `m` and value of the max-min expression.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MaxMin {
    pub m: u64,
    pub value: f64,
}

/// Grid size of [`bound_maxmin`].
pub const MAXMIN_GRID: usize = 1000;
/// Largest `n` accepted by [`bound_maxmin_exact`].
pub const MAXMIN_EXACT_LIMIT: f64 = 1e6;

fn maxmin_checks(k: u32, n: f64) -> Result<()> {
    if k < 1 {
        return invalid("k must be at least 1");
    }
    if n.is_nan() || n < 2.0 {
        return invalid(format!("n must be at least 2, got {n}"));
    }
    Ok(())
}

fn maxmin_term(r1: &impl Fn(f64) -> f64, r2: &impl Fn(f64) -> f64, k: u32, n: f64, m: u64) -> f64 {
    let mf = m as f64;
    let gap = n.ln() - mf.ln();
    let third = (gap * gap / (3.0 * k as f64 * n.ln())).exp();
    r1(mf).min(r2(mf)).min(third)
}

fn best_of(
    r1: &impl Fn(f64) -> f64,
    r2: &impl Fn(f64) -> f64,
    k: u32,
    n: f64,
    ms: impl IntoIterator<Item = u64>,
) -> MaxMin {
    let mut best = MaxMin { m: 1, value: f64::NEG_INFINITY };
    for m in ms {
        let value = maxmin_term(r1, r2, k, n, m);
        if value > best.value {
            best = MaxMin { m, value };
        }
    }
    best
}

/// `max_{m in [n]} min{r1(m), r2(m), exp((ln n - ln m)^2 / (3k ln n))}`.
///
/// Evaluated on 1000 logarithmically spaced integers plus both endpoints,
/// then scanned over every integer between the neighbors of the best grid point.
pub fn bound_maxmin(r1: impl Fn(f64) -> f64, r2: impl Fn(f64) -> f64, k: u32, n: f64) -> Result<MaxMin> {
    maxmin_checks(k, n)?;
    let top = n.floor() as u64;
    let mut grid: Vec<u64> = (0..MAXMIN_GRID)
        .map(|i| ((top as f64).ln() * i as f64 / (MAXMIN_GRID - 1) as f64).exp().round() as u64)
        .map(|m| m.clamp(1, top))
        .chain([1, top])
        .collect();
    grid.sort_unstable();
    grid.dedup();
    let coarse = best_of(&r1, &r2, k, n, grid.iter().copied());
    let at = grid.binary_search(&coarse.m).unwrap();
    let lo = grid[at.saturating_sub(1)];
    let hi = grid[(at + 1).min(grid.len() - 1)];
    let fine = best_of(&r1, &r2, k, n, lo..=hi);
    Ok(if fine.value > coarse.value { fine } else { coarse })
}

/// The same maximum over every integer `m <= n`, for `n <= 10^6`.
pub fn bound_maxmin_exact(r1: impl Fn(f64) -> f64, r2: impl Fn(f64) -> f64, k: u32, n: f64) -> Result<MaxMin> {
    maxmin_checks(k, n)?;
    if n > MAXMIN_EXACT_LIMIT {
        return invalid(format!("the exact scan supports n <= {MAXMIN_EXACT_LIMIT}"));
    }
    Ok(best_of(&r1, &r2, k, n, 1..=n.floor() as u64))
}

/// `3^d m^2` with `d = ceil(sqrt(log2 n))` and `m = 2^d`; the product
/// coloring of `K_n` uses fewer colors.
pub fn bound_k4_colors(n: usize) -> Result<u128> {
    if n < 2 {
        return invalid(format!("n must be at least 2, got {n}"));
    }
    Ok(K4ColoringParams::for_n(n).palette_bound())
}

/// `(c ln n, 1 / (c ln n))`: the color lower bound and the matching density upper bound.
pub fn bound_general_log(c: f64, n: f64) -> Result<(f64, f64)> {
    if c.is_nan() || c <= 0.0 {
        return invalid(format!("c must be positive, got {c}"));
    }
    if n.is_nan() || n < 3.0 {
        return invalid(format!("n must be at least 3, got {n}"));
    }
    let colors = c * n.ln();
    Ok((colors, 1.0 / colors))
}

/// `n exp(-C ln^(3/4) n)`.
pub fn shrunken_host(big_c: f64, n: f64) -> Result<f64> {
    if big_c.is_nan() || big_c < 0.0 {
        return invalid(format!("C must be non-negative, got {big_c}"));
    }
    if n.is_nan() || n < 1.0 {
        return invalid(format!("n must be at least 1, got {n}"));
    }
    Ok(n * (-big_c * n.ln().powf(0.75)).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-9 * b.abs().max(1.0)
    }

    #[test]
    fn even_decomp_examples() {
        assert!(close(bound_even_decomp(3, 100.0).unwrap(), 100.0));
        assert!(close(bound_even_decomp(4, 10000.0).unwrap(), 100.0));
        assert!(close(bound_even_decomp(6, (1u64 << 20) as f64).unwrap(), 32.0));
        assert!(bound_even_decomp(2, 10.0).is_err());
    }

    #[test]
    fn k4_colors_examples() {
        assert_eq!(bound_k4_colors(4).unwrap(), 144);
        assert_eq!(bound_k4_colors(2).unwrap(), 12);
        assert_eq!(bound_k4_colors(81).unwrap(), 1728);
        assert!(bound_k4_colors(1).is_err());
    }

    #[test]
    fn general_log_examples() {
        let (a, b) = bound_general_log(1.0, 10f64.exp()).unwrap();
        assert!(close(a, 10.0) && close(b, 0.1));
        assert!(close(shrunken_host(1.0, 16f64.exp()).unwrap(), 8f64.exp()));
        assert!(bound_general_log(0.0, 10.0).is_err());
    }

    #[test]
    fn maxmin_without_competition_peaks_at_one() {
        let inf = |_: f64| f64::INFINITY;
        for (k, n) in [(1u32, 1000.0f64), (2, 5e4), (3, 123.0)] {
            let r = bound_maxmin(inf, inf, k, n).unwrap();
            assert_eq!(r.m, 1);
            assert!(close(r.value, n.powf(1.0 / (3 * k) as f64)));
        }
    }

    #[test]
    fn maxmin_is_at_least_one() {
        let r = bound_maxmin(|_| 0.5, |_| 7.0, 2, 100.0).unwrap();
        assert!(r.value <= 0.5 + 1e-12);
        let r = bound_maxmin(|m| m, |m| m, 1, 1e4).unwrap();
        assert!(r.value >= 1.0);
    }

    #[test]
    fn grid_matches_exact_scan() {
        let f = |m: f64| m.ln().sqrt().exp();
        for n in [50.0, 999.0, 9f64.exp(), 2e5] {
            let g = bound_maxmin(f, f, 1, n).unwrap();
            let e = bound_maxmin_exact(f, f, 1, n).unwrap();
            assert!(close(g.value, e.value), "n={n}: {g:?} vs {e:?}");
        }
    }
}
