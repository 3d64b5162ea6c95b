use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::exact::{Decomposer, MAX_DP_VERTICES};
use crate::error::{capacity, invalid, Result};
use crate::graph::{edge_endpoints, num_edges};

/// Largest vertex count handled by exhaustive census.
pub const MAX_EXHAUSTIVE_CENSUS: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CensusMode {
    Exhaustive { workers: usize },
    Sampled { samples: u64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub v: usize,
    pub mode: &'static str,
    pub total_even: u64,
    pub undecomposable: u64,
    /// `undecomposable / total_even` in lowest terms.
    pub proportion_num: u64,
    pub proportion_den: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn record(v: usize, mode: &'static str, total_even: u64, undecomposable: u64, seed: Option<u64>) -> CensusRecord {
    let g = gcd(undecomposable, total_even).max(1);
    CensusRecord {
        v,
        mode,
        total_even,
        undecomposable,
        proportion_num: undecomposable / g,
        proportion_den: (total_even / g).max(1),
        seed,
    }
}

fn load_mask(d: &mut Decomposer, v: usize, ends: &[(usize, usize)], mask: u64, nb: &mut Vec<u32>) {
    nb.clear();
    nb.resize(v, 0);
    let mut rest = mask;
    while rest != 0 {
        let (a, b) = ends[rest.trailing_zeros() as usize];
        rest &= rest - 1;
        nb[a] |= 1 << b;
        nb[b] |= 1 << a;
    }
    d.load(nb);
}

fn count_range(v: usize, lo: u64, hi: u64) -> (u64, u64) {
    let ends: Vec<_> = (0..num_edges(v)).map(edge_endpoints).collect();
    let mut d = Decomposer::new();
    let mut nb = Vec::with_capacity(v);
    let (mut even, mut bad) = (0, 0);
    for mask in lo..hi {
        if mask.count_ones() % 2 == 1 {
            continue;
        }
        even += 1;
        load_mask(&mut d, v, &ends, mask, &mut nb);
        if !d.decomposable() {
            bad += 1;
        }
    }
    (even, bad)
}

/// Counts even-edge labeled graphs on `v` vertices without an even decomposition.
///
/// Exhaustive mode splits the graph index range into contiguous blocks, one per
/// worker; sampled mode draws uniform even-edge graphs from the seeded generator.
pub fn decomposition_census(v: usize, mode: CensusMode) -> Result<CensusRecord> {
    match mode {
        CensusMode::Exhaustive { workers } => {
            if v > MAX_EXHAUSTIVE_CENSUS {
                return capacity(format!(
                    "exhaustive census supports v <= {MAX_EXHAUSTIVE_CENSUS}; give a sample size for larger v"
                ));
            }
            let total = 1u64 << num_edges(v);
            let workers = workers.clamp(1, 64) as u64;
            let chunk = total.div_ceil(workers);
            let results: Vec<(u64, u64)> = std::thread::scope(|scope| {
                let handles: Vec<_> = (0..workers)
                    .map(|w| {
                        let (lo, hi) = ((w * chunk).min(total), ((w + 1) * chunk).min(total));
                        scope.spawn(move || count_range(v, lo, hi))
                    })
                    .collect();
                handles.into_iter().map(|h| h.join().expect("census worker panicked")).collect()
            });
            let (even, bad) = results.iter().fold((0, 0), |(a, b), (c, d)| (a + c, b + d));
            Ok(record(v, "exhaustive", even, bad, None))
        }
        CensusMode::Sampled { samples, seed } => {
            if v > MAX_DP_VERTICES {
                return capacity(format!("sampled census supports v <= {MAX_DP_VERTICES}"));
            }
            if samples == 0 {
                return invalid("sampled census needs at least one sample");
            }
            let len = num_edges(v);
            let ends: Vec<_> = (0..len).map(edge_endpoints).collect();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut d = Decomposer::new();
            let mut bad = 0;
            let mut nb = vec![0u32; v];
            for _ in 0..samples {
                loop {
                    nb.iter_mut().for_each(|x| *x = 0);
                    let mut parity = 0;
                    for &(a, b) in &ends {
                        if rng.gen::<bool>() {
                            nb[a] |= 1 << b;
                            nb[b] |= 1 << a;
                            parity ^= 1;
                        }
                    }
                    if parity == 0 {
                        break;
                    }
                }
                d.load(&nb);
                if !d.decomposable() {
                    bad += 1;
                }
            }
            Ok(record(v, "sampled", samples, bad, Some(seed)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_censuses() {
        let r = decomposition_census(4, CensusMode::Exhaustive { workers: 1 }).unwrap();
        assert_eq!((r.total_even, r.undecomposable, r.proportion_num, r.proportion_den), (32, 1, 1, 32));
        let r = decomposition_census(2, CensusMode::Exhaustive { workers: 3 }).unwrap();
        assert_eq!((r.total_even, r.proportion_num, r.proportion_den), (1, 0, 1));
        let r = decomposition_census(0, CensusMode::Exhaustive { workers: 1 }).unwrap();
        assert_eq!(r.total_even, 1);
    }

    #[test]
    fn worker_count_does_not_change_counts() {
        let a = decomposition_census(6, CensusMode::Exhaustive { workers: 1 }).unwrap();
        let b = decomposition_census(6, CensusMode::Exhaustive { workers: 5 }).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.total_even, 1 << 14);
    }

    #[test]
    fn limits() {
        assert!(decomposition_census(8, CensusMode::Exhaustive { workers: 1 }).is_err());
        let s = decomposition_census(9, CensusMode::Sampled { samples: 200, seed: 1 }).unwrap();
        assert_eq!(s.total_even, 200);
        assert_eq!(s, decomposition_census(9, CensusMode::Sampled { samples: 200, seed: 1 }).unwrap());
    }
}
