//! Vector families with no short zero sums.
//!
//! `r` vectors in `F_2^t` of which no nonempty subset of size at most `s` sums
//! to zero; as columns they check a code of minimum distance at least `s + 1`.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{capacity, invalid, Result};

/// How a family was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyConstruction {
    /// Greedy scan of `1, 2, 3, ...` keeping vectors outside all short sums.
    Lexicode,
    /// Columns `(x, x^3, ..., x^(2e-1))` over `GF(2^w)` for distinct nonzero `x`.
    Bch { field_degree: u32 },
    Given,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorFamily {
    t: usize,
    s: usize,
    vectors: Vec<u64>,
    construction: FamilyConstruction,
}

impl VectorFamily {
    /// Wraps explicit vectors; the zero-sum condition is not checked here.
    pub fn new(t: usize, s: usize, vectors: Vec<u64>) -> Result<Self> {
        if t > 64 {
            return capacity("vector families support t <= 64");
        }
        if let Some(v) = vectors.iter().find(|&&v| t < 64 && v >> t != 0) {
            return invalid(format!("vector {v:#b} does not fit into {t} bits"));
        }
        Ok(VectorFamily { t, s, vectors, construction: FamilyConstruction::Given })
    }

    /// The `r` unit vectors of `F_2^r`; independent, so `s = r`.
    pub fn identity(r: usize) -> Result<Self> {
        Self::new(r, r, (0..r).map(|i| 1u64 << i).collect())
    }

    pub fn dimension(&self) -> usize {
        self.t
    }

    pub fn order(&self) -> usize {
        self.s
    }

    pub fn vectors(&self) -> &[u64] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn construction(&self) -> FamilyConstruction {
        self.construction
    }
}

/// Bits needed to write `r`, i.e. `ceil(log2(r + 1))`.
pub fn bit_length(r: usize) -> usize {
    (usize::BITS - r.leading_zeros()) as usize
}

/// Row budget `ceil((s+1)/2) * ceil(log2(r+1))` of a BCH code of designed distance `s+1`.
pub fn bch_budget(r: usize, s: usize) -> usize {
    (s + 1).div_ceil(2) * bit_length(r)
}

pub(crate) fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u128;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Number of subsets of size `1..=s` of `r` elements.
pub fn short_subset_count(r: usize, s: usize) -> u128 {
    (1..=s.min(r)).map(|k| binomial(r as u64, k as u64)).sum()
}

const LEXICODE_MAX_BITS: u32 = 24;

fn lexicode(r: usize, s: usize) -> Option<Vec<u64>> {
    // Every short sum of the first r-1 vectors blocks one candidate; the scan
    // therefore succeeds below 2^bits once that count is smaller.
    let blocked: u128 = 1 + short_subset_count(r.saturating_sub(1), s - 1);
    let bits = (u128::BITS - blocked.leading_zeros()).max(1);
    if bits > LEXICODE_MAX_BITS {
        return None;
    }
    let size = 1usize << bits;
    // levels[k]: every sum of at most k accepted vectors
    let mut members: Vec<Vec<u32>> = vec![vec![0]; s];
    let mut marks: Vec<Vec<u64>> = vec![vec![1u64]; s];
    for m in marks.iter_mut() {
        m.resize(size.div_ceil(64), 0);
    }
    let mut out = Vec::with_capacity(r);
    let mut cand = 1u32;
    while out.len() < r {
        debug_assert!((cand as usize) < size);
        let c = cand as usize;
        if (marks[s - 1][c / 64] >> (c % 64)) & 1 == 0 {
            out.push(cand as u64);
            for k in (1..s).rev() {
                let src = std::mem::take(&mut members[k - 1]);
                for &x in &src {
                    let y = (x ^ cand) as usize;
                    if (marks[k][y / 64] >> (y % 64)) & 1 == 0 {
                        marks[k][y / 64] |= 1 << (y % 64);
                        members[k].push(y as u32);
                    }
                }
                members[k - 1] = src;
            }
        }
        cand += 1;
    }
    Some(out)
}

fn poly_mod(mut a: u128, p: u128) -> u128 {
    let dp = 127 - p.leading_zeros();
    while a != 0 && 127 - a.leading_zeros() >= dp {
        a ^= p << (127 - a.leading_zeros() - dp);
    }
    a
}

fn is_irreducible(p: u64, w: u32) -> bool {
    for deg in 1..=w / 2 {
        for low in 0..(1u64 << deg) {
            let q = (1u64 << deg) | low;
            if poly_mod(p as u128, q as u128) == 0 {
                return false;
            }
        }
    }
    true
}

/// Smallest irreducible polynomial of degree `w` over GF(2), as a bit mask.
pub fn irreducible_polynomial(w: u32) -> u64 {
    assert!((1..=32).contains(&w));
    (0..(1u64 << w))
        .map(|low| (1u64 << w) | low)
        .find(|&p| is_irreducible(p, w))
        .expect("irreducible polynomials exist in every degree")
}

fn gf_mul(a: u64, b: u64, poly: u64) -> u64 {
    let mut prod = 0u128;
    for i in 0..64 {
        if (b >> i) & 1 == 1 {
            prod ^= (a as u128) << i;
        }
    }
    poly_mod(prod, poly as u128) as u64
}

fn bch_family(r: usize, s: usize) -> Result<(usize, u32, Vec<u64>)> {
    let w = bit_length(r) as u32;
    let e = s.div_ceil(2);
    let t = w as usize * e;
    if t > 64 {
        return capacity(format!("BCH family for r={r}, s={s} needs {t} > 64 rows"));
    }
    let poly = irreducible_polynomial(w);
    let vectors = (1..=r as u64)
        .map(|x| {
            let sq = gf_mul(x, x, poly);
            let mut pow = x;
            let mut col = 0u64;
            for k in 0..e {
                col |= pow << (k as u32 * w);
                pow = gf_mul(pow, sq, poly);
            }
            col
        })
        .collect();
    Ok((t, w, vectors))
}

/// `r` vectors with no zero sum of at most `s` of them, using at most
/// [`bch_budget`] coordinates.
///
/// The lexicode is tried first and trimmed to the bit length of its largest
/// vector. When the greedy scan would be too large to run, or lands above the
/// budget, the binary BCH columns are used instead.
pub fn greedy_vector_family(r: usize, s: usize) -> Result<VectorFamily> {
    if r == 0 || s == 0 {
        return invalid("greedy_vector_family needs r >= 1 and s >= 1");
    }
    let budget = bch_budget(r, s);
    if let Some(vectors) = lexicode(r, s) {
        let t = bit_length(*vectors.iter().max().unwrap() as usize);
        if t <= budget && t <= 64 {
            return Ok(VectorFamily { t, s, vectors, construction: FamilyConstruction::Lexicode });
        }
    }
    let (t, w, vectors) = bch_family(r, s)?;
    debug_assert!(t <= budget);
    Ok(VectorFamily { t, s, vectors, construction: FamilyConstruction::Bch { field_degree: w } })
}

/// Outcome of checking the zero-sum condition of a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum IndependenceCheck {
    Exhaustive { holds: bool, subsets: u64 },
    Sampled { holds: bool, samples: u64, seed: u64 },
}

impl IndependenceCheck {
    pub fn holds(&self) -> bool {
        match self {
            IndependenceCheck::Exhaustive { holds, .. } | IndependenceCheck::Sampled { holds, .. } => *holds,
        }
    }
}

pub const EXHAUSTIVE_SUBSET_LIMIT: u128 = 10_000_000;
pub const SAMPLED_SUBSETS: u64 = 1_000_000;

/// Exhaustive when at most 10^7 short subsets exist, otherwise 10^6 seeded random subsets.
pub fn check_independence(fam: &VectorFamily, seed: u64) -> IndependenceCheck {
    let r = fam.len();
    let s = fam.order().min(r);
    let total = short_subset_count(r, s);
    if total <= EXHAUSTIVE_SUBSET_LIMIT {
        fn dfs(vs: &[u64], start: usize, left: usize, acc: u64, nonempty: bool, count: &mut u64) -> bool {
            if nonempty {
                *count += 1;
                if acc == 0 {
                    return false;
                }
            }
            if left == 0 {
                return true;
            }
            (start..vs.len()).all(|i| dfs(vs, i + 1, left - 1, acc ^ vs[i], true, count))
        }
        let mut subsets = 0;
        let holds = dfs(fam.vectors(), 0, s, 0, false, &mut subsets);
        IndependenceCheck::Exhaustive { holds, subsets }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let holds = (0..SAMPLED_SUBSETS).all(|_| {
            let k = rng.gen_range(1..=s);
            sample(&mut rng, r, k).iter().fold(0u64, |a, i| a ^ fam.vectors()[i]) != 0
        });
        IndependenceCheck::Sampled { holds, samples: SAMPLED_SUBSETS, seed }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families() {
        let f = greedy_vector_family(3, 2).unwrap();
        assert_eq!(f.vectors(), &[1, 2, 3]);
        assert_eq!(f.dimension(), 2);
        let g = greedy_vector_family(1, 6).unwrap();
        assert_eq!((g.vectors(), g.dimension()), (&[1u64][..], 1));
    }

    #[test]
    fn seven_vectors_of_order_six() {
        let f = greedy_vector_family(7, 6).unwrap();
        assert_eq!(bch_budget(7, 6), 12);
        assert!(f.dimension() <= 12);
        assert!(matches!(check_independence(&f, 0), IndependenceCheck::Exhaustive { holds: true, .. }));
    }

    #[test]
    fn bch_columns_have_designed_distance() {
        for (r, s) in [(15, 4), (31, 6), (20, 5), (9, 3)] {
            let (t, _, vectors) = bch_family(r, s).unwrap();
            assert!(t <= bch_budget(r, s));
            let fam = VectorFamily::new(t, s, vectors).unwrap();
            assert!(check_independence(&fam, 1).holds(), "r={r} s={s}");
        }
    }

    #[test]
    fn large_palette_falls_back_to_bch() {
        let f = greedy_vector_family(300, 6).unwrap();
        assert!(matches!(f.construction(), FamilyConstruction::Bch { field_degree: 9 }));
        assert_eq!(f.dimension(), 27);
        assert!(f.dimension() <= bch_budget(300, 6));
        assert!(check_independence(&f, 7).holds());
    }

    #[test]
    fn broken_family_is_detected() {
        // 1 + 2 + 4 + 7 = 0
        let fam = VectorFamily::new(3, 4, vec![1, 2, 4, 7]).unwrap();
        assert!(!check_independence(&fam, 0).holds());
        assert!(check_independence(&VectorFamily::new(3, 3, vec![1, 2, 4, 7]).unwrap(), 0).holds());
    }

    #[test]
    fn irreducible_polynomials() {
        assert_eq!(irreducible_polynomial(2), 0b111);
        assert_eq!(irreducible_polynomial(3), 0b1011);
        assert_eq!(irreducible_polynomial(8), 0b1_0001_1011);
    }
}
