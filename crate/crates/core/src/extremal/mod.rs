//! Exact values of `r_H(n)`, `d^lin_H(n)` and `d_H(n)` for tiny hosts.
//!
//! Densities are exact fractions. A search that hits its node limit reports a
//! bracketing interval instead of a value.

mod d;
mod dlin;
mod r;

pub use d::{exact_d, exact_d_with_limit, hoffman_bound, DEFAULT_D_NODE_LIMIT, MAX_D_VERTICES};
pub use dlin::{
    enumerate_subspaces, exact_dlin, exact_dlin_with_limit, gaussian_binomial_total, MAX_DLIN_VERTICES,
};
pub use r::{exact_r, MAX_R_COLORS, MAX_R_VERTICES};

use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::codes::ParityCheckMatrix;
use crate::coloring::EdgeColoring;
use crate::copies::CopyFamily;
use crate::error::Result;
use crate::graph::LabeledGraph;

/// Node budget of the branch-and-bound searches.
pub const DEFAULT_NODE_LIMIT: u64 = 20_000_000;

/// A non-negative rational in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: u64,
    den: u64,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Fraction {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        let g = gcd(num, den).max(1);
        Fraction { num: num / g, den: den / g }
    }

    pub const ZERO: Fraction = Fraction { num: 0, den: 1 };
    pub const ONE: Fraction = Fraction { num: 1, den: 1 };

    /// `2^-k`.
    pub fn inverse_power_of_two(k: u32) -> Self {
        Fraction::new(1, 1u64 << k)
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("num", &self.num)?;
        m.serialize_entry("den", &self.den)?;
        m.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    R,
    Dlin,
    D,
}

impl Quantity {
    pub fn name(&self) -> &'static str {
        match self {
            Quantity::R => "r",
            Quantity::Dlin => "dlin",
            Quantity::D => "d",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtremalValue {
    Unbounded,
    Integer(u64),
    /// The color search exhausted its palette: the value exceeds this.
    GreaterThan(u64),
    Density(Fraction),
    Bracket { lower: Fraction, upper: Fraction },
}

impl ExtremalValue {
    /// Bounds on a density value.
    pub fn density_interval(&self) -> Option<(Fraction, Fraction)> {
        match *self {
            ExtremalValue::Density(f) => Some((f, f)),
            ExtremalValue::Bracket { lower, upper } => Some((lower, upper)),
            _ => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, ExtremalValue::GreaterThan(_) | ExtremalValue::Bracket { .. })
    }
}

impl Serialize for ExtremalValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtremalValue::Unbounded => s.serialize_str("unbounded"),
            ExtremalValue::Integer(k) => s.serialize_u64(*k),
            ExtremalValue::GreaterThan(k) => {
                let mut m = s.serialize_map(Some(1))?;
                m.serialize_entry("greater_than", k)?;
                m.end()
            }
            ExtremalValue::Density(f) => f.serialize(s),
            ExtremalValue::Bracket { lower, upper } => {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("lower", lower)?;
                m.serialize_entry("upper", upper)?;
                m.end()
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Coloring(EdgeColoring),
    Matrix(ParityCheckMatrix),
    Code(Vec<LabeledGraph>),
}

#[derive(Clone, Debug)]
pub struct ExtremalResult {
    pub quantity: Quantity,
    pub pattern: LabeledGraph,
    pub n: usize,
    pub value: ExtremalValue,
    pub certificate: Option<Certificate>,
    /// Convention applied to a degenerate pattern, if any.
    pub note: Option<&'static str>,
}

/// Copies of `h` in `K_n` as sorted edge masks; empty when `h` does not fit.
pub(crate) fn copy_masks(h: &LabeledGraph, n: usize) -> Result<Vec<u64>> {
    if h.vertex_count() > n {
        return Ok(Vec::new());
    }
    Ok(CopyFamily::new(h, n)?.masks())
}

pub(crate) const NOTE_NO_COPIES: &str = "the pattern does not fit, so K_n has no copies";
pub(crate) const NOTE_EMPTY_COPY: &str =
    "edgeless pattern: the empty graph is a copy, so every subspace and every coloring contains one";

/// Tri-state outcome of one inequality on one instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    /// Only brackets are known and they do not decide the comparison.
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceCheck {
    pub h: Vec<(usize, usize)>,
    pub n: usize,
    pub r: Option<ExtremalValue>,
    pub dlin: Option<ExtremalValue>,
    pub d: Option<ExtremalValue>,
    /// `d^lin <= 1/r`.
    pub dlin_at_most_inverse_r: Option<Verdict>,
    /// `d >= d^lin`.
    pub d_at_least_dlin: Option<Verdict>,
    /// Whether `d = d^lin`, reported as data.
    pub d_equals_dlin: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityReport {
    pub instances: Vec<InstanceCheck>,
    pub failures: usize,
    pub undetermined: usize,
}

impl InequalityReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// `d^lin <= 1/r` given bounds on `d^lin` and the value of `r`.
fn check_inverse_r(dlin: (Fraction, Fraction), r: ExtremalValue) -> Verdict {
    let (lo, hi) = dlin;
    // 1/r as an interval [a, b]
    let (a, b) = match r {
        ExtremalValue::Unbounded => (Fraction::ZERO, Fraction::ZERO),
        ExtremalValue::Integer(k) => (Fraction::new(1, k), Fraction::new(1, k)),
        ExtremalValue::GreaterThan(k) => (Fraction::ZERO, Fraction::new(1, k + 1)),
        _ => return Verdict::Undetermined,
    };
    if hi <= a {
        Verdict::Holds
    } else if lo > b {
        Verdict::Fails
    } else {
        Verdict::Undetermined
    }
}

fn check_order(small: (Fraction, Fraction), large: (Fraction, Fraction)) -> Verdict {
    if small.1 <= large.0 {
        Verdict::Holds
    } else if small.0 > large.1 {
        Verdict::Fails
    } else {
        Verdict::Undetermined
    }
}

/// Checks `d^lin <= 1/r` and `d >= d^lin` on every `(h, n)` present in `results`.
pub fn check_inequalities(results: &[ExtremalResult]) -> InequalityReport {
    let mut keys: Vec<(LabeledGraph, usize)> = Vec::new();
    for res in results {
        if !keys.iter().any(|(h, n)| *h == res.pattern && *n == res.n) {
            keys.push((res.pattern.clone(), res.n));
        }
    }
    let mut instances = Vec::new();
    for (pattern, n) in keys {
        let find = |q: Quantity| {
            results
                .iter()
                .find(|r| r.quantity == q && r.n == n && r.pattern == pattern)
                .map(|r| r.value)
        };
        let (r, dlin, d) = (find(Quantity::R), find(Quantity::Dlin), find(Quantity::D));
        let dlin_i = dlin.and_then(|v| v.density_interval());
        let d_i = d.and_then(|v| v.density_interval());
        instances.push(InstanceCheck {
            h: pattern.edge_list(),
            n,
            r,
            dlin,
            d,
            dlin_at_most_inverse_r: dlin_i.zip(r).map(|(x, r)| check_inverse_r(x, r)),
            d_at_least_dlin: dlin_i.zip(d_i).map(|(a, b)| check_order(a, b)),
            d_equals_dlin: match (dlin, d) {
                (Some(ExtremalValue::Density(a)), Some(ExtremalValue::Density(b))) => Some(a == b),
                _ => None,
            },
        });
    }
    let verdicts = || {
        instances
            .iter()
            .flat_map(|i| [i.dlin_at_most_inverse_r, i.d_at_least_dlin])
            .flatten()
    };
    let failures = verdicts().filter(|v| *v == Verdict::Fails).count();
    let undetermined = verdicts().filter(|v| *v == Verdict::Undetermined).count();
    InequalityReport { instances, failures, undetermined }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fractions() {
        assert_eq!(Fraction::new(32, 64), Fraction::new(1, 2));
        assert!(Fraction::new(1, 3) < Fraction::new(1, 2));
        assert_eq!(serde_json::to_string(&Fraction::new(2, 4)).unwrap(), r#"{"num":1,"den":2}"#);
        assert_eq!(serde_json::to_string(&ExtremalValue::Unbounded).unwrap(), r#""unbounded""#);
        assert_eq!(serde_json::to_string(&ExtremalValue::Integer(3)).unwrap(), "3");
    }

    #[test]
    fn inequality_verdicts() {
        let half = (Fraction::new(1, 2), Fraction::new(1, 2));
        assert_eq!(check_inverse_r(half, ExtremalValue::Integer(2)), Verdict::Holds);
        assert_eq!(check_inverse_r(half, ExtremalValue::Integer(3)), Verdict::Fails);
        assert_eq!(check_inverse_r((Fraction::ZERO, Fraction::ZERO), ExtremalValue::Unbounded), Verdict::Holds);
        assert_eq!(check_order(half, (Fraction::new(1, 4), Fraction::new(1, 4))), Verdict::Fails);
        assert_eq!(check_order((Fraction::new(1, 4), Fraction::new(1, 2)), (Fraction::new(1, 3), Fraction::ONE)), Verdict::Undetermined);
    }
}
