//! The nine-step randomized decomposition procedure.
//!
//! `[n]` is split into `A = 0..m` and `B = m..n`. Each `v ∈ A` owns a disjoint
//! slice `P_v` of `B` (sizes as equal as possible, ascending order) and `Q_v`
//! is the first `q` elements of `P_v`. The seed only drives the search for
//! the reserved independent set `X ⊂ A`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{is_even_decomposition, EvenDecomposition};
use crate::bits::BitVector;
use crate::error::{invalid, Result};
use crate::graph::LabeledGraph;

/// Restarts of the greedy search for `X`.
const X_RESTARTS: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AlgorithmParams {
    pub n: usize,
    pub p: usize,
    pub m: usize,
    pub q: usize,
    pub x_size: usize,
    #[serde(skip)]
    pub seed: u64,
}

/// `ceil(2 log_{4/3} n)`.
fn default_p(n: usize) -> usize {
    if n <= 1 {
        return 0;
    }
    (2.0 * (n as f64).ln() / (4.0f64 / 3.0).ln()).ceil() as usize
}

/// `floor(sqrt(log2 m) / 2)`, i.e. the largest `q` with `2^(4 q^2) <= m`.
fn default_q(m: usize) -> usize {
    let mut q = 0usize;
    while 4 * (q + 1) * (q + 1) < usize::BITS as usize && (1usize << (4 * (q + 1) * (q + 1))) <= m {
        q += 1;
    }
    q
}

impl AlgorithmParams {
    /// Parameters as the procedure defines them, with `x_size = 2q^2`.
    pub fn for_n(n: usize, seed: u64) -> Self {
        let p = default_p(n);
        let m = n / (p + 1);
        let q = default_q(m);
        AlgorithmParams { n, p, m, q, x_size: 2 * q * q, seed }
    }

    /// Smallest `n` at which the defaults give `q >= 1`.
    pub fn smallest_runnable_n() -> usize {
        (2..).find(|&n| Self::for_n(n, 0).q >= 1).unwrap()
    }

    pub fn validate(&self) -> Result<()> {
        if self.p < 1 || self.m < 1 || self.q < 1 {
            return invalid(format!(
                "parameters p = {}, m = {}, q = {} must all be at least 1",
                self.p, self.m, self.q
            ));
        }
        if self.m > self.n || (self.n - self.m) / self.m < self.q {
            return invalid(format!(
                "B has {} vertices, too few for {} helper sets of size at least q = {}",
                self.n.saturating_sub(self.m),
                self.m,
                self.q
            ));
        }
        Ok(())
    }

    /// The helper set `P_v` for `v ∈ A`.
    pub fn helper_set(&self, v: usize) -> std::ops::Range<usize> {
        let b = self.n - self.m;
        let (base, extra) = (b / self.m, b % self.m);
        let start = self.m + v * base + v.min(extra);
        let len = base + usize::from(v < extra);
        start..start + len
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Success,
    Failure,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Removal {
    pub step: u8,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub outcome: Outcome,
    pub failed_step: Option<u8>,
    pub seed: u64,
    pub params: AlgorithmParams,
    pub removals: Vec<Removal>,
    #[serde(skip)]
    pub decomposition: Option<EvenDecomposition>,
}

impl RunReport {
    pub fn succeeded(&self) -> bool {
        self.outcome == Outcome::Success
    }
}

struct State {
    adj: Vec<BitVector>,
    alive: BitVector,
    deg: Vec<usize>,
    removals: Vec<Removal>,
}

impl State {
    fn new(g: &LabeledGraph) -> Self {
        State {
            adj: g.adjacency(),
            alive: BitVector::ones(g.vertex_count()),
            deg: g.degrees(),
            removals: Vec::new(),
        }
    }

    fn remove(&mut self, step: u8, vertices: Vec<usize>) {
        for &x in &vertices {
            self.alive.set(x, false);
        }
        for &x in &vertices {
            for y in self.adj[x].ones_iter() {
                if self.alive.get(y) {
                    self.deg[y] -= 1;
                }
            }
        }
        self.removals.push(Removal { step, vertices });
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].get(v)
    }

    /// Removes `v` alone if its degree is even, else with an odd-degree
    /// non-neighbor from `helpers` (smallest first).
    fn clean(&mut self, step: u8, v: usize, helpers: impl IntoIterator<Item = usize>) -> bool {
        if self.deg[v].is_multiple_of(2) {
            self.remove(step, vec![v]);
            return true;
        }
        let partner = helpers
            .into_iter()
            .find(|&w| w != v && self.alive.get(w) && self.deg[w] % 2 == 1 && !self.adjacent(v, w));
        match partner {
            Some(w) => {
                self.remove(step, vec![v, w]);
                true
            }
            None => false,
        }
    }
}

/// Greedy independent set of the requested size inside `0..m`, over seeded random orders.
fn reserve_x(state: &State, m: usize, size: usize, rng: &mut ChaCha8Rng) -> Option<Vec<usize>> {
    let mut order: Vec<usize> = (0..m).collect();
    for _ in 0..X_RESTARTS {
        order.shuffle(rng);
        let mut chosen: Vec<usize> = Vec::with_capacity(size);
        for &v in &order {
            if chosen.len() == size {
                break;
            }
            if chosen.iter().all(|&u| !state.adjacent(u, v)) {
                chosen.push(v);
            }
        }
        if chosen.len() == size {
            chosen.sort_unstable();
            return Some(chosen);
        }
    }
    None
}

/// Runs Steps 1 to 9 on `g`; a failing step is an outcome, not an error.
pub fn run_greedy_algorithm(g: &LabeledGraph, params: &AlgorithmParams) -> Result<RunReport> {
    params.validate()?;
    if g.vertex_count() != params.n {
        return invalid(format!("graph has {} vertices, parameters are for n = {}", g.vertex_count(), params.n));
    }
    let mut state = State::new(g);
    let mut report = RunReport {
        outcome: Outcome::Failure,
        failed_step: None,
        seed: params.seed,
        params: *params,
        removals: Vec::new(),
        decomposition: None,
    };
    let failed = run_steps(&mut state, params).err();
    report.removals = std::mem::take(&mut state.removals);
    match failed {
        Some(step) => report.failed_step = Some(step),
        None => {
            let layers: Vec<Vec<usize>> = report.removals.iter().map(|r| r.vertices.clone()).collect();
            let d = EvenDecomposition::from_layers(params.n, &layers);
            assert!(is_even_decomposition(g, &d)?, "a completed run must produce a valid decomposition");
            report.outcome = Outcome::Success;
            report.decomposition = Some(d);
        }
    }
    Ok(report)
}

fn run_steps(state: &mut State, params: &AlgorithmParams) -> std::result::Result<(), u8> {
    let AlgorithmParams { n, m, q, .. } = *params;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);

    // Step 1
    let x = reserve_x(state, m, params.x_size, &mut rng).ok_or(1u8)?;
    let mut in_x = vec![false; n];
    for &v in &x {
        in_x[v] = true;
    }
    // Step 2
    let a = (0..m).find(|&v| !in_x[v]).ok_or(2u8)?;
    // Step 3
    for v in (0..m).filter(|&v| !in_x[v] && v != a) {
        if !state.clean(3, v, params.helper_set(v)) {
            return Err(3);
        }
    }
    // Step 4
    let qa = {
        let p = params.helper_set(a);
        p.start..p.start + q
    };
    if !state.clean(4, a, qa.clone()) {
        return Err(4);
    }
    // Step 5
    let mut c: Vec<usize> = (m..n).filter(|&v| !qa.contains(&v) && state.alive.get(v)).collect();
    while c.len() > q {
        let i = c.iter().position(|&v| state.deg[v].is_multiple_of(2)).ok_or(5u8)?;
        let v = c.remove(i);
        state.remove(5, vec![v]);
    }
    // Step 6
    let y: Vec<usize> = (m..n).filter(|&v| state.alive.get(v)).collect();
    if x.len() < q * y.len() {
        return Err(6);
    }
    let blocks: Vec<&[usize]> = x.chunks(q).collect();
    // Step 7
    let b = *y.first().ok_or(7u8)?;
    // Step 8
    for (i, &v) in y.iter().enumerate().skip(1) {
        if !state.clean(8, v, blocks[i].iter().copied()) {
            return Err(8);
        }
    }
    // Step 9
    if state.deg[b] % 2 == 1 {
        return Err(9);
    }
    state.remove(9, vec![b]);
    let rest: Vec<usize> = x.iter().copied().filter(|&v| state.alive.get(v)).collect();
    if !rest.is_empty() {
        state.remove(9, rest);
    }
    Ok(())
}
