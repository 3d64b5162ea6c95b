//! Edge colorings, graph codes and even decompositions in the edge space of `K_n`.
//!
//! Graphs on `[n]` are vectors over GF(2) indexed by the edges of `K_n`
//! (see [`graph::pair_index`]). A code is *H-free* when no element, or no sum
//! of two elements, is a copy of a pattern `H`. The crate provides
//!
//! - [`coloring`]: edge colorings and a search for even-chromatic copies,
//! - [`codes`]: parity-check matrices, short-sum-free vector families and
//!   the complement-map code,
//! - [`decomp`]: even decompositions, exact and randomized,
//! - [`extremal`]: exact values of the three extremal functions on tiny hosts,
//! - [`bounds`]: the main terms of the asymptotic bounds,
//! - [`formats`] and [`cli`]: text formats and the command line.

pub mod bits;
pub mod bounds;
pub mod cli;
pub mod codes;
pub mod coloring;
pub mod copies;
pub mod decomp;
pub mod error;
pub mod extremal;
pub mod formats;
pub mod graph;

pub use bits::BitVector;
pub use codes::{
    code_from_coloring, greedy_vector_family, random_code_search, verify_h_free, ComplementMapCode,
    ParityCheckMatrix, VectorFamily,
};
pub use coloring::{admits_even_chromatic_copy, build_k4_coloring, EdgeColoring};
pub use copies::CopyFamily;
pub use decomp::{find_even_decomposition, is_even_decomposition, run_greedy_algorithm, EvenDecomposition};
pub use error::{Error, Result};
pub use graph::{graph_sum, is_copy_of, Embedding, LabeledGraph};
