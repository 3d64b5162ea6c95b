//! Linear and non-linear codes in the edge space of `K_n`.

mod complement;
mod family;
mod matrix;
mod verify;

pub use complement::{
    verify_complement_code_exhaustive, verify_complement_code_sampled, ComplementMapCode, ComplementReport,
    MAX_LISTED_EDGES,
};
pub use family::{
    bch_budget, bit_length, check_independence, greedy_vector_family, irreducible_polynomial, short_subset_count,
    FamilyConstruction, IndependenceCheck, VectorFamily, EXHAUSTIVE_SUBSET_LIMIT, SAMPLED_SUBSETS,
};
pub use matrix::{kernel_dimension, ParityCheckMatrix};
pub use verify::{
    code_from_coloring, code_summary, random_code_search, random_matrix, verify_h_free, CodeSummary, FreeCheck,
    RandomCodeFind, RNG_NAME,
};
