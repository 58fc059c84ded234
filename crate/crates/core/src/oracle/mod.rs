//! Exact answers for small graphs: chromatic number, greedy colorings and the
//! exhaustive graph collections used by the soundness sweeps.

mod chromatic;
mod corpus;

pub use chromatic::{chromatic_number, greedy_clique, greedy_coloring, k_coloring, ChromaticResult, MAX_ORACLE_VERTICES};
pub use corpus::{all_graphs, all_labeled_graphs, corpus, MAX_CORPUS_VERTICES, MAX_LABELED_VERTICES};
