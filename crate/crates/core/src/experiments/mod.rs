//! Named-graph comparisons, the random-graph table and exhaustive corpus
//! sweeps, with CSV / JSON writers.

mod corpus_check;
mod named;
mod output;
mod random_table;

pub use corpus_check::{corpus_check, corpus_graphs, CorpusFailure, CorpusSummary, FailureKind};
pub use named::{default_named, named_comparison, ComparisonRow, ORACLE_LIMIT};
pub use output::{comparison_csv, random_table_csv, report_json, DisplayMap, JsonBound, JsonReport};
pub use random_table::{bollobas_estimate, random_samples, random_table, RandomTableRow, SampleBounds, MAX_RESEEDS};
