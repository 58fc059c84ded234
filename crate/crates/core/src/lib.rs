//! Spectral lower bounds on the chromatic number.
//!
//! The crate evaluates the classical Hoffman-type bounds, their multi-eigenvalue
//! generalizations built from Ky-Fan partial sums, the normalized-adjacency
//! variants and an integer search over the number of colors. Alongside the
//! bounds it builds constructive certificates for the matrix identities they
//! rest on (diagonal root-of-unity conversions of the adjacency matrix,
//! pinching as a unitary mixture) and ships an exact chromatic-number oracle
//! for checking everything on small graphs.
//!
//! Module map:
//!
//! | module | contents |
//! |--------|----------|
//! | [`graph`] | [`Graph`], graph6 / edge-list I/O, generators, `G(n,p)` |
//! | [`linalg`] | Jacobi eigensolver, [`Spectrum`], Ky-Fan sums, complex helpers |
//! | [`bounds`] | every bound, m-sweeps, integer-c search, [`BoundReport`] |
//! | [`certify`] | conversion, majorization-step, LOAN and pinching certificates |
//! | [`oracle`] | exact chromatic number, greedy coloring, small-graph corpora |
//! | [`experiments`] | named-graph comparisons and the random-graph table |

pub mod bounds;
pub mod certify;
mod error;
pub mod experiments;
pub mod graph;
pub mod linalg;
pub mod oracle;

pub use bounds::{full_report, BoundId, BoundReport, BoundValue};
pub use error::{Error, Result};
pub use graph::{Graph, GraphMatrixKind};
pub use linalg::{Spectrum, SymmetricMatrix, PROPERTY_TOL, SPECTRUM_TOL, UNITARY_TOL};
