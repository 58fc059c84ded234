//! Dense real-symmetric eigenvalues, Ky-Fan partial sums and the small amount
//! of complex matrix arithmetic the certificates need.

mod complex;
mod eigen;
mod matrix;
mod random;
mod spectrum;

pub use complex::{conjugate, conjugate_diagonal, hermitian_eigenvalues, ComplexMatrix};
pub use eigen::{eigen_decomposition, eigenvalues_sym, EigenDecomposition, MAX_SWEEPS};
pub use matrix::SymmetricMatrix;
pub use random::random_hermitian;
pub use spectrum::{ky_fan, ky_fan_tail, KyFanSums, Spectrum, SpectrumKind};

/// Eigensolver accuracy target, relative to `max(1, ||A||_F)`.
pub const SPECTRUM_TOL: f64 = 1e-9;
/// Allowed deviation from unit modulus for diagonal unitaries and
/// orthogonal-representation entries.
pub const UNITARY_TOL: f64 = 1e-12;
/// Slack for eigenvalue inequalities and for admissibility of bound
/// denominators.
pub const PROPERTY_TOL: f64 = 1e-8;
