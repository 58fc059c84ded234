//! Constructive checks of the matrix identities behind the bounds.
//!
//! Every check returns a report carrying the measured residuals next to the
//! tolerance they were held to, so callers can print or export them.

mod coloring;
mod conversion;
mod loan;
mod majorization;
mod ortho;
mod pinching;

use num_complex::Complex64;

pub use coloring::Coloring;
pub use conversion::{build_conversion, conversion_residual, CertificateExport, ColoringCertificate, Turns};
pub use loan::{verify_loan_identity, LoanReport};
pub use majorization::{verify_majorization_step, MajorizationReport};
pub use ortho::{check_ortho_representation, OrthoCheck, OrthoRepresentation};
pub use pinching::{pinch, pinch_via_unitaries, pinching_corollary_check, pinching_corollary_sums, PinchingInstance};

/// `exp(2πi · num/den)`, with `num` reduced modulo `den` first so that whole
/// turns are exactly 1.
pub(crate) fn root_of_unity(num: usize, den: usize) -> Complex64 {
    let r = num % den;
    if r == 0 {
        return Complex64::new(1.0, 0.0);
    }
    Complex64::from_polar(1.0, std::f64::consts::TAU * r as f64 / den as f64)
}

/// Diagonal of `U_s = diag(ω^{s · colors[k]})`, `ω = exp(2πi / c)`.
pub(crate) fn coloring_unitary(col: &Coloring, s: usize) -> Vec<Complex64> {
    col.colors().iter().map(|&k| root_of_unity(s * k, col.c())).collect()
}
