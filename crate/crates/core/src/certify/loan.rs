//! The conversion-based route to `χ ≥ 1 + 2E/(2E − nδ_n)`.

use num_complex::Complex64;
use serde::Serialize;

use super::{coloring_unitary, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphMatrixKind};
use crate::linalg::{conjugate_diagonal, eigenvalues_sym, ComplexMatrix, PROPERTY_TOL};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LoanReport {
    pub c: usize,
    /// `||A − ((c − 1)D − Σ_{s<c} U_s Q U_s†)||_F` and its tolerance.
    pub identity_residual: f64,
    pub identity_tolerance: f64,
    /// `v†Av` with `v = (1, ..., 1)/√n`, against `2E/n`.
    pub average_degree_quadratic: f64,
    pub average_degree: f64,
    pub delta_min: f64,
    /// `v†U_s Q U_s†v` for `s = 1..c−1`.
    pub quadratic_forms: Vec<f64>,
}

impl LoanReport {
    pub fn identity_holds(&self) -> bool {
        self.identity_residual <= self.identity_tolerance
    }

    pub fn scalar_holds(&self) -> bool {
        (self.average_degree_quadratic - self.average_degree).abs() <= 1e-9
    }

    pub fn forms_hold(&self) -> bool {
        self.quadratic_forms.iter().all(|&f| f >= self.delta_min - PROPERTY_TOL)
    }

    pub fn inequality_holds(&self) -> bool {
        let d = self.average_degree;
        d <= (self.c - 1) as f64 * (d - self.delta_min) + PROPERTY_TOL
    }

    pub fn passes(&self) -> bool {
        self.identity_holds() && self.scalar_holds() && self.forms_hold() && self.inequality_holds()
    }
}

pub fn verify_loan_identity(g: &Graph, col: &Coloring) -> Result<LoanReport> {
    if g.edge_count() == 0 {
        return Err(Error::domain("the identity needs at least one edge"));
    }
    let a = g.matrix(GraphMatrixKind::Adjacency)?;
    let q = g.matrix(GraphMatrixKind::SignlessLaplacian)?;
    if col.c() < 2 {
        return Err(Error::domain("the identity needs at least two colors"));
    }
    col.require_proper_for(&a)?;
    let n = g.n();
    let c = col.c();

    let qc = ComplexMatrix::from_real(&q);
    let mut sum = ComplexMatrix::zeros(n);
    let mut quadratic_forms = Vec::with_capacity(c - 1);
    for s in 1..c {
        // U Q U† is conjugation by U† on the right
        let u_adj: Vec<Complex64> = coloring_unitary(col, s).iter().map(|z| z.conj()).collect();
        let term = conjugate_diagonal(&u_adj, &qc)?;
        let total: Complex64 = (0..n).flat_map(|k| (0..n).map(move |l| (k, l))).map(|(k, l)| term.get(k, l)).sum();
        quadratic_forms.push(total.re / n as f64);
        sum = sum.add(&term);
    }
    let degrees: Vec<Complex64> = g.degrees().iter().map(|&d| Complex64::new((c - 1) as f64 * d as f64, 0.0)).collect();
    let rebuilt = ComplexMatrix::from_diagonal(&degrees).sub(&sum);
    let identity_residual = rebuilt.sub(&ComplexMatrix::from_real(&a)).frobenius_norm();

    let quad: f64 = a.as_slice().iter().sum::<f64>() / n as f64;
    Ok(LoanReport {
        c,
        identity_residual,
        identity_tolerance: 1e-9 * c as f64 * q.frobenius_norm().max(1.0),
        average_degree_quadratic: quad,
        average_degree: 2.0 * g.edge_count() as f64 / n as f64,
        delta_min: eigenvalues_sym(&q)?.min(),
        quadratic_forms,
    })
}
