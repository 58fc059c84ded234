//! The identity `Σ_{s<c} U_s†(B − A)U_s = (c − 1)B + A` for diagonal `B` and
//! its Ky-Fan consequences.

use serde::Serialize;

use super::{coloring_unitary, Coloring};
use crate::error::{Error, Result};
use crate::linalg::{conjugate_diagonal, eigenvalues_sym, ComplexMatrix, KyFanSums, SymmetricMatrix, PROPERTY_TOL};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MajorizationReport {
    pub c: usize,
    /// `||Σ_{s<c} U_s†(B − A)U_s − ((c − 1)B + A)||_F`.
    pub identity_residual: f64,
    pub identity_tolerance: f64,
    /// Per `m`: `Σ_{i≤m} λ_i(B − A)` and `Σ_{i≤m} λ_i(B + A/(c − 1))`.
    pub left: Vec<f64>,
    pub middle: Vec<f64>,
    /// Per `m`: `Σ_{i≤m} λ_i(B + A) − (c − 2)/(c − 1) Σ_{i≤m} λ_i(A)`.
    pub right: Vec<f64>,
}

impl MajorizationReport {
    pub fn identity_holds(&self) -> bool {
        self.identity_residual <= self.identity_tolerance
    }

    /// Smallest slack `left − middle` over all `m`; negative beyond
    /// `-PROPERTY_TOL` is a failure.
    pub fn spectral_slack(&self) -> f64 {
        self.left.iter().zip(&self.middle).map(|(l, m)| l - m).fold(f64::INFINITY, f64::min)
    }

    pub fn spectral_holds(&self) -> bool {
        self.spectral_slack() >= -PROPERTY_TOL
    }

    pub fn chain_holds(&self) -> bool {
        self.middle.iter().zip(&self.right).all(|(m, r)| *m >= r - PROPERTY_TOL)
    }

    pub fn passes(&self) -> bool {
        self.identity_holds() && self.spectral_holds() && self.chain_holds()
    }
}

pub fn verify_majorization_step(a: &SymmetricMatrix, b_diag: &[f64], col: &Coloring) -> Result<MajorizationReport> {
    let n = a.n();
    if b_diag.len() != n {
        return Err(Error::domain(format!("diagonal has {} entries, matrix order is {n}", b_diag.len())));
    }
    if col.c() < 2 {
        return Err(Error::domain("majorization step needs at least two colors"));
    }
    col.require_proper_for(a)?;
    let c = col.c();
    let b = SymmetricMatrix::diagonal(b_diag)?;
    let b_minus_a = &b - a;

    let x = ComplexMatrix::from_real(&b_minus_a);
    let mut lhs = ComplexMatrix::zeros(n);
    for s in 1..c {
        lhs = lhs.add(&conjugate_diagonal(&coloring_unitary(col, s), &x)?);
    }
    let target = ComplexMatrix::from_real(&(&b.scale((c - 1) as f64) + a));
    let identity_residual = lhs.sub(&target).frobenius_norm();

    let inv = 1.0 / (c - 1) as f64;
    let left = KyFanSums::new(&eigenvalues_sym(&b_minus_a)?);
    let middle = KyFanSums::new(&eigenvalues_sym(&(&b + &a.scale(inv)))?);
    let b_plus_a = KyFanSums::new(&eigenvalues_sym(&(&b + a))?);
    let a_sums = KyFanSums::new(&eigenvalues_sym(a)?);
    let w = (c - 2) as f64 * inv;
    Ok(MajorizationReport {
        c,
        identity_residual,
        identity_tolerance: 1e-9 * c as f64 * b_minus_a.frobenius_norm().max(1.0),
        left: left.as_slice().to_vec(),
        middle: middle.as_slice().to_vec(),
        right: (1..=n).map(|m| b_plus_a.get(m) - w * a_sums.get(m)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, petersen, GraphMatrixKind};
    use crate::oracle::greedy_coloring;

    #[test]
    fn bipartite_sign_flip() {
        let g = cycle(6).unwrap();
        let a = g.matrix(GraphMatrixKind::Adjacency).unwrap();
        let col = Coloring::new(g.bipartition().unwrap(), 2).unwrap();
        let r = verify_majorization_step(&a, &[0.0; 6], &col).unwrap();
        assert!(r.identity_residual < 1e-12);
        assert!(r.passes());
    }

    #[test]
    fn petersen_with_degrees() {
        let g = petersen();
        let a = g.matrix(GraphMatrixKind::Adjacency).unwrap();
        let d: Vec<f64> = g.degrees().iter().map(|&x| x as f64).collect();
        let col = greedy_coloring(&g);
        for b in [d.clone(), vec![0.0; 10], d.iter().map(|x| -x).collect()] {
            let r = verify_majorization_step(&a, &b, &col).unwrap();
            assert!(r.passes(), "{r:?}");
        }
    }

    #[test]
    fn rejects_bad_input() {
        let g = cycle(5).unwrap();
        let a = g.matrix(GraphMatrixKind::Adjacency).unwrap();
        let bad = Coloring::new(vec![0, 1, 0, 1, 0], 2).unwrap();
        assert!(verify_majorization_step(&a, &[0.0; 5], &bad).is_err());
        assert!(verify_majorization_step(&a, &[0.0; 4], &greedy_coloring(&g)).is_err());
    }
}
