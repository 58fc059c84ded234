//! Orthogonal representations with unit-modulus entries, checked both as
//! inner products and through the diagonal unitaries they define.

use num_complex::Complex64;
use serde::Serialize;

use super::{root_of_unity, Coloring};
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, SymmetricMatrix, UNITARY_TOL};

#[derive(Clone, Debug, PartialEq)]
pub struct OrthoRepresentation {
    vectors: Vec<Vec<Complex64>>,
    d: usize,
}

impl OrthoRepresentation {
    pub fn new(vectors: Vec<Vec<Complex64>>) -> Result<Self> {
        let d = vectors.first().map_or(0, Vec::len);
        if d == 0 {
            return Err(Error::domain("representation needs dimension at least 1"));
        }
        for (k, v) in vectors.iter().enumerate() {
            if v.len() != d {
                return Err(Error::domain(format!("vector {k} has dimension {}, expected {d}", v.len())));
            }
            if let Some(s) = v.iter().position(|z| (z.norm() - 1.0).abs() > UNITARY_TOL) {
                return Err(Error::domain(format!("entry {s} of vector {k} has modulus {}", v[s].norm())));
            }
        }
        Ok(OrthoRepresentation { vectors, d })
    }

    /// `Ψ_k = (ω^{colors[k]·1}, ..., ω^{colors[k]·c})`.
    pub fn from_coloring(col: &Coloring) -> Self {
        let c = col.c();
        let vectors = col.colors().iter().map(|&k| (1..=c).map(|s| root_of_unity(k * s, c)).collect()).collect();
        OrthoRepresentation { vectors, d: c }
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn vectors(&self) -> &[Vec<Complex64>] {
        &self.vectors
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrthoCheck {
    pub valid: bool,
    /// Largest `|⟨Ψ_k, Ψ_l⟩|` over edges.
    pub max_edge_inner: f64,
    /// Largest deviation of `Σ_s U_s†U_s` from the identity.
    pub resolution_deviation: f64,
    /// Largest `|(Σ_s U_s†AU_s)_kl| / |a_kl|` over edges.
    pub max_conjugation_entry: f64,
    pub inner_test: bool,
    pub unitary_test: bool,
}

pub fn check_ortho_representation(a: &SymmetricMatrix, rep: &OrthoRepresentation) -> Result<OrthoCheck> {
    let n = a.n();
    if rep.vectors.len() != n {
        return Err(Error::domain(format!("{} vectors for a matrix of order {n}", rep.vectors.len())));
    }
    let d = rep.d;
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|k| (k + 1..n).map(move |l| (k, l))).filter(|&(k, l)| a.get(k, l) != 0.0).collect();

    let inner = |k: usize, l: usize| -> Complex64 {
        rep.vectors[k].iter().zip(&rep.vectors[l]).map(|(x, y)| x.conj() * y).sum()
    };
    let max_edge_inner = edges.iter().map(|&(k, l)| inner(k, l).norm()).fold(0.0, f64::max);
    let inner_test = max_edge_inner <= 1e-9 * d as f64;

    let scale = 1.0 / (d as f64).sqrt();
    let x = ComplexMatrix::from_real(a);
    let mut resolution = ComplexMatrix::zeros(n);
    let mut conj_sum = ComplexMatrix::zeros(n);
    for s in 0..d {
        let u: Vec<Complex64> = rep.vectors.iter().map(|v| v[s] * scale).collect();
        let ud = ComplexMatrix::from_diagonal(&u);
        resolution = resolution.add(&ud.adjoint().matmul(&ud));
        conj_sum = conj_sum.add(&ud.adjoint().matmul(&x).matmul(&ud));
    }
    let resolution_deviation = resolution.max_abs_diff(&ComplexMatrix::identity(n));
    let max_conjugation_entry =
        edges.iter().map(|&(k, l)| conj_sum.get(k, l).norm() / a.get(k, l).abs()).fold(0.0, f64::max);
    let unitary_test = resolution_deviation <= 1e-9 && max_conjugation_entry <= 1e-9;

    Ok(OrthoCheck {
        valid: inner_test,
        max_edge_inner,
        resolution_deviation,
        max_conjugation_entry,
        inner_test,
        unitary_test,
    })
}
