//! Cyclic Jacobi eigensolver for dense real symmetric matrices.

use super::{Spectrum, SpectrumKind, SymmetricMatrix};
use crate::error::{Error, Result};

/// Hard cap on full Jacobi sweeps before reporting non-convergence.
pub const MAX_SWEEPS: usize = 60;

/// Stop once the off-diagonal Frobenius norm is at most this times
/// `max(1, ||A||_F)`.
const OFF_DIAGONAL_TOL: f64 = 1e-12;

/// Eigenvalues (non-increasing) with unit eigenvectors stored as columns of
/// `vectors` (`vectors[r][i]` is component `r` of the `i`-th vector).
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

impl EigenDecomposition {
    pub fn vector(&self, i: usize) -> Vec<f64> {
        self.vectors.iter().map(|row| row[i]).collect()
    }

    /// `||A v_i - λ_i v_i||_2` for every pair.
    pub fn residuals(&self, a: &SymmetricMatrix) -> Vec<f64> {
        (0..self.values.len())
            .map(|i| {
                let v = self.vector(i);
                let av = a.mul_vec(&v);
                av.iter()
                    .zip(&v)
                    .map(|(x, y)| (x - self.values[i] * y).powi(2))
                    .sum::<f64>()
                    .sqrt()
            })
            .collect()
    }
}

/// All eigenvalues of `a`, sorted non-increasing.
pub fn eigenvalues_sym(a: &SymmetricMatrix) -> Result<Spectrum> {
    let (values, _) = jacobi(a, false)?;
    Ok(Spectrum::from_unsorted(SpectrumKind::Custom, values))
}

/// Eigenvalues and eigenvectors; used for residual checks.
pub fn eigen_decomposition(a: &SymmetricMatrix) -> Result<EigenDecomposition> {
    let (values, vectors) = jacobi(a, true)?;
    let vectors = vectors.expect("requested");
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[j].total_cmp(&values[i]));
    Ok(EigenDecomposition {
        values: order.iter().map(|&i| values[i]).collect(),
        vectors: (0..n)
            .map(|r| order.iter().map(|&i| vectors[r * n + i]).collect())
            .collect(),
    })
}

fn jacobi(a: &SymmetricMatrix, want_vectors: bool) -> Result<(Vec<f64>, Option<Vec<f64>>)> {
    let n = a.n();
    if n == 0 {
        return Err(Error::domain("eigenvalues of an empty matrix"));
    }
    if let Some(bad) = a.as_slice().iter().find(|x| !x.is_finite()) {
        return Err(Error::domain(format!("non-finite matrix entry {bad}")));
    }
    let mut m = a.as_slice().to_vec();
    let mut v = want_vectors.then(|| {
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        id
    });
    let stop = OFF_DIAGONAL_TOL * a.frobenius_norm().max(1.0);

    for sweep in 0..=MAX_SWEEPS {
        let off = off_diagonal_norm(&m, n);
        if off <= stop {
            let values = (0..n).map(|i| m[i * n + i]).collect();
            return Ok((values, v));
        }
        if sweep == MAX_SWEEPS {
            return Err(Error::Numeric(format!(
                "Jacobi did not converge in {MAX_SWEEPS} sweeps (off-diagonal norm {off:e}, target {stop:e})"
            )));
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut m, v.as_deref_mut(), n, p, q);
            }
        }
    }
    unreachable!("loop returns on the final sweep")
}

fn off_diagonal_norm(m: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for k in 0..n {
        for l in 0..n {
            if k != l {
                s += m[k * n + l] * m[k * n + l];
            }
        }
    }
    s.sqrt()
}

/// Annihilates `m[p][q]` with one plane rotation (Rutishauser's update).
fn rotate(m: &mut [f64], v: Option<&mut [f64]>, n: usize, p: usize, q: usize) {
    let apq = m[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = m[p * n + p];
    let aqq = m[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let tau = s / (1.0 + c);

    m[p * n + p] = app - t * apq;
    m[q * n + q] = aqq + t * apq;
    m[p * n + q] = 0.0;
    m[q * n + p] = 0.0;
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = m[r * n + p];
        let arq = m[r * n + q];
        let new_p = arp - s * (arq + tau * arp);
        let new_q = arq + s * (arp - tau * arq);
        m[r * n + p] = new_p;
        m[p * n + r] = new_p;
        m[r * n + q] = new_q;
        m[q * n + r] = new_q;
    }
    if let Some(v) = v {
        for r in 0..n {
            let vrp = v[r * n + p];
            let vrq = v[r * n + q];
            v[r * n + p] = vrp - s * (vrq + tau * vrp);
            v[r * n + q] = vrq + s * (vrp - tau * vrq);
        }
    }
}
