use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

/// Dense real symmetric matrix, row-major.
///
/// Every write goes to both `(k, l)` and `(l, k)`, so symmetry is exact.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> Self {
        SymmetricMatrix { n, data: vec![0.0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![1.0; n]).expect("finite")
    }

    pub fn diagonal(diag: &[f64]) -> Result<Self> {
        Self::from_fn(diag.len(), |k, l| if k == l { diag[k] } else { 0.0 })
    }

    /// Evaluates `f(k, l)` for `k <= l` only and mirrors the result.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        let mut m = Self::zeros(n);
        for k in 0..n {
            for l in k..n {
                let v = f(k, l);
                if !v.is_finite() {
                    return Err(Error::domain(format!("non-finite entry {v} at ({k}, {l})")));
                }
                m.data[k * n + l] = v;
                m.data[l * n + k] = v;
            }
        }
        Ok(m)
    }

    /// Builds from full rows; the rows must already be exactly symmetric.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::domain("rows do not form a square matrix"));
        }
        for k in 0..n {
            for l in k + 1..n {
                if rows[k][l] != rows[l][k] {
                    return Err(Error::domain(format!("entry ({k}, {l}) differs from ({l}, {k})")));
                }
            }
        }
        Self::from_fn(n, |k, l| rows[k][l])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, k: usize, l: usize) -> f64 {
        self.data[k * self.n + l]
    }

    pub fn set(&mut self, k: usize, l: usize, v: f64) {
        self.data[k * self.n + l] = v;
        self.data[l * self.n + k] = v;
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.n.max(1)).map(<[f64]>::to_vec).collect()
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn diag(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.get(i, i)).collect()
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map(|x| x * s)
    }

    fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        SymmetricMatrix { n: self.n, data: self.data.iter().map(|&x| f(x)).collect() }
    }

    fn zip(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        SymmetricMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    /// `self * v`.
    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        self.data
            .chunks(self.n)
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }
}

impl Add for &SymmetricMatrix {
    type Output = SymmetricMatrix;
    fn add(self, rhs: Self) -> SymmetricMatrix {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &SymmetricMatrix {
    type Output = SymmetricMatrix;
    fn sub(self, rhs: Self) -> SymmetricMatrix {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Mul<f64> for &SymmetricMatrix {
    type Output = SymmetricMatrix;
    fn mul(self, s: f64) -> SymmetricMatrix {
        self.scale(s)
    }
}
