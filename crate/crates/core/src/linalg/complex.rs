use num_complex::Complex64;

use super::{eigenvalues_sym, Spectrum, SpectrumKind, SymmetricMatrix, UNITARY_TOL};
use crate::error::{Error, Result};

/// Pairing tolerance when folding the doubled spectrum of the real embedding.
const EMBEDDING_PAIR_TOL: f64 = 1e-7;

/// Dense complex square matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(n: usize) -> Self {
        ComplexMatrix { n, data: vec![Complex64::new(0.0, 0.0); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_diagonal(&vec![Complex64::new(1.0, 0.0); n])
    }

    pub fn from_diagonal(diag: &[Complex64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(n);
        for k in 0..n {
            for l in 0..n {
                m.data[k * n + l] = f(k, l);
            }
        }
        m
    }

    pub fn from_real(a: &SymmetricMatrix) -> Self {
        Self::from_fn(a.n(), |k, l| Complex64::new(a.get(k, l), 0.0))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, k: usize, l: usize) -> Complex64 {
        self.data[k * self.n + l]
    }

    pub fn set(&mut self, k: usize, l: usize, v: Complex64) {
        self.data[k * self.n + l] = v;
    }

    pub fn diagonal(&self) -> Vec<Complex64> {
        (0..self.n).map(|i| self.get(i, i)).collect()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |k, l| self.get(l, k).conj())
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for k in 0..n {
            for j in 0..n {
                let a = self.data[k * n + j];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for l in 0..n {
                    out.data[k * n + l] += a * other.data[j * n + l];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        ComplexMatrix { n: self.n, data: self.data.iter().map(|&z| z * s).collect() }
    }

    fn zip(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        ComplexMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `max |x_kl - conj(x_lk)|`.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for k in 0..self.n {
            for l in k..self.n {
                worst = worst.max((self.get(k, l) - self.get(l, k).conj()).norm());
            }
        }
        worst
    }

    /// Exact Hermitian symmetry, no tolerance.
    pub fn is_hermitian(&self) -> bool {
        self.hermitian_deviation() == 0.0
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|k| (0..self.n).all(|l| k == l || self.get(k, l) == Complex64::new(0.0, 0.0)))
    }

    /// Real part, provided the imaginary part vanishes within `tol` and the
    /// real part is symmetric within `tol`. Upper triangle wins.
    pub fn to_real_symmetric(&self, tol: f64) -> Result<SymmetricMatrix> {
        let dev = self.hermitian_deviation();
        let imag = self.data.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
        if dev > tol || imag > tol {
            return Err(Error::domain(format!(
                "matrix is not real symmetric (hermitian deviation {dev:e}, max imaginary {imag:e})"
            )));
        }
        SymmetricMatrix::from_fn(self.n, |k, l| self.get(k, l).re)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

fn check_unit_modulus(diag: &[Complex64]) -> Result<()> {
    for (k, z) in diag.iter().enumerate() {
        let dev = (z.norm() - 1.0).abs();
        if dev > UNITARY_TOL || !dev.is_finite() {
            return Err(Error::domain(format!(
                "diagonal entry {k} has modulus {} (not unit within {UNITARY_TOL:e})",
                z.norm()
            )));
        }
    }
    Ok(())
}

/// `u† x u` for a diagonal unitary `u`, computed entrywise as
/// `conj(u_kk) x_kl u_ll`.
pub fn conjugate(u: &ComplexMatrix, x: &ComplexMatrix) -> Result<ComplexMatrix> {
    if !u.is_diagonal() {
        return Err(Error::domain("conjugating matrix is not diagonal"));
    }
    conjugate_diagonal(&u.diagonal(), x)
}

/// [`conjugate`] with the diagonal passed directly.
pub fn conjugate_diagonal(u: &[Complex64], x: &ComplexMatrix) -> Result<ComplexMatrix> {
    if u.len() != x.n() {
        return Err(Error::domain("dimension mismatch in conjugation"));
    }
    check_unit_modulus(u)?;
    Ok(ComplexMatrix::from_fn(x.n(), |k, l| u[k].conj() * x.get(k, l) * u[l]))
}

/// Eigenvalues of a Hermitian matrix through the real symmetric embedding
/// `[[Re X, -Im X], [Im X, Re X]]`, whose spectrum is that of `X` with every
/// eigenvalue doubled.
///
/// The upper triangle of `x` is authoritative; `x` must be Hermitian within
/// `1e-9 * max(1, ||x||_F)`.
pub fn hermitian_eigenvalues(x: &ComplexMatrix) -> Result<Spectrum> {
    let n = x.n();
    let scale = x.frobenius_norm().max(1.0);
    if !x.is_finite() {
        return Err(Error::domain("non-finite entry in Hermitian matrix"));
    }
    let dev = x.hermitian_deviation();
    if dev > 1e-9 * scale {
        return Err(Error::domain(format!("matrix is not Hermitian (deviation {dev:e})")));
    }
    let embedded = SymmetricMatrix::from_fn(2 * n, |r, c| {
        // r <= c here
        match (r < n, c < n) {
            (true, true) => x.get(r, c).re,
            (true, false) => -x.get(r, c - n).im,
            (false, false) => x.get(r - n, c - n).re,
            (false, true) => unreachable!("upper triangle only"),
        }
    })?;
    let doubled = eigenvalues_sym(&embedded)?;
    let vals = doubled.values();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let (a, b) = (vals[2 * i], vals[2 * i + 1]);
        if (a - b).abs() > EMBEDDING_PAIR_TOL * scale {
            return Err(Error::Numeric(format!(
                "embedded eigenvalues {a} and {b} failed to pair"
            )));
        }
        out.push(a);
    }
    Ok(Spectrum::from_unsorted(SpectrumKind::Custom, out))
}
