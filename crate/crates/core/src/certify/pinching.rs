//! Pinching `C(X) = Σ_a P_a X P_a` and its realization as the average of
//! the conjugations by `U_s = Σ_a ω^{a·s} P_a`.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{root_of_unity, Coloring};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, ComplexMatrix, KyFanSums, PROPERTY_TOL};

const PROJECTOR_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct PinchingInstance {
    projectors: Vec<ComplexMatrix>,
    test_matrix: ComplexMatrix,
}

impl PinchingInstance {
    pub fn new(projectors: Vec<ComplexMatrix>, test_matrix: ComplexMatrix) -> Result<Self> {
        let n = test_matrix.n();
        if projectors.is_empty() {
            return Err(Error::domain("pinching needs at least one projector"));
        }
        let mut total = ComplexMatrix::zeros(n);
        for (a, p) in projectors.iter().enumerate() {
            if p.n() != n {
                return Err(Error::domain(format!("projector {a} has order {}, expected {n}", p.n())));
            }
            if p.hermitian_deviation() > PROJECTOR_TOL {
                return Err(Error::domain(format!("projector {a} is not Hermitian")));
            }
            if p.matmul(p).max_abs_diff(p) > PROJECTOR_TOL {
                return Err(Error::domain(format!("projector {a} is not idempotent")));
            }
            total = total.add(p);
        }
        if total.max_abs_diff(&ComplexMatrix::identity(n)) > PROJECTOR_TOL {
            return Err(Error::domain("projectors do not sum to the identity"));
        }
        Ok(PinchingInstance { projectors, test_matrix })
    }

    /// Coordinate projectors onto the color classes.
    pub fn from_coloring(col: &Coloring, test_matrix: ComplexMatrix) -> Result<Self> {
        if col.len() != test_matrix.n() {
            return Err(Error::domain("coloring length differs from matrix order"));
        }
        let projectors = (0..col.c())
            .map(|a| {
                let d: Vec<Complex64> =
                    col.colors().iter().map(|&k| Complex64::new(if k == a { 1.0 } else { 0.0 }, 0.0)).collect();
                ComplexMatrix::from_diagonal(&d)
            })
            .collect();
        Self::new(projectors, test_matrix)
    }

    /// Projectors onto consecutive blocks of a random orthonormal basis,
    /// and a random Hermitian test matrix.
    pub fn random(block_sizes: &[usize], seed: u64) -> Result<Self> {
        let n: usize = block_sizes.iter().sum();
        if n == 0 || block_sizes.contains(&0) {
            return Err(Error::domain("block sizes must be positive"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let draw = |rng: &mut ChaCha8Rng| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(n);
        while basis.len() < n {
            let mut v: Vec<Complex64> = (0..n).map(|_| draw(&mut rng)).collect();
            // two passes of modified Gram-Schmidt
            for _ in 0..2 {
                for b in &basis {
                    let proj: Complex64 = b.iter().zip(&v).map(|(x, y)| x.conj() * y).sum();
                    v.iter_mut().zip(b).for_each(|(y, x)| *y -= proj * x);
                }
            }
            let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm > 1e-6 {
                basis.push(v.into_iter().map(|z| z / norm).collect());
            }
        }
        let mut projectors = Vec::with_capacity(block_sizes.len());
        let mut start = 0;
        for &size in block_sizes {
            let block = &basis[start..start + size];
            projectors.push(ComplexMatrix::from_fn(n, |k, l| block.iter().map(|b| b[k] * b[l].conj()).sum()));
            start += size;
        }
        let mut x = ComplexMatrix::zeros(n);
        for k in 0..n {
            x.set(k, k, Complex64::new(rng.gen_range(-1.0..1.0), 0.0));
            for l in k + 1..n {
                let z = draw(&mut rng);
                x.set(k, l, z);
                x.set(l, k, z.conj());
            }
        }
        Self::new(projectors, x)
    }

    pub fn projectors(&self) -> &[ComplexMatrix] {
        &self.projectors
    }

    pub fn test_matrix(&self) -> &ComplexMatrix {
        &self.test_matrix
    }

    pub fn c(&self) -> usize {
        self.projectors.len()
    }
}

pub fn pinch(inst: &PinchingInstance) -> ComplexMatrix {
    let x = &inst.test_matrix;
    inst.projectors
        .iter()
        .fold(ComplexMatrix::zeros(x.n()), |acc, p| acc.add(&p.matmul(x).matmul(p)))
}

pub fn pinch_via_unitaries(inst: &PinchingInstance) -> ComplexMatrix {
    let c = inst.c();
    let x = &inst.test_matrix;
    let mut sum = ComplexMatrix::zeros(x.n());
    for s in 1..=c {
        let u = inst
            .projectors
            .iter()
            .enumerate()
            .fold(ComplexMatrix::zeros(x.n()), |acc, (i, p)| acc.add(&p.scale(root_of_unity((i + 1) * s, c))));
        sum = sum.add(&u.matmul(x).matmul(&u.adjoint()));
    }
    sum.scale(Complex64::new(1.0 / c as f64, 0.0))
}

/// Per `m`: `Σ_{i≤m} λ_i(X)` and `Σ_{i≤m} λ_i(c/(c−1) C(X) − X/(c−1))`.
pub fn pinching_corollary_sums(inst: &PinchingInstance) -> Result<Vec<(f64, f64)>> {
    let c = inst.c();
    if c < 2 {
        return Err(Error::domain("the corollary needs at least two projectors"));
    }
    let x = &inst.test_matrix;
    let cf = c as f64;
    let y = pinch(inst)
        .scale(Complex64::new(cf / (cf - 1.0), 0.0))
        .sub(&x.scale(Complex64::new(1.0 / (cf - 1.0), 0.0)));
    let lx = KyFanSums::new(&hermitian_eigenvalues(x)?);
    let ly = KyFanSums::new(&hermitian_eigenvalues(&y)?);
    Ok((1..=x.n()).map(|m| (lx.get(m), ly.get(m))).collect())
}

pub fn pinching_corollary_check(inst: &PinchingInstance, m: usize) -> Result<bool> {
    let sums = pinching_corollary_sums(inst)?;
    if m == 0 || m > sums.len() {
        return Err(Error::domain(format!("m = {m} outside 1..={}", sums.len())));
    }
    let (l, r) = sums[m - 1];
    Ok(l >= r - PROPERTY_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{petersen, GraphMatrixKind};
    use crate::oracle::greedy_coloring;

    #[test]
    fn single_projector_is_identity_map() {
        let r = PinchingInstance::random(&[4], 3).unwrap();
        let inst = PinchingInstance::new(vec![ComplexMatrix::identity(4)], r.test_matrix().clone()).unwrap();
        assert!(pinch(&inst).max_abs_diff(inst.test_matrix()) < 1e-12);
        assert!(pinch_via_unitaries(&inst).max_abs_diff(inst.test_matrix()) < 1e-12);
        assert!(pinching_corollary_check(&inst, 1).is_err());
    }

    #[test]
    fn coloring_pinch_of_b_minus_a_is_b() {
        let g = petersen();
        let a = g.matrix(GraphMatrixKind::Adjacency).unwrap();
        let l = g.matrix(GraphMatrixKind::Laplacian).unwrap();
        let inst = PinchingInstance::from_coloring(&greedy_coloring(&g), ComplexMatrix::from_real(&l)).unwrap();
        let d = ComplexMatrix::from_real(&(&l + &a));
        assert!(pinch(&inst).max_abs_diff(&d) < 1e-12);
        assert!(pinch_via_unitaries(&inst).max_abs_diff(&d) < 1e-10);
        for m in 1..=10 {
            assert!(pinching_corollary_check(&inst, m).unwrap());
        }
    }

    #[test]
    fn random_instances_agree() {
        for seed in 0..20 {
            let inst = PinchingInstance::random(&[2, 2, 2], seed).unwrap();
            let tol = 1e-10 * inst.test_matrix().frobenius_norm();
            assert!(pinch(&inst).max_abs_diff(&pinch_via_unitaries(&inst)) < tol);
            let tr = pinch(&inst).trace() - inst.test_matrix().trace();
            assert!(tr.norm() < 1e-10);
        }
    }

    #[test]
    fn block_diagonal_input_is_fixed() {
        let base = PinchingInstance::random(&[3, 2], 9).unwrap();
        let fixed = pinch(&base);
        let inst = PinchingInstance::new(base.projectors().to_vec(), fixed.clone()).unwrap();
        assert!(pinch(&inst).max_abs_diff(&fixed) < 1e-12);
        for (l, r) in pinching_corollary_sums(&inst).unwrap() {
            assert!((l - r).abs() < 1e-8);
        }
    }

    #[test]
    fn invalid_family_rejected() {
        let x = ComplexMatrix::identity(2);
        let half = ComplexMatrix::identity(2).scale(Complex64::new(0.5, 0.0));
        assert!(PinchingInstance::new(vec![half.clone(), half], x).is_err());
    }
}
