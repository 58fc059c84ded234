use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::GraphMatrixKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpectrumKind {
    Graph(GraphMatrixKind),
    Custom,
}

/// Eigenvalues of one Hermitian matrix, sorted non-increasing.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    kind: SpectrumKind,
    values: Vec<f64>,
}

impl Spectrum {
    /// Sorts with a stable non-increasing order; near-equal values are kept
    /// as computed.
    pub fn from_unsorted(kind: SpectrumKind, mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum { kind, values }
    }

    pub fn with_kind(mut self, kind: SpectrumKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn kind(&self) -> SpectrumKind {
        self.kind
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// 1-based access, `λ_i` with `λ_1` the largest.
    pub fn nth(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    pub fn max(&self) -> f64 {
        self.values[0]
    }

    pub fn min(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    pub fn ky_fan(&self, m: usize) -> Result<f64> {
        ky_fan(self, m)
    }

    pub fn ky_fan_tail(&self, m: usize) -> Result<f64> {
        ky_fan_tail(self, m)
    }
}

fn check_m(spec: &Spectrum, m: usize) -> Result<()> {
    if m == 0 || m > spec.len() {
        Err(Error::domain(format!("index m = {m} outside 1..={}", spec.len())))
    } else {
        Ok(())
    }
}

/// Sum of the `m` largest eigenvalues.
pub fn ky_fan(spec: &Spectrum, m: usize) -> Result<f64> {
    check_m(spec, m)?;
    Ok(spec.values[..m].iter().sum())
}

/// Sum of the `m` smallest eigenvalues.
pub fn ky_fan_tail(spec: &Spectrum, m: usize) -> Result<f64> {
    check_m(spec, m)?;
    Ok(spec.values.iter().rev().take(m).sum())
}

/// Prefix sums of a spectrum: `prefix(m) = λ_1 + ... + λ_m`.
#[derive(Clone, Debug, PartialEq)]
pub struct KyFanSums {
    prefix: Vec<f64>,
}

impl KyFanSums {
    pub fn new(spec: &Spectrum) -> Self {
        Self::from_values(spec.values.iter().copied())
    }

    /// Prefix sums of the spectrum read from the bottom (`λ_n + ... + λ_{n+1-m}`).
    pub fn tail(spec: &Spectrum) -> Self {
        Self::from_values(spec.values.iter().rev().copied())
    }

    /// Prefix sums of an arbitrary sequence, in order.
    pub fn from_values(values: impl IntoIterator<Item = f64>) -> Self {
        let mut acc = 0.0;
        let prefix = values
            .into_iter()
            .map(|x| {
                acc += x;
                acc
            })
            .collect();
        KyFanSums { prefix }
    }

    pub fn len(&self) -> usize {
        self.prefix.len()
    }

    pub fn is_empty(&self) -> bool {
        self.prefix.is_empty()
    }

    /// 1-based: `get(m)` is the sum of the first `m` terms.
    pub fn get(&self, m: usize) -> f64 {
        self.prefix[m - 1]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.prefix
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(values: &[f64]) -> Spectrum {
        Spectrum::from_unsorted(SpectrumKind::Custom, values.to_vec())
    }

    #[test]
    fn sorting_is_non_increasing() {
        let s = spec(&[-1.0, 2.0, 0.5, 2.0]);
        assert_eq!(s.values(), &[2.0, 2.0, 0.5, -1.0]);
        assert_eq!((s.max(), s.min(), s.nth(3)), (2.0, -1.0, 0.5));
    }

    #[test]
    fn ky_fan_examples() {
        let k3 = spec(&[2.0, -1.0, -1.0]);
        assert_eq!(ky_fan(&k3, 2).unwrap(), 1.0);
        assert_eq!(ky_fan(&k3, 3).unwrap(), 0.0);
        let k4 = spec(&[3.0, -1.0, -1.0, -1.0]);
        assert_eq!(ky_fan_tail(&k4, 2).unwrap(), -2.0);
        assert_eq!(ky_fan_tail(&k4, 1).unwrap(), k4.min());
        assert!(ky_fan(&k4, 0).is_err());
        assert!(ky_fan_tail(&k4, 5).is_err());
    }

    #[test]
    fn partition_identity_and_concavity() {
        let s = spec(&[4.0, 1.5, 0.25, -0.5, -3.0, -3.5]);
        let tr: f64 = s.values().iter().sum();
        for m in 1..s.len() {
            let total = ky_fan(&s, s.len() - m).unwrap() + ky_fan_tail(&s, m).unwrap();
            assert!((total - tr).abs() < 1e-12);
        }
        let sums = KyFanSums::new(&s);
        for m in 1..s.len() {
            assert_eq!(sums.get(m + 1) - sums.get(m), s.nth(m + 1));
        }
        let inc: Vec<f64> = sums.as_slice().windows(2).map(|w| w[1] - w[0]).collect();
        assert!(inc.windows(2).all(|w| w[0] >= w[1]));
        assert_eq!(KyFanSums::tail(&s).get(2), -6.5);
    }
}
