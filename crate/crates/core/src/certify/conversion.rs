//! Conversion of the adjacency matrix to zero by `c` diagonal unitaries whose
//! entries are `c`-th roots of unity: `Σ_s U_s† A U_s = 0` for any proper
//! `c`-coloring, with `U_s = diag(ω^{s·colors[k]})`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{coloring_unitary, root_of_unity, Coloring};
use crate::error::{Error, Result};
use crate::linalg::{conjugate_diagonal, ComplexMatrix, SymmetricMatrix};

#[derive(Clone, Debug, PartialEq)]
pub struct ColoringCertificate {
    pub coloring: Coloring,
    /// Diagonals of `U_1, ..., U_c`; the last one is the identity.
    pub unitaries: Vec<Vec<Complex64>>,
    /// `||Σ_s U_s† A U_s||_F`.
    pub residual: f64,
    /// `1e-9 · c · max(1, ||A||_F)`.
    pub tolerance: f64,
}

impl ColoringCertificate {
    pub fn passes(&self) -> bool {
        self.residual <= self.tolerance
    }

    /// Exact form: phases as rational turns.
    pub fn export(&self) -> CertificateExport {
        let c = self.coloring.c();
        CertificateExport {
            c,
            coloring: self.coloring.colors().to_vec(),
            unitaries: (1..=c)
                .map(|s| UnitaryExport {
                    s,
                    phases: self
                        .coloring
                        .colors()
                        .iter()
                        .map(|&k| Turns { num: (s * k) % c, den: c })
                        .collect(),
                })
                .collect(),
            residual: self.residual,
        }
    }
}

/// `num/den` of a full turn; serialized as the string `"num/den"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Turns {
    pub num: usize,
    pub den: usize,
}

impl Turns {
    pub fn phase(self) -> Complex64 {
        root_of_unity(self.num, self.den)
    }
}

impl fmt::Display for Turns {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Turns {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::domain(format!("`{s}` is not a rational turn `num/den`"));
        let (num, den) = s.split_once('/').ok_or_else(bad)?;
        let num = num.trim().parse().map_err(|_| bad())?;
        let den: usize = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        Ok(Turns { num, den })
    }
}

impl Serialize for Turns {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Turns {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnitaryExport {
    pub s: usize,
    pub phases: Vec<Turns>,
}

/// Serializable certificate. Phases are exact, so the identity can be
/// re-checked independently of the floating-point values that produced it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateExport {
    pub c: usize,
    pub coloring: Vec<usize>,
    pub unitaries: Vec<UnitaryExport>,
    pub residual: f64,
}

impl CertificateExport {
    /// Recomputes `||Σ_s U_s† A U_s||_F` from the stored phases.
    pub fn recheck(&self, a: &SymmetricMatrix) -> Result<f64> {
        let x = ComplexMatrix::from_real(a);
        let mut sum = ComplexMatrix::zeros(a.n());
        for u in &self.unitaries {
            if u.phases.len() != a.n() {
                return Err(Error::domain("phase list length differs from matrix order"));
            }
            let diag: Vec<Complex64> = u.phases.iter().map(|t| t.phase()).collect();
            sum = sum.add(&conjugate_diagonal(&diag, &x)?);
        }
        Ok(sum.frobenius_norm())
    }
}

/// `||Σ_{s=1}^{c} U_s† A U_s||_F` for any coloring, proper or not.
pub fn conversion_residual(a: &SymmetricMatrix, col: &Coloring) -> Result<f64> {
    if col.len() != a.n() {
        return Err(Error::domain("coloring length differs from matrix order"));
    }
    let x = ComplexMatrix::from_real(a);
    let mut sum = ComplexMatrix::zeros(a.n());
    for s in 1..=col.c() {
        sum = sum.add(&conjugate_diagonal(&coloring_unitary(col, s), &x)?);
    }
    Ok(sum.frobenius_norm())
}

/// Builds the `c` unitaries for a proper coloring and measures the residual.
pub fn build_conversion(a: &SymmetricMatrix, col: &Coloring) -> Result<ColoringCertificate> {
    if col.c() < 2 {
        return Err(Error::domain("conversion needs at least two colors"));
    }
    col.require_proper_for(a)?;
    let unitaries = (1..=col.c()).map(|s| coloring_unitary(col, s)).collect();
    Ok(ColoringCertificate {
        coloring: col.clone(),
        unitaries,
        residual: conversion_residual(a, col)?,
        tolerance: 1e-9 * col.c() as f64 * a.frobenius_norm().max(1.0),
    })
}
