//! Integer search over the number of colors using the left-hand Ky-Fan
//! inequality directly:
//!
//! `Σ_{i<=m} λ_i(B - A) >= Σ_{i<=m} λ_i(B + A/(c-1))` must hold for every
//! `c >= χ`, so the smallest `c` satisfying it is a lower bound on `χ`.

use serde::{Deserialize, Serialize};

use super::{BoundId, BoundValue};
use crate::error::{Error, Result};
use crate::linalg::{eigenvalues_sym, KyFanSums, SymmetricMatrix, PROPERTY_TOL};

/// The diagonal matrices `B` that are searched.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DiagonalShift {
    Zero,
    Degree,
    NegDegree,
}

impl DiagonalShift {
    pub const ALL: [DiagonalShift; 3] = [DiagonalShift::Zero, DiagonalShift::Degree, DiagonalShift::NegDegree];

    pub fn matrix(self, degrees: &[f64]) -> SymmetricMatrix {
        let sign = match self {
            DiagonalShift::Zero => 0.0,
            DiagonalShift::Degree => 1.0,
            DiagonalShift::NegDegree => -1.0,
        };
        SymmetricMatrix::diagonal(&degrees.iter().map(|d| sign * d).collect::<Vec<_>>())
            .expect("finite degrees")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShiftMinima {
    pub shift: DiagonalShift,
    /// `per_m[m-1]` is the smallest passing `c` for that `m`.
    pub per_m: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntegerCSearch {
    pub bound: BoundValue,
    pub best_shift: Option<DiagonalShift>,
    pub minima: Vec<ShiftMinima>,
}

/// Smallest passing `c` in `2..=n` for each `m`, with an arbitrary real
/// symmetric `B` (for a genuine bound `B` must be block diagonal with respect
/// to every proper coloring, e.g. diagonal). Pairs that never pass get `n`.
///
/// `c` is scanned upward and the first hit is kept; no monotonicity in `c` is
/// assumed.
pub fn integer_c_for_shift(a: &SymmetricMatrix, b: &SymmetricMatrix) -> Result<Vec<usize>> {
    let n = a.n();
    if b.n() != n {
        return Err(Error::domain("B and A differ in dimension"));
    }
    if n < 2 {
        return Err(Error::domain("integer-c search needs at least two vertices"));
    }
    let lhs = KyFanSums::new(&eigenvalues_sym(&(b - a))?);
    let mut minima: Vec<Option<usize>> = vec![None; n];
    for c in 2..=n {
        let trial = b + &a.scale(1.0 / (c - 1) as f64);
        let rhs = KyFanSums::new(&eigenvalues_sym(&trial)?);
        let mut open = false;
        for m in 1..=n {
            if minima[m - 1].is_none() {
                if lhs.get(m) >= rhs.get(m) - PROPERTY_TOL {
                    minima[m - 1] = Some(c);
                } else {
                    open = true;
                }
            }
        }
        if !open {
            break;
        }
    }
    Ok(minima.into_iter().map(|c| c.unwrap_or(n)).collect())
}

/// Runs [`integer_c_for_shift`] for `B ∈ {0, D, -D}` and returns the maximum
/// over `(B, m)`. Ties keep the first shift in that order and the smallest `m`.
pub fn integer_c_search(adjacency: &SymmetricMatrix, degrees: &[f64]) -> Result<IntegerCSearch> {
    if degrees.len() != adjacency.n() {
        return Err(Error::domain("degree vector length differs from matrix order"));
    }
    let has_edge = adjacency.as_slice().iter().any(|&x| x != 0.0);
    if !has_edge {
        return Ok(IntegerCSearch {
            bound: BoundValue::invalid(BoundId::IntegerC),
            best_shift: None,
            minima: Vec::new(),
        });
    }
    let mut minima = Vec::with_capacity(3);
    let mut bound = BoundValue::invalid(BoundId::IntegerC);
    let mut best_shift = None;
    for shift in DiagonalShift::ALL {
        let per_m = integer_c_for_shift(adjacency, &shift.matrix(degrees))?;
        for (i, &c) in per_m.iter().enumerate() {
            if !bound.valid || (c as f64) > bound.value {
                bound = BoundValue { id: BoundId::IntegerC, value: c as f64, best_m: i + 1, valid: true };
                best_shift = Some(shift);
            }
        }
        minima.push(ShiftMinima { shift, per_m });
    }
    Ok(IntegerCSearch { bound, best_shift, minima })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, sun, Graph, GraphMatrixKind};

    fn search(g: &Graph) -> IntegerCSearch {
        let a = g.matrix(GraphMatrixKind::Adjacency).unwrap();
        let d: Vec<f64> = g.degrees().iter().map(|&x| x as f64).collect();
        integer_c_search(&a, &d).unwrap()
    }

    #[test]
    fn sun8_reaches_seven_at_m1_on_degree_branch() {
        let s = search(&sun(8).unwrap());
        assert_eq!(s.bound.value, 7.0);
        assert_eq!(s.bound.best_m, 1);
        assert_eq!(s.best_shift, Some(DiagonalShift::Degree));
        let degree = s.minima.iter().find(|r| r.shift == DiagonalShift::Degree).unwrap();
        assert_eq!(degree.per_m[0], 7);
    }

    #[test]
    fn complete_graphs_are_exact() {
        for n in 3..=8 {
            assert_eq!(search(&complete(n).unwrap()).bound.value, n as f64, "K{n}");
        }
    }

    #[test]
    fn bipartite_graphs_give_two() {
        for g in [complete_bipartite(2, 3).unwrap(), cycle(8).unwrap()] {
            let s = search(&g);
            assert_eq!(s.bound.value, 2.0);
            assert!(s.minima.iter().all(|r| r.per_m.iter().all(|&c| c == 2)));
        }
    }

    #[test]
    fn edgeless_is_invalid() {
        let g = Graph::empty(3).unwrap();
        assert!(!search(&g).bound.valid);
    }
}
