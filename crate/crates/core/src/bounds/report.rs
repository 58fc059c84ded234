use serde::{Deserialize, Serialize};

use super::{
    chain_bounds, classical_bounds, generalized_bounds, integer_c_search, loan_bound, normalized_bounds,
    BoundId, BoundValue, DiagonalShift, GraphSpectra,
};
use crate::error::Result;
use crate::graph::{Graph, GraphMatrixKind};

/// Rounds half away from zero to one decimal.
pub fn round_display(value: f64) -> f64 {
    (value * 10.0).round() / 10.0
}

/// Every bound for one graph, in [`BoundId::ALL`] order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    /// graph6 of the graph as labeled.
    pub graph: String,
    pub n: usize,
    pub edges: usize,
    pub spectra: GraphSpectra,
    pub bounds: Vec<BoundValue>,
    /// `rounded_display[i]` is `bounds[i].value` rounded to one decimal, or
    /// `None` for an invalid bound.
    pub rounded_display: Vec<Option<f64>>,
    /// Branch of the integer-c search that produced the maximum.
    pub integer_c_shift: Option<DiagonalShift>,
}

impl BoundReport {
    pub fn get(&self, id: BoundId) -> &BoundValue {
        self.bounds.iter().find(|b| b.id == id).expect("every id present")
    }

    pub fn value(&self, id: BoundId) -> f64 {
        self.get(id).value
    }

    pub fn display(&self, id: BoundId) -> Option<f64> {
        let i = self.bounds.iter().position(|b| b.id == id).expect("every id present");
        self.rounded_display[i]
    }

    /// Largest certified color count over valid bounds.
    pub fn best_certified(&self) -> usize {
        self.bounds
            .iter()
            .filter(|b| b.valid)
            .map(BoundValue::certified_colors)
            .max()
            .unwrap_or(1)
    }
}

/// Computes the spectra once and evaluates every bound.
///
/// Edgeless graphs get a report with every bound invalid; graphs with
/// isolated vertices get invalid normalized bounds.
pub fn full_report(g: &Graph) -> Result<BoundReport> {
    let spectra = GraphSpectra::compute(g)?;
    let (a, l, q) = (&spectra.adjacency, &spectra.laplacian, &spectra.signless_laplacian);

    let mut values = Vec::with_capacity(BoundId::ALL.len());
    values.extend(classical_bounds(a, l, q)?);
    values.push(loan_bound(g, q));
    values.extend(generalized_bounds(a, l, q)?);
    match (&spectra.normalized_adjacency, g.edge_count()) {
        (Some(na), e) if e > 0 => values.extend(normalized_bounds(na)?),
        _ => values.extend([
            BoundValue::invalid(BoundId::NormalizedHoffman),
            BoundValue::invalid(BoundId::GenNormalizedHoffman),
        ]),
    }
    values.extend(chain_bounds(a, l, q, g.n())?);

    let integer = if g.edge_count() > 0 {
        let adjacency = g.matrix(GraphMatrixKind::Adjacency)?;
        let degrees: Vec<f64> = g.degrees().iter().map(|&d| d as f64).collect();
        Some(integer_c_search(&adjacency, &degrees)?)
    } else {
        None
    };
    values.push(integer.as_ref().map_or(BoundValue::invalid(BoundId::IntegerC), |s| s.bound));

    let bounds: Vec<BoundValue> = BoundId::ALL
        .iter()
        .map(|&id| *values.iter().find(|v| v.id == id).expect("each bound computed"))
        .collect();
    let rounded_display = bounds.iter().map(|b| b.valid.then(|| round_display(b.value))).collect();

    Ok(BoundReport {
        graph: g.to_graph6(),
        n: g.n(),
        edges: g.edge_count(),
        spectra,
        bounds,
        rounded_display,
        integer_c_shift: integer.and_then(|s| s.best_shift),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_multipartite, petersen};
    use crate::linalg::PROPERTY_TOL;

    #[test]
    fn rounding_is_half_away_from_zero() {
        assert_eq!(round_display(2.25), 2.3);
        assert_eq!(round_display(-2.25), -2.3);
        assert_eq!(round_display(2.6666), 2.7);
        assert_eq!(round_display(4.783), 4.8);
    }

    #[test]
    fn every_id_once() {
        let r = full_report(&petersen()).unwrap();
        assert_eq!(r.bounds.len(), BoundId::ALL.len());
        for (b, id) in r.bounds.iter().zip(BoundId::ALL) {
            assert_eq!(b.id, id);
        }
    }

    #[test]
    fn petersen_hoffman() {
        let r = full_report(&petersen()).unwrap();
        assert!((r.value(BoundId::Hoffman) - 2.5).abs() < 1e-12);
        assert!(r.best_certified() <= 3);
    }

    #[test]
    fn complete_tripartite_hoffman_is_exact() {
        let r = full_report(&complete_multipartite(&[2, 2, 2]).unwrap()).unwrap();
        assert!((r.value(BoundId::Hoffman) - 3.0).abs() < PROPERTY_TOL);
    }

    #[test]
    fn edgeless_report_is_all_invalid() {
        let r = full_report(&Graph::empty(3).unwrap()).unwrap();
        assert!(r.bounds.iter().all(|b| !b.valid && b.value == 1.0));
        assert!(r.rounded_display.iter().all(Option::is_none));
    }

    #[test]
    fn isolated_vertex_invalidates_only_normalized() {
        let g = Graph::new(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let r = full_report(&g).unwrap();
        assert!(!r.get(BoundId::NormalizedHoffman).valid);
        assert!(!r.get(BoundId::GenNormalizedHoffman).valid);
        assert!(r.get(BoundId::Hoffman).valid);
    }
}
