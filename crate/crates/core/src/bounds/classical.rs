use super::{check_same_order, BoundId, BoundValue};
use crate::error::Result;
use crate::graph::Graph;
use crate::linalg::{Spectrum, PROPERTY_TOL};

/// Hoffman, Nikiforov's hybrid bound and the two Kolotilina bounds.
///
/// `θ_n` enters Kolotilina2 as computed rather than as an exact zero.
pub fn classical_bounds(spec_a: &Spectrum, spec_l: &Spectrum, spec_q: &Spectrum) -> Result<Vec<BoundValue>> {
    check_same_order(&[spec_a, spec_l, spec_q])?;
    let ids = [BoundId::Hoffman, BoundId::NikiforovHybrid, BoundId::Kolotilina1, BoundId::Kolotilina2];
    let mu1 = spec_a.max();
    if mu1 <= PROPERTY_TOL {
        return Ok(ids.map(BoundValue::invalid).to_vec());
    }
    let (theta1, theta_n) = (spec_l.max(), spec_l.min());
    let (delta1, delta_n) = (spec_q.max(), spec_q.min());
    Ok(vec![
        BoundValue::ratio(BoundId::Hoffman, mu1, -spec_a.min(), 1),
        BoundValue::ratio(BoundId::NikiforovHybrid, mu1, theta1 - mu1, 1),
        BoundValue::ratio(BoundId::Kolotilina1, mu1, mu1 - delta1 + theta1, 1),
        BoundValue::ratio(BoundId::Kolotilina2, mu1, mu1 - delta_n + theta_n, 1),
    ])
}

/// `1 + 2E / (2E - n δ_n)`.
pub fn loan_bound(g: &Graph, spec_q: &Spectrum) -> BoundValue {
    let two_e = 2.0 * g.edge_count() as f64;
    if g.edge_count() == 0 {
        return BoundValue::invalid(BoundId::Loan);
    }
    BoundValue::ratio(BoundId::Loan, two_e, two_e - g.n() as f64 * spec_q.min(), 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::GraphSpectra;
    use crate::graph::{complete, complete_bipartite, cycle, Graph};

    fn spectra(g: &Graph) -> GraphSpectra {
        GraphSpectra::compute(g).unwrap()
    }

    fn classical(g: &Graph) -> Vec<BoundValue> {
        let s = spectra(g);
        classical_bounds(&s.adjacency, &s.laplacian, &s.signless_laplacian).unwrap()
    }

    #[test]
    fn k4_hoffman_is_four() {
        let b = classical(&complete(4).unwrap());
        assert!((b[0].value - 4.0).abs() < 1e-12);
        for v in &b {
            assert!(v.valid);
        }
    }

    #[test]
    fn edgeless_graph_is_invalid() {
        let g = Graph::empty(4).unwrap();
        for v in classical(&g) {
            assert!(!v.valid);
            assert_eq!(v.value, 1.0);
        }
        assert!(!loan_bound(&g, &spectra(&g).signless_laplacian).valid);
    }

    #[test]
    fn loan_on_complete_graphs_is_n() {
        // 1 + n(n-1) / (n(n-1) - n(n-2)) = 1 + (n-1) = n
        for n in 3..=8 {
            let g = complete(n).unwrap();
            let v = loan_bound(&g, &spectra(&g).signless_laplacian);
            assert!((v.value - n as f64).abs() < 1e-9, "{n}: {}", v.value);
        }
    }

    #[test]
    fn loan_is_two_when_signless_spectrum_hits_zero() {
        for g in [complete_bipartite(2, 3).unwrap(), cycle(6).unwrap()] {
            let v = loan_bound(&g, &spectra(&g).signless_laplacian);
            assert!((v.value - 2.0).abs() < 1e-9);
        }
    }
}
