use super::{check_same_order, BoundId, BoundValue};
use crate::error::Result;
use crate::linalg::{Spectrum, PROPERTY_TOL};

/// The weaker bounds implied by Kolotilina1 through `δ_i >= 2μ_i` and
/// `θ_1 <= n`: Kolotilina's inequality 3.17, Hansen–Lucas and Cvetković.
pub fn chain_bounds(spec_a: &Spectrum, spec_l: &Spectrum, spec_q: &Spectrum, n: usize) -> Result<Vec<BoundValue>> {
    check_same_order(&[spec_a, spec_l, spec_q])?;
    let ids = [BoundId::KolotilinaChain317, BoundId::HansenLucas, BoundId::Cvetkovic];
    let mu1 = spec_a.max();
    if mu1 <= PROPERTY_TOL {
        return Ok(ids.map(BoundValue::invalid).to_vec());
    }
    let (theta1, delta1, n) = (spec_l.max(), spec_q.max(), n as f64);
    Ok(vec![
        BoundValue::ratio(BoundId::KolotilinaChain317, delta1, 2.0 * theta1 - delta1, 1),
        BoundValue::ratio(BoundId::HansenLucas, delta1, 2.0 * n - delta1, 1),
        BoundValue::ratio(BoundId::Cvetkovic, mu1, n - mu1, 1),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{classical_bounds, GraphSpectra};
    use crate::graph::{complete, grotzsch};

    #[test]
    fn complete_graphs_give_n() {
        for n in 3..=8 {
            let s = GraphSpectra::compute(&complete(n).unwrap()).unwrap();
            for v in chain_bounds(&s.adjacency, &s.laplacian, &s.signless_laplacian, n).unwrap() {
                assert!((v.value - n as f64).abs() < 1e-9, "{} on K{n}: {}", v.id, v.value);
            }
        }
    }

    #[test]
    fn grotzsch_separates_chromatic_from_clique_bounds() {
        let g = grotzsch();
        let s = GraphSpectra::compute(&g).unwrap();
        let chain = chain_bounds(&s.adjacency, &s.laplacian, &s.signless_laplacian, g.n()).unwrap();
        let k1 = classical_bounds(&s.adjacency, &s.laplacian, &s.signless_laplacian).unwrap()[2];
        assert!(k1.value >= chain[0].value - PROPERTY_TOL);
        assert!(chain[0].value >= chain[1].value - PROPERTY_TOL);
        assert!(chain[1].value >= chain[2].value - PROPERTY_TOL);
        // triangle-free, so omega = 2: the four classical chromatic bounds exceed it,
        // while Hansen-Lucas and Cvetkovic are also clique-number bounds and cannot
        for v in classical_bounds(&s.adjacency, &s.laplacian, &s.signless_laplacian).unwrap() {
            assert!(v.value > 2.0, "{}: {}", v.id, v.value);
        }
        assert!(chain[1].value <= 2.0 && chain[2].value <= 2.0);
    }
}
