use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{full_report, BoundId, BoundReport};
use crate::certify::{build_conversion, verify_loan_identity, verify_majorization_step};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphMatrixKind};
use crate::linalg::PROPERTY_TOL;
use crate::oracle::{all_graphs, all_labeled_graphs, chromatic_number, greedy_coloring, MAX_CORPUS_VERTICES};

/// Every labeled graph on up to six vertices, plus the seven-vertex corpus.
pub fn corpus_graphs(max_n: usize) -> Result<Vec<Graph>> {
    if max_n == 0 || max_n > MAX_CORPUS_VERTICES {
        return Err(Error::Refused(format!("corpus covers 1..={MAX_CORPUS_VERTICES} vertices, got {max_n}")));
    }
    let mut out = Vec::new();
    for n in 1..=max_n {
        if n <= 6 {
            out.extend(all_labeled_graphs(n)?);
        } else {
            out.extend(all_graphs(n)?);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FailureKind {
    /// A valid bound certifies more colors than the oracle χ.
    Soundness,
    Conversion,
    Majorization,
    Loan,
    /// Kolotilina1 below NikiforovHybrid, or the chain out of order.
    Dominance,
    /// A computation returned an error.
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CorpusFailure {
    pub graph: String,
    pub kind: FailureKind,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CorpusSummary {
    pub graphs: usize,
    /// Graphs with at least one edge, which go through certification.
    pub certified: usize,
    pub bound_checks: usize,
    pub failures: Vec<CorpusFailure>,
}

impl CorpusSummary {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn count(&self, kind: FailureKind) -> usize {
        self.failures.iter().filter(|f| f.kind == kind).count()
    }
}

fn dominance(report: &BoundReport) -> Vec<String> {
    let get = |id| Some(report.get(id)).filter(|b| b.valid).map(|b| b.value);
    let pairs = [
        (BoundId::Kolotilina1, BoundId::NikiforovHybrid),
        (BoundId::Kolotilina1, BoundId::KolotilinaChain317),
        (BoundId::KolotilinaChain317, BoundId::HansenLucas),
        (BoundId::HansenLucas, BoundId::Cvetkovic),
    ];
    pairs
        .iter()
        .filter_map(|&(hi, lo)| match (get(hi), get(lo)) {
            (Some(h), Some(l)) if h < l - PROPERTY_TOL => Some(format!("{hi} = {h} < {lo} = {l}")),
            _ => None,
        })
        .collect()
}

fn check_graph(g: &Graph) -> Result<(usize, Vec<(FailureKind, String)>)> {
    let mut fails = Vec::new();
    let chi = chromatic_number(g)?.chi;
    let report = full_report(g)?;
    let mut checks = 0;
    for b in report.bounds.iter().filter(|b| b.valid) {
        checks += 1;
        if b.certified_colors() > chi {
            fails.push((FailureKind::Soundness, format!("{} = {} but χ = {chi}", b.id, b.value)));
        }
    }
    fails.extend(dominance(&report).into_iter().map(|d| (FailureKind::Dominance, d)));

    if g.edge_count() > 0 {
        let a = g.matrix(GraphMatrixKind::Adjacency)?;
        let col = greedy_coloring(g);
        let cert = build_conversion(&a, &col)?;
        if cert.residual >= 1e-10 {
            fails.push((FailureKind::Conversion, format!("residual {}", cert.residual)));
        }
        let d: Vec<f64> = g.degrees().iter().map(|&x| x as f64).collect();
        let neg: Vec<f64> = d.iter().map(|x| -x).collect();
        for (label, b) in [("0", vec![0.0; g.n()]), ("D", d), ("-D", neg)] {
            let r = verify_majorization_step(&a, &b, &col)?;
            if !r.passes() {
                fails.push((
                    FailureKind::Majorization,
                    format!("B = {label}: identity residual {}, slack {}", r.identity_residual, r.spectral_slack()),
                ));
            }
        }
        let loan = verify_loan_identity(g, &col)?;
        if !loan.passes() {
            fails.push((FailureKind::Loan, format!("{loan:?}")));
        }
    }
    Ok((checks, fails))
}

/// Soundness, certification and dominance over [`corpus_graphs`].
pub fn corpus_check(max_n: usize) -> Result<CorpusSummary> {
    let graphs = corpus_graphs(max_n)?;
    let results: Vec<(usize, Vec<CorpusFailure>)> = graphs
        .par_iter()
        .map(|g| {
            let (checks, fails) = check_graph(g).unwrap_or_else(|e| (0, vec![(FailureKind::Error, e.to_string())]));
            let failures = fails
                .into_iter()
                .map(|(kind, detail)| CorpusFailure { graph: g.to_graph6(), kind, detail })
                .collect();
            (checks, failures)
        })
        .collect();
    Ok(CorpusSummary {
        graphs: graphs.len(),
        certified: graphs.iter().filter(|g| g.edge_count() > 0).count(),
        bound_checks: results.iter().map(|r| r.0).sum(),
        failures: results.into_iter().flat_map(|r| r.1).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_corpus_is_clean() {
        let s = corpus_check(4).unwrap();
        assert_eq!(s.graphs, 1 + 2 + 8 + 64);
        assert!(s.passes(), "{:?}", s.failures);
        assert!(corpus_check(8).is_err());
    }
}
