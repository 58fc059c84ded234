use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{full_report, BoundId, BoundReport};
use crate::error::Result;
use crate::graph::{resolve_input, Graph};
use crate::oracle::chromatic_number;

/// Graphs above this order get no oracle χ in comparisons.
pub const ORACLE_LIMIT: usize = 24;

/// Built-in comparison list as `(label, input)` pairs.
pub fn default_named() -> Vec<(&'static str, &'static str)> {
    vec![
        ("Circulant(16;1,7,8)", "gen:circulant(16;1,7,8)"),
        ("Barbell(8)", "gen:barbell(8)"),
        ("Sun(8)", "gen:sun(8)"),
        ("Windmill(3,6)", "gen:windmill(3,6)"),
        ("Petersen", "gen:petersen"),
        ("Grotzsch", "gen:grotzsch"),
        ("CompleteMultipartite(2,2,2)", "gen:complete_multipartite(2,2,2)"),
        ("Cycle(5)", "gen:cycle(5)"),
    ]
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub name: String,
    pub report: Option<BoundReport>,
    pub chi: Option<usize>,
    pub error: Option<String>,
}

impl ComparisonRow {
    pub fn display(&self, id: BoundId) -> Option<f64> {
        self.report.as_ref().and_then(|r| r.display(id))
    }
}

fn evaluate(g: &Graph) -> Result<(BoundReport, Option<usize>)> {
    let report = full_report(g)?;
    let chi = if g.n() <= ORACLE_LIMIT { Some(chromatic_number(g)?.chi) } else { None };
    Ok((report, chi))
}

/// One row per `(label, input)`, in input order. Inputs that fail to resolve
/// or evaluate produce a row carrying the error instead of a report.
pub fn named_comparison(items: &[(String, String)]) -> Vec<ComparisonRow> {
    items
        .par_iter()
        .map(|(name, input)| match resolve_input(input).and_then(|g| evaluate(&g)) {
            Ok((report, chi)) => ComparisonRow { name: name.clone(), report: Some(report), chi, error: None },
            Err(e) => ComparisonRow { name: name.clone(), report: None, chi: None, error: Some(e.to_string()) },
        })
        .collect()
}
