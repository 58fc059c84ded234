use std::fmt::Write;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::{ComparisonRow, RandomTableRow};
use crate::bounds::{BoundId, BoundReport};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JsonBound {
    pub id: BoundId,
    pub value: f64,
    pub best_m: usize,
    pub valid: bool,
}

/// One-decimal display values keyed by bound name, in [`BoundId::ALL`]
/// order; invalid bounds map to `null`.
#[derive(Clone, Debug, PartialEq)]
pub struct DisplayMap(pub Vec<(BoundId, Option<f64>)>);

impl Serialize for DisplayMap {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (id, v) in &self.0 {
            map.serialize_entry(id, v)?;
        }
        map.end()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JsonReport {
    pub graph: String,
    pub bounds: Vec<JsonBound>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi: Option<usize>,
    pub display: DisplayMap,
}

pub fn report_json(graph: &str, report: &BoundReport, chi: Option<usize>) -> JsonReport {
    JsonReport {
        graph: graph.to_string(),
        bounds: report
            .bounds
            .iter()
            .map(|b| JsonBound { id: b.id, value: b.value, best_m: b.best_m, valid: b.valid })
            .collect(),
        chi,
        display: DisplayMap(report.bounds.iter().zip(&report.rounded_display).map(|(b, d)| (b.id, *d)).collect()),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn random_table_csv(rows: &[RandomTableRow]) -> String {
    let mut out = String::from("n,p,samples,seed_base,hoffman,kolotilina1,kolotilina2,bollobas,reseeds\n");
    for r in rows {
        let bollobas = r.bollobas.map_or(String::new(), |b| b.to_string());
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            r.n, r.p, r.samples, r.seed_base, r.hoffman_avg, r.kolo1_avg, r.kolo2_avg, bollobas, r.reseeds
        )
        .unwrap();
    }
    out
}

/// One-decimal table: graph, n, chi, every bound, error.
pub fn comparison_csv(rows: &[ComparisonRow]) -> String {
    let mut out = String::from("graph,n,chi");
    for id in BoundId::ALL {
        write!(out, ",{}", id.name()).unwrap();
    }
    out.push_str(",error\n");
    for r in rows {
        out.push_str(&csv_field(&r.name));
        let n = r.report.as_ref().map_or(String::new(), |rep| rep.n.to_string());
        let chi = r.chi.map_or(String::new(), |c| c.to_string());
        write!(out, ",{n},{chi}").unwrap();
        for id in BoundId::ALL {
            let cell = r.display(id).map_or(String::new(), |v| format!("{v:.1}"));
            write!(out, ",{cell}").unwrap();
        }
        writeln!(out, ",{}", csv_field(r.error.as_deref().unwrap_or(""))).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::full_report;
    use crate::graph::petersen;

    #[test]
    fn json_schema_fields() {
        let r = full_report(&petersen()).unwrap();
        let v = serde_json::to_value(report_json("petersen", &r, Some(3))).unwrap();
        assert_eq!(v["graph"], "petersen");
        assert_eq!(v["chi"], 3);
        assert_eq!(v["bounds"].as_array().unwrap().len(), BoundId::ALL.len());
        assert_eq!(v["bounds"][0]["id"], "Hoffman");
        assert!(v["bounds"][0].get("best_m").is_some());
        assert_eq!(v["display"]["Hoffman"], 2.5);
        assert!(v["display"].get("LOAN").is_some());
        let no_chi = serde_json::to_value(report_json("p", &r, None)).unwrap();
        assert!(no_chi.get("chi").is_none());
    }

    #[test]
    fn csv_quotes_names() {
        let rows = vec![ComparisonRow { name: "a,b".into(), report: None, chi: None, error: Some("bad".into()) }];
        let csv = comparison_csv(&rows);
        assert!(csv.lines().nth(1).unwrap().starts_with("\"a,b\",,"));
        assert!(csv.ends_with(",bad\n"));
    }
}
