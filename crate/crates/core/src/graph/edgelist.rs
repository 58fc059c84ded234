use super::Graph;
use crate::error::{Error, Result};

/// Parses whitespace-separated `u v` pairs, one per line, 0-based.
///
/// An optional first line `n <count>` fixes the vertex count so trailing
/// isolated vertices survive; otherwise `n` is one more than the largest index.
/// Blank lines and lines starting with `#` are skipped. Duplicate edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen_content = false;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "n" {
            if seen_content {
                return Err(Error::at_line(line_no, "`n <count>` must be the first line"));
            }
            if tokens.len() != 2 {
                return Err(Error::at_line(line_no, "expected `n <count>`"));
            }
            declared = Some(parse_index(tokens[1], line_no)?);
            seen_content = true;
            continue;
        }
        seen_content = true;
        if tokens.len() != 2 {
            return Err(Error::at_line(line_no, format!("expected two vertices, found {}", tokens.len())));
        }
        let u = parse_index(tokens[0], line_no)?;
        let v = parse_index(tokens[1], line_no)?;
        if u == v {
            return Err(Error::at_line(line_no, format!("loop at vertex {u}")));
        }
        edges.push((u, v));
    }

    let max_index = edges.iter().map(|&(u, v)| u.max(v)).max();
    let n = match (declared, max_index) {
        (Some(n), Some(m)) if m >= n => {
            return Err(Error::at_line(1, format!("vertex {m} exceeds declared count {n}")))
        }
        (Some(n), _) => n,
        (None, Some(m)) => m + 1,
        (None, None) => return Err(Error::at_line(1, "no vertices")),
    };
    Graph::new(n, edges)
}

fn parse_index(token: &str, line: usize) -> Result<usize> {
    if token.starts_with('-') {
        return Err(Error::at_line(line, format!("negative vertex index `{token}`")));
    }
    token
        .parse::<usize>()
        .map_err(|_| Error::at_line(line, format!("`{token}` is not a non-negative integer")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = parse_edge_list("0 1\n1 2\n2 0").unwrap();
        assert_eq!(g, crate::graph::complete(3).unwrap());
    }

    #[test]
    fn declared_count_keeps_isolated_vertices() {
        let g = parse_edge_list("n 4\n0 1").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn duplicates_collapse() {
        let g = parse_edge_list("0 1\n1 0\n0 1").unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        for (text, line) in [("0 1\n-1 2", 2), ("0 1\n\n3 3", 3), ("0 x", 1), ("0 1 2", 1)] {
            let e = parse_edge_list(text).unwrap_err();
            assert!(e.to_string().contains(&format!("line {line}")), "{text:?}: {e}");
        }
    }
}
