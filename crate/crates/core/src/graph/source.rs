//! Textual graph sources: `gen:` family expressions, `@file`, raw graph6.

use std::fs;

use super::{
    barbell, circulant, complete, complete_bipartite, complete_multipartite, cycle, grotzsch,
    mycielskian, parse_edge_list, parse_graph6, petersen, sun, windmill, Graph,
};
use crate::error::{Error, Result};

/// Builds a graph from a family expression such as `windmill(3,6)`,
/// `circulant(16;1,7,8)` or `mycielskian(cycle(5))`.
///
/// Integer arguments are comma-separated; for `circulant` a semicolon
/// separates `n` from the offset list. `petersen` and `grotzsch` take no
/// arguments.
pub fn generate(expr: &str) -> Result<Graph> {
    let expr = expr.trim();
    let (name, args) = match expr.find('(') {
        Some(open) => {
            let inner = expr[open + 1..]
                .strip_suffix(')')
                .ok_or_else(|| Error::domain(format!("unbalanced parentheses in `{expr}`")))?;
            (expr[..open].trim(), Some(inner.trim()))
        }
        None => (expr, None),
    };
    let ints = |s: &str| -> Result<Vec<usize>> {
        s.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::domain(format!("`{t}` is not a non-negative integer in `{expr}`")))
            })
            .collect()
    };
    let exact = |want: usize| -> Result<Vec<usize>> {
        let v = ints(args.unwrap_or(""))?;
        if v.len() != want {
            return Err(Error::domain(format!("`{name}` takes {want} integer argument(s)")));
        }
        Ok(v)
    };

    match name.to_ascii_lowercase().as_str() {
        "complete" => complete(exact(1)?[0]),
        "complete_bipartite" => {
            let v = exact(2)?;
            complete_bipartite(v[0], v[1])
        }
        "complete_multipartite" => complete_multipartite(&ints(args.unwrap_or(""))?),
        "cycle" => cycle(exact(1)?[0]),
        "circulant" => {
            let a = args.ok_or_else(|| Error::domain("circulant needs `n;s1,s2,...`"))?;
            let (n, set) = a
                .split_once(';')
                .ok_or_else(|| Error::domain("circulant arguments are `n;s1,s2,...`"))?;
            let n = ints(n)?;
            if n.len() != 1 {
                return Err(Error::domain("circulant takes one vertex count before `;`"));
            }
            circulant(n[0], &ints(set)?)
        }
        "barbell" => barbell(exact(1)?[0]),
        "sun" => sun(exact(1)?[0]),
        "windmill" => {
            let v = exact(2)?;
            windmill(v[0], v[1])
        }
        "mycielskian" => {
            let inner = args.ok_or_else(|| Error::domain("mycielskian needs a graph argument"))?;
            mycielskian(&generate(inner)?)
        }
        "petersen" if args.is_none() || args == Some("") => Ok(petersen()),
        "grotzsch" if args.is_none() || args == Some("") => Ok(grotzsch()),
        _ => Err(Error::domain(format!("unknown graph family `{expr}`"))),
    }
}

/// Resolves a command-line graph argument.
///
/// * `gen:<expr>` goes through [`generate`];
/// * `@path` reads a file: the first non-empty line as graph6 when it parses,
///   otherwise the whole file as an edge list;
/// * anything else is taken as a graph6 string.
pub fn resolve_input(input: &str) -> Result<Graph> {
    if let Some(expr) = input.strip_prefix("gen:") {
        return generate(expr);
    }
    if let Some(path) = input.strip_prefix('@') {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::domain(format!("cannot read `{path}`: {e}")))?;
        let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
        return match parse_graph6(first) {
            Ok(g) => Ok(g),
            Err(g6_err) => parse_edge_list(&text).map_err(|el_err| {
                Error::domain(format!(
                    "`{path}` is neither graph6 ({g6_err}) nor an edge list ({el_err})"
                ))
            }),
        };
    }
    parse_graph6(input.trim())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_expressions() {
        assert_eq!(generate("complete(4)").unwrap().edge_count(), 6);
        assert_eq!(generate("circulant(16;1,7,8)").unwrap(), circulant(16, &[1, 7, 8]).unwrap());
        assert_eq!(generate("mycielskian(cycle(5))").unwrap(), grotzsch());
        assert_eq!(generate("complete_multipartite(2,2,2)").unwrap().n(), 6);
        assert_eq!(generate(" windmill( 3 , 6 ) ").unwrap().n(), 16);
        assert_eq!(generate("petersen").unwrap(), petersen());
    }

    #[test]
    fn bad_expressions() {
        for bad in ["complete(4", "cube(3)", "complete(a)", "windmill(3)", "circulant(16,1,7)", "petersen(3)"] {
            assert!(generate(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn inputs() {
        assert_eq!(resolve_input("gen:cycle(4)").unwrap().edge_count(), 4);
        assert_eq!(resolve_input("D?{").unwrap().edge_count(), 4);
        let dir = std::env::temp_dir().join(format!("sc-src-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let g6 = dir.join("g.g6");
        fs::write(&g6, "D?{\n").unwrap();
        assert_eq!(resolve_input(&format!("@{}", g6.display())).unwrap().n(), 5);
        let el = dir.join("g.txt");
        fs::write(&el, "n 6\n0 1\n1 2\n").unwrap();
        assert_eq!(resolve_input(&format!("@{}", el.display())).unwrap().n(), 6);
        assert!(resolve_input("@/nonexistent/file").is_err());
        fs::remove_dir_all(dir).ok();
    }
}
