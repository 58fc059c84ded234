use crate::error::{Error, Result};
use crate::graph::{parse_graph6, Graph};

pub const MAX_LABELED_VERTICES: usize = 6;
pub const MAX_CORPUS_VERTICES: usize = 7;

/// One representative per isomorphism class, generated from the graph atlas.
const CORPUS_6: &str = include_str!("../../data/graphs6.g6");
const CORPUS_7: &str = include_str!("../../data/graphs7.g6");

/// All `2^C(n,2)` labeled graphs on `n` vertices; edge `i` of the
/// lexicographic pair list is present iff bit `i` of the mask is set.
pub fn all_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 || n > MAX_LABELED_VERTICES {
        return Err(Error::Refused(format!("labeled enumeration covers 1..={MAX_LABELED_VERTICES} vertices, got {n}")));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let count = 1u64 << pairs.len();
    Ok((0..count).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::new(n, edges).expect("pairs are valid edges")
    }))
}

/// Bundled isomorphism-class corpus for `n = 6` or `7`.
pub fn corpus(n: usize) -> Result<Vec<Graph>> {
    let text = match n {
        6 => CORPUS_6,
        7 => CORPUS_7,
        _ => return Err(Error::Refused(format!("no bundled corpus for {n} vertices"))),
    };
    text.lines().filter(|l| !l.is_empty()).map(parse_graph6).collect()
}

/// Labeled graphs for `n ≤ 5`, the bundled corpus for `n = 6, 7`.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    match n {
        1..=5 => Ok(all_labeled_graphs(n)?.collect()),
        6 | 7 => corpus(n),
        _ => Err(Error::Refused(format!("graph collections cover 1..={MAX_CORPUS_VERTICES} vertices, got {n}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Lexicographically smallest edge set over all relabelings.
    fn canonical(g: &Graph) -> Vec<(usize, usize)> {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<(usize, usize)>> = None;
        loop {
            let mut e: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (perm[u], perm[v]);
                    (a.min(b), a.max(b))
                })
                .collect();
            e.sort_unstable();
            if best.as_ref().is_none_or(|b| e < *b) {
                best = Some(e);
            }
            // next permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
        best.unwrap()
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(all_graphs(3).unwrap().len(), 8);
        assert_eq!(all_graphs(4).unwrap().len(), 64);
        assert_eq!(all_labeled_graphs(6).unwrap().count(), 1 << 15);
        assert!(all_graphs(8).is_err());
        assert!(all_graphs(0).is_err());
    }

    #[test]
    fn corpus_six_is_complete_and_distinct() {
        let graphs = corpus(6).unwrap();
        assert_eq!(graphs.len(), 156);
        let classes: HashSet<_> = graphs.iter().map(canonical).collect();
        assert_eq!(classes.len(), 156);
        let labeled: HashSet<_> = all_labeled_graphs(6).unwrap().map(|g| canonical(&g)).collect();
        assert_eq!(labeled, classes);
    }

    #[test]
    fn corpus_seven_is_distinct() {
        let graphs = corpus(7).unwrap();
        assert_eq!(graphs.len(), 1044);
        assert!(graphs.iter().all(|g| g.n() == 7));
        let classes: HashSet<_> = graphs.iter().map(canonical).collect();
        assert_eq!(classes.len(), 1044);
    }
}
