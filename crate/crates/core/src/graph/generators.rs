//! Deterministic generators for the families used in the comparisons.
//!
//! Labeling conventions are part of each function's contract; graph6 output
//! of a generated graph is therefore stable across releases.

use super::Graph;
use crate::error::{Error, Result};

fn positive(name: &str, value: usize) -> Result<()> {
    if value == 0 {
        Err(Error::domain(format!("{name} must be positive")))
    } else {
        Ok(())
    }
}

fn clique_on(vertices: &[usize], edges: &mut Vec<(usize, usize)>) {
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            edges.push((u, v));
        }
    }
}

/// `K_n` on `0..n`.
pub fn complete(n: usize) -> Result<Graph> {
    positive("n", n)?;
    let mut edges = Vec::new();
    clique_on(&(0..n).collect::<Vec<_>>(), &mut edges);
    Graph::new(n, edges)
}

/// `K_{a,b}`: side one is `0..a`, side two is `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    complete_multipartite(&[a, b])
}

/// Complete multipartite graph; parts occupy consecutive label ranges in order.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(Error::domain("complete_multipartite needs at least one part"));
    }
    let mut part_of = Vec::new();
    for (p, &size) in parts.iter().enumerate() {
        positive("part size", size)?;
        part_of.extend(std::iter::repeat_n(p, size));
    }
    let n = part_of.len();
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| part_of[u] != part_of[v]);
    Graph::new(n, edges.collect::<Vec<_>>())
}

/// `C_n` with edges `i -- i+1 mod n`; needs `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::domain("cycle needs at least 3 vertices"));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Circulant graph: `i` is joined to `i ± s mod n` for each offset `s`.
/// Offsets must lie in `1..=n/2`.
pub fn circulant(n: usize, offsets: &[usize]) -> Result<Graph> {
    positive("n", n)?;
    let mut edges = Vec::new();
    for &s in offsets {
        if s == 0 || s > n / 2 {
            return Err(Error::domain(format!(
                "circulant offset {s} outside 1..={}",
                n / 2
            )));
        }
        for i in 0..n {
            edges.push((i, (i + s) % n));
        }
    }
    Graph::new(n, edges)
}

/// Two copies of `K_k` on `0..k` and `k..2k`, joined by the bridge `(k-1, k)`.
pub fn barbell(k: usize) -> Result<Graph> {
    positive("k", k)?;
    let mut edges = Vec::new();
    clique_on(&(0..k).collect::<Vec<_>>(), &mut edges);
    clique_on(&(k..2 * k).collect::<Vec<_>>(), &mut edges);
    edges.push((k - 1, k));
    Graph::new(2 * k, edges)
}

/// Sun graph on `2k` vertices: hub clique `K_k` on `0..k`, outer vertex
/// `k + i` adjacent to hub vertices `i` and `i + 1 mod k`. Needs `k >= 3`.
pub fn sun(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::domain("sun needs k >= 3"));
    }
    let mut edges = Vec::new();
    clique_on(&(0..k).collect::<Vec<_>>(), &mut edges);
    for i in 0..k {
        edges.push((k + i, i));
        edges.push((k + i, (i + 1) % k));
    }
    Graph::new(2 * k, edges)
}

/// `copies` cliques `K_size` sharing vertex 0. Copy `c` owns vertices
/// `1 + c*(size-1) .. 1 + (c+1)*(size-1)`.
pub fn windmill(copies: usize, size: usize) -> Result<Graph> {
    positive("copies", copies)?;
    if size < 2 {
        return Err(Error::domain("windmill clique size must be at least 2"));
    }
    let mut edges = Vec::new();
    for c in 0..copies {
        let mut blade = vec![0];
        blade.extend((0..size - 1).map(|t| 1 + c * (size - 1) + t));
        clique_on(&blade, &mut edges);
    }
    Graph::new(1 + copies * (size - 1), edges)
}

/// Mycielski construction: original vertices `0..n`, shadows `n..2n`
/// (shadow `n + i` copies the neighbourhood of `i`), apex `2n`.
pub fn mycielskian(g: &Graph) -> Result<Graph> {
    let n = g.n();
    let mut edges = g.edges().to_vec();
    for &(u, v) in g.edges() {
        edges.push((n + u, v));
        edges.push((n + v, u));
    }
    edges.extend((0..n).map(|i| (n + i, 2 * n)));
    Graph::new(2 * n + 1, edges)
}

/// Grötzsch graph, the Mycielskian of `C_5`.
pub fn grotzsch() -> Graph {
    mycielskian(&cycle(5).expect("C5")).expect("valid construction")
}

/// Petersen graph: outer cycle `0..5`, spokes `i -- i+5`, inner pentagram.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, edges).expect("valid construction")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn has_triangle(g: &Graph) -> bool {
        let n = g.n();
        (0..n).any(|a| {
            (a + 1..n).any(|b| {
                g.has_edge(a, b) && (b + 1..n).any(|c| g.has_edge(a, c) && g.has_edge(b, c))
            })
        })
    }

    #[test]
    fn complete_four() {
        let g = complete(4).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert!((0..4).all(|u| (0..4).all(|v| u == v || g.has_edge(u, v))));
    }

    #[test]
    fn family_sizes() {
        assert_eq!(complete_multipartite(&[2, 2, 2]).unwrap().edge_count(), 12);
        let c = circulant(16, &[1, 7, 8]).unwrap();
        assert_eq!((c.n(), c.edge_count()), (16, 40));
        assert!(c.is_regular());
        let b = barbell(8).unwrap();
        assert_eq!((b.n(), b.edge_count()), (16, 57));
        let s = sun(8).unwrap();
        assert_eq!((s.n(), s.edge_count()), (16, 44));
        let w = windmill(3, 6).unwrap();
        assert_eq!((w.n(), w.edge_count()), (16, 45));
        assert_eq!(w.degrees()[0], 15);
        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert!(p.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn grotzsch_is_triangle_free() {
        let g = grotzsch();
        assert_eq!((g.n(), g.edge_count()), (11, 20));
        assert!(!has_triangle(&g));
        assert!(has_triangle(&complete(3).unwrap()));
    }

    #[test]
    fn parameter_errors() {
        assert!(circulant(16, &[9]).is_err());
        assert!(circulant(16, &[0]).is_err());
        assert!(complete(0).is_err());
        assert!(windmill(0, 3).is_err());
        assert!(sun(2).is_err());
        assert!(cycle(2).is_err());
        assert!(complete_multipartite(&[2, 0]).is_err());
    }

    #[test]
    fn generation_is_deterministic() {
        assert_eq!(sun(6).unwrap(), sun(6).unwrap());
        assert_eq!(windmill(4, 3).unwrap().to_graph6(), windmill(4, 3).unwrap().to_graph6());
    }
}
