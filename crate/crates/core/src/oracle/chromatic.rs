use serde::Serialize;

use crate::certify::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ORACLE_VERTICES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChromaticResult {
    pub chi: usize,
    pub witness: Coloring,
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    let mut adj = vec![0u64; g.n()];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

/// Vertices by degree, largest first; ties by index.
fn degree_order(g: &Graph) -> Vec<usize> {
    let deg = g.degrees();
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by(|&a, &b| deg[b].cmp(&deg[a]).then(a.cmp(&b)));
    order
}

/// Largest-degree-first sequential coloring.
pub fn greedy_coloring(g: &Graph) -> Coloring {
    let nbrs = g.neighbors();
    let mut colors = vec![usize::MAX; g.n()];
    for v in degree_order(g) {
        let mut taken: Vec<bool> = vec![false; nbrs[v].len() + 1];
        for &w in &nbrs[v] {
            if colors[w] < taken.len() {
                taken[colors[w]] = true;
            }
        }
        colors[v] = taken.iter().position(|&t| !t).unwrap_or(taken.len());
    }
    Coloring::from_colors(colors).expect("greedy colors are in range")
}

/// A clique found by greedy extension from every start vertex.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let nbrs = g.neighbors();
    let deg = g.degrees();
    let mut best = vec![0];
    for start in 0..g.n() {
        let mut clique = vec![start];
        let mut cand: Vec<usize> = nbrs[start].clone();
        while let Some(&v) = cand.iter().max_by(|&&a, &&b| deg[a].cmp(&deg[b]).then(b.cmp(&a))) {
            clique.push(v);
            cand.retain(|&w| w != v && g.has_edge(v, w));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

struct Search<'a> {
    adj: &'a [u64],
    order: &'a [usize],
    k: usize,
    colors: Vec<usize>,
    colored: u64,
}

impl Search<'_> {
    fn forbidden(&self, v: usize) -> u64 {
        let mut mask = 0u64;
        let mut nb = self.adj[v] & self.colored;
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            mask |= 1 << self.colors[w];
            nb &= nb - 1;
        }
        mask
    }

    fn run(&mut self, pos: usize, used: usize) -> bool {
        let Some(&v) = self.order.get(pos) else {
            return true;
        };
        let full = if self.k == 64 { u64::MAX } else { (1u64 << self.k) - 1 };
        let forbidden = self.forbidden(v);
        // a fresh color is only ever the next unused index
        for col in 0..self.k.min(used + 1) {
            if forbidden >> col & 1 == 1 {
                continue;
            }
            self.colors[v] = col;
            self.colored |= 1 << v;
            let mut dead = false;
            let mut nb = self.adj[v] & !self.colored;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                if self.forbidden(w) & full == full {
                    dead = true;
                    break;
                }
                nb &= nb - 1;
            }
            if !dead && self.run(pos + 1, used.max(col + 1)) {
                return true;
            }
            self.colored &= !(1 << v);
        }
        false
    }
}

/// A proper coloring with at most `k` colors, if one exists.
pub fn k_coloring(g: &Graph, k: usize) -> Result<Option<Coloring>> {
    if g.n() > MAX_ORACLE_VERTICES {
        return Err(Error::Refused(format!(
            "exact coloring is limited to {MAX_ORACLE_VERTICES} vertices, graph has {}",
            g.n()
        )));
    }
    if k == 0 {
        return Ok(None);
    }
    let adj = adjacency_masks(g);
    let order = degree_order(g);
    let mut search = Search { adj: &adj, order: &order, k: k.min(64), colors: vec![0; g.n()], colored: 0 };
    if search.run(0, 0) {
        Ok(Some(Coloring::new(search.colors, k)?))
    } else {
        Ok(None)
    }
}

/// Exact chromatic number. Tries `k = ω_greedy, ω_greedy + 1, ...` below the
/// greedy upper bound, so the first success is optimal.
pub fn chromatic_number(g: &Graph) -> Result<ChromaticResult> {
    if g.n() > MAX_ORACLE_VERTICES {
        return Err(Error::Refused(format!(
            "exact coloring is limited to {MAX_ORACLE_VERTICES} vertices, graph has {}",
            g.n()
        )));
    }
    let greedy = greedy_coloring(g);
    let upper = greedy.used();
    let lower = greedy_clique(g).len();
    for k in lower..upper {
        if let Some(col) = k_coloring(g, k)? {
            let witness = Coloring::new(col.colors().to_vec(), k)?;
            return Ok(ChromaticResult { chi: k, witness });
        }
    }
    Ok(ChromaticResult { chi: upper, witness: Coloring::new(greedy.colors().to_vec(), upper)? })
}
