use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::SymmetricMatrix;

/// Assignment of a color in `0..c` to every vertex.
///
/// Properness is a relation to a graph or matrix and is checked separately.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<usize>,
    c: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, c: usize) -> Result<Self> {
        if c == 0 {
            return Err(Error::domain("a coloring needs at least one color"));
        }
        if let Some((v, &k)) = colors.iter().enumerate().find(|(_, &k)| k >= c) {
            return Err(Error::domain(format!("vertex {v} has color {k}, outside 0..{c}")));
        }
        Ok(Coloring { colors, c })
    }

    /// Uses `c = 1 + max color`.
    pub fn from_colors(colors: Vec<usize>) -> Result<Self> {
        let c = colors.iter().max().map_or(1, |&m| m + 1);
        Self::new(colors, c)
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors actually used.
    pub fn used(&self) -> usize {
        let mut seen = vec![false; self.c];
        self.colors.iter().for_each(|&k| seen[k] = true);
        seen.into_iter().filter(|&s| s).count()
    }

    /// First edge whose endpoints share a color.
    pub fn violation(&self, g: &Graph) -> Option<(usize, usize)> {
        g.edges().iter().copied().find(|&(u, v)| self.colors[u] == self.colors[v])
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n() && self.violation(g).is_none()
    }

    /// First nonzero off-diagonal entry `a_kl` inside a color class.
    pub fn matrix_violation(&self, a: &SymmetricMatrix) -> Option<(usize, usize)> {
        let n = a.n();
        (0..n)
            .flat_map(|k| (k + 1..n).map(move |l| (k, l)))
            .find(|&(k, l)| a.get(k, l) != 0.0 && self.colors[k] == self.colors[l])
    }

    pub(crate) fn require_proper_for(&self, a: &SymmetricMatrix) -> Result<()> {
        if self.colors.len() != a.n() {
            return Err(Error::domain(format!(
                "coloring has {} vertices, matrix has order {}",
                self.colors.len(),
                a.n()
            )));
        }
        if let Some((k, l)) = self.matrix_violation(a) {
            return Err(Error::domain(format!(
                "improper coloring: edge ({k}, {l}) joins two vertices of color {}",
                self.colors[k]
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;

    #[test]
    fn validation() {
        assert!(Coloring::new(vec![0, 2], 2).is_err());
        assert!(Coloring::new(vec![], 0).is_err());
        let c = Coloring::from_colors(vec![0, 2, 1, 0]).unwrap();
        assert_eq!((c.c(), c.used()), (3, 3));
    }

    #[test]
    fn properness() {
        let k3 = complete(3).unwrap();
        assert!(Coloring::from_colors(vec![0, 1, 2]).unwrap().is_proper(&k3));
        let bad = Coloring::from_colors(vec![0, 1, 0]).unwrap();
        assert_eq!(bad.violation(&k3), Some((0, 2)));
        let a = k3.matrix(crate::graph::GraphMatrixKind::Adjacency).unwrap();
        let err = bad.require_proper_for(&a).unwrap_err();
        assert!(err.to_string().contains("(0, 2)"));
    }
}
