use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

/// Erdős–Rényi `G(n, p)`.
///
/// The generator is ChaCha8 seeded through `SeedableRng::seed_from_u64`, a
/// counter-mode stream whose output is fixed by the seed on every platform.
/// Pairs `(i, j)`, `i < j`, are visited in lexicographic order and each takes
/// one `u64` draw `x`; the edge is present iff `x < floor(p * 2^64)`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::domain(format!("edge probability {p} outside [0, 1]")));
    }
    let threshold = (p * 2f64.powi(64)).floor() as u128;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if (rng.next_u64() as u128) < threshold {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges)
}
