use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SymmetricMatrix;

/// Random real symmetric test matrix: the upper triangle (diagonal included)
/// is drawn i.i.d. uniform on `[-1, 1]` from a ChaCha8 stream seeded with
/// `seed`, then mirrored.
pub fn random_hermitian(n: usize, seed: u64) -> SymmetricMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    SymmetricMatrix::from_fn(n, |_, _| rng.gen_range(-1.0..=1.0)).expect("finite samples")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(random_hermitian(6, 11), random_hermitian(6, 11));
        assert_ne!(random_hermitian(6, 11), random_hermitian(6, 12));
    }

    #[test]
    fn single_entry_in_range() {
        let x = random_hermitian(1, 5).get(0, 0);
        assert!((-1.0..=1.0).contains(&x));
    }

    #[test]
    fn off_diagonal_mean_near_zero() {
        // 10^4 draws: 400 matrices of size 8 have 28 off-diagonal pairs each (11200)
        let mut sum = 0.0;
        let mut count = 0;
        for seed in 0..400 {
            let m = random_hermitian(8, seed);
            for k in 0..8 {
                for l in k + 1..8 {
                    sum += m.get(k, l);
                    count += 1;
                }
            }
        }
        assert!(count >= 10_000);
        let mean = sum / count as f64;
        assert!(mean.abs() <= 0.02, "mean {mean}");
    }
}
