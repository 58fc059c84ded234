use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{classical_bounds, BoundId};
use crate::error::{Error, Result};
use crate::graph::{random_gnp, Graph, GraphMatrixKind};
use crate::linalg::eigenvalues_sym;

/// Attempts per sample before an edgeless draw becomes an error.
pub const MAX_RESEEDS: u64 = 1000;

/// `n / (2 log_b n)` with `b = 1/(1 − p)`.
pub fn bollobas_estimate(n: usize, p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::domain(format!("edge probability must lie strictly between 0 and 1, got {p}")));
    }
    if n < 2 {
        return Err(Error::domain("the estimate needs at least two vertices"));
    }
    let log_b = (n as f64).ln() / (1.0 / (1.0 - p)).ln();
    Ok(0.5 * n as f64 / log_b)
}

/// Hoffman / Kolotilina1 / Kolotilina2 for one sampled graph; `None` marks an
/// invalid bound.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleBounds {
    pub seed: u64,
    pub reseeds: u64,
    pub hoffman: Option<f64>,
    pub kolotilina1: Option<f64>,
    pub kolotilina2: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RandomTableRow {
    pub n: usize,
    pub p: f64,
    pub samples: usize,
    pub seed_base: u64,
    pub hoffman_avg: f64,
    pub kolo1_avg: f64,
    pub kolo2_avg: f64,
    pub bollobas: Option<f64>,
    /// Number of edgeless draws that were replaced.
    pub reseeds: u64,
}

fn aux_seed(seed: u64, attempt: u64) -> u64 {
    seed.wrapping_add(attempt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn sample(n: usize, p: f64, seed: u64) -> Result<SampleBounds> {
    let mut found: Option<(Graph, u64)> = None;
    for attempt in 0..MAX_RESEEDS {
        let candidate = random_gnp(n, p, aux_seed(seed, attempt))?;
        if candidate.edge_count() > 0 {
            found = Some((candidate, attempt));
            break;
        }
    }
    let (g, reseeds) = found.ok_or_else(|| {
        Error::domain(format!("G({n}, {p}) stayed edgeless for {MAX_RESEEDS} seeds starting at {seed}"))
    })?;
    let spec = |kind| eigenvalues_sym(&g.matrix(kind)?);
    let values = classical_bounds(
        &spec(GraphMatrixKind::Adjacency)?,
        &spec(GraphMatrixKind::Laplacian)?,
        &spec(GraphMatrixKind::SignlessLaplacian)?,
    )?;
    let pick = |id| values.iter().find(|v| v.id == id).filter(|v| v.valid).map(|v| v.value);
    Ok(SampleBounds {
        seed: aux_seed(seed, reseeds),
        reseeds,
        hoffman: pick(BoundId::Hoffman),
        kolotilina1: pick(BoundId::Kolotilina1),
        kolotilina2: pick(BoundId::Kolotilina2),
    })
}

/// Per-sample bounds for seeds `seed_base, seed_base + 1, ...`, in seed order.
pub fn random_samples(n: usize, p: f64, samples: usize, seed_base: u64) -> Result<Vec<SampleBounds>> {
    if samples == 0 {
        return Err(Error::domain("at least one sample is required"));
    }
    (0..samples as u64).into_par_iter().map(|i| sample(n, p, seed_base.wrapping_add(i))).collect()
}

fn mean(values: impl Iterator<Item = Option<f64>>) -> f64 {
    let (sum, count) = values.flatten().fold((0.0, 0usize), |(s, c), v| (s + v, c + 1));
    if count == 0 {
        f64::NAN
    } else {
        sum / count as f64
    }
}

pub fn random_table(rows: &[(usize, f64)], samples: usize, seed_base: u64) -> Result<Vec<RandomTableRow>> {
    rows.iter()
        .map(|&(n, p)| {
            let s = random_samples(n, p, samples, seed_base)?;
            Ok(RandomTableRow {
                n,
                p,
                samples,
                seed_base,
                hoffman_avg: mean(s.iter().map(|b| b.hoffman)),
                kolo1_avg: mean(s.iter().map(|b| b.kolotilina1)),
                kolo2_avg: mean(s.iter().map(|b| b.kolotilina2)),
                bollobas: bollobas_estimate(n, p).ok(),
                reseeds: s.iter().map(|b| b.reseeds).sum(),
            })
        })
        .collect()
}
