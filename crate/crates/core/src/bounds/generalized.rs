//! Bounds that take the maximum over the number `m` of eigenvalues used.

use serde::{Deserialize, Serialize};

use super::{check_same_order, BoundId, BoundValue, GraphSpectra};
use crate::error::{Error, Result};
use crate::linalg::{KyFanSums, Spectrum, PROPERTY_TOL};

/// One `m` of a generalized bound. `value` is `None` when the denominator is
/// not above [`PROPERTY_TOL`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub m: usize,
    pub numerator: f64,
    pub denominator: f64,
    pub value: Option<f64>,
}

fn entries(numerators: KyFanSums, denominators: KyFanSums) -> Vec<SweepEntry> {
    numerators
        .as_slice()
        .iter()
        .zip(denominators.as_slice())
        .enumerate()
        .map(|(i, (&num, &den))| SweepEntry {
            m: i + 1,
            numerator: num,
            denominator: den,
            value: (den > PROPERTY_TOL).then(|| 1.0 + num / den),
        })
        .collect()
}

/// Maximum over admissible `m`; ties go to the smallest `m`.
fn best(id: BoundId, sweep: &[SweepEntry]) -> BoundValue {
    let mut out = BoundValue::invalid(id);
    for e in sweep {
        if let Some(v) = e.value {
            if !out.valid || v > out.value {
                out = BoundValue { id, value: v, best_m: e.m, valid: true };
            }
        }
    }
    out
}

fn ky_fan_ratio(num: impl Iterator<Item = f64>, den: impl Iterator<Item = f64>) -> Vec<SweepEntry> {
    entries(KyFanSums::from_values(num), KyFanSums::from_values(den))
}

fn generalized_sweep(id: BoundId, a: &Spectrum, l: &Spectrum, q: &Spectrum) -> Vec<SweepEntry> {
    let (mu, th, de) = (a.values(), l.values(), q.values());
    let n = mu.len();
    let rev = |i: usize| n - 1 - i;
    let num = mu.iter().copied();
    match id {
        BoundId::GenHoffman => ky_fan_ratio(num, (0..n).map(|i| -mu[rev(i)])),
        BoundId::GenNikiforov => ky_fan_ratio(num, (0..n).map(|i| th[i] - mu[i])),
        BoundId::GenKolotilina1 => ky_fan_ratio(num, (0..n).map(|i| mu[i] - de[i] + th[i])),
        BoundId::GenKolotilina2 => {
            ky_fan_ratio(num, (0..n).map(|i| mu[i] - de[rev(i)] + th[rev(i)]))
        }
        _ => unreachable!("not an unnormalized generalized bound"),
    }
}

fn normalized_sweep(na: &Spectrum) -> Vec<SweepEntry> {
    let v = na.values();
    ky_fan_ratio(v.iter().copied(), v.iter().rev().map(|x| -x))
}

/// Generalized Hoffman, Nikiforov and Kolotilina bounds: for each, the
/// maximum over `m = 1..n` of the ratio of Ky-Fan sums.
pub fn generalized_bounds(spec_a: &Spectrum, spec_l: &Spectrum, spec_q: &Spectrum) -> Result<Vec<BoundValue>> {
    check_same_order(&[spec_a, spec_l, spec_q])?;
    let ids = [BoundId::GenHoffman, BoundId::GenNikiforov, BoundId::GenKolotilina1, BoundId::GenKolotilina2];
    if spec_a.max() <= PROPERTY_TOL {
        return Ok(ids.map(BoundValue::invalid).to_vec());
    }
    Ok(ids
        .iter()
        .map(|&id| best(id, &generalized_sweep(id, spec_a, spec_l, spec_q)))
        .collect())
}

/// `1 + 1/(-μ*_n)` and its maximum over `m` of
/// `1 + (μ*_1 + ... + μ*_m) / -(μ*_n + ... + μ*_{n+1-m})`.
pub fn normalized_bounds(spec_na: &Spectrum) -> Result<Vec<BoundValue>> {
    if spec_na.is_empty() {
        return Err(Error::domain("empty normalized spectrum"));
    }
    Ok(vec![
        // computed μ*_1 rather than the exact 1, so the sweep's m = 1 entry matches
        BoundValue::ratio(BoundId::NormalizedHoffman, spec_na.max(), -spec_na.min(), 1),
        best(BoundId::GenNormalizedHoffman, &normalized_sweep(spec_na)),
    ])
}

/// Per-`m` values of one generalized bound.
pub fn sweep(id: BoundId, spectra: &GraphSpectra) -> Result<Vec<SweepEntry>> {
    match id {
        BoundId::GenHoffman | BoundId::GenNikiforov | BoundId::GenKolotilina1 | BoundId::GenKolotilina2 => {
            Ok(generalized_sweep(id, &spectra.adjacency, &spectra.laplacian, &spectra.signless_laplacian))
        }
        BoundId::GenNormalizedHoffman => spectra
            .normalized_adjacency
            .as_ref()
            .map(normalized_sweep)
            .ok_or_else(|| Error::domain("normalized adjacency undefined: graph has an isolated vertex")),
        other => Err(Error::domain(format!("{other} is not a generalized bound"))),
    }
}
