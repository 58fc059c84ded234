//! Spectral lower bounds on the chromatic number.
//!
//! All bounds are evaluated from precomputed spectra ([`GraphSpectra`]); only
//! the integer-c search needs fresh eigensolves, because it looks at
//! `B + A/(c-1)` for every trial `c`.

mod chain;
mod classical;
mod generalized;
mod integer_c;
mod report;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphMatrixKind};
use crate::linalg::{eigenvalues_sym, Spectrum, SpectrumKind, PROPERTY_TOL};

pub use chain::chain_bounds;
pub use classical::{classical_bounds, loan_bound};
pub use generalized::{generalized_bounds, normalized_bounds, sweep, SweepEntry};
pub use integer_c::{integer_c_for_shift, integer_c_search, DiagonalShift, IntegerCSearch, ShiftMinima};
pub use report::{full_report, round_display, BoundReport};

/// Identifies one lower-bound formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BoundId {
    /// `1 + μ_1 / -μ_n`
    Hoffman,
    /// `1 + μ_1 / (θ_1 - μ_1)`
    NikiforovHybrid,
    /// `1 + μ_1 / (μ_1 - δ_1 + θ_1)`
    Kolotilina1,
    /// `1 + μ_1 / (μ_1 - δ_n + θ_n)`
    Kolotilina2,
    /// `1 + 2E / (2E - n δ_n)`
    #[serde(rename = "LOAN")]
    Loan,
    GenHoffman,
    GenNikiforov,
    GenKolotilina1,
    GenKolotilina2,
    /// `1 + 1 / -μ*_n`
    NormalizedHoffman,
    GenNormalizedHoffman,
    /// `1 + δ_1 / (2θ_1 - δ_1)`
    KolotilinaChain317,
    /// `1 + δ_1 / (2n - δ_1)`
    HansenLucas,
    /// `1 + μ_1 / (n - μ_1)`
    Cvetkovic,
    /// Smallest integer `c` passing the Ky-Fan test, maximized over `(B, m)`.
    IntegerC,
}

impl BoundId {
    pub const ALL: [BoundId; 15] = [
        BoundId::Hoffman,
        BoundId::NikiforovHybrid,
        BoundId::Kolotilina1,
        BoundId::Kolotilina2,
        BoundId::Loan,
        BoundId::GenHoffman,
        BoundId::GenNikiforov,
        BoundId::GenKolotilina1,
        BoundId::GenKolotilina2,
        BoundId::NormalizedHoffman,
        BoundId::GenNormalizedHoffman,
        BoundId::KolotilinaChain317,
        BoundId::HansenLucas,
        BoundId::Cvetkovic,
        BoundId::IntegerC,
    ];

    /// The five bounds that are maxima over `m`.
    pub const GENERALIZED: [BoundId; 5] = [
        BoundId::GenHoffman,
        BoundId::GenNikiforov,
        BoundId::GenKolotilina1,
        BoundId::GenKolotilina2,
        BoundId::GenNormalizedHoffman,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundId::Hoffman => "Hoffman",
            BoundId::NikiforovHybrid => "NikiforovHybrid",
            BoundId::Kolotilina1 => "Kolotilina1",
            BoundId::Kolotilina2 => "Kolotilina2",
            BoundId::Loan => "LOAN",
            BoundId::GenHoffman => "GenHoffman",
            BoundId::GenNikiforov => "GenNikiforov",
            BoundId::GenKolotilina1 => "GenKolotilina1",
            BoundId::GenKolotilina2 => "GenKolotilina2",
            BoundId::NormalizedHoffman => "NormalizedHoffman",
            BoundId::GenNormalizedHoffman => "GenNormalizedHoffman",
            BoundId::KolotilinaChain317 => "KolotilinaChain317",
            BoundId::HansenLucas => "HansenLucas",
            BoundId::Cvetkovic => "Cvetkovic",
            BoundId::IntegerC => "IntegerC",
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BoundId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::domain(format!("unknown bound `{s}`")))
    }
}

/// Value of one bound for one graph.
///
/// Invalid bounds carry `value = 1.0` (the trivial bound).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundValue {
    pub id: BoundId,
    pub value: f64,
    pub best_m: usize,
    pub valid: bool,
}

impl BoundValue {
    pub fn invalid(id: BoundId) -> Self {
        BoundValue { id, value: 1.0, best_m: 1, valid: false }
    }

    /// `1 + numerator / denominator`, invalid when the denominator is not
    /// above [`PROPERTY_TOL`].
    pub(crate) fn ratio(id: BoundId, numerator: f64, denominator: f64, m: usize) -> Self {
        if denominator > PROPERTY_TOL && numerator.is_finite() {
            BoundValue { id, value: 1.0 + numerator / denominator, best_m: m, valid: true }
        } else {
            BoundValue::invalid(id)
        }
    }

    /// Smallest integer this bound certifies, `ceil(value - 1e-6)`.
    pub fn certified_colors(&self) -> usize {
        (self.value - 1e-6).ceil().max(1.0) as usize
    }
}

/// Spectra of `A`, `L`, `Q` and (when defined) the normalized adjacency.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphSpectra {
    pub adjacency: Spectrum,
    pub laplacian: Spectrum,
    pub signless_laplacian: Spectrum,
    /// `None` when the graph has an isolated vertex.
    pub normalized_adjacency: Option<Spectrum>,
}

impl GraphSpectra {
    pub fn compute(g: &Graph) -> Result<Self> {
        let spec = |kind| -> Result<Spectrum> {
            Ok(eigenvalues_sym(&g.matrix(kind)?)?.with_kind(SpectrumKind::Graph(kind)))
        };
        let normalized_adjacency = match g.isolated_vertex() {
            Some(_) => None,
            None => Some(spec(GraphMatrixKind::NormalizedAdjacency)?),
        };
        Ok(GraphSpectra {
            adjacency: spec(GraphMatrixKind::Adjacency)?,
            laplacian: spec(GraphMatrixKind::Laplacian)?,
            signless_laplacian: spec(GraphMatrixKind::SignlessLaplacian)?,
            normalized_adjacency,
        })
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }
}

pub(crate) fn check_same_order(specs: &[&Spectrum]) -> Result<usize> {
    let n = specs[0].len();
    if n == 0 || specs.iter().any(|s| s.len() != n) {
        return Err(Error::domain("spectra must be non-empty and of equal length"));
    }
    Ok(n)
}
