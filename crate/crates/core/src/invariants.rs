//! Closed-form numerical invariants of the arrangement and of the general
//! fiber `F_e = f_e^{-1}(t)`.

use serde::Serialize;

use crate::arrangement::{compute_combinatorics, CombinatorialSummary, WeightedArrangement};
use crate::error::{Error, Result};

/// `μ(𝒜) = 1 - d + Σ_m n_m(m - 1)`, which is also `χ(M(𝒜))`.
pub fn mu_arrangement(cs: &CombinatorialSummary) -> i64 {
    let sum: i64 = cs.histogram.iter().map(|(&m, &n)| (n * (m - 1)) as i64).sum();
    1 - cs.d as i64 + sum
}

/// `χ(X)` of the union of the lines, by cutting it into vertices and open
/// line pieces.
pub fn euler_characteristic_of_union(cs: &CombinatorialSummary) -> i64 {
    let pieces: i64 = (0..cs.d).map(|j| cs.open_line_euler(j)).sum();
    pieces + cs.vertices.len() as i64
}

/// `b₁(F_e) = 1 + d_e(d - 1) - Σ_j d_j k_j`.
pub fn betti1_general_fiber(cs: &CombinatorialSummary) -> i64 {
    let correction: i64 = cs.directions.iter().map(|c| (c.weight_sum * c.count as u64) as i64).sum();
    1 + cs.d_e as i64 * (cs.d as i64 - 1) - correction
}

/// `1 - d + Σ_m n_m(m - 1)m`, the unweighted expression for `b₁(F)`. It is
/// computed from vertices only and ignores weights.
pub fn betti1_from_vertices(cs: &CombinatorialSummary) -> i64 {
    let sum: i64 = cs.histogram.iter().map(|(&m, &n)| (n * (m - 1) * m) as i64).sum();
    1 - cs.d as i64 + sum
}

/// `(d - 1)² - Σ_j k_j(k_j - 1)`, the direction-only expression for the same
/// number.
pub fn betti1_from_directions(cs: &CombinatorialSummary) -> i64 {
    let d = cs.d as i64;
    let sum: i64 = cs.directions.iter().map(|c| (c.count * (c.count - 1)) as i64).sum();
    (d - 1) * (d - 1) - sum
}

fn half(value: i64, what: &str) -> Result<i64> {
    if value % 2 != 0 {
        return Err(Error::Internal(format!("{what} is odd ({value})")));
    }
    Ok(value / 2)
}

/// Genus of a smooth projective model of the general fiber, for reduced
/// arrangements only.
pub fn genus_general_fiber(cs: &CombinatorialSummary) -> Result<i64> {
    if !cs.is_unweighted() {
        return Err(Error::WeightedNotSupported);
    }
    let d = cs.d as i64;
    let mut genus = half((d - 1) * (d - 2), "(d-1)(d-2)")?;
    for c in &cs.directions {
        let k = c.count as i64;
        genus -= half(k * (k - 1), "k(k-1)")?;
    }
    if genus < 0 {
        return Err(Error::Internal(format!("negative genus {genus}")));
    }
    Ok(genus)
}

/// Milnor number of the closed fiber `C_t` at the point at infinity of the
/// `j`-th direction: `d_e(d_j - k_j) + d_j(k_j - 2) + 1`.
pub fn infinity_singularity_mu(cs: &CombinatorialSummary, j: usize) -> i64 {
    let c = &cs.directions[j];
    let (de, dj, kj) = (cs.d_e as i64, c.weight_sum as i64, c.count as i64);
    de * (dj - kj) + dj * (kj - 2) + 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InvariantReport {
    pub mu: i64,
    pub chi_complement: i64,
    pub b1_fiber: i64,
    /// Present only when every weight is 1.
    pub genus: Option<i64>,
    pub dicritics: i64,
    pub b1_complement: i64,
    #[serde(rename = "kalimanLHS")]
    pub kaliman_lhs: i64,
    #[serde(rename = "kalimanRHS")]
    pub kaliman_rhs: i64,
    pub numbers_identity_holds: bool,
    pub infinity_mu: Vec<i64>,
}

impl InvariantReport {
    /// Internal cross-identities that must hold for any valid input.
    pub fn is_consistent(&self) -> bool {
        self.chi_complement == self.mu
            && self.kaliman_lhs == self.kaliman_rhs
            && self.numbers_identity_holds
            && self.dicritics == self.b1_complement
    }
}

pub fn invariant_report_for(cs: &CombinatorialSummary) -> Result<InvariantReport> {
    let mu = mu_arrangement(cs);
    let d = cs.d as i64;
    // one dicritic per line: Σ_j k_j
    let dicritics: i64 = cs.directions.iter().map(|c| c.count as i64).sum();
    let genus = if cs.is_unweighted() { Some(genus_general_fiber(cs)?) } else { None };
    Ok(InvariantReport {
        mu,
        chi_complement: 1 - euler_characteristic_of_union(cs),
        b1_fiber: betti1_general_fiber(cs),
        genus,
        dicritics,
        b1_complement: d,
        kaliman_lhs: dicritics - 1,
        // n(F_t) = 1 for t ≠ 0 and n(F_0) = d
        kaliman_rhs: d - 1,
        numbers_identity_holds: betti1_from_vertices(cs) == betti1_from_directions(cs),
        infinity_mu: (0..cs.p()).map(|j| infinity_singularity_mu(cs, j)).collect(),
    })
}

pub fn invariant_report(arr: &WeightedArrangement) -> Result<InvariantReport> {
    invariant_report_for(&compute_combinatorics(arr))
}
