//! Rank-one local systems on the complement and the resulting bounds on
//! `dim H¹(M(𝒜), L)`.

use num_integer::Integer;
use serde::Serialize;

use crate::arrangement::{compute_combinatorics, CombinatorialSummary, WeightedArrangement};
use crate::error::{Error, Result};
use crate::exact::{CyclotomicExponents, RootOfUnity};
use crate::monodromy::{charpoly_infinity, charpoly_zero_closed};

/// Monodromies `λ_j = exp(2πi·e_j/N)` around the lines, with `N` minimal,
/// i.e. `gcd(e_1, …, e_d, N) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LocalSystem {
    order: u64,
    residues: Vec<u64>,
    equimonodromic: bool,
}

impl LocalSystem {
    pub fn new(order: u64, residues: Vec<u64>) -> Result<Self> {
        if order == 0 {
            return Err(Error::BadLocalSystem("order must be positive".into()));
        }
        if residues.is_empty() {
            return Err(Error::BadLocalSystem("no residues".into()));
        }
        if let Some(&r) = residues.iter().find(|&&r| r >= order) {
            return Err(Error::BadLocalSystem(format!("residue {r} is not below the order {order}")));
        }
        let g = residues.iter().fold(order, |g, &r| g.gcd(&r));
        if g != 1 {
            return Err(Error::BadLocalSystem(format!(
                "order {order} is not minimal: residues and order share the factor {g}"
            )));
        }
        let equimonodromic = residues.windows(2).all(|w| w[0] == w[1]);
        Ok(Self { order, residues, equimonodromic })
    }

    /// `λ_j = exp(2πi/N)` on all `d` lines.
    pub fn equimonodromical(order: u64, d: usize) -> Result<Self> {
        Self::new(order, vec![if order == 1 { 0 } else { 1 }; d])
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn len(&self) -> usize {
        self.residues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn is_equimonodromic(&self) -> bool {
        self.equimonodromic
    }

    /// `λ_j`.
    pub fn monodromy(&self, j: usize) -> RootOfUnity {
        RootOfUnity::new(self.residues[j], self.order)
    }

    /// `a = exp(2πi/N)`.
    pub fn generator(&self) -> RootOfUnity {
        RootOfUnity::primitive(self.order)
    }

    /// Index of the first line with `λ_j = 1`.
    pub fn first_trivial(&self) -> Option<usize> {
        self.residues.iter().position(|&r| r % self.order == 0)
    }

    pub fn all_nontrivial(&self) -> bool {
        self.first_trivial().is_none()
    }

    /// `gcd(e_1, …, e_d) > 1`; such systems have no residue vector with
    /// coprime entries even though `N` is minimal.
    pub fn residue_gcd_exceeds_one(&self) -> bool {
        self.residues.iter().fold(0u64, |g, &r| g.gcd(&r)) > 1
    }

    fn require_nontrivial(&self) -> Result<()> {
        match self.first_trivial() {
            Some(index) => Err(Error::TrivialMonodromy { index }),
            None => Ok(()),
        }
    }

    fn require_length(&self, d: usize) -> Result<()> {
        if self.len() != d {
            return Err(Error::LengthMismatch { expected: d, got: self.len() });
        }
        Ok(())
    }
}

/// Builds the minimal local system from monodromies given as fractions
/// `k_j/N_j ∈ [0, 1)`, so `λ_j = exp(2πi·k_j/N_j)`. With `strict`, a trivial
/// monodromy (`k_j = 0`) is an error.
pub fn canonical_local_system(monodromies: &[(u64, u64)], strict: bool) -> Result<LocalSystem> {
    if monodromies.is_empty() {
        return Err(Error::BadLocalSystem("no monodromies".into()));
    }
    let mut reduced = Vec::with_capacity(monodromies.len());
    for (index, &(k, n)) in monodromies.iter().enumerate() {
        if n == 0 || k >= n {
            return Err(Error::BadLocalSystem(format!("{k}/{n} is not in [0, 1)")));
        }
        if k == 0 && strict {
            return Err(Error::TrivialMonodromy { index });
        }
        let root = RootOfUnity::new(k, n);
        reduced.push((root.numerator(), root.order()));
    }
    let order = reduced.iter().fold(1u64, |l, &(_, n)| l.lcm(&n));
    let residues = reduced.iter().map(|&(k, n)| k * (order / n)).collect();
    LocalSystem::new(order, residues)
}

/// `Σ (m_v - 2)` over vertices with `∏_{j ∈ I_v} λ_j = 1`.
pub fn vertex_mult_zero(cs: &CombinatorialSummary, ls: &LocalSystem) -> Result<i64> {
    ls.require_length(cs.d)?;
    ls.require_nontrivial()?;
    let n = ls.order();
    Ok(cs
        .vertices
        .iter()
        .filter(|v| v.incident.iter().map(|&j| ls.residues()[j]).sum::<u64>() % n == 0)
        .map(|v| v.multiplicity as i64 - 2)
        .sum())
}

/// `Σ (k_j - 1)` over directions whose point at infinity carries trivial
/// product monodromy, i.e. `N | d_e - d_j`. Only defined when the monodromy
/// around the line at infinity, `a^{-d_e}`, is nontrivial.
pub fn vertex_mult_infinity(cs: &CombinatorialSummary, ls: &LocalSystem) -> Result<i64> {
    ls.require_length(cs.d)?;
    ls.require_nontrivial()?;
    let n = ls.order();
    let residues = ls.residues();
    let total: u64 = residues.iter().sum();
    if total.is_multiple_of(n) {
        return Err(Error::InfinityMonodromyTrivial { order: n, weight_sum: total });
    }
    Ok(cs
        .directions
        .iter()
        .filter(|c| (total - c.members.iter().map(|&j| residues[j]).sum::<u64>()).is_multiple_of(n))
        .map(|c| c.count as i64 - 1)
        .sum())
}

/// `gcd(Δ_{e,0}, Δ_{e,∞})` in cyclotomic form.
pub fn delta_f(cs: &CombinatorialSummary) -> Result<CyclotomicExponents> {
    charpoly_zero_closed(cs)
        .gcd(&charpoly_infinity(cs))
        .map_err(|e| Error::Internal(format!("characteristic polynomial with {e}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundReport {
    pub a: RootOfUnity,
    pub order: u64,
    pub residues: Vec<u64>,
    #[serde(rename = "N0")]
    pub n0: i64,
    #[serde(rename = "NInfinity")]
    pub n_infinity: i64,
    /// `min(N0, NInfinity)`, an upper bound for `dim H¹(M(𝒜), L)`.
    pub bound: i64,
    pub vertex_sum_zero: i64,
    /// Absent when `N | d_e`.
    pub vertex_sum_infinity: Option<i64>,
    pub all_lambda_nontrivial: bool,
    /// No vertex has trivial product monodromy, so `N0 = 0` from the
    /// combinatorics alone.
    pub normal_crossing_shortcut: bool,
    pub residue_gcd_exceeds_one: bool,
}

impl BoundReport {
    /// Vertex sums agree with the polynomial multiplicities.
    pub fn is_consistent(&self) -> bool {
        self.bound == self.n0.min(self.n_infinity)
            && self.vertex_sum_zero == self.n0
            && self.vertex_sum_infinity.is_none_or(|s| s == self.n_infinity)
            && (!self.normal_crossing_shortcut || self.n0 == 0)
    }
}

/// Bound for a local system on the arrangement with summary `cs`. The
/// characteristic polynomials are built with the residues as weights.
pub fn h1_upper_bound_for(cs: &CombinatorialSummary, ls: &LocalSystem) -> Result<BoundReport> {
    ls.require_length(cs.d)?;
    ls.require_nontrivial()?;
    let n = ls.order();
    let weighted = cs.reweighted(ls.residues());
    let a = ls.generator();
    let n0 = charpoly_zero_closed(&weighted).root_multiplicity(&a);
    let n_infinity = charpoly_infinity(&weighted).root_multiplicity(&a);
    let vertex_sum_infinity = match vertex_mult_infinity(&weighted, ls) {
        Ok(s) => Some(s),
        Err(Error::InfinityMonodromyTrivial { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(BoundReport {
        a,
        order: n,
        residues: ls.residues().to_vec(),
        n0,
        n_infinity,
        bound: n0.min(n_infinity),
        vertex_sum_zero: vertex_mult_zero(&weighted, ls)?,
        vertex_sum_infinity,
        all_lambda_nontrivial: true,
        normal_crossing_shortcut: weighted.vertices.iter().all(|v| v.weight_sum % n != 0),
        residue_gcd_exceeds_one: ls.residue_gcd_exceeds_one(),
    })
}

pub fn h1_upper_bound(arr: &WeightedArrangement, ls: &LocalSystem) -> Result<BoundReport> {
    ls.require_length(arr.len())?;
    h1_upper_bound_for(&compute_combinatorics(arr), ls)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Line;

    fn arrangement(spec: &[(i64, i64, i64)], weights: &[u64]) -> WeightedArrangement {
        let lines = spec.iter().map(|&(a, b, c)| Line::from_ints(a, b, c).unwrap()).collect();
        WeightedArrangement::new(lines, weights.to_vec()).unwrap()
    }

    const T: &[(i64, i64, i64)] = &[(1, 0, 0), (0, 1, 0), (1, 1, -1)];
    const C: &[(i64, i64, i64)] = &[(1, 0, 0), (0, 1, 0)];
    const P: &[(i64, i64, i64)] =
        &[(1, 0, 0), (0, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 10), (1, 1, 11), (1, -1, 100), (1, -1, 101)];
    const CONCURRENT: &[(i64, i64, i64)] = &[(1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 0, -1)];
    const PENCIL: &[(i64, i64, i64)] = &[(1, 0, 0), (0, 1, 0), (1, 1, 0)];

    #[test]
    fn canonical_examples() {
        let l = canonical_local_system(&[(1, 4), (1, 4), (1, 2)], true).unwrap();
        assert_eq!((l.order(), l.residues()), (4, &[1, 1, 2][..]));
        let l = canonical_local_system(&[(2, 3), (2, 3)], true).unwrap();
        assert_eq!((l.order(), l.residues()), (3, &[2, 2][..]));
        assert!(l.residue_gcd_exceeds_one());
        assert!(l.is_equimonodromic());
        let l = canonical_local_system(&[(1, 2), (1, 3)], true).unwrap();
        assert_eq!((l.order(), l.residues()), (6, &[3, 2][..]));
        // unreduced input is reduced first
        let l = canonical_local_system(&[(2, 4), (3, 9)], true).unwrap();
        assert_eq!((l.order(), l.residues()), (6, &[3, 2][..]));
    }

    #[test]
    fn canonical_trivial_monodromy() {
        assert_eq!(canonical_local_system(&[(1, 2), (0, 5)], true).unwrap_err(), Error::TrivialMonodromy { index: 1 });
        let lax = canonical_local_system(&[(1, 2), (0, 5)], false).unwrap();
        assert_eq!((lax.order(), lax.residues()), (2, &[1, 0][..]));
        assert_eq!(lax.first_trivial(), Some(1));
        let all_trivial = canonical_local_system(&[(0, 3), (0, 2)], false).unwrap();
        assert_eq!(all_trivial.order(), 1);
        assert!(canonical_local_system(&[(3, 3)], false).is_err());
        assert!(canonical_local_system(&[], false).is_err());
    }

    #[test]
    fn local_system_validation() {
        assert!(LocalSystem::new(4, vec![2, 2]).is_err());
        assert!(LocalSystem::new(3, vec![1, 3]).is_err());
        assert!(LocalSystem::new(0, vec![0]).is_err());
        assert!(LocalSystem::new(4, vec![2, 1]).is_ok());
    }

    #[test]
    fn vertex_sum_zero_examples() {
        let p = compute_combinatorics(&arrangement(P, &[1; 8]));
        assert_eq!(vertex_mult_zero(&p, &LocalSystem::equimonodromical(3, 8).unwrap()).unwrap(), 0);
        let w = compute_combinatorics(&arrangement(T, &[1, 1, 2]));
        assert_eq!(vertex_mult_zero(&w, &LocalSystem::new(4, vec![1, 1, 2]).unwrap()).unwrap(), 0);
        let pencil = compute_combinatorics(&arrangement(PENCIL, &[1; 3]));
        assert_eq!(vertex_mult_zero(&pencil, &LocalSystem::equimonodromical(3, 3).unwrap()).unwrap(), 1);
    }

    #[test]
    fn vertex_sum_infinity_examples() {
        let p = compute_combinatorics(&arrangement(P, &[1; 8]));
        assert_eq!(vertex_mult_infinity(&p, &LocalSystem::equimonodromical(3, 8).unwrap()).unwrap(), 4);
        let t = compute_combinatorics(&arrangement(T, &[1; 3]));
        assert_eq!(vertex_mult_infinity(&t, &LocalSystem::equimonodromical(2, 3).unwrap()).unwrap(), 0);
        let w = compute_combinatorics(&arrangement(T, &[1, 1, 2]));
        assert_eq!(
            vertex_mult_infinity(&w, &LocalSystem::new(4, vec![1, 1, 2]).unwrap()).unwrap_err(),
            Error::InfinityMonodromyTrivial { order: 4, weight_sum: 4 }
        );
    }

    #[test]
    fn errors_for_trivial_or_mismatched_systems() {
        let t = compute_combinatorics(&arrangement(T, &[1; 3]));
        let trivial = LocalSystem::new(2, vec![1, 0, 1]).unwrap();
        assert_eq!(vertex_mult_zero(&t, &trivial).unwrap_err(), Error::TrivialMonodromy { index: 1 });
        assert_eq!(vertex_mult_infinity(&t, &trivial).unwrap_err(), Error::TrivialMonodromy { index: 1 });
        let short = LocalSystem::equimonodromical(3, 2).unwrap();
        assert_eq!(
            h1_upper_bound(&arrangement(T, &[1; 3]), &short).unwrap_err(),
            Error::LengthMismatch { expected: 3, got: 2 }
        );
        let one = LocalSystem::equimonodromical(1, 3).unwrap();
        assert_eq!(h1_upper_bound_for(&t, &one).unwrap_err().code(), "TrivialMonodromy");
    }

    #[test]
    fn bound_examples() {
        let r = h1_upper_bound(&arrangement(P, &[1; 8]), &LocalSystem::equimonodromical(3, 8).unwrap()).unwrap();
        assert_eq!((r.n0, r.n_infinity, r.bound), (0, 4, 0));
        assert_eq!(r.vertex_sum_infinity, Some(4));
        assert!(r.normal_crossing_shortcut && r.is_consistent());

        let r = h1_upper_bound(&arrangement(T, &[1, 1, 2]), &LocalSystem::new(4, vec![1, 1, 2]).unwrap()).unwrap();
        assert_eq!((r.n0, r.n_infinity, r.bound), (0, 1, 0));
        assert_eq!(r.vertex_sum_infinity, None);
        assert!(r.is_consistent());

        let r =
            h1_upper_bound(&arrangement(CONCURRENT, &[1; 4]), &LocalSystem::equimonodromical(3, 4).unwrap()).unwrap();
        assert_eq!((r.n0, r.n_infinity, r.bound), (1, 0, 0));
        assert_eq!(r.vertex_sum_infinity, Some(0));
        assert!(!r.normal_crossing_shortcut && r.is_consistent());
    }

    #[test]
    fn residues_replace_arrangement_weights() {
        // the arrangement's own weights play no role in the bound
        let plain = h1_upper_bound(&arrangement(T, &[1, 1, 1]), &LocalSystem::new(4, vec![1, 1, 2]).unwrap()).unwrap();
        let weighted =
            h1_upper_bound(&arrangement(T, &[1, 1, 2]), &LocalSystem::new(4, vec![1, 1, 2]).unwrap()).unwrap();
        assert_eq!(plain, weighted);
    }

    #[test]
    fn delta_f_examples() {
        let t = compute_combinatorics(&arrangement(T, &[1; 3]));
        assert_eq!(delta_f(&t).unwrap(), CyclotomicExponents::from_pairs([(1, 2)]));
        let c = compute_combinatorics(&arrangement(C, &[1; 2]));
        assert_eq!(delta_f(&c).unwrap(), CyclotomicExponents::from_pairs([(1, 1)]));
        let p = compute_combinatorics(&arrangement(P, &[1; 8]));
        assert_eq!(delta_f(&p).unwrap().root_multiplicity(&RootOfUnity::primitive(3)), 0);
    }

    #[test]
    fn bound_json_names() {
        let r = h1_upper_bound(&arrangement(P, &[1; 8]), &LocalSystem::equimonodromical(3, 8).unwrap()).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["N0"], 0);
        assert_eq!(v["NInfinity"], 4);
        assert_eq!(v["a"]["N"], 3);
        assert_eq!(v["vertexSumInfinity"], 4);
    }
}
