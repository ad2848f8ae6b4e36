//! Characteristic polynomials of the monodromy at infinity and about the zero
//! fiber, and the stratified zeta function about the zero fiber.
//!
//! Polynomials are kept in factored `(t^m - 1)` form. Zeta functions use the
//! same carrier but are read as products of `(1 - t^m)`; the two readings
//! differ by a unit and are only ever compared after cyclotomic refactoring.

use serde::Serialize;

use crate::arrangement::CombinatorialSummary;
use crate::error::{Error, Result};
use crate::exact::FactoredUnityPoly;

/// `Δ_{e,∞}(t) = (t - 1)(t^{d_e} - 1)^{p-2} ∏_j (t^{d_e - d_j} - 1)^{k_j - 1}`.
pub fn charpoly_infinity(cs: &CombinatorialSummary) -> FactoredUnityPoly {
    let p = cs.p() as i64;
    assert!(p >= 2, "arrangement must be essential");
    let mut poly = FactoredUnityPoly::factor(1, 1);
    poly.push(cs.d_e, p - 2);
    for class in &cs.directions {
        if class.count >= 2 {
            poly.push(cs.d_e - class.weight_sum, class.count as i64 - 1);
        }
    }
    poly
}

/// `Δ_{e,0}(t) = (t - 1) ∏_j (t^{e_j} - 1)^{v_j - 1} ∏_v (t^{d(I_v)} - 1)^{m_v - 2}`.
pub fn charpoly_zero_closed(cs: &CombinatorialSummary) -> FactoredUnityPoly {
    let mut poly = FactoredUnityPoly::factor(1, 1);
    for (j, &e) in cs.weights.iter().enumerate() {
        poly.push(e, -cs.open_line_euler(j));
    }
    for v in &cs.vertices {
        poly.push(v.weight_sum, v.multiplicity as i64 - 2);
    }
    poly
}

/// The reduced-case formula `(t - 1)^μ ∏_m [(t - 1)(t^m - 1)^{m-2}]^{n_m}`,
/// built from `μ(𝒜)` and the multiplicity histogram alone.
pub fn charpoly_zero_unweighted(cs: &CombinatorialSummary) -> FactoredUnityPoly {
    let mut poly = FactoredUnityPoly::factor(1, crate::invariants::mu_arrangement(cs));
    for (&m, &n) in &cs.histogram {
        poly.push(1, n as i64);
        poly.push(m as u64, (n * (m - 2)) as i64);
    }
    poly
}

/// A stratum of the zero fiber `X`, with the data its local zeta function
/// and Euler characteristic depend on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum StratumDescriptor {
    /// A vertex with weight sum `d(I_v)` and multiplicity `m_v`.
    #[serde(rename_all = "camelCase")]
    Vertex { weight_sum: u64, multiplicity: usize },
    /// `H_j⁰`, the part of line `j` off every other line.
    #[serde(rename_all = "camelCase")]
    OpenLinePiece { weight: u64, euler: i64 },
}

impl StratumDescriptor {
    pub fn euler(&self) -> i64 {
        match *self {
            StratumDescriptor::Vertex { .. } => 1,
            StratumDescriptor::OpenLinePiece { euler, .. } => euler,
        }
    }
}

/// Rational function `∏ (1 - t^m)^{c_m}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ZetaFunction {
    pub value: FactoredUnityPoly,
}

impl ZetaFunction {
    pub fn unit() -> Self {
        Self::default()
    }

    /// Factors with positive exponent.
    pub fn numerator(&self) -> FactoredUnityPoly {
        FactoredUnityPoly::from_pairs(self.value.iter().filter(|&(_, c)| c > 0))
    }

    /// Factors with negative exponent, exponents negated.
    pub fn denominator(&self) -> FactoredUnityPoly {
        FactoredUnityPoly::from_pairs(self.value.iter().filter(|&(_, c)| c < 0).map(|(m, c)| (m, -c)))
    }
}

/// Local zeta function of `f_e` at a point of the stratum.
///
/// At a point of `H_j⁰` the germ is `ℓ^{e_j}`, whose Milnor fiber is `e_j`
/// points permuted cyclically. At a vertex the germ is homogeneous of degree
/// `D = d(I_v)` with Milnor fiber Euler characteristic `D(2 - m_v)` and
/// monodromy of order `D` acting freely.
pub fn local_zeta(s: &StratumDescriptor) -> ZetaFunction {
    let value = match *s {
        StratumDescriptor::OpenLinePiece { weight, .. } => FactoredUnityPoly::factor(weight, 1),
        StratumDescriptor::Vertex { weight_sum, multiplicity } => {
            FactoredUnityPoly::factor(weight_sum, 2 - multiplicity as i64)
        }
    };
    ZetaFunction { value }
}

/// Vertices followed by the open line pieces.
pub fn strata(cs: &CombinatorialSummary) -> Vec<StratumDescriptor> {
    let vertices = cs
        .vertices
        .iter()
        .map(|v| StratumDescriptor::Vertex { weight_sum: v.weight_sum, multiplicity: v.multiplicity });
    let pieces = cs
        .weights
        .iter()
        .enumerate()
        .map(|(j, &weight)| StratumDescriptor::OpenLinePiece { weight, euler: cs.open_line_euler(j) });
    vertices.chain(pieces).collect()
}

/// `Z(f_e, 0) = ∏_S Z(f_e, x_S)^{χ(S)}` over the strata of `X`.
pub fn zeta_at_zero(cs: &CombinatorialSummary) -> ZetaFunction {
    let value =
        strata(cs).iter().fold(FactoredUnityPoly::unit(), |acc, s| acc.multiply(&local_zeta(s).value.pow(s.euler())));
    ZetaFunction { value }
}

/// Recovers `det(Id - t·M¹) = (1 - t)/Z`; the `(1 - t)` is the contribution of
/// `H⁰` of the connected general fiber.
pub fn charpoly_zero_from_zeta(z: &ZetaFunction) -> Result<FactoredUnityPoly> {
    let poly = FactoredUnityPoly::factor(1, 1).multiply(&z.value.inverse());
    let cyclo = poly.to_cyclotomic();
    if let Some((n, exponent)) = cyclo.iter().find(|&(_, e)| e < 0) {
        return Err(Error::NotPolynomial { n, exponent });
    }
    Ok(poly)
}
