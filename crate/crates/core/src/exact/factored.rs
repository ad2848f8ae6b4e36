use std::collections::BTreeMap;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::One;
use serde::ser::{Serialize, SerializeMap, Serializer};

use super::dense::{cyclotomic_poly, poly_mul, DensePoly};
use super::{divisors, totient, RootOfUnity};
use crate::error::{Error, Result};

/// `∏_m (t^m - 1)^{c_m}` with integer (possibly negative) exponents.
///
/// Zero exponents are never stored, so two values are equal exactly when
/// their exponent maps are.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FactoredUnityPoly {
    factors: BTreeMap<u64, i64>,
}

/// `∏_N Φ_N(t)^{ε_N}` with nonzero integer exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CyclotomicExponents {
    exponents: BTreeMap<u64, i64>,
}

fn bump(map: &mut BTreeMap<u64, i64>, key: u64, by: i64) {
    if by == 0 {
        return;
    }
    let slot = map.entry(key).or_insert(0);
    *slot += by;
    if *slot == 0 {
        map.remove(&key);
    }
}

fn serialize_keyed<S: Serializer>(map: &BTreeMap<u64, i64>, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    let mut out = serializer.serialize_map(Some(map.len()))?;
    for (k, v) in map {
        out.serialize_entry(&k.to_string(), v)?;
    }
    out.end()
}

impl FactoredUnityPoly {
    /// The constant 1 (empty product).
    pub fn unit() -> Self {
        Self::default()
    }

    /// `(t^m - 1)^exponent`.
    pub fn factor(m: u64, exponent: i64) -> Self {
        let mut p = Self::unit();
        p.push(m, exponent);
        p
    }

    pub fn from_pairs<I: IntoIterator<Item = (u64, i64)>>(pairs: I) -> Self {
        let mut p = Self::unit();
        for (m, c) in pairs {
            p.push(m, c);
        }
        p
    }

    /// Multiplies in `(t^m - 1)^exponent`.
    pub fn push(&mut self, m: u64, exponent: i64) {
        assert!(m >= 1, "factor t^0 - 1 vanishes identically");
        bump(&mut self.factors, m, exponent);
    }

    pub fn exponent(&self, m: u64) -> i64 {
        self.factors.get(&m).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.factors.iter().map(|(&m, &c)| (m, c))
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.factors.values().any(|&c| c < 0)
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.iter() {
            out.push(m, c);
        }
        out
    }

    pub fn inverse(&self) -> Self {
        Self::from_pairs(self.iter().map(|(m, c)| (m, -c)))
    }

    pub fn pow(&self, e: i64) -> Self {
        Self::from_pairs(self.iter().map(|(m, c)| (m, c * e)))
    }

    /// `Σ m·c_m`; negative for proper rational functions.
    pub fn degree(&self) -> i64 {
        self.iter().map(|(m, c)| m as i64 * c).sum()
    }

    /// Rewrites every `t^m - 1` as `∏_{N | m} Φ_N`.
    pub fn to_cyclotomic(&self) -> CyclotomicExponents {
        let mut exponents = BTreeMap::new();
        for (m, c) in self.iter() {
            for n in divisors(m) {
                bump(&mut exponents, n, c);
            }
        }
        CyclotomicExponents { exponents }
    }

    /// `Σ_{N | m} c_m` where `N` is the order of `root`; this is the root
    /// multiplicity whenever all exponents are nonnegative.
    pub fn root_multiplicity(&self, root: &RootOfUnity) -> i64 {
        let order = root.order();
        self.iter().filter(|(m, _)| m % order == 0).map(|(_, c)| c).sum()
    }

    /// Greatest common divisor of two polynomials, in cyclotomic form.
    pub fn gcd(&self, other: &Self) -> Result<CyclotomicExponents> {
        for p in [self, other] {
            if let Some((m, c)) = p.iter().find(|&(_, c)| c < 0) {
                return Err(Error::NegativeExponent { m, exponent: c });
            }
        }
        Ok(self.to_cyclotomic().min_with(&other.to_cyclotomic()))
    }

    /// Dense integer coefficients, ascending.
    pub fn expand(&self) -> Result<DensePoly> {
        self.to_cyclotomic().expand()
    }
}

impl Mul for &FactoredUnityPoly {
    type Output = FactoredUnityPoly;
    fn mul(self, rhs: &FactoredUnityPoly) -> FactoredUnityPoly {
        self.multiply(rhs)
    }
}

impl Serialize for FactoredUnityPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_keyed(&self.factors, serializer)
    }
}

impl CyclotomicExponents {
    pub fn from_pairs<I: IntoIterator<Item = (u64, i64)>>(pairs: I) -> Self {
        let mut exponents = BTreeMap::new();
        for (n, e) in pairs {
            assert!(n >= 1, "cyclotomic index must be positive");
            bump(&mut exponents, n, e);
        }
        Self { exponents }
    }

    pub fn exponent(&self, n: u64) -> i64 {
        self.exponents.get(&n).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.exponents.iter().map(|(&n, &e)| (n, e))
    }

    /// `Σ φ(N)·ε_N`.
    pub fn degree(&self) -> i64 {
        self.iter().map(|(n, e)| totient(n) as i64 * e).sum()
    }

    pub fn is_polynomial(&self) -> bool {
        self.exponents.values().all(|&e| e >= 0)
    }

    /// Multiplicity of `root` as a root (or pole, if negative).
    pub fn root_multiplicity(&self, root: &RootOfUnity) -> i64 {
        self.exponent(root.order())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (n, e) in other.iter() {
            bump(&mut out.exponents, n, e);
        }
        out
    }

    /// Entrywise minimum, with absent entries read as 0.
    pub fn min_with(&self, other: &Self) -> Self {
        let keys: std::collections::BTreeSet<u64> =
            self.exponents.keys().chain(other.exponents.keys()).copied().collect();
        Self::from_pairs(keys.into_iter().map(|n| (n, self.exponent(n).min(other.exponent(n)))))
    }

    pub fn expand(&self) -> Result<DensePoly> {
        if let Some((n, e)) = self.iter().find(|&(_, e)| e < 0) {
            return Err(Error::NotPolynomial { n, exponent: e });
        }
        let mut out: DensePoly = vec![BigInt::one()];
        for (n, e) in self.iter() {
            let phi = cyclotomic_poly(n);
            for _ in 0..e {
                out = poly_mul(&out, &phi);
            }
        }
        Ok(out)
    }
}

impl Serialize for CyclotomicExponents {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_keyed(&self.exponents, serializer)
    }
}
