use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::divisors;

/// Dense integer polynomial, coefficients in ascending degree order.
pub type DensePoly = Vec<BigInt>;

fn trim(mut p: DensePoly) -> DensePoly {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn poly_mul(a: &[BigInt], b: &[BigInt]) -> DensePoly {
    if a.is_empty() || b.is_empty() {
        return vec![BigInt::zero()];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Quotient of `a` by a monic `b`, `None` when the remainder is nonzero.
pub(crate) fn div_exact_monic(a: &[BigInt], b: &[BigInt]) -> Option<DensePoly> {
    debug_assert!(b.last().is_some_and(One::is_one));
    if a.len() < b.len() {
        return a.iter().all(Zero::is_zero).then(|| vec![BigInt::zero()]);
    }
    let mut rem: DensePoly = a.to_vec();
    let shift = a.len() - b.len();
    let mut quot = vec![BigInt::zero(); shift + 1];
    for i in (0..=shift).rev() {
        let lead = rem[i + b.len() - 1].clone();
        if lead.is_zero() {
            continue;
        }
        for (j, c) in b.iter().enumerate() {
            rem[i + j] -= &lead * c;
        }
        quot[i] = lead;
    }
    rem.iter().all(Zero::is_zero).then(|| trim(quot))
}

/// `t^n - 1`.
pub(crate) fn unity_minus_one(n: u64) -> DensePoly {
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    p
}

/// Cyclotomic polynomials `Φ_d` for every divisor `d` of `n`.
pub(crate) fn cyclotomic_family(n: u64) -> BTreeMap<u64, DensePoly> {
    let mut family: BTreeMap<u64, DensePoly> = BTreeMap::new();
    for d in divisors(n) {
        let mut p = unity_minus_one(d);
        for e in divisors(d) {
            if e == d {
                break;
            }
            p = div_exact_monic(&p, &family[&e]).expect("cyclotomic division is exact");
        }
        family.insert(d, p);
    }
    family
}

/// The `n`-th cyclotomic polynomial, by exact division of `t^n - 1` by the
/// cyclotomic polynomials of the proper divisors of `n`.
pub fn cyclotomic_poly(n: u64) -> DensePoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    cyclotomic_family(n).remove(&n).expect("n divides itself")
}
