//! Exact arithmetic: rationals, Gaussian rationals, roots of unity and
//! products of `(t^m - 1)` factors.

mod dense;
mod factored;
mod gaussian;
mod rational;
mod root;

pub use dense::{cyclotomic_poly, poly_mul, DensePoly};
pub use factored::{CyclotomicExponents, FactoredUnityPoly};
pub use gaussian::GaussianRational;
pub use rational::{format_rational, parse_rational, Rational};
pub use root::RootOfUnity;

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = 1;
    while k * k <= n {
        if n.is_multiple_of(k) {
            small.push(k);
            if k * k != n {
                large.push(n / k);
            }
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    let mut result = n;
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if rest > 1 {
        result -= result / rest;
    }
    result
}
