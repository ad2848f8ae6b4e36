//! Dense `i128` polynomial arithmetic used as an independent oracle.

#![allow(dead_code)]

use num_rational::Ratio;

pub type Poly = Vec<i128>;

pub fn trim(mut p: Poly) -> Poly {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

pub fn mul(a: &[i128], b: &[i128]) -> Poly {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Long division by a monic divisor, returning (quotient, remainder).
pub fn divmod(a: &[i128], b: &[i128]) -> (Poly, Poly) {
    assert_eq!(*b.last().unwrap(), 1);
    let mut r = a.to_vec();
    if r.len() < b.len() {
        return (vec![0], r);
    }
    let mut q = vec![0; r.len() - b.len() + 1];
    for i in (0..q.len()).rev() {
        let c = r[i + b.len() - 1];
        q[i] = c;
        for (j, y) in b.iter().enumerate() {
            r[i + j] -= c * y;
        }
    }
    (trim(q), trim(r))
}

pub fn t_pow_minus_one(m: usize) -> Poly {
    let mut p = vec![0; m + 1];
    p[0] = -1;
    p[m] = 1;
    p
}

pub fn mobius(mut n: usize) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// `Φ_n = ∏_{d | n} (t^d - 1)^{μ(n/d)}`, numerator first then exact division.
pub fn cyclotomic_by_mobius(n: usize) -> Poly {
    let mut num = vec![1];
    let mut den = vec![1];
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        match mobius(n / d) {
            1 => num = mul(&num, &t_pow_minus_one(d)),
            -1 => den = mul(&den, &t_pow_minus_one(d)),
            _ => {}
        }
    }
    // den is monic up to sign; normalize
    let sign = *den.last().unwrap();
    let den: Poly = den.iter().map(|c| c * sign).collect();
    let num: Poly = num.iter().map(|c| c * sign).collect();
    let (q, r) = divmod(&num, &den);
    assert_eq!(r, vec![0]);
    q
}

pub fn expand_factored(pairs: &[(usize, u32)]) -> Poly {
    let mut p = vec![1];
    for &(m, c) in pairs {
        for _ in 0..c {
            p = mul(&p, &t_pow_minus_one(m));
        }
    }
    p
}

/// Multiplicity of a primitive `n`-th root by repeated division by `Φ_n`.
pub fn multiplicity(p: &[i128], n: usize) -> usize {
    let phi = cyclotomic_by_mobius(n);
    let mut count = 0;
    let mut cur = p.to_vec();
    loop {
        let (q, r) = divmod(&cur, &phi);
        if r != vec![0] {
            return count;
        }
        count += 1;
        cur = q;
    }
}

pub type Q = Ratio<i128>;

pub fn rational_gcd(a: &[i128], b: &[i128]) -> Poly {
    let to_q = |p: &[i128]| p.iter().map(|&c| Q::from_integer(c)).collect::<Vec<Q>>();
    let (mut x, mut y) = (to_q(a), to_q(b));
    let strip = |mut p: Vec<Q>| {
        while p.len() > 1 && *p.last().unwrap() == Q::from_integer(0) {
            p.pop();
        }
        p
    };
    while !(y.len() == 1 && y[0] == Q::from_integer(0)) {
        let mut r = x.clone();
        let lead = *y.last().unwrap();
        while r.len() >= y.len() && !(r.len() == 1 && r[0] == Q::from_integer(0)) {
            let c = *r.last().unwrap() / lead;
            let shift = r.len() - y.len();
            for (j, v) in y.iter().enumerate() {
                r[shift + j] -= c * v;
            }
            r = strip(r);
            if r.len() < y.len() {
                break;
            }
        }
        x = y;
        y = strip(r);
    }
    let lead = *x.last().unwrap();
    x.iter()
        .map(|c| {
            let v = *c / lead;
            assert!(v.is_integer());
            v.to_integer()
        })
        .collect()
}

/// Converts library output for comparison.
pub fn to_i128(p: &[num_bigint::BigInt]) -> Poly {
    p.iter().map(|c| i128::try_from(c).unwrap()).collect()
}
