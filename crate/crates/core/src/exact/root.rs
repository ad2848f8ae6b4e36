use num_integer::Integer;
use serde::Serialize;

/// The root of unity `exp(2πi·k/N)`, kept as a reduced fraction `k/N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RootOfUnity {
    k: u64,
    #[serde(rename = "N")]
    n: u64,
}

impl RootOfUnity {
    /// `exp(2πi·k/n)` reduced to lowest terms. Panics if `n == 0`.
    pub fn new(k: u64, n: u64) -> Self {
        assert!(n >= 1, "root of unity needs a positive order");
        let k = k % n;
        if k == 0 {
            return Self { k: 0, n: 1 };
        }
        let g = k.gcd(&n);
        Self { k: k / g, n: n / g }
    }

    /// The primitive root `exp(2πi/n)`.
    pub fn primitive(n: u64) -> Self {
        Self::new(1, n)
    }

    pub fn one() -> Self {
        Self { k: 0, n: 1 }
    }

    pub fn numerator(&self) -> u64 {
        self.k
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        self.n
    }

    pub fn is_one(&self) -> bool {
        self.n == 1
    }

    /// `self^e`.
    pub fn pow(&self, e: u64) -> Self {
        let k = ((self.k as u128 * e as u128) % self.n as u128) as u64;
        Self::new(k, self.n)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n.lcm(&other.n);
        Self::new(self.k * (n / self.n) + other.k * (n / other.n), n)
    }
}
