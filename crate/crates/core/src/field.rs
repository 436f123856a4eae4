//! Arithmetic in the prime field F_p.

use crate::error::{Error, Result};

/// Residues are stored as plain `u32` in `[0, p)`.
pub type Scalar = u32;

pub const DEFAULT_PRIME: u32 = 7919;
pub const DEFAULT_BUDGET: u32 = 40;

/// A prime modulus below 2^31 together with the degree budget it was checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PrimeField {
    p: u32,
    budget: u32,
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME, budget: DEFAULT_BUDGET }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// Fails unless `p` is prime, `p < 2^31` and `budget < p`.
    pub fn new(p: u32, budget: u32) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::Precondition(alloc::format!("{p} is not a usable prime modulus")));
        }
        if budget >= p {
            return Err(Error::Precondition(alloc::format!(
                "degree budget {budget} must be smaller than the prime {p}"
            )));
        }
        Ok(PrimeField { p, budget })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn budget(&self) -> u32 {
        self.budget
    }

    /// Reduce a signed integer.
    pub fn from_i64(&self, v: i64) -> Scalar {
        v.rem_euclid(self.p as i64) as Scalar
    }

    #[inline]
    pub fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        let s = a + b;
        if s >= self.p { s - self.p } else { s }
    }

    #[inline]
    pub fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        if a >= b { a - b } else { a + self.p - b }
    }

    #[inline]
    pub fn neg(&self, a: Scalar) -> Scalar {
        if a == 0 { 0 } else { self.p - a }
    }

    #[inline]
    pub fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        ((a as u64 * b as u64) % self.p as u64) as Scalar
    }

    pub fn pow(&self, mut a: Scalar, mut e: u64) -> Scalar {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Panics on zero: callers only invert pivots.
    pub fn inv(&self, a: Scalar) -> Scalar {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    pub fn factorial(&self, k: u32) -> Scalar {
        (1..=k).fold(1, |acc, i| self.mul(acc, i % self.p))
    }

    /// k!/(k-j)! : the falling factorial.
    pub fn falling(&self, k: u32, j: u32) -> Scalar {
        ((k - j + 1)..=k).fold(1, |acc, i| self.mul(acc, i % self.p))
    }

    /// Checks that every factorial up to `deg` is invertible under the budget.
    pub fn check_degree(&self, deg: u32) -> Result<()> {
        if deg > self.budget {
            return Err(Error::DegreeBudget { degree: deg, budget: self.budget });
        }
        Ok(())
    }

    /// Map to the symmetric range used for printing.
    pub fn signed(&self, a: Scalar) -> i64 {
        if a > self.p / 2 { a as i64 - self.p as i64 } else { a as i64 }
    }
}
