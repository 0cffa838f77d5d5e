use std::fmt;
use std::ops::Mul;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Exact non-negative integer count.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BigCount(BigUint);

impl BigCount {
    pub fn zero() -> Self {
        BigCount(BigUint::zero())
    }

    pub fn one() -> Self {
        BigCount(BigUint::one())
    }

    /// `3^threes * 2^twos`.
    pub fn pow3_pow2(threes: u64, twos: u64) -> Self {
        BigCount(BigUint::from(3u32).pow(threes as u32) << twos)
    }

    pub fn pow(base: u32, exp: u32) -> Self {
        BigCount(BigUint::from(base).pow(exp))
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Base-2 logarithm from the top 64 bits; relative error near machine
    /// epsilon. `-inf` for zero.
    pub fn log2(&self) -> f64 {
        let bits = self.0.bits();
        if bits <= 64 {
            return (self.0.to_u64().unwrap() as f64).log2();
        }
        let shift = bits - 64;
        let top = (&self.0 >> shift).to_u64().unwrap();
        shift as f64 + (top as f64).log2()
    }

    pub fn log3(&self) -> f64 {
        self.log2() / 3f64.log2()
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        BigCount(v)
    }
}

impl Mul for BigCount {
    type Output = BigCount;

    fn mul(self, rhs: BigCount) -> BigCount {
        BigCount(self.0 * rhs.0)
    }
}

impl Mul<u64> for BigCount {
    type Output = BigCount;

    fn mul(self, rhs: u64) -> BigCount {
        BigCount(self.0 * rhs)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
