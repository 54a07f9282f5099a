use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::{BigUint, ParseBigIntError};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// Arbitrary-precision nonnegative integer used for every count and rank.
///
/// Arithmetic is exact; there is no wrapping or truncation anywhere.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Natural(BigUint);

impl Natural {
    pub fn zero() -> Self {
        Natural(BigUint::zero())
    }

    pub fn one() -> Self {
        Natural(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn pow(&self, exp: u32) -> Self {
        Natural(num_traits::pow(self.0.clone(), exp as usize))
    }

    /// Exact division. Returns `None` when `divisor` is zero or does not
    /// divide `self`.
    pub fn checked_exact_div(&self, divisor: &Natural) -> Option<Natural> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.0.div_rem(&divisor.0);
        r.is_zero().then_some(Natural(q))
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Natural) -> (Natural, Natural) {
        let (q, r) = self.0.div_rem(&divisor.0);
        (Natural(q), Natural(r))
    }

    pub fn checked_sub(&self, other: &Natural) -> Option<Natural> {
        (self.0 >= other.0).then(|| Natural(&self.0 - &other.0))
    }

    pub fn to_usize(&self) -> Option<usize> {
        self.0.to_usize()
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }
}

impl From<u64> for Natural {
    fn from(v: u64) -> Self {
        Natural(BigUint::from(v))
    }
}

impl From<usize> for Natural {
    fn from(v: usize) -> Self {
        Natural(BigUint::from(v))
    }
}

impl From<u32> for Natural {
    fn from(v: u32) -> Self {
        Natural(BigUint::from(v))
    }
}

impl From<BigUint> for Natural {
    fn from(v: BigUint) -> Self {
        Natural(v)
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for Natural {
    type Err = ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BigUint::from_str(s).map(Natural)
    }
}

impl Add for Natural {
    type Output = Natural;
    fn add(self, rhs: Natural) -> Natural {
        Natural(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Natural> for &'a Natural {
    type Output = Natural;
    fn add(self, rhs: &'a Natural) -> Natural {
        Natural(&self.0 + &rhs.0)
    }
}

impl Mul for Natural {
    type Output = Natural;
    fn mul(self, rhs: Natural) -> Natural {
        Natural(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a Natural> for &'a Natural {
    type Output = Natural;
    fn mul(self, rhs: &'a Natural) -> Natural {
        Natural(&self.0 * &rhs.0)
    }
}

impl Mul<u64> for Natural {
    type Output = Natural;
    fn mul(self, rhs: u64) -> Natural {
        Natural(self.0 * rhs)
    }
}

impl Add<u64> for Natural {
    type Output = Natural;
    fn add(self, rhs: u64) -> Natural {
        Natural(self.0 + rhs)
    }
}

impl std::iter::Sum for Natural {
    fn sum<I: Iterator<Item = Natural>>(iter: I) -> Natural {
        iter.fold(Natural::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for Natural {
    fn product<I: Iterator<Item = Natural>>(iter: I) -> Natural {
        iter.fold(Natural::one(), |acc, x| acc * x)
    }
}
