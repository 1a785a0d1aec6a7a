use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The prime field `F_p`. Residues are plain `u64` values in `[0, p)`;
/// products go through `u128` so any `p < 2^64` is supported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Self { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn p(self) -> u64 {
        self.p
    }

    /// Reduce a signed integer into `[0, p)`.
    #[inline]
    pub fn reduce(self, x: i64) -> u64 {
        (x as i128).rem_euclid(self.p as i128) as u64
    }

    #[inline]
    pub fn reduce_u64(self, x: u64) -> u64 {
        x % self.p
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a as u128 + b as u128;
        (s % self.p as u128) as u64
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(self, a: u64) -> Result<u64> {
        let a = a % self.p;
        if a == 0 {
            return Err(Error::ZeroInverse(a));
        }
        let (mut r0, mut r1) = (self.p as i128, a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(t0.rem_euclid(self.p as i128) as u64)
    }

    pub fn elem(self, value: i64) -> FieldElem {
        FieldElem {
            value: self.reduce(value),
            field: self,
        }
    }

    pub fn zero(self) -> FieldElem {
        self.elem(0)
    }

    pub fn one(self) -> FieldElem {
        self.elem(1)
    }

    /// Renders a residue in the symmetric range, so `p - 1` prints as `-1`.
    pub fn signed(self, a: u64) -> i64 {
        if a > self.p / 2 {
            -((self.p - a) as i64)
        } else {
            a as i64
        }
    }
}

impl TryFrom<u64> for PrimeField {
    type Error = Error;

    fn try_from(p: u64) -> Result<Self> {
        Self::new(p)
    }
}

impl From<PrimeField> for u64 {
    fn from(f: PrimeField) -> u64 {
        f.p
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

/// Deterministic primality by trial division. Fine for the word-sized
/// moduli this crate targets.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) || p.is_multiple_of(3) {
        return false;
    }
    let mut d: u64 = 5;
    while (d as u128) * (d as u128) <= p as u128 {
        if p.is_multiple_of(d) || p.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// Element of `F_p` carrying its field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElem {
    value: u64,
    field: PrimeField,
}

impl FieldElem {
    pub fn new(field: PrimeField, value: u64) -> Self {
        Self {
            value: value % field.p,
            field,
        }
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn field(self) -> PrimeField {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Result<Self> {
        Ok(Self {
            value: self.field.inv(self.value)?,
            field: self.field,
        })
    }

    fn check(self, other: Self) {
        assert_eq!(self.field, other.field, "field mismatch");
    }
}

impl std::ops::Add for FieldElem {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.check(rhs);
        Self::new(self.field, self.field.add(self.value, rhs.value))
    }
}

impl std::ops::Sub for FieldElem {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.check(rhs);
        Self::new(self.field, self.field.sub(self.value, rhs.value))
    }
}

impl std::ops::Mul for FieldElem {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.check(rhs);
        Self::new(self.field, self.field.mul(self.value, rhs.value))
    }
}

impl std::ops::Neg for FieldElem {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.field, self.field.neg(self.value))
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(18446744073709551557));
        assert!(matches!(PrimeField::new(4), Err(Error::NotPrime(4))));
        assert!(PrimeField::new(1).is_err());
    }

    #[test]
    fn inverses_exhaustive() {
        for p in [2u64, 3, 5, 7, 11] {
            let f = PrimeField::new(p).unwrap();
            for a in 1..p {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
            assert!(f.inv(0).is_err());
        }
    }

    #[test]
    fn reduce_negative() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(f.reduce(-1), 2);
        assert_eq!(f.reduce(-4), 2);
        assert_eq!(f.signed(2), -1);
        assert_eq!((f.elem(2) * f.elem(2)).value(), 1);
    }

    #[test]
    fn large_modulus_mul() {
        let f = PrimeField::new(18446744073709551557).unwrap();
        let a = f.p() - 1;
        assert_eq!(f.mul(a, a), 1);
        assert_eq!(f.add(a, a), f.p() - 2);
    }
}
