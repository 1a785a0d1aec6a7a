use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::PrimeField;
use crate::error::{Error, Result};

/// Univariate polynomial over `F_p`, coefficients lowest degree first.
///
/// The coefficient vector never has a trailing zero, so the zero
/// polynomial is the empty vector and its degree is `None`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: PrimeField,
    coeffs: Vec<u64>,
}

impl Poly {
    /// Builds a polynomial from residues (reduced mod p), constant term first.
    pub fn new(field: PrimeField, coeffs: Vec<u64>) -> Self {
        let mut poly = Self {
            field,
            coeffs: coeffs.into_iter().map(|c| field.reduce_u64(c)).collect(),
        };
        poly.normalize();
        poly
    }

    pub fn from_i64(field: PrimeField, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.reduce(c)).collect())
    }

    pub fn zero(field: PrimeField) -> Self {
        Self {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: PrimeField) -> Self {
        Self::constant(field, 1)
    }

    pub fn constant(field: PrimeField, c: u64) -> Self {
        Self::new(field, vec![c])
    }

    pub fn x(field: PrimeField) -> Self {
        Self::monomial(field, 1, 1)
    }

    pub fn monomial(field: PrimeField, c: u64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::new(field, coeffs)
    }

    /// `x^n - c`.
    pub fn x_pow_minus(field: PrimeField, n: usize, c: u64) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[n] = 1;
        coeffs[0] = field.sub(coeffs[0], c);
        Self::new(field, coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    #[inline]
    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    /// Coefficients padded with zeros to length `n`.
    pub fn to_vec(&self, n: usize) -> Vec<u64> {
        let mut v = self.coeffs.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            0 | 1 => self.clone(),
            lc => self.scale(self.field.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    pub fn scale(&self, c: u64) -> Self {
        let f = self.field;
        Self::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn eval(&self, x: u64) -> u64 {
        let f = self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn derivative(&self) -> Self {
        let f = self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, (i as u64) % f.p()))
            .collect();
        Self::new(f, coeffs)
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.field.p(),
                right: other.field.p(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let f = self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        Ok(Self::new(
            f,
            (0..len)
                .map(|i| f.add(self.coeff(i), other.coeff(i)))
                .collect(),
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let f = self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        Ok(Self::new(
            f,
            (0..len)
                .map(|i| f.sub(self.coeff(i), other.coeff(i)))
                .collect(),
        ))
    }

    /// Convolution product.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.field));
        }
        let f = self.field;
        let p = f.p() as u128;
        let mut acc = vec![0u128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u128 * b as u128) % p;
            }
        }
        Ok(Self::new(f, acc.into_iter().map(|c| c as u64).collect()))
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check_field(divisor)?;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let f = self.field;
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(f), Self::zero(f)));
        };
        if nd < dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let lc_inv = f.inv(divisor.leading())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = f.mul(rem[k + dd], lc_inv);
            if c == 0 {
                continue;
            }
            quot[k] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(rem[k + j], f.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((Self::new(f, quot), Self::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Quotient when `divisor` divides `self` exactly, `None` otherwise.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        match self.divmod(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    pub fn mul_mod(&self, other: &Self, modulus: &Self) -> Result<Self> {
        self.checked_mul(other)?.rem(modulus)
    }

    pub fn pow_mod(&self, mut exp: u64, modulus: &Self) -> Result<Self> {
        let mut base = self.rem(modulus)?;
        let mut acc = Self::one(self.field).rem(modulus)?;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_mod(&base, modulus)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_mod(&base, modulus)?;
            }
        }
        Ok(acc)
    }

    /// Reduce modulo `x^n - c` by folding `x^(n+i)` onto `c * x^i`.
    pub fn reduce_constacyclic(&self, n: usize, c: u64) -> Self {
        assert!(n > 0);
        let f = self.field;
        let mut out = vec![0u64; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            let wraps = (i / n) as u64;
            let factor = f.pow(c, wraps);
            out[i % n] = f.add(out[i % n], f.mul(a, factor));
        }
        Self::new(f, out)
    }

    /// The monic reciprocal `h(0)^{-1} x^{deg h} h(1/x)`.
    pub fn reciprocal_star(&self) -> Result<Self> {
        let c0 = self.coeff(0);
        if c0 == 0 {
            return Err(Error::ZeroConstantTerm(self.to_string()));
        }
        let rev: Vec<u64> = self.coeffs.iter().rev().copied().collect();
        Ok(Self::new(self.field, rev).scale(self.field.inv(c0)?))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("field mismatch")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("field mismatch")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("field mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

/// Canonical order: by degree (zero polynomial first), then by the
/// coefficient sequence read from the constant term upwards.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .cmp(&other.field)
            .then(self.coeffs.len().cmp(&other.coeffs.len()))
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Writes `x^4-x^3+x^2-x+1` style text with residues in the symmetric range.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let s = self.field.signed(c);
            let mag = s.unsigned_abs();
            if s < 0 {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "x")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn poly(p: u64, c: &[i64]) -> Poly {
        Poly::from_i64(f(p), c)
    }

    #[test]
    fn example_factors_multiply_back() {
        let a = poly(3, &[1, 0, 1]);
        let b = poly(3, &[1, -1, 0, 1, 1]);
        let c = poly(3, &[1, 1, 0, -1, 1]);
        assert_eq!(&(&a * &b) * &c, Poly::x_pow_minus(f(3), 10, 2));
    }

    #[test]
    fn mul_identity_and_difference_of_squares() {
        let a = poly(5, &[3, 0, 2, 1]);
        assert_eq!(&a * &Poly::one(f(5)), a);
        assert_eq!(&poly(5, &[-1, 1]) * &poly(5, &[1, 1]), poly(5, &[-1, 0, 1]));
    }

    #[test]
    fn divmod_cases() {
        let f3 = f(3);
        let (q, r) = Poly::x_pow_minus(f3, 10, 1)
            .divmod(&poly(3, &[-1, 1]))
            .unwrap();
        assert!(r.is_zero());
        assert_eq!(q, Poly::new(f3, vec![1; 10]));

        let (_, r) = Poly::x_pow_minus(f3, 10, 2)
            .divmod(&poly(3, &[1, 0, 1]))
            .unwrap();
        assert!(r.is_zero());

        let (q, r) = Poly::x(f3).divmod(&poly(3, &[0, 0, 1])).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, Poly::x(f3));

        assert_eq!(
            Poly::x(f3).divmod(&Poly::zero(f3)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn gcd_cases() {
        let f3 = f(3);
        let g = Poly::x_pow_minus(f3, 10, 1)
            .gcd(&poly(3, &[-1, 1]))
            .unwrap();
        assert_eq!(g, poly(3, &[-1, 1]));
        let a = poly(3, &[1, 2, 2]);
        assert_eq!(a.gcd(&Poly::zero(f3)).unwrap(), a.monic());
        assert!(a.gcd(&Poly::zero(f3)).unwrap().is_monic());
        assert!(poly(3, &[1, 0, 1])
            .gcd(&poly(3, &[-1, 0, 1]))
            .unwrap()
            .is_one());
        assert_eq!(Poly::zero(f3).gcd(&Poly::zero(f3)), Err(Error::GcdOfZeros));
    }

    #[test]
    fn mismatched_fields_rejected() {
        let err = poly(3, &[1, 1]).checked_mul(&poly(5, &[1, 1])).unwrap_err();
        assert_eq!(err, Error::FieldMismatch { left: 3, right: 5 });
        assert!(poly(3, &[1]).divmod(&poly(5, &[1])).is_err());
    }

    #[test]
    fn reciprocal_star_cases() {
        assert_eq!(
            poly(7, &[-1, 1]).reciprocal_star().unwrap(),
            poly(7, &[-1, 1])
        );
        // x^2 h(1/x) = 1 + x + 2x^2, then scale by 2^{-1} = 2.
        assert_eq!(
            poly(3, &[2, 1, 1]).reciprocal_star().unwrap(),
            poly(3, &[2, 2, 1])
        );
        let h = poly(5, &[3, 1, 4, 1]).monic();
        assert_eq!(h.reciprocal_star().unwrap().reciprocal_star().unwrap(), h);
        assert!(matches!(
            poly(3, &[0, 1]).reciprocal_star(),
            Err(Error::ZeroConstantTerm(_))
        ));
    }

    #[test]
    fn constacyclic_reduction() {
        let f3 = f(3);
        // x^3 mod (x^2 - 2) = 2x
        let r = Poly::monomial(f3, 1, 3).reduce_constacyclic(2, 2);
        assert_eq!(r, poly(3, &[0, 2]));
        assert_eq!(
            r,
            Poly::monomial(f3, 1, 3)
                .rem(&Poly::x_pow_minus(f3, 2, 2))
                .unwrap()
        );
    }

    #[test]
    fn display() {
        assert_eq!(poly(3, &[1, -1, 1, -1, 1]).to_string(), "x^4-x^3+x^2-x+1");
        assert_eq!(poly(5, &[0, 2]).to_string(), "2x");
        assert_eq!(Poly::zero(f(5)).to_string(), "0");
        assert_eq!(poly(7, &[-3]).to_string(), "-3");
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![
            poly(3, &[1, 1]),
            poly(3, &[1]),
            poly(3, &[2, 1]),
            poly(3, &[0, 0, 1]),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                poly(3, &[1]),
                poly(3, &[1, 1]),
                poly(3, &[2, 1]),
                poly(3, &[0, 0, 1])
            ]
        );
    }
}
