//! The ring `R = F_p + vF_p` with `v^2 = v`.
//!
//! `R` splits as `F_p x F_p` through the two idempotents `v` and `1 - v`:
//! every element is uniquely `v*s + (1-v)*t`. The projections are
//! `sigma(v*s + (1-v)*t) = s` and `tau(v*s + (1-v)*t) = t`. In additive
//! coordinates `a + v*b = v*(a+b) + (1-v)*a`, so `sigma = a + b` and
//! `tau = a` (not the other way around).
//!
//! Elements are stored in these idempotent (CRT) coordinates, which
//! makes multiplication componentwise.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fppoly::{FieldElem, Poly, PrimeField};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RElem {
    field: PrimeField,
    sigma: u64,
    tau: u64,
}

impl PartialOrd for RElem {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by additive coordinates `(a, b)`.
impl Ord for RElem {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.field, self.a(), self.b()).cmp(&(other.field, other.a(), other.b()))
    }
}

impl RElem {
    /// `a + v*b`.
    pub fn from_additive(field: PrimeField, a: u64, b: u64) -> Self {
        let a = field.reduce_u64(a);
        let b = field.reduce_u64(b);
        Self {
            field,
            sigma: field.add(a, b),
            tau: a,
        }
    }

    /// `v*sigma + (1-v)*tau`.
    pub fn from_crt(field: PrimeField, sigma: u64, tau: u64) -> Self {
        Self {
            field,
            sigma: field.reduce_u64(sigma),
            tau: field.reduce_u64(tau),
        }
    }

    pub fn from_i64(field: PrimeField, a: i64, b: i64) -> Self {
        Self::from_additive(field, field.reduce(a), field.reduce(b))
    }

    pub fn scalar(field: PrimeField, c: u64) -> Self {
        Self::from_crt(field, c, c)
    }

    pub fn zero(field: PrimeField) -> Self {
        Self::scalar(field, 0)
    }

    pub fn one(field: PrimeField) -> Self {
        Self::scalar(field, 1)
    }

    pub fn v(field: PrimeField) -> Self {
        Self::from_crt(field, 1, 0)
    }

    pub fn one_minus_v(field: PrimeField) -> Self {
        Self::from_crt(field, 0, 1)
    }

    /// Every element of `R`, ordered by additive coordinates.
    pub fn all(field: PrimeField) -> impl Iterator<Item = RElem> {
        let p = field.p();
        (0..p).flat_map(move |a| (0..p).map(move |b| RElem::from_additive(field, a, b)))
    }

    #[inline]
    pub fn field(self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn sigma(self) -> u64 {
        self.sigma
    }

    #[inline]
    pub fn tau(self) -> u64 {
        self.tau
    }

    /// Additive coordinate `a` of `a + v*b`.
    #[inline]
    pub fn a(self) -> u64 {
        self.tau
    }

    /// Additive coordinate `b` of `a + v*b`.
    #[inline]
    pub fn b(self) -> u64 {
        self.field.sub(self.sigma, self.tau)
    }

    pub fn is_zero(self) -> bool {
        self.sigma == 0 && self.tau == 0
    }

    /// Unit iff `a != 0` and `a + b != 0`.
    pub fn is_unit(self) -> bool {
        self.a() != 0 && self.field.add(self.a(), self.b()) != 0
    }

    /// Inverse through the closed form `lambda^{-1} + v[-(lambda+mu)^{-1} mu lambda^{-1}]`
    /// for `x = lambda + v*mu`.
    pub fn inverse(self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotAUnit(self.to_string()));
        }
        let f = self.field;
        let (lambda, mu) = (self.a(), self.b());
        let lambda_inv = f.inv(lambda)?;
        let sum_inv = f.inv(f.add(lambda, mu))?;
        let b = f.neg(f.mul(f.mul(sum_inv, mu), lambda_inv));
        Ok(Self::from_additive(f, lambda_inv, b))
    }

    /// Multiplication in additive form,
    /// `(a + vb)(c + vd) = ac + v(ad + bc + bd)`.
    /// Kept as an independent path to cross-check the CRT product.
    pub fn mul_additive(self, rhs: Self) -> Self {
        self.check(rhs);
        let f = self.field;
        let (a, b, c, d) = (self.a(), self.b(), rhs.a(), rhs.b());
        let ac = f.mul(a, c);
        let rest = f.add(f.add(f.mul(a, d), f.mul(b, c)), f.mul(b, d));
        Self::from_additive(f, ac, rest)
    }

    pub fn add_additive(self, rhs: Self) -> Self {
        self.check(rhs);
        let f = self.field;
        Self::from_additive(f, f.add(self.a(), rhs.a()), f.add(self.b(), rhs.b()))
    }

    pub fn scale(self, c: u64) -> Self {
        Self::from_crt(
            self.field,
            self.field.mul(self.sigma, c),
            self.field.mul(self.tau, c),
        )
    }

    fn check(self, rhs: Self) {
        assert_eq!(self.field, rhs.field, "field mismatch");
    }

    /// Parses `a+v*b` style text (also `2v-1`, `1-v`, `v`, `-1`) or the
    /// CRT form `crt:(s,t)`.
    pub fn parse(field: PrimeField, s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("crt:") {
            let inner = rest
                .trim()
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| Error::Parse(format!("expected crt:(s,t), got {s:?}")))?;
            let parts: Vec<&str> = inner.split(',').collect();
            if parts.len() != 2 {
                return Err(Error::Parse(format!(
                    "expected two CRT coordinates in {s:?}"
                )));
            }
            let parse = |t: &str| {
                i64::from_str(t.trim())
                    .map(|x| field.reduce(x))
                    .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
            };
            return Ok(Self::from_crt(field, parse(parts[0])?, parse(parts[1])?));
        }
        let (sigma, tau) = crate::text::parse_rpoly(field, s)?;
        if sigma.degree().unwrap_or(0) > 0 || tau.degree().unwrap_or(0) > 0 {
            return Err(Error::Parse(format!("{s:?} is not a constant of R")));
        }
        Ok(Self::from_crt(field, sigma.coeff(0), tau.coeff(0)))
    }
}

impl Add for RElem {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.check(rhs);
        let f = self.field;
        Self::from_crt(f, f.add(self.sigma, rhs.sigma), f.add(self.tau, rhs.tau))
    }
}

impl Sub for RElem {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.check(rhs);
        let f = self.field;
        Self::from_crt(f, f.sub(self.sigma, rhs.sigma), f.sub(self.tau, rhs.tau))
    }
}

impl Mul for RElem {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.check(rhs);
        let f = self.field;
        Self::from_crt(f, f.mul(self.sigma, rhs.sigma), f.mul(self.tau, rhs.tau))
    }
}

impl Neg for RElem {
    type Output = Self;
    fn neg(self) -> Self {
        let f = self.field;
        Self::from_crt(f, f.neg(self.sigma), f.neg(self.tau))
    }
}

/// Renders as `a+v*b` with reduced residues.
impl fmt::Display for RElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+v*{}", self.a(), self.b())
    }
}

/// A unit `theta = lambda + v*mu`, with `sigma(theta) = lambda + mu` and
/// `tau(theta) = lambda`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ThetaRepr", into = "ThetaRepr")]
pub struct Theta {
    elem: RElem,
}

#[derive(Serialize, Deserialize)]
struct ThetaRepr {
    p: u64,
    lambda: u64,
    mu: u64,
}

impl TryFrom<ThetaRepr> for Theta {
    type Error = Error;
    fn try_from(r: ThetaRepr) -> Result<Self> {
        Theta::new(PrimeField::new(r.p)?, r.lambda, r.mu)
    }
}

impl From<Theta> for ThetaRepr {
    fn from(t: Theta) -> Self {
        ThetaRepr {
            p: t.field().p(),
            lambda: t.lambda(),
            mu: t.mu(),
        }
    }
}

impl Theta {
    pub fn new(field: PrimeField, lambda: u64, mu: u64) -> Result<Self> {
        Self::from_elem(RElem::from_additive(field, lambda, mu))
    }

    pub fn from_i64(field: PrimeField, lambda: i64, mu: i64) -> Result<Self> {
        Self::new(field, field.reduce(lambda), field.reduce(mu))
    }

    pub fn from_elem(elem: RElem) -> Result<Self> {
        if elem.is_unit() {
            Ok(Self { elem })
        } else {
            Err(Error::NotAUnit(elem.to_string()))
        }
    }

    /// `1 - 2v`.
    pub fn one_minus_two_v(field: PrimeField) -> Result<Self> {
        Self::from_i64(field, 1, -2)
    }

    /// `-1 + 2v`.
    pub fn minus_one_plus_two_v(field: PrimeField) -> Result<Self> {
        Self::from_i64(field, -1, 2)
    }

    /// All units of `R` in additive-coordinate order.
    pub fn all(field: PrimeField) -> Vec<Theta> {
        RElem::all(field)
            .filter_map(|e| Theta::from_elem(e).ok())
            .collect()
    }

    pub fn field(self) -> PrimeField {
        self.elem.field
    }

    pub fn elem(self) -> RElem {
        self.elem
    }

    pub fn lambda(self) -> u64 {
        self.elem.a()
    }

    pub fn mu(self) -> u64 {
        self.elem.b()
    }

    /// `lambda + mu`, the shift constant of the `v`-side component.
    pub fn sigma_const(self) -> u64 {
        self.elem.sigma
    }

    /// `lambda`, the shift constant of the `(1-v)`-side component.
    pub fn tau_const(self) -> u64 {
        self.elem.tau
    }

    pub fn inverse(self) -> Theta {
        Theta {
            elem: self.elem.inverse().expect("theta is a unit"),
        }
    }

    /// True for `1 - 2v` and `-1 + 2v` with p odd: the two parameters for
    /// which the Gray image of a constacyclic code is cyclic.
    pub fn is_gray_cyclic(self) -> bool {
        let f = self.field();
        f.p() != 2
            && self.mu() != 0
            && (self == Self::one_minus_two_v(f).unwrap()
                || self == Self::minus_one_plus_two_v(f).unwrap())
    }
}

impl fmt::Display for Theta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.elem)
    }
}

/// Polynomial over `R`, stored as its two projections `(f^sigma, f^tau)`
/// so that `f = v*f^sigma + (1-v)*f^tau`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RPoly {
    sigma: Poly,
    tau: Poly,
}

impl RPoly {
    /// `v*sigma_part + (1-v)*tau_part`.
    pub fn combine(sigma_part: Poly, tau_part: Poly) -> Result<Self> {
        if sigma_part.field() != tau_part.field() {
            return Err(Error::FieldMismatch {
                left: sigma_part.field().p(),
                right: tau_part.field().p(),
            });
        }
        Ok(Self {
            sigma: sigma_part,
            tau: tau_part,
        })
    }

    /// Embeds a polynomial with coefficients in `F_p`.
    pub fn from_fp(f: Poly) -> Self {
        Self {
            sigma: f.clone(),
            tau: f,
        }
    }

    pub fn from_coeffs(field: PrimeField, coeffs: &[RElem]) -> Self {
        let sigma = Poly::new(field, coeffs.iter().map(|c| c.sigma).collect());
        let tau = Poly::new(field, coeffs.iter().map(|c| c.tau).collect());
        Self { sigma, tau }
    }

    pub fn zero(field: PrimeField) -> Self {
        Self::from_fp(Poly::zero(field))
    }

    /// `x^n - theta`.
    pub fn x_pow_minus(n: usize, theta: Theta) -> Self {
        let f = theta.field();
        Self {
            sigma: Poly::x_pow_minus(f, n, theta.sigma_const()),
            tau: Poly::x_pow_minus(f, n, theta.tau_const()),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.sigma.field()
    }

    pub fn project_sigma(&self) -> &Poly {
        &self.sigma
    }

    pub fn project_tau(&self) -> &Poly {
        &self.tau
    }

    pub fn is_zero(&self) -> bool {
        self.sigma.is_zero() && self.tau.is_zero()
    }

    pub fn coeff(&self, i: usize) -> RElem {
        RElem::from_crt(self.field(), self.sigma.coeff(i), self.tau.coeff(i))
    }

    pub fn degree(&self) -> Option<usize> {
        self.sigma.degree().max(self.tau.degree())
    }

    /// Coefficient vector padded to length `n`.
    pub fn to_vec(&self, n: usize) -> Vec<RElem> {
        let len = n.max(self.degree().map_or(0, |d| d + 1));
        (0..len).map(|i| self.coeff(i)).collect()
    }

    /// Additive split `f = r(x) + v*q(x)`.
    pub fn additive_parts(&self) -> (Poly, Poly) {
        let r = self.tau.clone();
        let q = &self.sigma - &self.tau;
        (r, q)
    }

    pub fn scale(&self, c: RElem) -> Self {
        Self {
            sigma: self.sigma.scale(c.sigma),
            tau: self.tau.scale(c.tau),
        }
    }

    /// Product modulo `x^n - theta`: componentwise modulo `x^n - (lambda+mu)`
    /// and `x^n - lambda`.
    pub fn mul_mod(&self, other: &Self, n: usize, theta: Theta) -> Self {
        Self {
            sigma: (&self.sigma * &other.sigma).reduce_constacyclic(n, theta.sigma_const()),
            tau: (&self.tau * &other.tau).reduce_constacyclic(n, theta.tau_const()),
        }
    }

    pub fn reduce(&self, n: usize, theta: Theta) -> Self {
        Self {
            sigma: self.sigma.reduce_constacyclic(n, theta.sigma_const()),
            tau: self.tau.reduce_constacyclic(n, theta.tau_const()),
        }
    }
}

impl Add for &RPoly {
    type Output = RPoly;
    fn add(self, rhs: &RPoly) -> RPoly {
        RPoly {
            sigma: &self.sigma + &rhs.sigma,
            tau: &self.tau + &rhs.tau,
        }
    }
}

impl Mul for &RPoly {
    type Output = RPoly;
    fn mul(self, rhs: &RPoly) -> RPoly {
        RPoly {
            sigma: &self.sigma * &rhs.sigma,
            tau: &self.tau * &rhs.tau,
        }
    }
}

/// Writes the polynomial with `R` coefficients in `a+v*b` form, highest
/// degree first, e.g. `(1+v*0)x^4+(2+v*2)x^3+...`.
impl fmt::Display for RPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = self.degree() else {
            return write!(f, "0");
        };
        let mut first = true;
        for i in (0..=d).rev() {
            let c = self.coeff(i);
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            write!(f, "({c})")?;
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Convenience: `FieldElem` into the diagonal of `R`.
impl From<FieldElem> for RElem {
    fn from(e: FieldElem) -> Self {
        RElem::scalar(e.field(), e.value())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn unit_criterion_cases() {
        let f3 = f(3);
        assert!(RElem::from_i64(f3, 1, -2).is_unit());
        assert!(RElem::from_i64(f3, -1, 2).is_unit());
        assert!(!RElem::v(f3).is_unit());
        assert!(!RElem::one_minus_v(f3).is_unit());
        assert_eq!(RElem::one_minus_v(f3), RElem::from_i64(f3, 1, -1));
    }

    #[test]
    fn inverse_cases() {
        let f3 = f(3);
        assert_eq!(RElem::one(f3).inverse().unwrap(), RElem::one(f3));
        let x = RElem::from_i64(f3, -1, 2);
        let inv = x.inverse().unwrap();
        assert_eq!(inv, RElem::from_i64(f3, 2, 2));
        assert_eq!(x.mul_additive(inv), RElem::one(f3));
        assert!(matches!(RElem::v(f3).inverse(), Err(Error::NotAUnit(_))));
    }

    #[test]
    fn crt_round_trip_and_products_exhaustive() {
        for p in [2, 3, 5, 7] {
            let fp = f(p);
            for x in RElem::all(fp) {
                assert_eq!(RElem::from_additive(fp, x.a(), x.b()), x);
                assert_eq!(RElem::from_crt(fp, x.sigma(), x.tau()), x);
                for y in RElem::all(fp) {
                    assert_eq!(x * y, x.mul_additive(y));
                    assert_eq!(x + y, x.add_additive(y));
                }
            }
        }
    }

    #[test]
    fn idempotents() {
        let fp = f(5);
        let v = RElem::v(fp);
        let w = RElem::one_minus_v(fp);
        assert_eq!(v.mul_additive(v), v);
        assert_eq!(w.mul_additive(w), w);
        assert!(v.mul_additive(w).is_zero());
        assert_eq!(v + w, RElem::one(fp));
    }

    #[test]
    fn unit_count_and_ideal_sizes() {
        for p in [3, 5, 7] {
            let fp = f(p);
            assert_eq!(Theta::all(fp).len() as u64, (p - 1) * (p - 1));
            let v = RElem::v(fp);
            let w = RElem::one_minus_v(fp);
            let mut vi: Vec<RElem> = RElem::all(fp).map(|r| v * r).collect();
            let mut wi: Vec<RElem> = RElem::all(fp).map(|r| w * r).collect();
            vi.sort();
            vi.dedup();
            wi.sort();
            wi.dedup();
            assert_eq!(vi.len() as u64, p);
            assert_eq!(wi.len() as u64, p);
        }
    }

    #[test]
    fn theta_constants() {
        let t = Theta::minus_one_plus_two_v(f(3)).unwrap();
        assert_eq!((t.lambda(), t.mu()), (2, 2));
        assert_eq!(t.sigma_const(), 1);
        assert_eq!(t.tau_const(), 2);
        assert!(t.is_gray_cyclic());
        assert_eq!(t.inverse(), t);
        assert!(Theta::from_i64(f(3), 1, -1).is_err());
        assert!(Theta::from_i64(f(3), 0, 1).is_err());
        // over F_3, 1 + v is 1 - 2v
        assert!(Theta::from_i64(f(3), 1, 1).unwrap().is_gray_cyclic());
        assert!(!Theta::from_i64(f(5), 1, 1).unwrap().is_gray_cyclic());
        // p = 2: 1 - 2v collapses to 1
        let t2 = Theta::one_minus_two_v(f(2)).unwrap();
        assert_eq!(t2.mu(), 0);
        assert!(!t2.is_gray_cyclic());
    }

    #[test]
    fn projections_of_example_generator() {
        let f3 = f(3);
        // x^4 + (2v-1)x^3 + (1-v)x^2 - x + 1
        let coeffs = [
            RElem::from_i64(f3, 1, 0),
            RElem::from_i64(f3, -1, 0),
            RElem::from_i64(f3, 1, -1),
            RElem::from_i64(f3, -1, 2),
            RElem::from_i64(f3, 1, 0),
        ];
        let g = RPoly::from_coeffs(f3, &coeffs);
        assert_eq!(*g.project_sigma(), Poly::from_i64(f3, &[1, -1, 0, 1, 1]));
        assert_eq!(*g.project_tau(), Poly::from_i64(f3, &[1, -1, 1, -1, 1]));
        let back = RPoly::combine(
            Poly::from_i64(f3, &[1, -1, 0, 1, 1]),
            Poly::from_i64(f3, &[1, -1, 1, -1, 1]),
        )
        .unwrap();
        assert_eq!(back, g);
        assert_eq!(back.to_vec(5), coeffs.to_vec());
    }

    #[test]
    fn fp_polys_project_to_themselves() {
        let p = Poly::from_i64(f(5), &[1, 2, 3]);
        let r = RPoly::from_fp(p.clone());
        assert_eq!(r.project_sigma(), &p);
        assert_eq!(r.project_tau(), &p);
        assert_eq!(RPoly::combine(p.clone(), p.clone()).unwrap(), r);
    }

    #[test]
    fn element_text() {
        let f3 = f(3);
        let x = RElem::from_i64(f3, -1, 2);
        assert_eq!(x.to_string(), "2+v*2");
        assert_eq!(RElem::parse(f3, "2+v*2").unwrap(), x);
        assert_eq!(RElem::parse(f3, "-1+2v").unwrap(), x);
        assert_eq!(RElem::parse(f3, "crt:(1,2)").unwrap(), x);
        assert_eq!(RElem::parse(f3, "1-v").unwrap(), RElem::one_minus_v(f3));
        assert!(RElem::parse(f3, "crt:(1)").is_err());
        assert!(RElem::parse(f3, "x+1").is_err());
    }
}
