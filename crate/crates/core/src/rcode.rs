//! `theta`-constacyclic codes over `R = F_p + vF_p`.
//!
//! A code is held by its generating set in standard form
//! `{v*g_{1-v}, (1-v)*g_v}` with `g_{1-v} | x^n - (lambda+mu)` and
//! `g_v | x^n - lambda`. The subscripts follow the usual notation for
//! these codes and read backwards at first sight: `C_{1-v}` is the
//! component multiplied by `v` (it is the `sigma` projection of the code,
//! with shift constant `lambda + mu`), and `C_v` is the component
//! multiplied by `1 - v` (the `tau` projection, shift constant `lambda`).
//!
//! A zero generator in the standard form is stored as the full modulus
//! (`x^n - (lambda+mu)` or `x^n - lambda`), so `deg` formulas stay total.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fpcode::FpConstaCode;
use crate::fppoly::{divisors_xn_minus_lambda, Poly, PrimeField};
use crate::ring::{RElem, RPoly, Theta};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RConstaCode {
    n: usize,
    theta: Theta,
    c_one_minus_v: FpConstaCode,
    c_v: FpConstaCode,
}

impl RConstaCode {
    /// Builds `<v*g1, (1-v)*g2>`. A zero polynomial stands for the zero
    /// component.
    pub fn from_standard_pair(n: usize, theta: Theta, g1: Poly, g2: Poly) -> Result<Self> {
        let field = theta.field();
        let g1 = if g1.is_zero() {
            Poly::x_pow_minus(field, n, theta.sigma_const())
        } else {
            g1
        };
        let g2 = if g2.is_zero() {
            Poly::x_pow_minus(field, n, theta.tau_const())
        } else {
            g2
        };
        Ok(Self {
            n,
            theta,
            c_one_minus_v: FpConstaCode::from_generator(field, n, theta.sigma_const(), g1)?,
            c_v: FpConstaCode::from_generator(field, n, theta.tau_const(), g2)?,
        })
    }

    pub fn full(n: usize, theta: Theta) -> Result<Self> {
        let f = theta.field();
        Self::from_standard_pair(n, theta, Poly::one(f), Poly::one(f))
    }

    pub fn zero(n: usize, theta: Theta) -> Result<Self> {
        let f = theta.field();
        Self::from_standard_pair(n, theta, Poly::zero(f), Poly::zero(f))
    }

    /// The unique standard form of the ideal generated by `gens`:
    /// `g1 = gcd(x^n - (lambda+mu), gens^sigma)`, `g2 = gcd(x^n - lambda, gens^tau)`.
    pub fn standardize(n: usize, theta: Theta, gens: &[RPoly]) -> Result<Self> {
        let field = theta.field();
        let mut g1 = Poly::x_pow_minus(field, n, theta.sigma_const());
        let mut g2 = Poly::x_pow_minus(field, n, theta.tau_const());
        for g in gens {
            if g.field() != field {
                return Err(Error::FieldMismatch {
                    left: field.p(),
                    right: g.field().p(),
                });
            }
            g1 = g1.gcd(g.project_sigma())?;
            g2 = g2.gcd(g.project_tau())?;
        }
        Self::from_standard_pair(n, theta, g1, g2)
    }

    /// Every `theta`-constacyclic code of length `n`, one per standard
    /// pair, ordered by `(g1, g2)`.
    pub fn all(n: usize, theta: Theta) -> Result<Vec<Self>> {
        let f = theta.field();
        let d1 = divisors_xn_minus_lambda(f, n, theta.sigma_const())?;
        let d2 = divisors_xn_minus_lambda(f, n, theta.tau_const())?;
        let mut out = Vec::with_capacity(d1.len() * d2.len());
        for a in &d1 {
            for b in &d2 {
                out.push(Self::from_standard_pair(n, theta, a.clone(), b.clone())?);
            }
        }
        Ok(out)
    }

    pub fn field(&self) -> PrimeField {
        self.theta.field()
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn theta(&self) -> Theta {
        self.theta
    }

    /// `g_{1-v}`, paired with `v`.
    pub fn g_one_minus_v(&self) -> &Poly {
        self.c_one_minus_v.generator()
    }

    /// `g_v`, paired with `1 - v`.
    pub fn g_v(&self) -> &Poly {
        self.c_v.generator()
    }

    /// `C_{1-v}`: `(lambda+mu)`-constacyclic, generator `g_{1-v}`.
    pub fn component_one_minus_v(&self) -> &FpConstaCode {
        &self.c_one_minus_v
    }

    /// `C_v`: `lambda`-constacyclic, generator `g_v`.
    pub fn component_v(&self) -> &FpConstaCode {
        &self.c_v
    }

    /// `(C_{1-v}, C_v)`.
    pub fn decompose(&self) -> (FpConstaCode, FpConstaCode) {
        (self.c_one_minus_v.clone(), self.c_v.clone())
    }

    /// `log_p |C| = 2n - deg g_{1-v} - deg g_v`.
    pub fn size_log_p(&self) -> usize {
        self.c_one_minus_v.dimension() + self.c_v.dimension()
    }

    pub fn size(&self) -> Option<u128> {
        (self.field().p() as u128).checked_pow(self.size_log_p() as u32)
    }

    pub fn is_zero_code(&self) -> bool {
        self.size_log_p() == 0
    }

    pub fn is_full(&self) -> bool {
        self.size_log_p() == 2 * self.n
    }

    /// `g = v*g_{1-v} + (1-v)*g_v`, the unique generator with monic
    /// projections; `C = <g>`.
    pub fn single_generator(&self) -> RPoly {
        RPoly::combine(self.g_one_minus_v().clone(), self.g_v().clone())
            .expect("components share the field")
    }

    /// `v*r_{1-v} + (1-v)*r_v` with `x^n - theta = g * (v*r_{1-v} + (1-v)*r_v)`.
    pub fn single_generator_cofactor(&self) -> RPoly {
        RPoly::combine(
            self.c_one_minus_v.check_poly().clone(),
            self.c_v.check_poly().clone(),
        )
        .expect("components share the field")
    }

    /// `w ∈ C` iff `w^sigma ∈ C_{1-v}` and `w^tau ∈ C_v`.
    pub fn contains(&self, w: &[RElem]) -> Result<bool> {
        if w.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: w.len(),
            });
        }
        let sigma: Vec<u64> = w.iter().map(|c| c.sigma()).collect();
        let tau: Vec<u64> = w.iter().map(|c| c.tau()).collect();
        Ok(self.c_one_minus_v.contains(&sigma)? && self.c_v.contains(&tau)?)
    }

    /// `(C:v)^sigma = C_{1-v}` and `(C:(1-v))^tau = C_v`.
    pub fn submodule_quotient(&self, a: RElem) -> Result<FpConstaCode> {
        let f = self.field();
        if a == RElem::v(f) {
            Ok(self.c_one_minus_v.clone())
        } else if a == RElem::one_minus_v(f) {
            Ok(self.c_v.clone())
        } else {
            Err(Error::UnsupportedMultiplier(a.to_string()))
        }
    }

    /// The dual: a `theta^{-1}`-constacyclic code with standard pair
    /// `(h*_{1-v}, h*_v)` and size `p^(deg g_{1-v} + deg g_v)`.
    pub fn dual(&self) -> RConstaCode {
        let c1 = self.c_one_minus_v.dual();
        let c2 = self.c_v.dual();
        RConstaCode {
            n: self.n,
            theta: self.theta.inverse(),
            c_one_minus_v: c1,
            c_v: c2,
        }
    }

    /// All codewords `v*a + (1-v)*b`, `a ∈ C_{1-v}`, `b ∈ C_v`.
    pub fn codewords(&self, cap: u128) -> Result<Vec<Vec<RElem>>> {
        match self.size() {
            Some(s) if s <= cap => {}
            s => {
                return Err(Error::CapExceeded {
                    size: s.map_or_else(
                        || format!("{}^{}", self.field().p(), self.size_log_p()),
                        |s| s.to_string(),
                    ),
                    cap,
                })
            }
        }
        let f = self.field();
        let left: Vec<Vec<u64>> = self.c_one_minus_v.codewords(cap)?.collect();
        let mut out = Vec::with_capacity(cap.min(self.size().unwrap_or(0)) as usize);
        for b in self.c_v.codewords(cap)? {
            for a in &left {
                out.push(
                    a.iter()
                        .zip(&b)
                        .map(|(&s, &t)| RElem::from_crt(f, s, t))
                        .collect(),
                );
            }
        }
        Ok(out)
    }

    /// Exhaustive check of closure under `(c_0..c_{n-1}) -> (theta c_{n-1}, c_0..c_{n-2})`.
    pub fn shift_closed(&self, cap: u128) -> Result<bool> {
        let set: HashSet<Vec<RElem>> = self.codewords(cap)?.into_iter().collect();
        Ok(set
            .iter()
            .all(|w| set.contains(&r_constashift(w, self.theta.elem()))))
    }

    pub fn descriptor(&self) -> RCodeDescriptor {
        let g = self.single_generator();
        RCodeDescriptor {
            p: self.field().p(),
            n: self.n,
            theta: ThetaDescriptor {
                lambda: self.theta.lambda(),
                mu: self.theta.mu(),
            },
            g1: self.g_one_minus_v().coeffs().to_vec(),
            g2: self.g_v().coeffs().to_vec(),
            single_generator: g
                .to_vec(g.degree().map_or(0, |d| d + 1))
                .iter()
                .map(|c| c.to_string())
                .collect(),
            size_log_p: self.size_log_p(),
        }
    }
}

/// `(c_0, ..., c_{n-1}) -> (theta c_{n-1}, c_0, ..., c_{n-2})` over `R`.
pub fn r_constashift(w: &[RElem], theta: RElem) -> Vec<RElem> {
    let n = w.len();
    let mut out = Vec::with_capacity(n);
    if n == 0 {
        return out;
    }
    out.push(theta * w[n - 1]);
    out.extend_from_slice(&w[..n - 1]);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaDescriptor {
    pub lambda: u64,
    pub mu: u64,
}

/// JSON form `{p, n, theta: {lambda, mu}, g1, g2, single_generator, size_log_p}`.
/// `g1`/`g2` are residue lists (constant first) of `g_{1-v}` and `g_v`;
/// `single_generator` lists its coefficients as `a+v*b` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RCodeDescriptor {
    pub p: u64,
    pub n: usize,
    pub theta: ThetaDescriptor,
    pub g1: Vec<u64>,
    pub g2: Vec<u64>,
    pub single_generator: Vec<String>,
    pub size_log_p: usize,
}

impl RCodeDescriptor {
    pub fn to_code(&self) -> Result<RConstaCode> {
        let field = PrimeField::new(self.p)?;
        let theta = Theta::new(field, self.theta.lambda, self.theta.mu)?;
        let code = RConstaCode::from_standard_pair(
            self.n,
            theta,
            Poly::new(field, self.g1.clone()),
            Poly::new(field, self.g2.clone()),
        )?;
        let coeffs = self
            .single_generator
            .iter()
            .map(|s| RElem::parse(field, s))
            .collect::<Result<Vec<_>>>()?;
        if RPoly::from_coeffs(field, &coeffs) != code.single_generator()
            || code.size_log_p() != self.size_log_p
        {
            return Err(Error::Parse("descriptor fields are inconsistent".into()));
        }
        Ok(code)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpcode::DEFAULT_CAP;
    use crate::text::{parse_poly, parse_rpoly};

    fn f3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    fn example_code() -> RConstaCode {
        let theta = Theta::minus_one_plus_two_v(f3()).unwrap();
        RConstaCode::from_standard_pair(
            10,
            theta,
            parse_poly(f3(), "x^4-x^3+x^2-x+1").unwrap(),
            parse_poly(f3(), "x^4+x^3-x+1").unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn example_pair_is_valid() {
        let c = example_code();
        assert_eq!(c.size_log_p(), 12);
        assert_eq!(c.size(), Some(3u128.pow(12)));
        assert_eq!(c.component_one_minus_v().lambda(), 1);
        assert_eq!(c.component_v().lambda(), 2);
        let d = c.dual();
        assert_eq!(d.size_log_p(), 8);
        assert_eq!(c.size_log_p() + d.size_log_p(), 20);
    }

    #[test]
    fn swapped_pair_is_rejected() {
        let theta = Theta::minus_one_plus_two_v(f3()).unwrap();
        let err = RConstaCode::from_standard_pair(
            10,
            theta,
            parse_poly(f3(), "x^4+x^3-x+1").unwrap(),
            parse_poly(f3(), "x^4-x^3+x^2-x+1").unwrap(),
        )
        .unwrap_err();
        assert!(err.is_precondition());
    }

    #[test]
    fn full_and_zero() {
        let theta = Theta::from_i64(f3(), 1, 1).unwrap();
        let full = RConstaCode::full(3, theta).unwrap();
        assert!(full.is_full());
        assert_eq!(full.size(), Some(729));
        assert!(full.dual().is_zero_code());
        let zero = RConstaCode::zero(3, theta).unwrap();
        assert!(zero.is_zero_code());
        // v(x^n - (lambda+mu)) + (1-v)(x^n - lambda) = x^n - theta
        assert_eq!(zero.single_generator(), RPoly::x_pow_minus(3, theta));
        assert!(zero.single_generator().reduce(3, theta).is_zero());
    }

    #[test]
    fn single_generator_divides_modulus() {
        let c = example_code();
        let g = c.single_generator();
        assert_eq!(
            g.to_string(),
            "(1+v*0)x^4+(1+v*1)x^3+(0+v*1)x^2+(2+v*0)x+(1+v*0)"
        );
        let prod = &g * &c.single_generator_cofactor();
        assert_eq!(prod, RPoly::x_pow_minus(10, c.theta()));
    }

    #[test]
    fn standardize_round_trips_the_single_generator() {
        let c = example_code();
        let s = RConstaCode::standardize(10, c.theta(), &[c.single_generator()]).unwrap();
        assert_eq!(s, c);
        let full =
            RConstaCode::standardize(10, c.theta(), &[RPoly::from_fp(Poly::one(f3()))]).unwrap();
        assert!(full.is_full());
        let empty = RConstaCode::standardize(10, c.theta(), &[]).unwrap();
        assert!(empty.is_zero_code());
    }

    #[test]
    fn literal_example_generator_generates_everything() {
        // Under theta = -1+2v the sigma part x^4+x^3-x+1 divides x^10+1 and is
        // coprime to x^10-1, the modulus on that side; same for tau.
        let theta = Theta::minus_one_plus_two_v(f3()).unwrap();
        let (s, t) = parse_rpoly(f3(), "x^4+(2v-1)x^3+(1-v)x^2-x+1").unwrap();
        let g = RPoly::combine(s, t).unwrap();
        let c = RConstaCode::standardize(10, theta, std::slice::from_ref(&g)).unwrap();
        assert!(c.is_full());
        // Under theta = 1-2v the same polynomial is already in standard form.
        let theta = Theta::one_minus_two_v(f3()).unwrap();
        let c = RConstaCode::standardize(10, theta, std::slice::from_ref(&g)).unwrap();
        assert_eq!(c.single_generator(), g);
        assert_eq!(c.size_log_p(), 12);
    }

    #[test]
    fn membership_and_quotients() {
        let c = example_code();
        let f = f3();
        let a = c
            .component_one_minus_v()
            .encode(&[1, 2, 0, 1, 0, 2])
            .unwrap();
        let w: Vec<RElem> = a.iter().map(|&x| RElem::from_crt(f, x, 0)).collect();
        assert!(c.contains(&w).unwrap());
        assert!(c.contains(&c.single_generator().to_vec(10)).unwrap());
        let mut e = vec![RElem::zero(f); 10];
        e[0] = RElem::one(f);
        assert!(!c.contains(&e).unwrap());
        assert!(c.contains(&e[..3]).is_err());
        assert_eq!(
            c.submodule_quotient(RElem::v(f)).unwrap(),
            *c.component_one_minus_v()
        );
        assert_eq!(
            c.submodule_quotient(RElem::one_minus_v(f)).unwrap(),
            *c.component_v()
        );
        assert!(matches!(
            c.submodule_quotient(RElem::one(f)),
            Err(Error::UnsupportedMultiplier(_))
        ));
    }

    #[test]
    fn dual_is_involutive_and_flips_theta() {
        for theta in Theta::all(PrimeField::new(5).unwrap()) {
            for c in RConstaCode::all(2, theta).unwrap() {
                let d = c.dual();
                assert_eq!(d.theta(), theta.inverse());
                assert_eq!(d.dual(), c);
            }
        }
    }

    #[test]
    fn shift_closure_small_instances() {
        for theta in Theta::all(f3()) {
            for c in RConstaCode::all(2, theta).unwrap() {
                assert!(c.shift_closed(DEFAULT_CAP).unwrap());
                assert_eq!(
                    c.codewords(DEFAULT_CAP).unwrap().len() as u128,
                    c.size().unwrap()
                );
            }
        }
    }

    #[test]
    fn descriptor_round_trip() {
        let c = example_code();
        let json = serde_json::to_string(&c.descriptor()).unwrap();
        let back: RCodeDescriptor = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_code().unwrap(), c);
        let mut bad = c.descriptor();
        bad.size_log_p = 3;
        assert!(bad.to_code().is_err());
    }
}
