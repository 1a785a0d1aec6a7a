//! Gray maps `phi_theta : R_n -> F_p[x]/<x^{2n} - 1>` and `R^n -> F_p^{2n}`.
//!
//! For `c = r + v*q` (additive coordinates) and `theta = lambda + v*mu`,
//! `phi_theta(c) = (lambda(lambda+mu) q | -mu r - (lambda+mu) q)`.
//! The map is a bijection exactly when `mu != 0`; `mu = 0` is refused.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fpcode::{partitioned_min_weight, weight, Codewords, FpConstaCode, MinWeight};
use crate::fppoly::Poly;
use crate::rcode::RConstaCode;
use crate::ring::{RElem, RPoly, Theta};

fn require_bijective(theta: Theta) -> Result<()> {
    if theta.mu() == 0 {
        Err(Error::NonBijectiveGray(theta.to_string()))
    } else {
        Ok(())
    }
}

fn require_cyclic(theta: Theta) -> Result<()> {
    require_bijective(theta)?;
    if theta.is_gray_cyclic() {
        Ok(())
    } else {
        Err(Error::UnsupportedTheta(theta.to_string()))
    }
}

/// Vector Gray map `R^n -> F_p^{2n}`.
pub fn gray_vec(theta: Theta, c: &[RElem]) -> Result<Vec<u64>> {
    require_bijective(theta)?;
    let f = theta.field();
    let (lambda, mu) = (theta.lambda(), theta.mu());
    let s = f.add(lambda, mu);
    let ls = f.mul(lambda, s);
    let n = c.len();
    let mut out = vec![0u64; 2 * n];
    for (i, x) in c.iter().enumerate() {
        if x.field() != f {
            return Err(Error::FieldMismatch {
                left: f.p(),
                right: x.field().p(),
            });
        }
        let (r, q) = (x.a(), x.b());
        out[i] = f.mul(ls, q);
        out[n + i] = f.neg(f.add(f.mul(mu, r), f.mul(s, q)));
    }
    Ok(out)
}

/// Polynomial Gray map. `f` is first reduced into `R_n = R[x]/<x^n - theta>`.
pub fn gray_poly(theta: Theta, f: &RPoly, n: usize) -> Result<Poly> {
    require_bijective(theta)?;
    let field = theta.field();
    let (r, q) = f.reduce(n, theta).additive_parts();
    let (lambda, mu) = (theta.lambda(), theta.mu());
    let s = field.add(lambda, mu);
    let low = q.scale(field.mul(lambda, s));
    let high = &r.scale(field.neg(mu)) - &q.scale(s);
    let shifted = &high * &Poly::monomial(field, 1, n);
    Ok(&low + &shifted)
}

/// `(w_0, ..., w_{m-1}) -> (w_{m-1}, w_0, ..., w_{m-2})`.
pub fn cyclic_shift(w: &[u64]) -> Vec<u64> {
    let mut out = w.to_vec();
    out.rotate_right(1);
    out
}

/// Whether `phi(alpha(c)) = beta(phi(c))`, with `alpha` the
/// `theta`-constacyclic shift and `beta` the cyclic shift. Only defined
/// for `theta = 1-2v` or `-1+2v`.
pub fn gray_shift_commutes(theta: Theta, c: &[RElem]) -> Result<bool> {
    require_cyclic(theta)?;
    let shifted = crate::rcode::r_constashift(c, theta.elem());
    Ok(gray_vec(theta, &shifted)? == cyclic_shift(&gray_vec(theta, c)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ImageMode {
    /// `phi(C) = [g_{1-v} g_v]`; holds for `theta = 1-2v, -1+2v`.
    Equality,
    /// `phi(C) ⊆ <g_{1-v} g_v>`, checked on an `F_p`-basis of `C`.
    Containment { verified: bool },
}

/// The cyclic code of length `2n` attached to the Gray image of a code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayImage {
    /// `g_{1-v} * g_v`.
    pub image_generator: Poly,
    /// `[gcd(g_{1-v} g_v, x^{2n} - 1)]`, a cyclic code of length `2n`.
    pub code: FpConstaCode,
    pub mode: ImageMode,
}

impl GrayImage {
    pub fn len(&self) -> usize {
        self.code.len()
    }

    pub fn is_empty(&self) -> bool {
        self.code.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.code.dimension()
    }
}

/// `F_p`-basis of `C`: `v x^i g_{1-v}` and `(1-v) x^j g_v`.
pub(crate) fn fp_basis(c: &RConstaCode) -> Vec<Vec<RElem>> {
    let f = c.field();
    let n = c.len();
    let mut basis = Vec::with_capacity(c.size_log_p());
    for row in c.component_one_minus_v().generator_matrix() {
        basis.push(row.iter().map(|&s| RElem::from_crt(f, s, 0)).collect());
    }
    for row in c.component_v().generator_matrix() {
        basis.push(row.iter().map(|&t| RElem::from_crt(f, 0, t)).collect());
    }
    debug_assert!(basis.iter().all(|b: &Vec<RElem>| b.len() == n));
    basis
}

/// Gray image of a code: equality mode for `theta = 1-2v, -1+2v`,
/// containment mode for any other unit with `mu != 0`.
pub fn gray_image_code(c: &RConstaCode) -> Result<GrayImage> {
    let theta = c.theta();
    require_bijective(theta)?;
    let f = c.field();
    let n = c.len();
    let product = c.g_one_minus_v() * c.g_v();
    let big_mod = Poly::x_pow_minus(f, 2 * n, 1);
    let cyclic_gen = product.gcd(&big_mod)?;
    let code = FpConstaCode::from_generator(f, 2 * n, 1, cyclic_gen)?;
    let mode = if theta.is_gray_cyclic() {
        ImageMode::Equality
    } else {
        let verified = fp_basis(c).iter().all(|b| {
            let img = Poly::new(f, gray_vec(theta, b).expect("mu checked"));
            product.divides(&img)
        });
        ImageMode::Containment { verified }
    };
    Ok(GrayImage {
        image_generator: product,
        code,
        mode,
    })
}

/// Gray image of the dual, `[h*_{1-v} h*_v]`, which coincides with the
/// Euclidean dual of the Gray image.
pub fn gray_dual_image(c: &RConstaCode) -> Result<GrayImage> {
    require_cyclic(c.theta())?;
    let image = gray_image_code(&c.dual())?;
    debug_assert_eq!(image.code, gray_image_code(c)?.code.dual());
    Ok(image)
}

/// Minimum nonzero weight of `phi(C)`, scanning the span of the images of
/// an `F_p`-basis. Exact when `|C| <= budget`; otherwise the best weight
/// among the first `budget` codewords.
pub fn gray_min_weight(c: &RConstaCode, budget: u128) -> Result<MinWeight> {
    let theta = c.theta();
    require_bijective(theta)?;
    if c.is_zero_code() {
        return Err(Error::ZeroCode);
    }
    let f = c.field();
    let len = 2 * c.len();
    let rows: Vec<Vec<u64>> = fp_basis(c)
        .iter()
        .map(|b| gray_vec(theta, b))
        .collect::<Result<_>>()?;
    match c.size() {
        Some(s) if s <= budget => Ok(MinWeight::Exact(partitioned_min_weight(f, &rows, len))),
        _ => {
            let best = Codewords::new(f, rows, len)
                .take(budget.min(usize::MAX as u128) as usize)
                .map(|w| weight(&w))
                .filter(|&w| w > 0)
                .min()
                .unwrap_or(len);
            Ok(MinWeight::UpperBound(best))
        }
    }
}

/// Explicit Gray image of every codeword.
pub fn gray_image_set(c: &RConstaCode, cap: u128) -> Result<HashSet<Vec<u64>>> {
    let theta = c.theta();
    c.codewords(cap)?
        .iter()
        .map(|w| gray_vec(theta, w))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fppoly::PrimeField;
    use crate::text::parse_poly;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn min_weight_of_image_in_both_modes() {
        let f3 = f(3);
        let theta = Theta::minus_one_plus_two_v(f3).unwrap();
        for c in RConstaCode::all(2, theta).unwrap() {
            if c.is_zero_code() {
                assert_eq!(gray_min_weight(&c, 1 << 20), Err(Error::ZeroCode));
                continue;
            }
            let image = gray_image_code(&c).unwrap();
            assert_eq!(
                gray_min_weight(&c, 1 << 20).unwrap(),
                MinWeight::Exact(image.code.min_weight(1 << 20).unwrap())
            );
        }
        let f5 = f(5);
        let general = Theta::from_i64(f5, 1, 1).unwrap();
        let full = RConstaCode::full(2, general).unwrap();
        assert_eq!(
            gray_min_weight(&full, 1 << 20).unwrap(),
            MinWeight::Exact(1)
        );
        assert!(matches!(
            gray_min_weight(&full, 10).unwrap(),
            MinWeight::UpperBound(_)
        ));
    }

    #[test]
    fn scalar_input_lands_in_upper_half() {
        let f3 = f(3);
        let theta = Theta::minus_one_plus_two_v(f3).unwrap();
        let r = Poly::from_i64(f3, &[1, 2, 0, 1]);
        let img = gray_poly(theta, &RPoly::from_fp(r.clone()), 4).unwrap();
        // -mu r = -2r = r over F_3
        assert_eq!(img, &r * &Poly::monomial(f3, 1, 4));
        assert!(gray_poly(theta, &RPoly::zero(f3), 4).unwrap().is_zero());
    }

    #[test]
    fn single_coordinate() {
        let f3 = f(3);
        let theta = Theta::minus_one_plus_two_v(f3).unwrap();
        let c = [RElem::from_i64(f3, 1, 1)];
        assert_eq!(gray_vec(theta, &c).unwrap(), vec![2, 0]);
        assert_eq!(gray_vec(theta, &[RElem::zero(f3); 3]).unwrap(), vec![0; 6]);
    }

    #[test]
    fn closed_form_for_minus_one_plus_two_v() {
        let f5 = f(5);
        let theta = Theta::minus_one_plus_two_v(f5).unwrap();
        let c: Vec<RElem> = (0..4)
            .map(|i| RElem::from_i64(f5, i as i64 + 1, 3 * i as i64 + 2))
            .collect();
        let img = gray_vec(theta, &c).unwrap();
        for (i, x) in c.iter().enumerate() {
            let (r, q) = (x.a() as i64, x.b() as i64);
            assert_eq!(img[i], f5.reduce(-q));
            assert_eq!(img[4 + i], f5.reduce(-2 * r - q));
        }
    }

    #[test]
    fn vector_and_polynomial_forms_agree() {
        let f3 = f(3);
        let theta = Theta::from_i64(f3, 1, 1).unwrap();
        let c: Vec<RElem> = (0..5).map(|i| RElem::from_i64(f3, i, 2 * i + 1)).collect();
        let as_poly = RPoly::from_coeffs(f3, &c);
        assert_eq!(
            Poly::new(f3, gray_vec(theta, &c).unwrap()),
            gray_poly(theta, &as_poly, 5).unwrap()
        );
    }

    #[test]
    fn mu_zero_is_refused() {
        let f3 = f(3);
        let theta = Theta::from_i64(f3, 1, 0).unwrap();
        assert!(matches!(
            gray_vec(theta, &[RElem::one(f3)]),
            Err(Error::NonBijectiveGray(_))
        ));
        let f5 = f(5);
        let general = Theta::from_i64(f5, 1, 1).unwrap();
        assert!(matches!(
            gray_shift_commutes(general, &[RElem::one(f5)]),
            Err(Error::UnsupportedTheta(_))
        ));
    }

    #[test]
    fn length_one_shift_commutation() {
        let f3 = f(3);
        let theta = Theta::minus_one_plus_two_v(f3).unwrap();
        let c = [RElem::v(f3)];
        // c = v: r = 0, q = 1; phi(c) = (-1, -1) = (2, 2)
        assert_eq!(gray_vec(theta, &c).unwrap(), vec![2, 2]);
        // theta * v = v(-1 + 2) = v, so alpha(c) = c and beta(2, 2) = (2, 2)
        assert!(gray_shift_commutes(theta, &c).unwrap());
        assert!(gray_shift_commutes(theta, &[RElem::zero(f3); 4]).unwrap());
    }

    #[test]
    fn example_image_parameters() {
        let f3 = f(3);
        let theta = Theta::minus_one_plus_two_v(f3).unwrap();
        let c = RConstaCode::from_standard_pair(
            10,
            theta,
            parse_poly(f3, "x^4-x^3+x^2-x+1").unwrap(),
            parse_poly(f3, "x^4+x^3-x+1").unwrap(),
        )
        .unwrap();
        let img = gray_image_code(&c).unwrap();
        assert_eq!(img.mode, ImageMode::Equality);
        assert_eq!((img.len(), img.dimension()), (20, 12));
        let expect =
            &parse_poly(f3, "x^4+x^3-x+1").unwrap() * &parse_poly(f3, "x^4-x^3+x^2-x+1").unwrap();
        assert_eq!(img.image_generator, expect);
        let g_img = gray_poly(theta, &c.single_generator(), 10).unwrap();
        assert!(expect.divides(&g_img));

        let dual = gray_dual_image(&c).unwrap();
        assert_eq!((dual.len(), dual.dimension()), (20, 8));
    }

    #[test]
    fn full_space_image() {
        let f3 = f(3);
        let theta = Theta::minus_one_plus_two_v(f3).unwrap();
        let full = RConstaCode::full(4, theta).unwrap();
        let img = gray_image_code(&full).unwrap();
        assert!(img.image_generator.is_one());
        assert_eq!(img.dimension(), 8);
        assert!(gray_dual_image(&full).unwrap().code.is_zero_code());
    }

    #[test]
    fn containment_mode_for_general_theta() {
        let f5 = f(5);
        let theta = Theta::from_i64(f5, 1, 1).unwrap();
        for c in RConstaCode::all(2, theta).unwrap() {
            let img = gray_image_code(&c).unwrap();
            assert_eq!(img.mode, ImageMode::Containment { verified: true });
            assert!(gray_dual_image(&c).is_err());
        }
    }
}
