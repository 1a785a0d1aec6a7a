//! Arithmetic in `F_p` and `F_p[x]`, factorization of `x^n - lambda`,
//! divisor enumeration.

mod factor;
mod field;
mod poly;

pub use factor::{
    divisors_xn_minus_lambda, factor, factor_xn_minus_lambda, is_irreducible, Factorization,
};
pub use field::{is_prime, FieldElem, PrimeField};
pub use poly::Poly;
