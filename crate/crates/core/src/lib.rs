//! Constacyclic codes over the non-chain ring `R = F_p + vF_p`, `v^2 = v`.
//!
//! - [`fppoly`]: `F_p`, `F_p[x]`, factorization of `x^n - lambda`.
//! - [`ring`]: elements, units, projections `sigma`/`tau`, polynomials over `R`.
//! - [`fpcode`]: `lambda`-constacyclic codes over `F_p`.
//! - [`rcode`]: `theta`-constacyclic codes over `R` in standard form.
//! - [`gray`]: Gray maps and Gray images.
//! - [`oracle`]: brute-force closure and audits that re-derive the
//!   structure results from definitions on small instances.

pub mod error;
pub mod fpcode;
pub mod fppoly;
pub mod gray;
pub mod oracle;
pub mod rcode;
pub mod ring;
pub mod text;

pub use error::{Error, Result};
pub use fpcode::{FpConstaCode, MinWeight, DEFAULT_CAP};
pub use fppoly::{Factorization, FieldElem, Poly, PrimeField};
pub use gray::{GrayImage, ImageMode};
pub use rcode::RConstaCode;
pub use ring::{RElem, RPoly, Theta};
