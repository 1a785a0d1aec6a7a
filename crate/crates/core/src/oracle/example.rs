use serde::Serialize;
use serde_json::json;

use super::audit::{Instance, Tally};
use super::{ideal_span, Ambient, AuditReport};
use crate::error::Result;
use crate::fppoly::{factor_xn_minus_lambda, Poly, PrimeField};
use crate::gray::gray_image_code;
use crate::rcode::{RConstaCode, ThetaDescriptor};
use crate::ring::{RPoly, Theta};
use crate::text::{parse_poly, parse_rpoly};

/// A generator whose projections sit on the opposite slots for
/// `theta = -1+2v`: its sigma part divides `x^10 + 1`, its tau part `x^10 - 1`.
pub const LITERAL_GENERATOR: &str = "x^4+(2v-1)x^3+(1-v)x^2-x+1";
/// `g_{1-v} | x^10 - 1`.
pub const G_ONE_MINUS_V: &str = "x^4-x^3+x^2-x+1";
/// `g_v | x^10 + 1`.
pub const G_V: &str = "x^4+x^3-x+1";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExampleReport {
    pub length: usize,
    pub dimension: usize,
    pub min_weight: usize,
    pub image_generator: String,
    pub image_generator_factored: String,
    pub checks: Vec<AuditReport>,
}

impl ExampleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(AuditReport::passed)
    }

    pub fn parameters(&self) -> [usize; 3] {
        [self.length, self.dimension, self.min_weight]
    }
}

/// Minimum nonzero weight of the cyclic code `{m g : deg m < len - deg g}`,
/// scanning messages in plain counting order and multiplying polynomials
/// (no generator-matrix rows).
pub fn min_weight_by_products(g: &Poly, len: usize) -> usize {
    let f = g.field();
    let p = f.p();
    let k = len - g.degree().expect("nonzero generator");
    let mut best = len;
    let mut digits = vec![0u64; k];
    for _ in 1..p.pow(k as u32) {
        for d in digits.iter_mut() {
            *d += 1;
            if *d == p {
                *d = 0;
            } else {
                break;
            }
        }
        let c = &Poly::new(f, digits.clone()) * g;
        let w = c.coeffs().iter().filter(|&&x| x != 0).count();
        best = best.min(w);
    }
    best
}

fn instance(theta: Theta) -> Instance {
    Instance {
        p: 3,
        n: Some(10),
        theta: Some(ThetaDescriptor {
            lambda: theta.lambda(),
            mu: theta.mu(),
        }),
    }
}

/// Rebuilds the reference example over `F_3 + vF_3`, `n = 10`,
/// `theta = -1 + 2v`: factor lists, the slot question for
/// [`LITERAL_GENERATOR`], code sizes, and the `[20, 12, 4]` Gray image.
pub fn reproduce_example() -> Result<ExampleReport> {
    let f = PrimeField::new(3)?;
    let theta = Theta::minus_one_plus_two_v(f)?;
    let alt = Theta::one_minus_two_v(f)?;
    let n = 10;
    let poly = |s: &str| parse_poly(f, s).expect("literal");
    let mut checks = Vec::new();

    let mut t = Tally::new();
    let minus = factor_xn_minus_lambda(f, n, 1)?;
    let plus = factor_xn_minus_lambda(f, n, f.neg(1))?;
    let mut want_minus: Vec<(Poly, usize)> = ["x+1", "x-1", "x^4+x^3+x^2+x+1", "x^4-x^3+x^2-x+1"]
        .iter()
        .map(|s| (poly(s), 1))
        .collect();
    let mut want_plus: Vec<(Poly, usize)> = ["x^2+1", "x^4+x^3-x+1", "x^4-x^3+x+1"]
        .iter()
        .map(|s| (poly(s), 1))
        .collect();
    want_minus.sort();
    want_plus.sort();
    t.check(minus.factors() == want_minus.as_slice(), || {
        format!("x^10-1 factors as {:?}", minus.factors())
    });
    t.check(plus.factors() == want_plus.as_slice(), || {
        format!("x^10+1 factors as {:?}", plus.factors())
    });
    t.check(minus.certify() && plus.certify(), || {
        "factor product check failed".into()
    });
    checks.push(t.finish(instance(theta), "factor lists of x^10-1 and x^10+1"));

    let mut t = Tally::new();
    let (ls, lt) = parse_rpoly(f, LITERAL_GENERATOR)?;
    let literal = RPoly::combine(ls, lt)?;
    let amb = Ambient::new(f, n, theta);
    let literal_vec = literal.reduce(n, theta).to_vec(n);
    let rank = ideal_span(&amb, std::slice::from_ref(&literal_vec)).rank();
    let std_literal = RConstaCode::standardize(n, theta, std::slice::from_ref(&literal))?;
    t.check(std_literal.is_full() && rank == 2 * n, || {
        format!(
            "mixed generator: standardize gives size 3^{}, closure rank {rank}",
            std_literal.size_log_p()
        )
    });
    let alt_code = RConstaCode::standardize(n, alt, std::slice::from_ref(&literal))?;
    let deg = |g: &Poly| g.degree().unwrap_or(0);
    t.check(
        (deg(alt_code.g_one_minus_v()), deg(alt_code.g_v())) == (4, 4),
        || "mixed generator is not standard under theta = 1-2v".into(),
    );
    t.detail("closure_rank_literal", rank);
    t.detail(
        "resolution",
        json!({
            "g_one_minus_v": G_ONE_MINUS_V,
            "g_v": G_V,
            "literal_standard_under": "1-2v",
        }),
    );
    checks.push(t.finish(instance(theta), "slot assignment of the mixed generator"));

    let mut t = Tally::new();
    let code = RConstaCode::from_standard_pair(n, theta, poly(G_ONE_MINUS_V), poly(G_V))?;
    let g_vec = code.single_generator().reduce(n, theta).to_vec(n);
    let rank = ideal_span(&amb, std::slice::from_ref(&g_vec)).rank();
    t.check(code.size_log_p() == 12 && rank == 12, || {
        format!("|C| = 3^{}, closure rank {rank}", code.size_log_p())
    });
    t.check(code.dual().size_log_p() == 8, || {
        format!("|C^perp| = 3^{}", code.dual().size_log_p())
    });
    checks.push(t.finish(instance(theta), "|C| = 3^12 and |C^perp| = 3^8"));

    let mut t = Tally::new();
    let image = gray_image_code(&code)?;
    let expected = &poly(G_V) * &poly(G_ONE_MINUS_V);
    t.check(image.image_generator == expected, || {
        format!("image generator {}", image.image_generator)
    });
    t.check(image.len() == 20 && image.dimension() == 12, || {
        format!("image is [{}, {}]", image.len(), image.dimension())
    });
    let alt_image = gray_image_code(&alt_code)?;
    t.check(alt_image.image_generator == expected, || {
        "theta = 1-2v reading gives a different image".into()
    });
    let d = image.code.min_weight(3u128.pow(12))?;
    t.check(d == 4, || format!("minimum weight {d}"));
    let d2 = min_weight_by_products(&image.code.generator().clone(), image.len());
    t.check(d2 == d, || format!("second scan gives {d2}, first {d}"));
    t.detail("parameters", json!([image.len(), image.dimension(), d]));
    t.detail("generator", image.image_generator.to_string());
    checks.push(t.finish(instance(theta), "Gray image is a [20,12,4] cyclic code"));

    Ok(ExampleReport {
        length: image.len(),
        dimension: image.dimension(),
        min_weight: d,
        image_generator: image.image_generator.to_string(),
        image_generator_factored: format!("({G_V})({G_ONE_MINUS_V})"),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpcode::FpConstaCode;

    #[test]
    fn product_scan_agrees_with_row_scan() {
        for (p, len, g) in [
            (3, 8, "x^2+1"),
            (5, 4, "x-1"),
            (2, 7, "x^3+x+1"),
            (3, 6, "x^3-1"),
        ] {
            let f = PrimeField::new(p).unwrap();
            let g = parse_poly(f, g).unwrap();
            let c = FpConstaCode::from_generator(f, len, 1, g.clone()).unwrap();
            assert_eq!(
                min_weight_by_products(&g, len),
                c.min_weight(1 << 20).unwrap()
            );
        }
        // [7,4,3] Hamming code
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(
            min_weight_by_products(&parse_poly(f2, "x^3+x+1").unwrap(), 7),
            3
        );
    }
}
