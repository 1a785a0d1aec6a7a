use constacyclic::fppoly::{divisors_xn_minus_lambda, PrimeField};
use constacyclic::oracle::min_weight_by_products;
use constacyclic::{FpConstaCode, DEFAULT_CAP};

fn dot(f: PrimeField, a: &[u64], b: &[u64]) -> u64 {
    a.iter().zip(b).fold(0, |s, (&x, &y)| f.add(s, f.mul(x, y)))
}

/// Every codeword of C-perp is orthogonal to every codeword of C, and the
/// dimensions add to n, for every divisor of x^n - lambda and every lambda.
#[test]
fn dual_is_the_orthogonal_complement() {
    for (p, n) in [(3, 4), (5, 3)] {
        let f = PrimeField::new(p).unwrap();
        for lambda in 1..p {
            for g in divisors_xn_minus_lambda(f, n, lambda).unwrap() {
                let c = FpConstaCode::from_generator(f, n, lambda, g).unwrap();
                let d = c.dual();
                assert_eq!(d.lambda(), f.inv(lambda).unwrap());
                assert_eq!(c.dimension() + d.dimension(), n);
                let cw: Vec<Vec<u64>> = c.codewords(DEFAULT_CAP).unwrap().collect();
                for w in d.codewords(DEFAULT_CAP).unwrap() {
                    assert!(
                        cw.iter().all(|u| dot(f, u, &w) == 0),
                        "p={p} n={n} lambda={lambda}"
                    );
                }
                // the complement is exactly the dual: count vectors orthogonal to a basis
                let rows = c.generator_matrix();
                let total = (p as usize).pow(n as u32);
                let orth = (0..total)
                    .map(|mut i| {
                        (0..n)
                            .map(|_| {
                                let x = i as u64 % p;
                                i /= p as usize;
                                x
                            })
                            .collect::<Vec<u64>>()
                    })
                    .filter(|w| rows.iter().all(|r| dot(f, r, w) == 0))
                    .count();
                assert_eq!(orth as u128, d.size().unwrap());
            }
        }
    }
}

#[test]
fn dual_is_an_involution_for_length_six() {
    for p in [3, 5] {
        let f = PrimeField::new(p).unwrap();
        for lambda in 1..p {
            for g in divisors_xn_minus_lambda(f, 6, lambda).unwrap() {
                let c = FpConstaCode::from_generator(f, 6, lambda, g).unwrap();
                assert_eq!(c.dual().dual(), c);
                assert!(c.shift_closed(DEFAULT_CAP).unwrap());
            }
        }
    }
}

/// Row-odometer scan against a polynomial-product scan, cyclic codes only
/// (the product form needs deg m + deg g < n without reduction).
#[test]
fn min_weight_two_scan_orders_agree() {
    for (p, n) in [(3, 8), (2, 9), (5, 4), (7, 3)] {
        let f = PrimeField::new(p).unwrap();
        for g in divisors_xn_minus_lambda(f, n, 1).unwrap() {
            let c = FpConstaCode::from_generator(f, n, 1, g.clone()).unwrap();
            if c.is_zero_code() {
                continue;
            }
            assert_eq!(
                c.min_weight(DEFAULT_CAP).unwrap(),
                min_weight_by_products(&g, n),
                "p={p} n={n} g={g}"
            );
        }
    }
}
