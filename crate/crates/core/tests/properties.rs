use constacyclic::fppoly::{factor, Poly, PrimeField};
use constacyclic::{RElem, RPoly, Theta};
use proptest::prelude::*;

const PRIMES: [u64; 4] = [2, 3, 5, 7];

fn poly_strategy() -> impl Strategy<Value = Poly> {
    (0..PRIMES.len(), prop::collection::vec(0u64..7, 0..9)).prop_map(|(i, c)| {
        let f = PrimeField::new(PRIMES[i]).unwrap();
        Poly::new(f, c.into_iter().map(|x| x % f.p()).collect())
    })
}

fn pair_strategy() -> impl Strategy<Value = (Poly, Poly)> {
    (
        0..PRIMES.len(),
        prop::collection::vec(0u64..7, 0..9),
        prop::collection::vec(0u64..7, 0..7),
    )
        .prop_map(|(i, a, b)| {
            let f = PrimeField::new(PRIMES[i]).unwrap();
            let m = |v: Vec<u64>| Poly::new(f, v.into_iter().map(|x| x % f.p()).collect());
            (m(a), m(b))
        })
}

fn unit_strategy() -> impl Strategy<Value = RElem> {
    (prop::sample::select(vec![3u64, 5, 7]), 1u64..7, 1u64..7).prop_map(|(p, s, t)| {
        let f = PrimeField::new(p).unwrap();
        RElem::from_crt(f, 1 + (s - 1) % (p - 1), 1 + (t - 1) % (p - 1))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn divmod_reconstructs((a, b) in pair_strategy()) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.divmod(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_both((a, b) in pair_strategy()) {
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let g = a.gcd(&b).unwrap();
        prop_assert!(g.is_monic());
        prop_assert!(g.divides(&a) && g.divides(&b));
        prop_assert_eq!(b.gcd(&a).unwrap(), g);
    }

    #[test]
    fn factorization_multiplies_back(f in poly_strategy()) {
        prop_assume!(f.degree().unwrap_or(0) >= 1);
        let fac = factor(&f).unwrap();
        prop_assert_eq!(fac.product(), f.monic());
        prop_assert!(fac.certify());
    }

    #[test]
    fn reciprocal_star_is_an_involution(f in poly_strategy()) {
        prop_assume!(!f.is_zero() && f.coeff(0) != 0);
        let m = f.monic();
        let once = m.reciprocal_star().unwrap();
        prop_assert!(once.is_monic());
        prop_assert_eq!(once.reciprocal_star().unwrap(), m);
    }

    #[test]
    fn crt_arithmetic_matches_additive(p in prop::sample::select(vec![2u64, 3, 5, 7]),
                                       a in 0u64..7, b in 0u64..7, c in 0u64..7, d in 0u64..7) {
        let f = PrimeField::new(p).unwrap();
        let x = RElem::from_additive(f, a % p, b % p);
        let y = RElem::from_additive(f, c % p, d % p);
        prop_assert_eq!(x * y, x.mul_additive(y));
        prop_assert_eq!(x + y, x.add_additive(y));
    }

    #[test]
    fn unit_inverse(x in unit_strategy()) {
        prop_assert!(x.is_unit());
        let y = x.inverse().unwrap();
        prop_assert_eq!(x * y, RElem::one(x.field()));
        prop_assert_eq!(x.mul_additive(y), RElem::one(x.field()));
    }

    #[test]
    fn rpoly_product_is_componentwise(x in unit_strategy(), (a, b) in pair_strategy()) {
        // sigma and tau projections multiply independently mod x^n - theta
        let f = x.field();
        let a = Poly::new(f, a.coeffs().iter().map(|c| c % f.p()).collect());
        let b = Poly::new(f, b.coeffs().iter().map(|c| c % f.p()).collect());
        let theta = Theta::from_elem(x).unwrap();
        let n = 4;
        let u = RPoly::combine(a.clone(), b.clone()).unwrap();
        let sq = u.mul_mod(&u, n, theta);
        let s = (&a * &a).reduce_constacyclic(n, theta.sigma_const());
        let t = (&b * &b).reduce_constacyclic(n, theta.tau_const());
        prop_assert_eq!(sq.project_sigma(), &s);
        prop_assert_eq!(sq.project_tau(), &t);
    }
}
