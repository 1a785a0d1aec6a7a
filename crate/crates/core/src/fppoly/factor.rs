//! Factorization over `F_p`: squarefree split, distinct-degree split,
//! then Cantor–Zassenhaus equal-degree splitting with a fixed-seed RNG.
//! The factor list is sorted canonically, so output never depends on
//! the random choices.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::PrimeField;
use super::poly::Poly;
use crate::error::{Error, Result};

const SPLIT_SEED: u64 = 0x5eed_c0de_f00d_0001;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    target: Poly,
    factors: Vec<(Poly, usize)>,
}

impl Factorization {
    /// The monic polynomial that was factored.
    pub fn target(&self) -> &Poly {
        &self.target
    }

    /// Monic irreducible factors with multiplicities, in canonical order.
    pub fn factors(&self) -> &[(Poly, usize)] {
        &self.factors
    }

    pub fn product(&self) -> Poly {
        let mut acc = Poly::one(self.target.field());
        for (f, e) in &self.factors {
            for _ in 0..*e {
                acc = &acc * f;
            }
        }
        acc
    }

    /// Re-multiplies the factors and runs the irreducibility test on each.
    pub fn certify(&self) -> bool {
        self.product() == self.target && self.factors.iter().all(|(f, _)| is_irreducible(f))
    }

    /// Number of monic divisors, `prod (e_i + 1)`.
    pub fn divisor_count(&self) -> usize {
        self.factors.iter().map(|(_, e)| e + 1).product()
    }

    /// All monic divisors of the target, each once, in canonical order.
    pub fn monic_divisors(&self) -> Vec<Poly> {
        let mut out = vec![Poly::one(self.target.field())];
        for (f, e) in &self.factors {
            let mut next = Vec::with_capacity(out.len() * (e + 1));
            for d in &out {
                let mut acc = d.clone();
                next.push(acc.clone());
                for _ in 0..*e {
                    acc = &acc * f;
                    next.push(acc.clone());
                }
            }
            out = next;
        }
        out.sort();
        out
    }
}

/// Factors an arbitrary nonzero polynomial (made monic first).
pub fn factor(f: &Poly) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let target = f.monic();
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED ^ target.field().p());
    let mut factors = Vec::new();
    for (sqf, mult) in squarefree(&target)? {
        for (block, d) in distinct_degree(&sqf)? {
            for irr in equal_degree(&block, d, &mut rng)? {
                factors.push((irr, mult));
            }
        }
    }
    factors.sort();
    // Squarefree parts are pairwise coprime, so no factor repeats here.
    Ok(Factorization { target, factors })
}

/// Factors `x^n - lambda`.
pub fn factor_xn_minus_lambda(field: PrimeField, n: usize, lambda: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    if field.reduce_u64(lambda) == 0 {
        return Err(Error::ZeroLambda);
    }
    factor(&Poly::x_pow_minus(field, n, lambda))
}

/// Monic divisors of `x^n - lambda` in canonical order.
pub fn divisors_xn_minus_lambda(field: PrimeField, n: usize, lambda: u64) -> Result<Vec<Poly>> {
    Ok(factor_xn_minus_lambda(field, n, lambda)?.monic_divisors())
}

/// Squarefree decomposition of a monic polynomial: pairs `(s_i, i)` with
/// `f = prod s_i^i` and each `s_i` squarefree.
fn squarefree(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let field = f.field();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return Ok(out);
    }
    let df = f.derivative();
    if df.is_zero() {
        // f is a p-th power
        for (g, e) in squarefree(&pth_root(f))? {
            out.push((g, e * field.p() as usize));
        }
        return Ok(out);
    }
    let mut c = f.gcd(&df)?;
    let mut w = f.exact_div(&c).expect("gcd divides");
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c)?;
        let fac = w.exact_div(&y).expect("gcd divides");
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.exact_div(&w).expect("gcd divides");
        i += 1;
    }
    if !c.is_one() {
        for (g, e) in squarefree(&pth_root(&c))? {
            out.push((g, e * field.p() as usize));
        }
    }
    Ok(out)
}

/// Inverse Frobenius on a polynomial whose exponents are all multiples of p.
/// Coefficients are fixed by Frobenius in `F_p`.
fn pth_root(f: &Poly) -> Poly {
    let p = f.field().p() as usize;
    let coeffs = f.coeffs().iter().step_by(p).copied().collect();
    Poly::new(f.field(), coeffs)
}

/// Splits a squarefree monic polynomial into products of irreducibles of
/// equal degree.
fn distinct_degree(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let field = f.field();
    let x = Poly::x(field);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.rem(&rest)?;
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(field.p(), &rest)?;
        let g = (&h - &x).gcd(&rest)?;
        if !g.is_one() {
            rest = rest.exact_div(&g).expect("gcd divides");
            h = h.rem(&rest)?;
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(deg) = rest.degree().filter(|&k| k > 0) {
        out.push((rest, deg));
    }
    Ok(out)
}

/// Cantor–Zassenhaus splitting of a squarefree product of degree-`d` irreducibles.
fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Poly>> {
    let deg = f.degree().unwrap_or(0);
    if deg == d {
        return Ok(vec![f.clone()]);
    }
    let field = f.field();
    loop {
        let a = Poly::new(
            field,
            (0..deg).map(|_| rng.gen_range(0..field.p())).collect(),
        );
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = a.gcd(f)?;
        let candidate = if !g.is_one() {
            g
        } else {
            let b = splitting_element(&a, f, d)?;
            if b.is_zero() {
                continue;
            }
            b.gcd(f)?
        };
        if !candidate.is_one() && candidate.degree() != f.degree() {
            let other = f.exact_div(&candidate).expect("gcd divides");
            let mut parts = equal_degree(&candidate, d, rng)?;
            parts.extend(equal_degree(&other, d, rng)?);
            return Ok(parts);
        }
    }
}

/// For odd p: `a^((p^d - 1)/2) - 1 mod f`, computed as the norm-like
/// product `prod_{i<d} a^(p^i)` raised to `(p-1)/2`, avoiding the huge
/// exponent. For p = 2: the trace `sum_{i<d} a^(2^i)`.
fn splitting_element(a: &Poly, f: &Poly, d: usize) -> Result<Poly> {
    let field = f.field();
    let p = field.p();
    let mut frob = a.rem(f)?;
    if p == 2 {
        let mut acc = frob.clone();
        for _ in 1..d {
            frob = frob.mul_mod(&frob, f)?;
            acc = &acc + &frob;
        }
        return Ok(acc);
    }
    let mut acc = frob.clone();
    for _ in 1..d {
        frob = frob.pow_mod(p, f)?;
        acc = acc.mul_mod(&frob, f)?;
    }
    let t = acc.pow_mod((p - 1) / 2, f)?;
    Ok(&t - &Poly::one(field))
}

/// Rabin's test: `f | x^(p^d) - x` and `gcd(f, x^(p^(d/q)) - x) = 1` for
/// every prime `q | d`.
pub fn is_irreducible(f: &Poly) -> bool {
    let Some(d) = f.degree() else { return false };
    if d == 0 {
        return false;
    }
    let f = f.monic();
    let field = f.field();
    let x = Poly::x(field);
    let frobenius_iter = |k: usize| -> Poly {
        let mut h = x.rem(&f).expect("nonzero modulus");
        for _ in 0..k {
            h = h.pow_mod(field.p(), &f).expect("nonzero modulus");
        }
        h
    };
    if !(&frobenius_iter(d) - &x)
        .rem(&f)
        .expect("nonzero")
        .is_zero()
    {
        return false;
    }
    prime_divisors(d).into_iter().all(|q| {
        (&frobenius_iter(d / q) - &x)
            .gcd(&f)
            .map(|g| g.is_one())
            .unwrap_or(false)
    })
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
