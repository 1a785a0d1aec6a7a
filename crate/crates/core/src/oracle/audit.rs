use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use super::{additive_mul, close_ideal, close_module, Ambient, IdealClosure, Span};
use crate::error::{Error, Result};
use crate::fpcode::{set_is_shift_closed, FpConstaCode, DEFAULT_CAP};
use crate::fppoly::{divisors_xn_minus_lambda, Poly, PrimeField};
use crate::gray::{cyclic_shift, gray_image_code, gray_vec, ImageMode};
use crate::rcode::{RConstaCode, ThetaDescriptor};
use crate::ring::{RElem, RPoly, Theta};

const SEED: u64 = 0x005e_ed0f_7e7a;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub p: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta: Option<ThetaDescriptor>,
}

impl Instance {
    fn of(amb: &Ambient) -> Self {
        Self {
            p: amb.field.p(),
            n: Some(amb.n),
            theta: Some(ThetaDescriptor {
                lambda: amb.theta.lambda(),
                mu: amb.theta.mu(),
            }),
        }
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={}", self.p)?;
        if let Some(n) = self.n {
            write!(f, " n={n}")?;
        }
        if let Some(t) = self.theta {
            write!(f, " theta={}+v*{}", t.lambda, t.mu)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    pub instance: Instance,
    pub claim: String,
    pub status: Status,
    /// Number of individual checks performed.
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, Value>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(
            f,
            "[{tag}] {} ({}; {} checks)",
            self.claim, self.instance, self.cases
        )?;
        for (k, v) in &self.details {
            write!(f, "\n       {k}: {v}")?;
        }
        if let Some(c) = &self.counterexample {
            write!(f, "\n       counterexample: {c}")?;
        }
        Ok(())
    }
}

/// Check counter that keeps the first counterexample.
pub(crate) struct Tally {
    cases: u64,
    counterexample: Option<String>,
    failed: bool,
    details: BTreeMap<String, Value>,
}

impl Tally {
    pub(crate) fn new() -> Self {
        Self {
            cases: 0,
            counterexample: None,
            failed: false,
            details: BTreeMap::new(),
        }
    }

    pub(crate) fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed = true;
            if self.counterexample.is_none() {
                self.counterexample = Some(witness());
            }
        }
    }

    pub(crate) fn detail(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.to_string(), value.into());
    }

    pub(crate) fn finish(self, instance: Instance, claim: &str) -> AuditReport {
        AuditReport {
            instance,
            claim: claim.to_string(),
            status: if self.failed {
                Status::Fail
            } else {
                Status::Pass
            },
            cases: self.cases,
            counterexample: self.counterexample,
            details: self.details,
        }
    }
}

fn show(w: &[u64]) -> String {
    format!("{w:?}")
}

/// `x^i -> theta x^{i-n}` from the top down, on additive pairs.
fn reduce_additive(amb: &Ambient, mut coeffs: Vec<(u64, u64)>) -> Vec<u64> {
    let n = amb.n;
    let f = amb.field;
    let theta = (amb.theta.lambda(), amb.theta.mu());
    for i in (n..coeffs.len()).rev() {
        let (x, y) = additive_mul(f, theta, coeffs[i]);
        let (a, b) = coeffs[i - n];
        coeffs[i - n] = (f.add(a, x), f.add(b, y));
    }
    coeffs.resize(n.max(coeffs.len()), (0, 0));
    let mut out = vec![0; 2 * n];
    for i in 0..n {
        out[i] = coeffs[i].0;
        out[n + i] = coeffs[i].1;
    }
    out
}

/// `v * g` and `(1 - v) * g` reduced into `R_n`, for a polynomial over `F_p`.
fn v_multiple(amb: &Ambient, g: &Poly) -> Vec<u64> {
    reduce_additive(amb, g.coeffs().iter().map(|&c| (0, c)).collect())
}

fn one_minus_v_multiple(amb: &Ambient, g: &Poly) -> Vec<u64> {
    let f = amb.field;
    reduce_additive(amb, g.coeffs().iter().map(|&c| (c, f.neg(c))).collect())
}

fn rpoly_additive(amb: &Ambient, g: &RPoly) -> Vec<u64> {
    let len = g.degree().map_or(0, |d| d + 1);
    reduce_additive(
        amb,
        (0..len).map(|i| (g.coeff(i).a(), g.coeff(i).b())).collect(),
    )
}

fn additive_rpoly(amb: &Ambient, w: &[u64]) -> RPoly {
    RPoly::from_coeffs(amb.field, &amb.from_additive(w))
}

fn close_additive(amb: &Ambient, gens: &[Vec<u64>]) -> Result<IdealClosure> {
    let gens: Vec<Vec<RElem>> = gens.iter().map(|g| amb.from_additive(g)).collect();
    close_ideal(amb, &gens)
}

/// The ideal `<v g_{1-v}, (1-v) g_v>` by closure.
fn pair_ideal(amb: &Ambient, c: &RConstaCode) -> Result<IdealClosure> {
    close_additive(
        amb,
        &[
            v_multiple(amb, c.g_one_minus_v()),
            one_minus_v_multiple(amb, c.g_v()),
        ],
    )
}

fn codeword_set(amb: &Ambient, c: &RConstaCode) -> Result<BTreeSet<Vec<u64>>> {
    Ok(c.codewords(DEFAULT_CAP)?
        .iter()
        .map(|w| amb.to_additive(w))
        .collect())
}

fn pair_label(c: &RConstaCode) -> String {
    format!("g1={}, g2={}", c.g_one_minus_v(), c.g_v())
}

/// Closures of every single element of `R^n`, keyed by canonical basis,
/// each with its least representative.
fn principal_ideals(amb: &Ambient) -> Result<BTreeMap<Span, Vec<u64>>> {
    let universe = amb.universe()?;
    let close = |w: &Vec<u64>| -> (Span, Vec<u64>) {
        let c = close_additive(amb, std::slice::from_ref(w)).expect("cap checked");
        (c.span().clone(), w.clone())
    };
    #[cfg(feature = "parallel")]
    let closures: Vec<(Span, Vec<u64>)> = {
        use rayon::prelude::*;
        universe.par_iter().map(close).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let closures: Vec<(Span, Vec<u64>)> = universe.iter().map(close).collect();
    let mut out: BTreeMap<Span, Vec<u64>> = BTreeMap::new();
    for (span, rep) in closures {
        let slot = out.entry(span).or_insert_with(|| rep.clone());
        if rep < *slot {
            *slot = rep;
        }
    }
    Ok(out)
}

/// Brute-force inverse by search.
fn brute_inverse(f: PrimeField, x: (u64, u64)) -> Option<(u64, u64)> {
    let p = f.p();
    (0..p)
        .flat_map(|a| (0..p).map(move |b| (a, b)))
        .find(|&y| additive_mul(f, x, y) == (1, 0))
}

/// `r_is_unit` and `r_inverse` against exhaustive search over all `p^2`
/// elements; exactly `(p-1)^2` units.
pub fn audit_units(field: PrimeField) -> AuditReport {
    let p = field.p();
    let mut t = Tally::new();
    let mut units = 0u64;
    for a in 0..p {
        for b in 0..p {
            let x = RElem::from_additive(field, a, b);
            let brute = brute_inverse(field, (a, b));
            t.check(x.is_unit() == brute.is_some(), || {
                format!(
                    "{x}: is_unit={} but search says {}",
                    x.is_unit(),
                    brute.is_some()
                )
            });
            if let Some((c, d)) = brute {
                units += 1;
                let got = x.inverse().ok().map(|y| (y.a(), y.b()));
                t.check(got == Some((c, d)), || {
                    format!("{x}: inverse {got:?}, expected ({c},{d})")
                });
                t.check(
                    x.mul_additive(RElem::from_additive(field, c, d)) == RElem::one(field),
                    || format!("{x} times its inverse is not 1"),
                );
            }
        }
    }
    let expected = (p - 1) * (p - 1);
    t.check(units == expected, || {
        format!("{units} units, expected {expected}")
    });
    t.detail("units", units);
    t.finish(
        Instance {
            p,
            n: None,
            theta: None,
        },
        "unit criterion and inverse formula",
    )
}

/// For every divisor pair: closure of the standard pair equals the set
/// `v C_{1-v} + (1-v) C_v`, equals the closure of the single generator,
/// has size `p^{2n - deg g1 - deg g2}`; the submodule quotients recover the
/// components; membership agrees with closure on all of `R^n`.
pub fn audit_decomposition(amb: &Ambient) -> Result<AuditReport> {
    let f = amb.field;
    let n = amb.n;
    let mut t = Tally::new();
    let universe = amb.universe()?;
    let codes = RConstaCode::all(n, amb.theta)?;
    for c in &codes {
        let ideal = pair_ideal(amb, c)?;
        let elems = ideal.additive_elements();
        let label = pair_label(c);

        t.check(codeword_set(amb, c)? == elems, || {
            format!("{label}: codewords differ from closure")
        });
        let single = close_additive(amb, &[rpoly_additive(amb, &c.single_generator())])?;
        t.check(single.span() == ideal.span(), || {
            format!("{label}: <g> differs from <v g1, (1-v) g2>")
        });
        let deg = |g: &Poly| g.degree().unwrap_or(0);
        let expected = 2 * n - deg(c.g_one_minus_v()) - deg(c.g_v());
        t.check(ideal.size_log_p() == expected, || {
            format!(
                "{label}: closure has p^{}, formula p^{expected}",
                ideal.size_log_p()
            )
        });

        let mut quot_v = HashSet::new();
        let mut quot_w = HashSet::new();
        for s in fp_universe(f, n) {
            // v*s is (0 | s); (1-v)*t is (t | -t)
            let mut vs = vec![0; 2 * n];
            vs[n..].copy_from_slice(&s);
            if elems.contains(&vs) {
                quot_v.insert(s.clone());
            }
            let mut wt = s.clone();
            wt.extend(s.iter().map(|&x| f.neg(x)));
            if elems.contains(&wt) {
                quot_w.insert(s);
            }
        }
        let comp1: HashSet<Vec<u64>> = c
            .submodule_quotient(RElem::v(f))?
            .codewords(DEFAULT_CAP)?
            .collect();
        let comp2: HashSet<Vec<u64>> = c
            .submodule_quotient(RElem::one_minus_v(f))?
            .codewords(DEFAULT_CAP)?
            .collect();
        t.check(comp1 == quot_v, || format!("{label}: (C:v) mismatch"));
        t.check(comp2 == quot_w, || format!("{label}: (C:1-v) mismatch"));
        let (s, tt) = (
            f.add(amb.theta.lambda(), amb.theta.mu()),
            amb.theta.lambda(),
        );
        t.check(set_is_shift_closed(f, &quot_v, s), || {
            format!("{label}: (C:v) not constacyclic for lambda+mu")
        });
        t.check(set_is_shift_closed(f, &quot_w, tt), || {
            format!("{label}: (C:1-v) not constacyclic for lambda")
        });
        t.check(quot_v.len() * quot_w.len() == elems.len(), || {
            format!("{label}: |C| != |C_v| |C_(1-v)|")
        });

        for w in &universe {
            let got = c.contains(&amb.from_additive(w))?;
            t.check(got == elems.contains(w), || {
                format!("{label}: contains({}) = {got}", show(w))
            });
        }
    }
    t.detail("codes", codes.len());
    Ok(t.finish(Instance::of(amb), "decomposition and size formula"))
}

/// Every ideal generated by two elements is generated by one, and
/// standardizing a generator pair gives a single generator of the same
/// ideal.
pub fn audit_principality(amb: &Ambient) -> Result<AuditReport> {
    let mut t = Tally::new();
    let ideals = principal_ideals(amb)?;
    let reps: Vec<&Vec<u64>> = ideals.values().collect();

    let mut pairs: Vec<(Vec<u64>, Vec<u64>)> = Vec::new();
    for (i, a) in reps.iter().enumerate() {
        for b in &reps[i..] {
            pairs.push(((*a).clone(), (*b).clone()));
        }
    }
    let universe = amb.universe()?;
    let exhaustive = (universe.len() as u128).pow(2) <= 100_000;
    if exhaustive {
        for a in &universe {
            for b in &universe {
                pairs.push((a.clone(), b.clone()));
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for _ in 0..2000 {
            let a = universe[rng.gen_range(0..universe.len())].clone();
            let b = universe[rng.gen_range(0..universe.len())].clone();
            pairs.push((a, b));
        }
    }

    for (a, b) in &pairs {
        let both = close_additive(amb, &[a.clone(), b.clone()])?;
        t.check(ideals.contains_key(both.span()), || {
            format!("<{}, {}> is not principal", show(a), show(b))
        });
        let std = RConstaCode::standardize(
            amb.n,
            amb.theta,
            &[additive_rpoly(amb, a), additive_rpoly(amb, b)],
        )?;
        let single = close_additive(amb, &[rpoly_additive(amb, &std.single_generator())])?;
        t.check(single.span() == both.span(), || {
            format!(
                "<{}, {}> differs from <{}>",
                show(a),
                show(b),
                std.single_generator()
            )
        });
    }
    t.detail("ideals", ideals.len());
    t.detail("pairs", pairs.len());
    t.detail("exhaustive_pairs", exhaustive);
    Ok(t.finish(Instance::of(amb), "every 2-generated ideal is principal"))
}

/// Divisor pairs and ideals are in bijection.
pub fn audit_standard_uniqueness(amb: &Ambient) -> Result<AuditReport> {
    let mut t = Tally::new();
    let ideals: BTreeSet<Span> = principal_ideals(amb)?.into_keys().collect();
    let f = amb.field;
    let s = f.add(amb.theta.lambda(), amb.theta.mu());
    let d1 = divisors_xn_minus_lambda(f, amb.n, s)?;
    let d2 = divisors_xn_minus_lambda(f, amb.n, amb.theta.lambda())?;
    let mut image: BTreeMap<Span, (Poly, Poly)> = BTreeMap::new();
    for g1 in &d1 {
        for g2 in &d2 {
            let c = RConstaCode::from_standard_pair(amb.n, amb.theta, g1.clone(), g2.clone())?;
            let ideal = pair_ideal(amb, &c)?;
            let key = ideal.span().clone();
            t.check(ideals.contains(&key), || {
                format!("pair ({g1}, {g2}) closes to a non-principal set")
            });
            if let Some((h1, h2)) = image.insert(key, (g1.clone(), g2.clone())) {
                t.check(false, || {
                    format!("pairs ({h1}, {h2}) and ({g1}, {g2}) give one ideal")
                });
            } else {
                t.check(true, String::new);
            }
        }
    }
    t.check(image.len() == ideals.len(), || {
        format!(
            "{} pairs reach {} of {} ideals",
            d1.len() * d2.len(),
            image.len(),
            ideals.len()
        )
    });

    let full = RConstaCode::full(amb.n, amb.theta)?;
    let zero = RConstaCode::zero(amb.n, amb.theta)?;
    t.check(pair_ideal(amb, &full)?.size_log_p() == 2 * amb.n, || {
        "pair (1, 1) is not the full space".into()
    });
    t.check(pair_ideal(amb, &zero)?.size_log_p() == 0, || {
        "pair (x^n - sigma, x^n - tau) is not zero".into()
    });
    t.detail("divisors_sigma", d1.len());
    t.detail("divisors_tau", d2.len());
    t.detail("ideals", ideals.len());
    Ok(t.finish(Instance::of(amb), "standard pair <-> ideal bijection"))
}

/// `C^perp` of a closure, by scanning all of `R^n`.
fn brute_dual(amb: &Ambient, ideal: &IdealClosure) -> Result<BTreeSet<Vec<u64>>> {
    let basis = ideal.span().rows();
    Ok(amb
        .universe()?
        .into_iter()
        .filter(|u| basis.iter().all(|b| amb.inner(u, b) == (0, 0)))
        .collect())
}

/// `|C| |C^perp| = p^{2n}` with `C^perp` by orthogonality scan, and the
/// scan equals the formula dual as a set and is `theta^{-1}`-constacyclic.
pub fn audit_frobenius(amb: &Ambient) -> Result<AuditReport> {
    let f = amb.field;
    let mut t = Tally::new();
    let theta = (amb.theta.lambda(), amb.theta.mu());
    let (li, mi) = brute_inverse(f, theta).expect("theta is a unit");
    let inv_amb = Ambient::new(f, amb.n, Theta::new(f, li, mi)?);
    let total = amb.universe_size();
    let codes = RConstaCode::all(amb.n, amb.theta)?;
    for c in &codes {
        let label = pair_label(c);
        let ideal = pair_ideal(amb, c)?;
        let perp = brute_dual(amb, &ideal)?;
        t.check(ideal.size() * perp.len() as u128 == total, || {
            format!("{label}: |C|={} |C^perp|={}", ideal.size(), perp.len())
        });
        let d = c.dual();
        t.check(codeword_set(amb, &d)? == perp, || {
            format!("{label}: formula dual differs from orthogonality scan")
        });
        let shifted_ok = perp.iter().all(|w| perp.contains(&inv_amb.shift(w)));
        t.check(shifted_ok, || {
            format!("{label}: C^perp not closed under the theta^-1 shift")
        });
    }
    t.detail("codes", codes.len());
    Ok(t.finish(Instance::of(amb), "Frobenius identity and dual formula"))
}

/// Duality at the component level: exhaustive orthogonality and the
/// dimension count for each component dual, and involution of the dual.
pub fn audit_dual(amb: &Ambient) -> Result<AuditReport> {
    let f = amb.field;
    let mut t = Tally::new();
    let dot = |a: &[u64], b: &[u64]| a.iter().zip(b).fold(0, |s, (&x, &y)| f.add(s, f.mul(x, y)));
    let codes = RConstaCode::all(amb.n, amb.theta)?;
    for c in &codes {
        let label = pair_label(c);
        let d = c.dual();
        t.check(d.dual() == *c, || {
            format!("{label}: dual is not an involution")
        });
        for (comp, dcomp) in [
            (c.component_one_minus_v(), d.component_one_minus_v()),
            (c.component_v(), d.component_v()),
        ] {
            let rows = comp.generator_matrix();
            let orth = dcomp
                .codewords(DEFAULT_CAP)?
                .all(|w| rows.iter().all(|r| dot(&w, r) == 0));
            t.check(orth, || format!("{label}: component dual not orthogonal"));
            t.check(comp.dimension() + dcomp.dimension() == amb.n, || {
                format!("{label}: component dimensions do not add to n")
            });
        }
    }
    t.detail("codes", codes.len());
    Ok(t.finish(Instance::of(amb), "component duals and involution"))
}

/// `phi(theta-shift(c)) = cyclic-shift(phi(c))` on random vectors.
pub fn audit_gray_shift(amb: &Ambient, samples: usize, seed: u64) -> Result<AuditReport> {
    let f = amb.field;
    let p = f.p();
    let mut t = Tally::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let w: Vec<u64> = (0..2 * amb.n).map(|_| rng.gen_range(0..p)).collect();
        let lhs = gray_vec(amb.theta, &amb.from_additive(&amb.shift(&w)))?;
        let rhs = cyclic_shift(&gray_vec(amb.theta, &amb.from_additive(&w))?);
        t.check(lhs == rhs, || show(&w));
    }
    Ok(t.finish(Instance::of(amb), "Gray map intertwines the shifts"))
}

/// Bijectivity of `phi` over all of `R^n`; for `mu = 0` the map must be
/// refused.
pub fn audit_gray_bijective(amb: &Ambient) -> Result<AuditReport> {
    let mut t = Tally::new();
    let universe = amb.universe()?;
    if amb.theta.mu() == 0 {
        let refused = matches!(
            gray_vec(amb.theta, &amb.from_additive(&universe[0])),
            Err(Error::NonBijectiveGray(_))
        );
        t.check(refused, || "mu = 0 was not refused".into());
        return Ok(t.finish(Instance::of(amb), "Gray map refused for mu = 0"));
    }
    let mut seen = HashSet::new();
    for w in &universe {
        let img = gray_vec(amb.theta, &amb.from_additive(w))?;
        t.check(seen.insert(img), || format!("collision at {}", show(w)));
    }
    t.detail("images", seen.len());
    Ok(t.finish(Instance::of(amb), "Gray map is a bijection"))
}

/// `phi(a x + y) = a phi(x) + phi(y)` over all `x, y` and scalars `a`.
pub fn audit_gray_linear(amb: &Ambient) -> Result<AuditReport> {
    let f = amb.field;
    let mut t = Tally::new();
    let universe = amb.universe()?;
    let images: Vec<Vec<u64>> = universe
        .iter()
        .map(|w| gray_vec(amb.theta, &amb.from_additive(w)))
        .collect::<Result<_>>()?;
    for (x, px) in universe.iter().zip(&images) {
        for (y, py) in universe.iter().zip(&images) {
            for a in 0..f.p() {
                let comb: Vec<u64> = x
                    .iter()
                    .zip(y)
                    .map(|(&s, &u)| f.add(f.mul(a, s), u))
                    .collect();
                let lhs = gray_vec(amb.theta, &amb.from_additive(&comb))?;
                let rhs: Vec<u64> = px
                    .iter()
                    .zip(py)
                    .map(|(&s, &u)| f.add(f.mul(a, s), u))
                    .collect();
                t.check(lhs == rhs, || format!("a={a} x={} y={}", show(x), show(y)));
            }
        }
    }
    Ok(t.finish(Instance::of(amb), "Gray map is F_p-linear"))
}

fn fp_universe(f: PrimeField, len: usize) -> Vec<Vec<u64>> {
    let p = f.p();
    let total = p.pow(len as u32);
    (0..total)
        .map(|mut idx| {
            (0..len)
                .map(|_| {
                    let d = idx % p;
                    idx /= p;
                    d
                })
                .collect()
        })
        .collect()
}

/// For `theta = +-(1-2v)`: `phi(C)` equals the cyclic code `[g1 g2]` and
/// `phi(C^perp) = phi(C)^perp`, as explicit sets. For other units with
/// `mu != 0`: every image is a multiple of `g1 g2`.
pub fn audit_gray_images(amb: &Ambient) -> Result<AuditReport> {
    let f = amb.field;
    let n = amb.n;
    let mut t = Tally::new();
    let special = amb.theta.is_gray_cyclic();
    let codes = RConstaCode::all(n, amb.theta)?;
    let big = if special {
        Some(fp_universe(f, 2 * n))
    } else {
        None
    };
    for c in &codes {
        let label = pair_label(c);
        let ideal = pair_ideal(amb, c)?;
        let image: BTreeSet<Vec<u64>> = ideal
            .additive_elements()
            .iter()
            .map(|w| gray_vec(amb.theta, &amb.from_additive(w)))
            .collect::<Result<_>>()?;
        let product = c.g_one_minus_v() * c.g_v();
        if let Some(big) = &big {
            let cyclic = FpConstaCode::from_generator(f, 2 * n, 1, product.clone())?;
            let expected: BTreeSet<Vec<u64>> = cyclic.codewords(DEFAULT_CAP)?.collect();
            t.check(image == expected, || format!("{label}: phi(C) != [g1 g2]"));
            t.check(
                image.iter().all(|w| image.contains(&cyclic_shift(w))),
                || format!("{label}: phi(C) not cyclic"),
            );
            let perp = brute_dual(amb, &ideal)?;
            let perp_image: BTreeSet<Vec<u64>> = perp
                .iter()
                .map(|w| gray_vec(amb.theta, &amb.from_additive(w)))
                .collect::<Result<_>>()?;
            let basis: Vec<Vec<u64>> = ideal
                .span()
                .rows()
                .iter()
                .map(|w| gray_vec(amb.theta, &amb.from_additive(w)))
                .collect::<Result<_>>()?;
            let image_perp: BTreeSet<Vec<u64>> = big
                .iter()
                .filter(|y| {
                    basis
                        .iter()
                        .all(|b| y.iter().zip(b).fold(0, |s, (&x, &z)| f.add(s, f.mul(x, z))) == 0)
                })
                .cloned()
                .collect();
            t.check(perp_image == image_perp, || {
                format!("{label}: phi(C^perp) != phi(C)^perp")
            });
            let reported = gray_image_code(c)?;
            t.check(
                reported.mode == ImageMode::Equality && reported.code == cyclic,
                || format!("{label}: gray_image_code disagrees"),
            );
        } else {
            for w in &image {
                t.check(product.divides(&Poly::new(f, w.clone())), || {
                    format!("{label}: phi image {} not a multiple of g1 g2", show(w))
                });
            }
            let reported = gray_image_code(c)?;
            t.check(
                reported.mode == ImageMode::Containment { verified: true },
                || format!("{label}: gray_image_code did not verify containment"),
            );
        }
    }
    t.detail("codes", codes.len());
    t.detail("mode", if special { "equality" } else { "containment" });
    let claim = if special {
        "phi(C) = [g1 g2] and phi(C^perp) = phi(C)^perp"
    } else {
        "phi(C) is contained in <g1 g2>"
    };
    Ok(t.finish(Instance::of(amb), claim))
}

/// Every `R`-submodule of `R^n` (closure of generator pairs, iterated to a
/// fixpoint): constacyclic iff its Gray image is cyclic. Reports how many
/// are not constacyclic.
pub fn audit_cyclicity(amb: &Ambient) -> Result<AuditReport> {
    let mut t = Tally::new();
    let universe = amb.universe()?;
    let mut modules: BTreeSet<Span> = BTreeSet::new();
    for w in &universe {
        modules.insert(close_module(amb, std::slice::from_ref(w))?);
    }
    loop {
        let list: Vec<Span> = modules.iter().cloned().collect();
        let mut grew = false;
        for (i, a) in list.iter().enumerate() {
            for b in &list[i + 1..] {
                let mut gens = a.rows().to_vec();
                gens.extend_from_slice(b.rows());
                if modules.insert(close_module(amb, &gens)?) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }

    let mut non_constacyclic = 0u64;
    for m in &modules {
        let elems: BTreeSet<Vec<u64>> = m.elements().collect();
        let constacyclic = elems.iter().all(|w| elems.contains(&amb.shift(w)));
        let image: BTreeSet<Vec<u64>> = elems
            .iter()
            .map(|w| gray_vec(amb.theta, &amb.from_additive(w)))
            .collect::<Result<_>>()?;
        let cyclic = image.iter().all(|w| image.contains(&cyclic_shift(w)));
        if !constacyclic {
            non_constacyclic += 1;
        }
        t.check(constacyclic == cyclic, || {
            format!(
                "module spanned by {:?}: constacyclic={constacyclic}, cyclic image={cyclic}",
                m.rows()
            )
        });
    }

    // R*(1, 0, ..., 0) is linear but not constacyclic for n >= 2
    if amb.n >= 2 {
        let mut e = vec![0; 2 * amb.n];
        e[0] = 1;
        let m = close_module(amb, &[e])?;
        let elems: BTreeSet<Vec<u64>> = m.elements().collect();
        let image: BTreeSet<Vec<u64>> = elems
            .iter()
            .map(|w| gray_vec(amb.theta, &amb.from_additive(w)))
            .collect::<Result<_>>()?;
        let constacyclic = elems.iter().all(|w| elems.contains(&amb.shift(w)));
        let cyclic = image.iter().all(|w| image.contains(&cyclic_shift(w)));
        t.check(!constacyclic && !cyclic, || {
            "R(1,0,...,0) should be neither constacyclic nor have a cyclic image".into()
        });
        t.detail(
            "witness",
            json!({"module": "R(1,0,...,0)", "constacyclic": constacyclic, "cyclic_image": cyclic}),
        );
    }
    t.detail("submodules", modules.len());
    t.detail("non_constacyclic", non_constacyclic);
    Ok(t.finish(
        Instance::of(amb),
        "linear code is constacyclic iff its Gray image is cyclic",
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Units,
    Decompose,
    Principal,
    Unique,
    Frobenius,
    Gray,
    Dual,
    Example,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 9] = [
        "units",
        "decompose",
        "principal",
        "unique",
        "frobenius",
        "gray",
        "dual",
        "example",
        "all",
    ];
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "units" => Suite::Units,
            "decompose" => Suite::Decompose,
            "principal" => Suite::Principal,
            "unique" => Suite::Unique,
            "frobenius" => Suite::Frobenius,
            "gray" => Suite::Gray,
            "dual" => Suite::Dual,
            "example" => Suite::Example,
            "all" => Suite::All,
            other => return Err(Error::Parse(format!("unknown suite '{other}'"))),
        })
    }
}

/// Gray-map audits for one ambient, choosing what applies to `theta`.
fn gray_battery(amb: &Ambient, out: &mut Vec<AuditReport>) -> Result<()> {
    let small = amb.universe_size() <= 729;
    if amb.theta.mu() == 0 {
        out.push(audit_gray_bijective(amb)?);
        return Ok(());
    }
    out.push(audit_gray_bijective(amb)?);
    if amb.universe_size().pow(2) * amb.field.p() as u128 <= 2_000_000 {
        out.push(audit_gray_linear(amb)?);
    }
    out.push(audit_gray_images(amb)?);
    if amb.theta.is_gray_cyclic() {
        out.push(audit_gray_shift(amb, 1000, SEED)?);
        if small {
            out.push(audit_cyclicity(amb)?);
        }
    }
    Ok(())
}

/// Everything one `verify` run produced.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub reports: Vec<AuditReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub example: Option<super::ExampleReport>,
}

/// Runs one suite over `(p, n)` and either the given `theta` or every unit.
/// `n` and `theta` are ignored by `units` and `example`.
pub fn run_suite(
    suite: Suite,
    field: PrimeField,
    n: usize,
    theta: Option<Theta>,
) -> Result<SuiteReport> {
    let mut reports = Vec::new();
    if matches!(suite, Suite::Units | Suite::All) {
        reports.push(audit_units(field));
    }
    if !matches!(suite, Suite::Units | Suite::Example) {
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        let thetas = match theta {
            Some(t) => vec![t],
            None => Theta::all(field),
        };
        for th in &thetas {
            let amb = Ambient::new(field, n, *th);
            amb.check_cap()?;
            if matches!(suite, Suite::Decompose | Suite::All) {
                reports.push(audit_decomposition(&amb)?);
            }
            if matches!(suite, Suite::Principal | Suite::All) {
                reports.push(audit_principality(&amb)?);
            }
            if matches!(suite, Suite::Unique | Suite::All) {
                reports.push(audit_standard_uniqueness(&amb)?);
            }
            if matches!(suite, Suite::Frobenius | Suite::Dual | Suite::All) {
                reports.push(audit_frobenius(&amb)?);
            }
            if matches!(suite, Suite::Dual | Suite::All) {
                reports.push(audit_dual(&amb)?);
            }
            if matches!(suite, Suite::Gray | Suite::All) {
                gray_battery(&amb, &mut reports)?;
            }
        }
    }
    let example = if matches!(suite, Suite::Example | Suite::All) {
        let ex = super::reproduce_example()?;
        reports.extend(ex.checks.iter().cloned());
        Some(ex)
    } else {
        None
    };
    Ok(SuiteReport {
        suite: Suite::NAMES[suite as usize].to_string(),
        passed: reports.iter().all(AuditReport::passed),
        reports,
        example,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn amb(p: u64, n: usize, lambda: i64, mu: i64) -> Ambient {
        let f = PrimeField::new(p).unwrap();
        Ambient::new(f, n, Theta::from_i64(f, lambda, mu).unwrap())
    }

    #[test]
    fn units_for_small_primes() {
        for p in [2, 3, 5, 7] {
            let r = audit_units(PrimeField::new(p).unwrap());
            assert!(r.passed(), "{r}");
            assert_eq!(r.details["units"], json!((p - 1) * (p - 1)));
        }
    }

    #[test]
    fn ideal_counts_match_divisor_counts() {
        // x^2 - 2 is irreducible over F_3, x^2 - 1 = (x - 1)(x + 1)
        let r = audit_principality(&amb(3, 2, 1, 1)).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.details["ideals"], json!(8));
        assert_eq!(r.details["exhaustive_pairs"], json!(true));
        for th in Theta::all(PrimeField::new(3).unwrap()) {
            let a = Ambient::new(th.field(), 1, th);
            let r = audit_principality(&a).unwrap();
            assert_eq!(r.details["ideals"], json!(4));
        }
    }

    #[test]
    fn structure_audits_on_3_2() {
        let a = amb(3, 2, 1, 0);
        for r in [
            audit_decomposition(&a).unwrap(),
            audit_standard_uniqueness(&a).unwrap(),
            audit_frobenius(&a).unwrap(),
            audit_dual(&a).unwrap(),
        ] {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn repeated_factors_on_3_3() {
        let r = audit_standard_uniqueness(&amb(3, 3, 1, 0)).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.details["ideals"], json!(16));
    }

    #[test]
    fn gray_battery_on_3_2() {
        for (l, m) in [(1, -2), (-1, 2)] {
            let a = amb(3, 2, l, m);
            let mut out = Vec::new();
            gray_battery(&a, &mut out).unwrap();
            assert_eq!(out.len(), 5);
            assert!(out.iter().all(AuditReport::passed));
        }
        let r = audit_gray_images(&amb(5, 2, 1, 1)).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.details["mode"], json!("containment"));
        let r = audit_gray_bijective(&amb(3, 2, 1, 0)).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn cyclicity_counts_non_constacyclic_modules() {
        let r = audit_cyclicity(&amb(3, 2, -1, 2)).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.details["submodules"], json!(36));
        assert!(r.details["non_constacyclic"].as_u64().unwrap() > 0);
    }

    #[test]
    fn reduce_additive_folds_high_terms() {
        let a = amb(3, 2, -1, 2);
        // v(x^2 - 1): x^2 = theta, v*theta = v*(lambda + mu) = v, minus v
        let g = Poly::from_i64(a.field, &[-1, 0, 1]);
        assert_eq!(v_multiple(&a, &g), vec![0; 4]);
    }

    #[test]
    fn units_suite_ignores_n() {
        let r = run_suite(Suite::Units, PrimeField::new(5).unwrap(), 0, None).unwrap();
        assert!(r.passed);
        assert_eq!(r.reports.len(), 1);
        assert_eq!(r.reports[0].details["units"], json!(16));
        let err = run_suite(Suite::Gray, PrimeField::new(3).unwrap(), 7, None);
        assert!(matches!(err, Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn suite_names_parse() {
        for name in Suite::NAMES {
            assert!(name.parse::<Suite>().is_ok());
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn report_serializes_with_optional_fields() {
        let r = audit_units(PrimeField::new(3).unwrap());
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["status"], json!("pass"));
        assert!(v.get("counterexample").is_none());
        assert_eq!(v["instance"], json!({"p": 3}));
    }
}
