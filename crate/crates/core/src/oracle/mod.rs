//! Brute-force referee for the structural claims.
//!
//! Everything here works from definitions only: vectors over `R` are kept
//! in additive coordinates `(a_0..a_{n-1} | b_0..b_{n-1})` for
//! `c_i = a_i + v*b_i`, products use `(a + vb)(c + vd) = ac + v(ad + bc + bd)`,
//! and an ideal is the least set containing the generators that is closed
//! under addition, multiplication by every element of `R`, and the
//! `theta`-constacyclic shift. No CRT projection, standard form, or dual
//! formula is consulted to build ground truth.

mod audit;
mod example;

use std::collections::BTreeSet;

pub use audit::{
    audit_cyclicity, audit_decomposition, audit_dual, audit_frobenius, audit_gray_bijective,
    audit_gray_images, audit_gray_linear, audit_gray_shift, audit_principality,
    audit_standard_uniqueness, audit_units, run_suite, AuditReport, Instance, Status, Suite,
    SuiteReport,
};
pub use example::{min_weight_by_products, reproduce_example, ExampleReport};

use crate::error::{Error, Result};
use crate::fpcode::Codewords;
use crate::fppoly::PrimeField;
use crate::ring::{RElem, Theta};

/// Largest ambient space `|R^n| = p^{2n}` the explicit closure will enumerate.
pub const CLOSURE_CAP: u128 = 531_441; // 3^12

/// The setting `R_n = R[x]/<x^n - theta>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ambient {
    pub field: PrimeField,
    pub n: usize,
    pub theta: Theta,
}

impl Ambient {
    pub fn new(field: PrimeField, n: usize, theta: Theta) -> Self {
        Self { field, n, theta }
    }

    /// `p^{2n}`, saturating.
    pub fn universe_size(&self) -> u128 {
        (self.field.p() as u128)
            .checked_pow(2 * self.n as u32)
            .unwrap_or(u128::MAX)
    }

    fn check_cap(&self) -> Result<()> {
        let size = self.universe_size();
        if size > CLOSURE_CAP {
            return Err(Error::CapExceeded {
                size: format!("{}^{}", self.field.p(), 2 * self.n),
                cap: CLOSURE_CAP,
            });
        }
        Ok(())
    }

    /// All of `R^n` in additive coordinates.
    pub fn universe(&self) -> Result<Vec<Vec<u64>>> {
        self.check_cap()?;
        let rows: Vec<Vec<u64>> = (0..2 * self.n)
            .map(|i| {
                let mut e = vec![0; 2 * self.n];
                e[i] = 1;
                e
            })
            .collect();
        Ok(Codewords::new(self.field, rows, 2 * self.n).collect())
    }

    pub fn to_additive(&self, w: &[RElem]) -> Vec<u64> {
        let mut out = vec![0; 2 * self.n];
        for (i, c) in w.iter().enumerate() {
            out[i] = c.a();
            out[self.n + i] = c.b();
        }
        out
    }

    pub fn from_additive(&self, w: &[u64]) -> Vec<RElem> {
        (0..self.n)
            .map(|i| RElem::from_additive(self.field, w[i], w[self.n + i]))
            .collect()
    }

    /// Coordinatewise `(a + vb) * w`.
    pub fn scale(&self, (a, b): (u64, u64), w: &[u64]) -> Vec<u64> {
        let n = self.n;
        let mut out = vec![0; 2 * n];
        for i in 0..n {
            let (x, y) = additive_mul(self.field, (a, b), (w[i], w[n + i]));
            out[i] = x;
            out[n + i] = y;
        }
        out
    }

    /// `(c_0..c_{n-1}) -> (theta c_{n-1}, c_0..c_{n-2})`.
    pub fn shift(&self, w: &[u64]) -> Vec<u64> {
        let n = self.n;
        let theta = (self.theta.lambda(), self.theta.mu());
        let mut out = vec![0; 2 * n];
        let (x, y) = additive_mul(self.field, theta, (w[n - 1], w[2 * n - 1]));
        out[0] = x;
        out[n] = y;
        for i in 1..n {
            out[i] = w[i - 1];
            out[n + i] = w[n + i - 1];
        }
        out
    }

    /// Euclidean inner product over `R`, as an additive pair.
    pub fn inner(&self, u: &[u64], w: &[u64]) -> (u64, u64) {
        let n = self.n;
        let f = self.field;
        (0..n).fold((0, 0), |(s, t), i| {
            let (x, y) = additive_mul(f, (u[i], u[n + i]), (w[i], w[n + i]));
            (f.add(s, x), f.add(t, y))
        })
    }
}

/// `(a + vb)(c + vd) = ac + v(ad + bc + bd)`.
pub fn additive_mul(f: PrimeField, (a, b): (u64, u64), (c, d): (u64, u64)) -> (u64, u64) {
    (
        f.mul(a, c),
        f.add(f.add(f.mul(a, d), f.mul(b, c)), f.mul(b, d)),
    )
}

/// Subspace of `F_p^m` held as a fully reduced row echelon basis, which is
/// a canonical key for the subspace.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Span {
    p: u64,
    dim: usize,
    rows: Vec<Vec<u64>>,
}

impl Span {
    pub fn new(field: PrimeField, dim: usize) -> Self {
        Self {
            p: field.p(),
            dim,
            rows: Vec::new(),
        }
    }

    fn field(&self) -> PrimeField {
        PrimeField::new(self.p).expect("stored modulus is prime")
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    fn pivot(row: &[u64]) -> usize {
        row.iter().position(|&c| c != 0).expect("rows are nonzero")
    }

    fn reduce(&self, w: &[u64]) -> Vec<u64> {
        let f = self.field();
        let mut w = w.to_vec();
        for row in &self.rows {
            let piv = Self::pivot(row);
            let c = w[piv];
            if c != 0 {
                for (x, &r) in w.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        w
    }

    pub fn contains(&self, w: &[u64]) -> bool {
        self.reduce(w).iter().all(|&c| c == 0)
    }

    /// Adds `w`; returns whether the rank grew.
    pub fn insert(&mut self, w: &[u64]) -> bool {
        assert_eq!(w.len(), self.dim);
        let f = self.field();
        let mut w = self.reduce(w);
        let Some(piv) = w.iter().position(|&c| c != 0) else {
            return false;
        };
        let inv = f.inv(w[piv]).expect("nonzero pivot");
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[piv];
            if c != 0 {
                for (x, &r) in row.iter_mut().zip(&w) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        self.rows.push(w);
        self.rows.sort_by_key(|r| Self::pivot(r));
        true
    }

    /// Every vector of the subspace.
    pub fn elements(&self) -> impl Iterator<Item = Vec<u64>> {
        Codewords::new(self.field(), self.rows.clone(), self.dim)
    }
}

/// Least fixed point of `gens` under `F_p`-linear combination, the maps
/// `w -> (a + vb) w` for all of `R` (spanned by `1` and `v`), and, when
/// `with_shift`, the `theta`-constacyclic shift.
fn closure_span(amb: &Ambient, gens: &[Vec<u64>], with_shift: bool) -> Span {
    let mut span = Span::new(amb.field, 2 * amb.n);
    let mut queue: Vec<Vec<u64>> = gens.to_vec();
    while let Some(w) = queue.pop() {
        if span.insert(&w) {
            queue.push(amb.scale((0, 1), &w));
            if with_shift {
                queue.push(amb.shift(&w));
            }
        }
    }
    span
}

/// Ideal closure with no size cap; only the basis is available.
pub fn ideal_span(amb: &Ambient, gens: &[Vec<RElem>]) -> Span {
    let gens: Vec<Vec<u64>> = gens.iter().map(|g| amb.to_additive(g)).collect();
    closure_span(amb, &gens, true)
}

/// An ideal of `R_n` computed by closure, small enough to enumerate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealClosure {
    pub ambient: Ambient,
    span: Span,
}

impl IdealClosure {
    pub fn span(&self) -> &Span {
        &self.span
    }

    /// `log_p` of the number of elements.
    pub fn size_log_p(&self) -> usize {
        self.span.rank()
    }

    pub fn size(&self) -> u128 {
        (self.ambient.field.p() as u128).pow(self.span.rank() as u32)
    }

    pub fn contains(&self, w: &[RElem]) -> bool {
        self.span.contains(&self.ambient.to_additive(w))
    }

    /// The explicit element set, in additive coordinates.
    pub fn additive_elements(&self) -> BTreeSet<Vec<u64>> {
        self.span.elements().collect()
    }

    pub fn elements(&self) -> BTreeSet<Vec<RElem>> {
        self.span
            .elements()
            .map(|w| self.ambient.from_additive(&w))
            .collect()
    }
}

/// Smallest ideal of `R_n` containing `gens`. Refuses ambients larger than
/// [`CLOSURE_CAP`].
pub fn close_ideal(amb: &Ambient, gens: &[Vec<RElem>]) -> Result<IdealClosure> {
    amb.check_cap()?;
    for g in gens {
        if g.len() != amb.n {
            return Err(Error::LengthMismatch {
                expected: amb.n,
                found: g.len(),
            });
        }
    }
    Ok(IdealClosure {
        ambient: *amb,
        span: ideal_span(amb, gens),
    })
}

/// Smallest `R`-submodule of `R^n` containing `gens` (no shift closure).
pub fn close_module(amb: &Ambient, gens: &[Vec<u64>]) -> Result<Span> {
    amb.check_cap()?;
    Ok(closure_span(amb, gens, false))
}
