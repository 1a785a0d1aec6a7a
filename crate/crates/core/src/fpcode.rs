//! `lambda`-constacyclic codes over `F_p`, i.e. ideals `[g]` of
//! `F_p[x]/<x^n - lambda>` with `g` a monic divisor of `x^n - lambda`.

use std::collections::HashSet;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fppoly::{Poly, PrimeField};

/// Default bound on the number of codewords an exhaustive scan may visit.
pub const DEFAULT_CAP: u128 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpConstaCode {
    field: PrimeField,
    n: usize,
    lambda: u64,
    g: Poly,
    h: Poly,
}

/// Result of a minimum-weight search that may have been cut short.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "weight", rename_all = "snake_case")]
pub enum MinWeight {
    Exact(usize),
    UpperBound(usize),
}

impl MinWeight {
    pub fn value(self) -> usize {
        match self {
            MinWeight::Exact(w) | MinWeight::UpperBound(w) => w,
        }
    }
}

impl FpConstaCode {
    pub fn from_generator(field: PrimeField, n: usize, lambda: u64, g: Poly) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        let lambda = field.reduce_u64(lambda);
        if lambda == 0 {
            return Err(Error::ZeroLambda);
        }
        if g.field() != field {
            return Err(Error::FieldMismatch {
                left: field.p(),
                right: g.field().p(),
            });
        }
        if !g.is_monic() {
            return Err(Error::NotMonic(g.to_string()));
        }
        let modulus = Poly::x_pow_minus(field, n, lambda);
        let h = modulus.exact_div(&g).ok_or_else(|| Error::NotADivisor {
            generator: g.to_string(),
            modulus: modulus.to_string(),
        })?;
        Ok(Self {
            field,
            n,
            lambda,
            g,
            h,
        })
    }

    /// `F_p^n`, generator 1.
    pub fn full(field: PrimeField, n: usize, lambda: u64) -> Result<Self> {
        Self::from_generator(field, n, lambda, Poly::one(field))
    }

    /// `{0}`, generator `x^n - lambda`.
    pub fn zero(field: PrimeField, n: usize, lambda: u64) -> Result<Self> {
        Self::from_generator(field, n, lambda, Poly::x_pow_minus(field, n, lambda))
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    pub fn generator(&self) -> &Poly {
        &self.g
    }

    /// Check polynomial `h = (x^n - lambda) / g`.
    pub fn check_poly(&self) -> &Poly {
        &self.h
    }

    /// `k = n - deg g`.
    pub fn dimension(&self) -> usize {
        self.n - self.g.degree().expect("generator is nonzero")
    }

    pub fn is_zero_code(&self) -> bool {
        self.dimension() == 0
    }

    /// `p^k`, or `None` if it does not fit in 128 bits.
    pub fn size(&self) -> Option<u128> {
        (self.field.p() as u128).checked_pow(self.dimension() as u32)
    }

    /// Rows `x^i * g` for `0 <= i < k`.
    pub fn generator_matrix(&self) -> Vec<Vec<u64>> {
        (0..self.dimension())
            .map(|i| {
                let mut row = vec![0u64; i];
                row.extend_from_slice(self.g.coeffs());
                row.resize(self.n, 0);
                row
            })
            .collect()
    }

    /// Codeword `m(x) g(x)` for a message of length `k`.
    pub fn encode(&self, msg: &[u64]) -> Result<Vec<u64>> {
        if msg.len() != self.dimension() {
            return Err(Error::LengthMismatch {
                expected: self.dimension(),
                found: msg.len(),
            });
        }
        let m = Poly::new(self.field, msg.to_vec());
        Ok((&m * &self.g).to_vec(self.n))
    }

    pub fn contains(&self, w: &[u64]) -> Result<bool> {
        if w.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: w.len(),
            });
        }
        let wp = Poly::new(self.field, w.to_vec());
        Ok(wp.rem(&self.g)?.is_zero())
    }

    /// Euclidean dual: the `lambda^{-1}`-constacyclic code generated by `h*`.
    pub fn dual(&self) -> FpConstaCode {
        let lambda_inv = self.field.inv(self.lambda).expect("lambda is nonzero");
        let g = self
            .h
            .reciprocal_star()
            .expect("h divides x^n - lambda, so h(0) != 0");
        Self::from_generator(self.field, self.n, lambda_inv, g)
            .expect("h* divides x^n - lambda^{-1}")
    }

    fn check_cap(&self, cap: u128) -> Result<()> {
        match self.size() {
            Some(s) if s <= cap => Ok(()),
            s => Err(Error::CapExceeded {
                size: s.map_or_else(
                    || format!("{}^{}", self.field.p(), self.dimension()),
                    |s| s.to_string(),
                ),
                cap,
            }),
        }
    }

    /// Every codeword, in message odometer order.
    pub fn codewords(&self, cap: u128) -> Result<Codewords> {
        self.check_cap(cap)?;
        Ok(Codewords::new(self.field, self.generator_matrix(), self.n))
    }

    /// Exact minimum nonzero Hamming weight by exhaustive scan.
    pub fn min_weight(&self, cap: u128) -> Result<usize> {
        if self.is_zero_code() {
            return Err(Error::ZeroCode);
        }
        self.check_cap(cap)?;
        Ok(partitioned_min_weight(
            self.field,
            &self.generator_matrix(),
            self.n,
        ))
    }

    /// Scans at most `budget` messages; exact when the whole code fits.
    pub fn bounded_min_weight(&self, budget: u128) -> Result<MinWeight> {
        if self.is_zero_code() {
            return Err(Error::ZeroCode);
        }
        if self.check_cap(budget).is_ok() {
            return self.min_weight(budget).map(MinWeight::Exact);
        }
        let mut best = weight(&self.generator_matrix()[0]);
        let mut it = Codewords::new(self.field, self.generator_matrix(), self.n);
        let mut seen: u128 = 0;
        while seen < budget {
            match it.next() {
                Some(c) => {
                    let w = weight(&c);
                    if w > 0 {
                        best = best.min(w);
                    }
                }
                None => break,
            }
            seen += 1;
        }
        Ok(MinWeight::UpperBound(best))
    }

    /// Exhaustive check that the `lambda`-constacyclic shift maps the code
    /// into itself.
    pub fn shift_closed(&self, cap: u128) -> Result<bool> {
        let set: HashSet<Vec<u64>> = self.codewords(cap)?.collect();
        Ok(set_is_shift_closed(self.field, &set, self.lambda))
    }

    pub fn descriptor(&self) -> FpCodeDescriptor {
        FpCodeDescriptor {
            p: self.field.p(),
            n: self.n,
            lambda: self.lambda,
            g: self.g.coeffs().to_vec(),
            h: self.h.coeffs().to_vec(),
            k: self.dimension(),
        }
    }

    /// One CSV row of residues per codeword.
    pub fn write_codewords_csv<W: Write>(&self, out: W, cap: u128) -> Result<()> {
        let mut w = csv::WriterBuilder::new()
            .has_headers(false)
            .from_writer(out);
        for c in self.codewords(cap)? {
            w.write_record(c.iter().map(|x| x.to_string()))
                .map_err(|e| Error::Parse(e.to_string()))?;
        }
        w.flush().map_err(|e| Error::Parse(e.to_string()))?;
        Ok(())
    }
}

/// JSON form `{p, n, lambda, g, h, k}`; polynomials as residue lists,
/// constant term first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FpCodeDescriptor {
    pub p: u64,
    pub n: usize,
    pub lambda: u64,
    pub g: Vec<u64>,
    pub h: Vec<u64>,
    pub k: usize,
}

impl FpCodeDescriptor {
    pub fn to_code(&self) -> Result<FpConstaCode> {
        let field = PrimeField::new(self.p)?;
        let code = FpConstaCode::from_generator(
            field,
            self.n,
            self.lambda,
            Poly::new(field, self.g.clone()),
        )?;
        if code.descriptor() != *self {
            return Err(Error::Parse("descriptor fields are inconsistent".into()));
        }
        Ok(code)
    }
}

/// `(c_0, ..., c_{n-1}) -> (lambda c_{n-1}, c_0, ..., c_{n-2})`.
pub fn constashift(field: PrimeField, w: &[u64], lambda: u64) -> Vec<u64> {
    let n = w.len();
    let mut out = Vec::with_capacity(n);
    if n == 0 {
        return out;
    }
    out.push(field.mul(lambda, w[n - 1]));
    out.extend_from_slice(&w[..n - 1]);
    out
}

/// Whether an explicit set of vectors is closed under the
/// `lambda`-constacyclic shift.
pub fn set_is_shift_closed(field: PrimeField, set: &HashSet<Vec<u64>>, lambda: u64) -> bool {
    set.iter()
        .all(|w| set.contains(&constashift(field, w, lambda)))
}

pub fn weight(w: &[u64]) -> usize {
    w.iter().filter(|&&c| c != 0).count()
}

/// Odometer enumeration of all `F_p`-combinations of the rows; each step
/// adds the rows whose digit moved, so wrapping a digit back to zero
/// (p additions) costs nothing extra.
pub struct Codewords {
    field: PrimeField,
    rows: Vec<Vec<u64>>,
    digits: Vec<u64>,
    current: Vec<u64>,
    done: bool,
}

impl Codewords {
    pub(crate) fn new(field: PrimeField, rows: Vec<Vec<u64>>, n: usize) -> Self {
        Self::starting_at(field, rows, vec![0; n])
    }

    fn starting_at(field: PrimeField, rows: Vec<Vec<u64>>, start: Vec<u64>) -> Self {
        let k = rows.len();
        Self {
            field,
            rows,
            digits: vec![0; k],
            current: start,
            done: false,
        }
    }
}

impl Iterator for Codewords {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let f = self.field;
        let mut i = 0;
        loop {
            if i == self.rows.len() {
                self.done = true;
                break;
            }
            for (c, &r) in self.current.iter_mut().zip(&self.rows[i]) {
                *c = f.add(*c, r);
            }
            self.digits[i] += 1;
            if self.digits[i] == f.p() {
                self.digits[i] = 0;
                i += 1;
            } else {
                break;
            }
        }
        Some(out)
    }
}

/// Minimum nonzero weight over the row space, splitting the message space
/// on its top digits. The result does not depend on the split.
pub(crate) fn partitioned_min_weight(field: PrimeField, rows: &[Vec<u64>], n: usize) -> usize {
    let p = field.p();
    let k = rows.len();
    let mut top = 0;
    let mut parts: u128 = 1;
    while top < k && parts < 64 {
        top += 1;
        parts *= p as u128;
    }
    let (low, high) = rows.split_at(k - top);
    let prefixes: Vec<Vec<u64>> = Codewords::new(field, high.to_vec(), n).collect();
    let scan = |start: &Vec<u64>| -> usize {
        Codewords::starting_at(field, low.to_vec(), start.clone())
            .map(|c| weight(&c))
            .filter(|&w| w > 0)
            .min()
            .unwrap_or(usize::MAX)
    };
    #[cfg(feature = "parallel")]
    let best = {
        use rayon::prelude::*;
        prefixes.par_iter().map(scan).min()
    };
    #[cfg(not(feature = "parallel"))]
    let best = prefixes.iter().map(scan).min();
    best.unwrap_or(usize::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn poly(p: u64, c: &[i64]) -> Poly {
        Poly::from_i64(f(p), c)
    }

    #[test]
    fn example_component_dimension() {
        let c = FpConstaCode::from_generator(f(3), 10, 1, poly(3, &[1, -1, 1, -1, 1])).unwrap();
        assert_eq!(c.dimension(), 6);
        assert_eq!(c.size(), Some(729));
    }

    #[test]
    fn full_and_zero() {
        let full = FpConstaCode::full(f(5), 3, 2).unwrap();
        assert_eq!(full.dimension(), 3);
        assert_eq!(full.min_weight(DEFAULT_CAP).unwrap(), 1);
        let zero = FpConstaCode::zero(f(5), 3, 2).unwrap();
        assert!(zero.is_zero_code());
        assert_eq!(zero.min_weight(DEFAULT_CAP), Err(Error::ZeroCode));
        assert_eq!(zero.codewords(DEFAULT_CAP).unwrap().count(), 1);
        assert!(full.dual().is_zero_code());
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            FpConstaCode::from_generator(f(3), 4, 1, poly(3, &[1, 0, 0, 1])),
            Err(Error::NotADivisor { .. })
        ));
        assert!(matches!(
            FpConstaCode::from_generator(f(3), 4, 1, poly(3, &[1, 2])),
            Err(Error::NotMonic(_))
        ));
        assert_eq!(
            FpConstaCode::from_generator(f(3), 4, 0, Poly::one(f(3))),
            Err(Error::ZeroLambda)
        );
    }

    #[test]
    fn dual_of_repetition_dual() {
        let c = FpConstaCode::from_generator(f(3), 10, 1, poly(3, &[-1, 1])).unwrap();
        let d = c.dual();
        assert_eq!(d.generator().degree(), Some(9));
        assert_eq!(d.dimension(), 1);
        assert_eq!(d.generator(), &Poly::new(f(3), vec![1; 10]));
    }

    #[test]
    fn membership() {
        let c = FpConstaCode::from_generator(f(3), 4, 1, poly(3, &[1, 1])).unwrap();
        let w = c.encode(&[1, 2, 0]).unwrap();
        assert!(c.contains(&w).unwrap());
        assert!(c.contains(&c.generator().to_vec(4)).unwrap());
        assert!(!c.contains(&[1, 0, 0, 0]).unwrap());
        assert!(matches!(
            c.contains(&[1, 0]),
            Err(Error::LengthMismatch {
                expected: 4,
                found: 2
            })
        ));
        assert!(c.encode(&[1]).is_err());
    }

    #[test]
    fn enumeration_hits_every_codeword_once() {
        let c = FpConstaCode::from_generator(f(3), 4, 1, poly(3, &[1, 1])).unwrap();
        let set: HashSet<Vec<u64>> = c.codewords(DEFAULT_CAP).unwrap().collect();
        assert_eq!(set.len(), 27);
        assert!(set.iter().all(|w| c.contains(w).unwrap()));
    }

    #[test]
    fn non_ideal_set_is_not_shift_closed() {
        let fp = f(3);
        let set: HashSet<Vec<u64>> = [vec![0, 0, 0], vec![1, 0, 0]].into_iter().collect();
        assert!(!set_is_shift_closed(fp, &set, 1));
    }

    #[test]
    fn cap_is_enforced() {
        let c = FpConstaCode::full(f(3), 20, 1).unwrap();
        assert!(matches!(
            c.min_weight(DEFAULT_CAP),
            Err(Error::CapExceeded { .. })
        ));
        let b = c.bounded_min_weight(1000).unwrap();
        assert_eq!(b, MinWeight::UpperBound(1));
        let small = FpConstaCode::full(f(3), 3, 1).unwrap();
        assert_eq!(small.bounded_min_weight(1000).unwrap(), MinWeight::Exact(1));
    }

    #[test]
    fn descriptor_round_trip() {
        let c = FpConstaCode::from_generator(f(3), 10, 2, poly(3, &[1, 0, 1])).unwrap();
        let json = serde_json::to_string(&c.descriptor()).unwrap();
        let back: FpCodeDescriptor = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_code().unwrap(), c);
    }

    #[test]
    fn csv_export() {
        let c = FpConstaCode::from_generator(f(3), 2, 1, poly(3, &[-1, 1])).unwrap();
        let mut buf = Vec::new();
        c.write_codewords_csv(&mut buf, DEFAULT_CAP).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "0,0\n2,1\n1,2\n");
    }
}
