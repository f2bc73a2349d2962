//! Sparse commutative polynomials over the rationals: the base ring `K[t1..tm]`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{fmt_scalar, is_negative, scalar_json, Scalar};

/// Exponent vector of a commutative monomial, one entry per generator.
pub type Exponents = Vec<u32>;

/// The base ring `K[t1..tm]` with a grading of its generators.
///
/// `m = 0` is the field itself. The ring is connected exactly when every
/// generator has degree at least one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingDescriptor {
    names: Vec<String>,
    degrees: Vec<u32>,
}

impl RingDescriptor {
    /// Generators of degree one.
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let degrees = vec![1; names.len()];
        RingDescriptor { names, degrees }
    }

    pub fn with_degrees(mut self, degrees: Vec<u32>) -> Result<Self> {
        if degrees.len() != self.names.len() {
            return Err(Error::DescriptorMismatch {
                expected: self.names.len(),
                found: degrees.len(),
            });
        }
        self.degrees = degrees;
        Ok(self)
    }

    /// The ground field, `m = 0`.
    pub fn field() -> Self {
        RingDescriptor {
            names: Vec::new(),
            degrees: Vec::new(),
        }
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_connected(&self) -> bool {
        self.degrees.iter().all(|&d| d >= 1)
    }

    pub fn all_degree_one(&self) -> bool {
        self.degrees.iter().all(|&d| d == 1)
    }

    pub fn zero(&self) -> BasePoly {
        BasePoly::zero(self.generator_count())
    }

    pub fn one(&self) -> BasePoly {
        BasePoly::one(self.generator_count())
    }

    pub fn constant(&self, c: Scalar) -> BasePoly {
        BasePoly::constant(self.generator_count(), c)
    }

    pub fn var(&self, k: usize) -> BasePoly {
        BasePoly::var(self.generator_count(), k)
    }

    /// Weighted degree of a monomial.
    pub fn monomial_degree(&self, exps: &[u32]) -> u32 {
        exps.iter().zip(&self.degrees).map(|(e, d)| e * d).sum()
    }

    pub fn homogeneity(&self, p: &BasePoly) -> Homogeneity {
        let mut degs = p.terms.keys().map(|e| self.monomial_degree(e));
        match degs.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if degs.all(|x| x == d) {
                    Homogeneity::Degree(d)
                } else {
                    Homogeneity::Mixed
                }
            }
        }
    }

    /// True for the zero polynomial or a polynomial homogeneous of degree `d`.
    pub fn is_homogeneous_of(&self, p: &BasePoly, d: u32) -> bool {
        matches!(self.homogeneity(p), Homogeneity::Zero)
            || matches!(self.homogeneity(p), Homogeneity::Degree(x) if x == d)
    }

    pub fn fmt_monomial(&self, exps: &[u32]) -> String {
        let mut parts = Vec::new();
        for (k, &e) in exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.names[k].clone()),
                _ => parts.push(format!("{}^{}", self.names[k], e)),
            }
        }
        parts.join("*")
    }

    /// Human and parser-compatible text, terms in descending degree.
    pub fn fmt_poly(&self, p: &BasePoly) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<(&Exponents, &Scalar)> = p.terms.iter().collect();
        terms.sort_by(|a, b| {
            self.monomial_degree(b.0)
                .cmp(&self.monomial_degree(a.0))
                .then_with(|| b.0.cmp(a.0))
        });
        let mut out = String::new();
        for (i, (e, c)) in terms.into_iter().enumerate() {
            let neg = is_negative(c);
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.fmt_monomial(e);
            if mono.is_empty() {
                out.push_str(&fmt_scalar(&abs));
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&fmt_scalar(&abs));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }

    /// Canonical JSON: `{"terms": [{"coeff": .., "exponents": [..]}], "text": ..}`.
    pub fn poly_json(&self, p: &BasePoly) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = p
            .terms
            .iter()
            .map(|(e, c)| {
                serde_json::json!({
                    "coeff": scalar_json(c),
                    "exponents": e,
                })
            })
            .collect();
        serde_json::json!({ "terms": terms, "text": self.fmt_poly(p) })
    }
}

/// Homogeneity of a polynomial under a grading.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Degree(u32),
    Mixed,
}

/// Element of `K[t1..tm]`: exponent vectors mapped to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasePoly {
    nvars: usize,
    terms: BTreeMap<Exponents, Scalar>,
}

impl BasePoly {
    pub fn zero(nvars: usize) -> Self {
        BasePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Scalar::one())
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn var(nvars: usize, k: usize) -> Self {
        assert!(k < nvars, "generator index {k} out of range");
        let mut e = vec![0; nvars];
        e[k] = 1;
        Self::monomial(nvars, e, Scalar::one())
    }

    pub fn monomial(nvars: usize, exps: Exponents, c: Scalar) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        BasePoly { nvars, terms }
    }

    /// Builds from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponents, Scalar)>) -> Result<Self> {
        let mut p = BasePoly::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::DescriptorMismatch {
                    expected: nvars,
                    found: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Scalar {
        self.terms.get(exps).cloned().unwrap_or_else(Scalar::zero)
    }

    /// The value if this is a constant polynomial (zero included).
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Plain sum of exponents of the largest term.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub(crate) fn add_term(&mut self, exps: Exponents, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &BasePoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DescriptorMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &BasePoly) -> Result<BasePoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &BasePoly) -> Result<BasePoly> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &BasePoly) -> Result<BasePoly> {
        self.check(other)?;
        let mut out = BasePoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> BasePoly {
        if c.is_zero() {
            return BasePoly::zero(self.nvars);
        }
        BasePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by the monomial `t^exps`.
    pub fn shift(&self, exps: &[u32]) -> BasePoly {
        BasePoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(exps).map(|(x, y)| x + y).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> BasePoly {
        let mut acc = BasePoly::one(self.nvars);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

/// Checked sum. Fails on a generator-count mismatch.
pub fn poly_add(a: &BasePoly, b: &BasePoly) -> Result<BasePoly> {
    a.try_add(b)
}

/// Checked product. Fails on a generator-count mismatch.
pub fn poly_mul(a: &BasePoly, b: &BasePoly) -> Result<BasePoly> {
    a.try_mul(b)
}

pub fn poly_scale(c: &Scalar, a: &BasePoly) -> BasePoly {
    a.scale(c)
}

// The operator impls panic on mismatched generator counts; use the `try_*`
// methods on untrusted input.

impl Add for &BasePoly {
    type Output = BasePoly;
    fn add(self, rhs: &BasePoly) -> BasePoly {
        self.try_add(rhs).expect("generator-count mismatch")
    }
}

impl Sub for &BasePoly {
    type Output = BasePoly;
    fn sub(self, rhs: &BasePoly) -> BasePoly {
        self.try_sub(rhs).expect("generator-count mismatch")
    }
}

impl Mul for &BasePoly {
    type Output = BasePoly;
    fn mul(self, rhs: &BasePoly) -> BasePoly {
        self.try_mul(rhs).expect("generator-count mismatch")
    }
}

impl Neg for &BasePoly {
    type Output = BasePoly;
    fn neg(self) -> BasePoly {
        BasePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}
