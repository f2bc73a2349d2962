//! Normal-form elements of the extension: left ring coefficients on the
//! ordered monomials `x1^a1 x2^a2`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::poly::{BasePoly, RingDescriptor};
use crate::scalar::Scalar;

/// The ordered monomial `x1^a1 x2^a2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XMonomial {
    pub a1: u32,
    pub a2: u32,
}

impl XMonomial {
    pub const ONE: XMonomial = XMonomial { a1: 0, a2: 0 };

    pub fn new(a1: u32, a2: u32) -> Self {
        XMonomial { a1, a2 }
    }

    /// Total x-degree, with both variables in degree one.
    pub fn degree(&self) -> u32 {
        self.a1 + self.a2
    }

    pub fn fmt(&self) -> String {
        let mut parts = Vec::new();
        for (name, e) in [("x1", self.a1), ("x2", self.a2)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }
}

/// A finite sum `sum r_a x^a` with nonzero left coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    nvars: usize,
    terms: BTreeMap<XMonomial, BasePoly>,
}

impl Element {
    pub fn zero(nvars: usize) -> Self {
        Element {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_ring(r: BasePoly) -> Self {
        Self::term(r, XMonomial::ONE)
    }

    pub fn scalar(nvars: usize, c: Scalar) -> Self {
        Self::from_ring(BasePoly::constant(nvars, c))
    }

    pub fn one(nvars: usize) -> Self {
        Self::scalar(nvars, Scalar::one())
    }

    /// `x1^a1 x2^a2` with coefficient one.
    pub fn x(nvars: usize, a1: u32, a2: u32) -> Self {
        Self::term(BasePoly::one(nvars), XMonomial::new(a1, a2))
    }

    pub fn term(r: BasePoly, m: XMonomial) -> Self {
        let mut e = Element::zero(r.nvars());
        e.add_term(m, r);
        e
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

    pub fn terms(&self) -> impl Iterator<Item = (&XMonomial, &BasePoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: XMonomial) -> BasePoly {
        self.terms
            .get(&m)
            .cloned()
            .unwrap_or_else(|| BasePoly::zero(self.nvars))
    }

    /// Largest x-degree present.
    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(XMonomial::degree).max()
    }

    pub fn add_term(&mut self, m: XMonomial, r: BasePoly) {
        assert_eq!(r.nvars(), self.nvars, "generator-count mismatch");
        if r.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(m)
            .or_insert_with(|| BasePoly::zero(r.nvars()));
        *slot = &*slot + &r;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_assign(&mut self, o: &Element) {
        for (m, r) in &o.terms {
            self.add_term(*m, r.clone());
        }
    }

    pub fn add(&self, o: &Element) -> Element {
        let mut out = self.clone();
        out.add_assign(o);
        out
    }

    pub fn sub(&self, o: &Element) -> Element {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Element {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero(self.nvars);
        }
        Element {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, r)| (*m, r.scale(c))).collect(),
        }
    }

    /// `r * self`. Coefficients sit on the left, so this is coefficientwise.
    pub fn left_mul_ring(&self, r: &BasePoly) -> Element {
        let mut out = Element::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(*m, r * c);
        }
        out
    }

    /// Parser-compatible text, largest x-degree first.
    pub fn display(&self, ring: &RingDescriptor) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<(&XMonomial, &BasePoly)> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| b.0.cmp(a.0)));
        let mut out = String::new();
        for (i, (m, r)) in terms.into_iter().enumerate() {
            let coeff = ring.fmt_poly(r);
            let xs = m.fmt();
            let piece = if xs.is_empty() {
                coeff
            } else if coeff == "1" {
                xs
            } else if coeff == "-1" {
                format!("-{xs}")
            } else if r.len() == 1 {
                format!("{coeff}*{xs}")
            } else {
                format!("({coeff})*{xs}")
            };
            if i == 0 {
                out.push_str(&piece);
            } else if let Some(rest) = piece.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&piece);
            }
        }
        out
    }

    pub fn to_json(&self, ring: &RingDescriptor) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(m, r)| {
                serde_json::json!({
                    "coeff": ring.poly_json(r),
                    "x1": m.a1,
                    "x2": m.a2,
                })
            })
            .collect();
        serde_json::json!({ "terms": terms, "text": self.display(ring) })
    }
}
