//! Normal-form multiplication by rewriting.
//!
//! Two rule families drive everything:
//!
//! * straightening, `x_i r -> sigma_i1(r) x1 + sigma_i2(r) x2 + delta_i(r)`,
//!   which moves ring coefficients to the left;
//! * the commutation rule `x2 x1 -> p12 x1 x2 + p11 x1^2 + tau1 x1 + tau2 x2 + tau0`.
//!
//! A product `x^a * v` is computed by left-multiplying `v` by single letters.
//! The only non-trivial letter action is `x2 * x1^a x2^b`, memoized per
//! monomial. Each recursive call either lowers the x-degree of its argument or
//! carries a scalar coefficient, which `sigma` fixes and `delta` kills, so the
//! recursion terminates.

use std::collections::HashMap;

use crate::element::{Element, XMonomial};
use crate::error::{Error, Result};
use crate::maps::{MapsEvaluator, StructureMaps};
use crate::poly::BasePoly;
use crate::presentation::{DoePresentation, OverlapFailure, OverlapReport, PresentationData};

/// Rewriting context with caches for one presentation.
#[derive(Debug)]
pub struct Engine<'a> {
    data: &'a PresentationData,
    eval: MapsEvaluator<'a>,
    x2_cache: HashMap<XMonomial, Element>,
    steps: u64,
}

impl<'a> Engine<'a> {
    /// Refuses presentations that failed any consistency check.
    pub fn new(pres: &'a DoePresentation) -> Result<Self> {
        pres.require_consistent()?;
        Ok(Self::unchecked(pres.data(), pres.maps()))
    }

    pub(crate) fn unchecked(data: &'a PresentationData, maps: &'a StructureMaps) -> Self {
        Engine {
            data,
            eval: MapsEvaluator::new(maps),
            x2_cache: HashMap::new(),
            steps: 0,
        }
    }

    fn nvars(&self) -> usize {
        self.data.ring.generator_count()
    }

    /// Rule applications performed so far (cache hits are free).
    pub fn steps(&self) -> u64 {
        self.steps
    }

    /// `x_i * e` for `i` in `{1, 2}`.
    pub fn left_mul_x(&mut self, i: usize, e: &Element) -> Element {
        assert!(i == 1 || i == 2, "extension variable index must be 1 or 2");
        let row = i - 1;
        let mut out = Element::zero(self.nvars());
        for (m, s) in e.terms() {
            if let Some(c) = s.as_constant() {
                // Scalars commute with the x's.
                let moved = self.x_times_monomial(i, *m);
                out.add_assign(&moved.scale(&c));
                continue;
            }
            self.steps += 1;
            let sig = self.eval.sigma(s);
            let del = self.eval.delta(s);
            let a = sig.entry(row, 0);
            if !a.is_zero() {
                let moved = self.x_times_monomial(1, *m);
                out.add_assign(&moved.left_mul_ring(a));
            }
            let b = sig.entry(row, 1);
            if !b.is_zero() {
                let moved = self.x_times_monomial(2, *m);
                out.add_assign(&moved.left_mul_ring(b));
            }
            let d = del.get(row);
            if !d.is_zero() {
                out.add_term(*m, d.clone());
            }
        }
        out
    }

    /// `x_i * x1^a1 x2^a2` in normal form.
    fn x_times_monomial(&mut self, i: usize, m: XMonomial) -> Element {
        let n = self.nvars();
        if i == 1 {
            return Element::x(n, m.a1 + 1, m.a2);
        }
        if m.a1 == 0 {
            return Element::x(n, 0, m.a2 + 1);
        }
        if let Some(e) = self.x2_cache.get(&m) {
            return e.clone();
        }
        // x2 x1^a x2^b = (x2 x1) x1^(a-1) x2^b
        self.steps += 1;
        let rest = XMonomial::new(m.a1 - 1, m.a2);
        let inner = self.x_times_monomial(2, rest);
        let d = self.data;
        let mut out = self.left_mul_x(1, &inner).scale(&d.p12);
        out.add_term(XMonomial::new(m.a1 + 1, m.a2), BasePoly::constant(n, d.p11.clone()));
        out.add_term(m, d.tau1.clone());
        out.add_assign(&inner.left_mul_ring(&d.tau2));
        out.add_term(rest, d.tau0.clone());
        self.x2_cache.insert(m, out.clone());
        out
    }

    /// `x_i * r` for a ring element `r`.
    pub fn x_times_ring(&mut self, i: usize, r: &BasePoly) -> Element {
        self.left_mul_x(i, &Element::from_ring(r.clone()))
    }

    /// `x1^a1 x2^a2 * v`.
    pub fn monomial_times(&mut self, m: XMonomial, v: &Element) -> Element {
        let mut w = v.clone();
        for _ in 0..m.a2 {
            w = self.left_mul_x(2, &w);
        }
        for _ in 0..m.a1 {
            w = self.left_mul_x(1, &w);
        }
        w
    }

    pub fn multiply(&mut self, u: &Element, v: &Element) -> Element {
        let mut out = Element::zero(self.nvars());
        for (m, r) in u.terms() {
            let w = self.monomial_times(*m, v);
            out.add_assign(&w.left_mul_ring(r));
        }
        out
    }

    /// Compares `(x2 x1) t` with `x2 (x1 t)` for each generator `t`, or for
    /// `t = 1` over the field.
    pub(crate) fn overlap_report(&mut self) -> OverlapReport {
        let n = self.nvars();
        let rhs = crate::presentation::commutation_rhs(self.data);
        let probes: Vec<(Option<usize>, BasePoly)> = if n == 0 {
            vec![(None, BasePoly::one(0))]
        } else {
            (0..n).map(|k| (Some(k), BasePoly::var(n, k))).collect()
        };
        let mut failures = Vec::new();
        for (g, t) in probes {
            let te = Element::from_ring(t.clone());
            let lhs = self.multiply(&rhs, &te);
            let x1t = self.x_times_ring(1, &t);
            let rhs_path = self.left_mul_x(2, &x1t);
            let residual = lhs.sub(&rhs_path);
            if !residual.is_zero() {
                failures.push(OverlapFailure {
                    generator: g,
                    residual,
                });
            }
        }
        OverlapReport { failures }
    }
}

/// The normal form of `u * v`.
pub fn multiply(pres: &DoePresentation, u: &Element, v: &Element) -> Result<Element> {
    check_operand(pres, u)?;
    check_operand(pres, v)?;
    Ok(Engine::new(pres)?.multiply(u, v))
}

/// `x_i r = sigma_i1(r) x1 + sigma_i2(r) x2 + delta_i(r)`.
pub fn x_times_ring(pres: &DoePresentation, i: usize, r: &BasePoly) -> Result<Element> {
    if i != 1 && i != 2 {
        return Err(Error::Refused(format!("no extension variable x{i}")));
    }
    if r.nvars() != pres.nvars() {
        return Err(Error::DescriptorMismatch {
            expected: pres.nvars(),
            found: r.nvars(),
        });
    }
    Ok(Engine::new(pres)?.x_times_ring(i, r))
}

fn check_operand(pres: &DoePresentation, u: &Element) -> Result<()> {
    if u.nvars() != pres.nvars() {
        return Err(Error::DescriptorMismatch {
            expected: pres.nvars(),
            found: u.nvars(),
        });
    }
    Ok(())
}
