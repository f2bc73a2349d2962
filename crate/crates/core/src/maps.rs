//! The structure maps `sigma: R -> M2(R)` and `delta: R -> R^2`, determined by
//! their values on the generators of `R`, plus the consistency checks that make
//! those values extend to an algebra map and a twisted derivation.

use std::collections::HashMap;


use crate::error::{Error, Result};
use crate::linalg::dense_rank;
use crate::poly::{BasePoly, Exponents, Homogeneity, RingDescriptor};
use crate::scalar::Scalar;
use crate::verdict::Verdict;

/// A 2x2 matrix over the base ring, indexed `[row][col]` from zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix2(pub [[BasePoly; 2]; 2]);

impl Matrix2 {
    pub fn identity(nvars: usize) -> Self {
        Self::scalar(&BasePoly::one(nvars))
    }

    pub fn zero(nvars: usize) -> Self {
        let z = BasePoly::zero(nvars);
        Matrix2([[z.clone(), z.clone()], [z.clone(), z]])
    }

    pub fn scalar(r: &BasePoly) -> Self {
        let z = BasePoly::zero(r.nvars());
        Matrix2([[r.clone(), z.clone()], [z, r.clone()]])
    }

    pub fn diagonal(a: BasePoly, d: BasePoly) -> Self {
        let z = BasePoly::zero(a.nvars());
        Matrix2([[a, z.clone()], [z, d]])
    }

    pub fn entry(&self, i: usize, j: usize) -> &BasePoly {
        &self.0[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(BasePoly::is_zero)
    }

    pub fn mul(&self, o: &Matrix2) -> Matrix2 {
        let e = |i: usize, j: usize| &(&self.0[i][0] * &o.0[0][j]) + &(&self.0[i][1] * &o.0[1][j]);
        Matrix2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn add(&self, o: &Matrix2) -> Matrix2 {
        let e = |i: usize, j: usize| &self.0[i][j] + &o.0[i][j];
        Matrix2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn sub(&self, o: &Matrix2) -> Matrix2 {
        let e = |i: usize, j: usize| &self.0[i][j] - &o.0[i][j];
        Matrix2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn scale(&self, c: &Scalar) -> Matrix2 {
        let e = |i: usize, j: usize| self.0[i][j].scale(c);
        Matrix2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn apply(&self, v: &Column2) -> Column2 {
        let e = |i: usize| &(&self.0[i][0] * &v.0[0]) + &(&self.0[i][1] * &v.0[1]);
        Column2([e(0), e(1)])
    }

    pub fn display(&self, ring: &RingDescriptor) -> String {
        format!(
            "[[{}, {}], [{}, {}]]",
            ring.fmt_poly(&self.0[0][0]),
            ring.fmt_poly(&self.0[0][1]),
            ring.fmt_poly(&self.0[1][0]),
            ring.fmt_poly(&self.0[1][1])
        )
    }
}

/// A column pair over the base ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Column2(pub [BasePoly; 2]);

impl Column2 {
    pub fn zero(nvars: usize) -> Self {
        Column2([BasePoly::zero(nvars), BasePoly::zero(nvars)])
    }

    pub fn new(a: BasePoly, b: BasePoly) -> Self {
        Column2([a, b])
    }

    pub fn get(&self, i: usize) -> &BasePoly {
        &self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(BasePoly::is_zero)
    }

    pub fn add(&self, o: &Column2) -> Column2 {
        Column2([&self.0[0] + &o.0[0], &self.0[1] + &o.0[1]])
    }

    pub fn sub(&self, o: &Column2) -> Column2 {
        Column2([&self.0[0] - &o.0[0], &self.0[1] - &o.0[1]])
    }

    /// Right multiplication by a ring element (the ring is commutative).
    pub fn times(&self, r: &BasePoly) -> Column2 {
        Column2([&self.0[0] * r, &self.0[1] * r])
    }

    pub fn scale(&self, c: &Scalar) -> Column2 {
        Column2([self.0[0].scale(c), self.0[1].scale(c)])
    }

    pub fn display(&self, ring: &RingDescriptor) -> String {
        format!("({}, {})", ring.fmt_poly(&self.0[0]), ring.fmt_poly(&self.0[1]))
    }
}

/// Generator images of `sigma` and `delta`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StructureMaps {
    nvars: usize,
    sigma: Vec<Matrix2>,
    delta: Vec<Column2>,
    sigma_ok: bool,
    delta_ok: bool,
}

impl StructureMaps {
    pub fn new(ring: &RingDescriptor, sigma: Vec<Matrix2>, delta: Vec<Column2>) -> Result<Self> {
        let m = ring.generator_count();
        for len in [sigma.len(), delta.len()] {
            if len != m {
                return Err(Error::DescriptorMismatch {
                    expected: m,
                    found: len,
                });
            }
        }
        let polys = sigma
            .iter()
            .flat_map(|s| s.0.iter().flatten())
            .chain(delta.iter().flat_map(|d| d.0.iter()));
        for p in polys {
            if p.nvars() != m {
                return Err(Error::DescriptorMismatch {
                    expected: m,
                    found: p.nvars(),
                });
            }
        }
        let mut maps = StructureMaps {
            nvars: m,
            sigma,
            delta,
            sigma_ok: false,
            delta_ok: false,
        };
        maps.sigma_ok = check_sigma_hom(&maps).passed();
        maps.delta_ok = maps.sigma_ok && check_delta_derivation(&maps).passed();
        Ok(maps)
    }

    /// `sigma(t_k) = t_k * I`, `delta = 0`.
    pub fn identity(ring: &RingDescriptor) -> Self {
        let m = ring.generator_count();
        let sigma = (0..m).map(|k| Matrix2::scalar(&ring.var(k))).collect();
        let delta = (0..m).map(|_| Column2::zero(m)).collect();
        Self::new(ring, sigma, delta).expect("identity maps are well formed")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn sigma_images(&self) -> &[Matrix2] {
        &self.sigma
    }

    pub fn delta_images(&self) -> &[Column2] {
        &self.delta
    }

    pub fn sigma_is_hom(&self) -> bool {
        self.sigma_ok
    }

    pub fn delta_is_derivation(&self) -> bool {
        self.delta_ok
    }

    /// `sigma(t_k) = t_k * I` for every generator.
    pub fn sigma_is_identity(&self) -> bool {
        self.sigma
            .iter()
            .enumerate()
            .all(|(k, s)| *s == Matrix2::scalar(&BasePoly::var(self.nvars, k)))
    }

    pub fn sigma_is_diagonal(&self) -> bool {
        self.sigma
            .iter()
            .all(|s| s.0[0][1].is_zero() && s.0[1][0].is_zero())
    }

    pub fn delta_is_zero(&self) -> bool {
        self.delta.iter().all(Column2::is_zero)
    }

    /// The map `r -> sigma_ij(r)` on generators, as an endomorphism descriptor.
    /// Only an algebra map when `sigma` is diagonal.
    pub fn entry_endo(&self, i: usize, j: usize) -> EndoDescriptor {
        EndoDescriptor::new(self.sigma.iter().map(|s| s.0[i][j].clone()).collect())
    }

    /// Generator images of `delta_i`.
    pub fn delta_component(&self, i: usize) -> Vec<BasePoly> {
        self.delta.iter().map(|d| d.0[i].clone()).collect()
    }
}

/// Pairwise commutation failures of the generator matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaHomReport {
    /// `(j, k, sigma(t_j)sigma(t_k) - sigma(t_k)sigma(t_j))` for each failing pair.
    pub failures: Vec<(usize, usize, Matrix2)>,
}

impl SigmaHomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Failures of the twisted Leibniz compatibility on generator pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaReport {
    pub failures: Vec<(usize, usize, Column2)>,
}

impl DeltaReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `sigma` extends to an algebra map on the commutative ring iff the generator
/// matrices commute pairwise.
pub fn check_sigma_hom(maps: &StructureMaps) -> SigmaHomReport {
    let mut failures = Vec::new();
    for j in 0..maps.sigma.len() {
        for k in j + 1..maps.sigma.len() {
            let d = maps.sigma[j].mul(&maps.sigma[k]).sub(&maps.sigma[k].mul(&maps.sigma[j]));
            if !d.is_zero() {
                failures.push((j, k, d));
            }
        }
    }
    SigmaHomReport { failures }
}

/// `delta` is well defined on `t_j t_k = t_k t_j` iff
/// `sigma(t_j)delta(t_k) + delta(t_j)t_k = sigma(t_k)delta(t_j) + delta(t_k)t_j`.
pub fn check_delta_derivation(maps: &StructureMaps) -> DeltaReport {
    let m = maps.nvars;
    let mut failures = Vec::new();
    for j in 0..m {
        for k in j + 1..m {
            let tj = BasePoly::var(m, j);
            let tk = BasePoly::var(m, k);
            let lhs = maps.sigma[j].apply(&maps.delta[k]).add(&maps.delta[j].times(&tk));
            let rhs = maps.sigma[k].apply(&maps.delta[j]).add(&maps.delta[k].times(&tj));
            let d = lhs.sub(&rhs);
            if !d.is_zero() {
                failures.push((j, k, d));
            }
        }
    }
    DeltaReport { failures }
}

/// Memoizing evaluator of `sigma` and `delta` on arbitrary ring elements.
///
/// Does not check consistency itself; on inconsistent maps the values depend
/// on the monomial factorization chosen (leftmost generator first).
#[derive(Debug)]
pub struct MapsEvaluator<'a> {
    maps: &'a StructureMaps,
    sigma_cache: HashMap<Exponents, Matrix2>,
    delta_cache: HashMap<Exponents, Column2>,
}

impl<'a> MapsEvaluator<'a> {
    pub fn new(maps: &'a StructureMaps) -> Self {
        MapsEvaluator {
            maps,
            sigma_cache: HashMap::new(),
            delta_cache: HashMap::new(),
        }
    }

    fn split(exps: &[u32]) -> Option<(usize, Exponents)> {
        let k = exps.iter().position(|&e| e > 0)?;
        let mut rest = exps.to_vec();
        rest[k] -= 1;
        Some((k, rest))
    }

    pub fn sigma_monomial(&mut self, exps: &[u32]) -> Matrix2 {
        if let Some(m) = self.sigma_cache.get(exps) {
            return m.clone();
        }
        let out = match Self::split(exps) {
            None => Matrix2::identity(self.maps.nvars),
            Some((k, rest)) => {
                let tail = self.sigma_monomial(&rest);
                self.maps.sigma[k].mul(&tail)
            }
        };
        self.sigma_cache.insert(exps.to_vec(), out.clone());
        out
    }

    pub fn delta_monomial(&mut self, exps: &[u32]) -> Column2 {
        if let Some(d) = self.delta_cache.get(exps) {
            return d.clone();
        }
        let out = match Self::split(exps) {
            None => Column2::zero(self.maps.nvars),
            Some((k, rest)) => {
                // delta(t_k * s) = sigma(t_k) delta(s) + delta(t_k) s
                let tail = self.delta_monomial(&rest);
                let s = BasePoly::monomial(self.maps.nvars, rest, Scalar::from_integer(1.into()));
                self.maps.sigma[k].apply(&tail).add(&self.maps.delta[k].times(&s))
            }
        };
        self.delta_cache.insert(exps.to_vec(), out.clone());
        out
    }

    pub fn sigma(&mut self, r: &BasePoly) -> Matrix2 {
        let mut acc = Matrix2::zero(self.maps.nvars);
        for (e, c) in r.terms() {
            acc = acc.add(&self.sigma_monomial(e).scale(c));
        }
        acc
    }

    pub fn delta(&mut self, r: &BasePoly) -> Column2 {
        let mut acc = Column2::zero(self.maps.nvars);
        for (e, c) in r.terms() {
            acc = acc.add(&self.delta_monomial(e).scale(c));
        }
        acc
    }

    /// `det sigma(r) = -p11 s12(s11(r)) + s22(s11(r)) - p12 s12(s21(r))`.
    pub fn det_sigma(&mut self, p12: &Scalar, p11: &Scalar, r: &BasePoly) -> BasePoly {
        let s = self.sigma(r);
        let after11 = self.sigma(&s.0[0][0]);
        let after21 = self.sigma(&s.0[1][0]);
        let a = after11.0[0][1].scale(&-p11);
        let b = &after11.0[1][1];
        let c = after21.0[0][1].scale(&-p12);
        &(&a + b) + &c
    }
}

/// `sigma(r)`, computed by substituting the generator matrices into `r`.
pub fn apply_sigma(maps: &StructureMaps, r: &BasePoly) -> Result<Matrix2> {
    if r.nvars() != maps.nvars {
        return Err(Error::DescriptorMismatch {
            expected: maps.nvars,
            found: r.nvars(),
        });
    }
    if !maps.sigma_ok {
        return Err(Error::InconsistentMaps(
            "sigma generator matrices do not commute".into(),
        ));
    }
    Ok(MapsEvaluator::new(maps).sigma(r))
}

/// `delta(r)`, computed by the twisted Leibniz rule on monomials.
pub fn apply_delta(maps: &StructureMaps, r: &BasePoly) -> Result<Column2> {
    if r.nvars() != maps.nvars {
        return Err(Error::DescriptorMismatch {
            expected: maps.nvars,
            found: r.nvars(),
        });
    }
    if !maps.sigma_ok {
        return Err(Error::InconsistentMaps(
            "sigma generator matrices do not commute".into(),
        ));
    }
    if !maps.delta_ok {
        return Err(Error::InconsistentMaps(
            "delta is not a sigma-derivation on generator pairs".into(),
        ));
    }
    Ok(MapsEvaluator::new(maps).delta(r))
}

/// A K-algebra endomorphism of `K[t1..tm]` given by generator images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EndoDescriptor {
    pub generator_images: Vec<BasePoly>,
}

impl EndoDescriptor {
    pub fn new(generator_images: Vec<BasePoly>) -> Self {
        EndoDescriptor { generator_images }
    }

    pub fn identity(ring: &RingDescriptor) -> Self {
        Self::new((0..ring.generator_count()).map(|k| ring.var(k)).collect())
    }

    pub fn is_identity(&self) -> bool {
        let m = self.generator_images.len();
        self.generator_images
            .iter()
            .enumerate()
            .all(|(k, p)| *p == BasePoly::var(m, k))
    }

    /// Substitutes the generator images into `r`.
    pub fn apply(&self, r: &BasePoly) -> BasePoly {
        let m = self.generator_images.len();
        let mut acc = BasePoly::zero(m);
        for (e, c) in r.terms() {
            let mut t = BasePoly::constant(m, c.clone());
            for (k, &ek) in e.iter().enumerate() {
                if ek > 0 {
                    t = &t * &self.generator_images[k].pow(ek);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Graded of degree zero: each image homogeneous of its generator's degree.
    pub fn is_graded(&self, ring: &RingDescriptor) -> bool {
        self.generator_images
            .iter()
            .zip(ring.degrees())
            .all(|(p, &d)| ring.homogeneity(p) == Homogeneity::Degree(d))
    }

    /// Bijectivity, decided exactly where it is decidable here:
    /// scalar rescalings, constant images (never injective), and linear
    /// images when all generators have degree one. Otherwise unknown.
    /// In those decided cases injectivity and bijectivity coincide.
    pub fn invertibility(&self, ring: &RingDescriptor) -> Verdict {
        let m = self.generator_images.len();
        if m == 0 {
            return Verdict::Pass;
        }
        if self.generator_images.iter().any(|p| p.as_constant().is_some()) {
            return Verdict::Fail;
        }
        let rescaling = self.generator_images.iter().enumerate().all(|(k, p)| {
            p.len() == 1 && {
                let (e, _) = p.terms().next().unwrap();
                e.iter().enumerate().all(|(j, &x)| x == u32::from(j == k))
            }
        });
        if rescaling {
            return Verdict::Pass;
        }
        if !ring.all_degree_one() || !self.is_graded(ring) {
            return Verdict::Unknown;
        }
        let rows: Vec<Vec<Scalar>> = self
            .generator_images
            .iter()
            .map(|p| {
                (0..m)
                    .map(|j| {
                        let mut e = vec![0; m];
                        e[j] = 1;
                        p.coeff(&e)
                    })
                    .collect()
            })
            .collect();
        Verdict::from_bool(dense_rank(&rows) == m)
    }

    pub fn display(&self, ring: &RingDescriptor) -> String {
        let parts: Vec<String> = ring
            .names()
            .iter()
            .zip(&self.generator_images)
            .map(|(n, p)| format!("{} -> {}", n, ring.fmt_poly(p)))
            .collect();
        if parts.is_empty() {
            "id".to_string()
        } else {
            parts.join(", ")
        }
    }
}
