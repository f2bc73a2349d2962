//! Presentations `R_P[x1, x2; sigma, delta, tau]` and their cached consistency.

use std::collections::BTreeSet;


use crate::element::Element;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::maps::{
    check_delta_derivation, check_sigma_hom, Column2, DeltaReport, EndoDescriptor, MapsEvaluator, Matrix2,
    SigmaHomReport, StructureMaps,
};
use crate::poly::{BasePoly, RingDescriptor};
use crate::scalar::Scalar;
use crate::verdict::Verdict;

/// Raw presentation data. Everything a presentation is made of, with no
/// derived state; edit a clone of it and rebuild to get a variant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PresentationData {
    pub ring: RingDescriptor,
    /// `sigma(t_k)` for each generator.
    pub sigma: Vec<Matrix2>,
    /// `delta(t_k)` for each generator.
    pub delta: Vec<Column2>,
    pub p12: Scalar,
    pub p11: Scalar,
    pub tau1: BasePoly,
    pub tau2: BasePoly,
    pub tau0: BasePoly,
}

impl PresentationData {
    /// Identity sigma, zero delta and tail, `P = (p12, p11)`.
    pub fn trivial(ring: RingDescriptor, p12: Scalar, p11: Scalar) -> Self {
        let m = ring.generator_count();
        let sigma = (0..m).map(|k| Matrix2::scalar(&ring.var(k))).collect();
        let delta = (0..m).map(|_| Column2::zero(m)).collect();
        PresentationData {
            sigma,
            delta,
            p12,
            p11,
            tau1: ring.zero(),
            tau2: ring.zero(),
            tau0: ring.zero(),
            ring,
        }
    }
}

/// Residual of the overlap `x2 x1 t` on one generator (or on `1` when the
/// base ring is the field).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapFailure {
    pub generator: Option<usize>,
    /// `(x2 x1) t - x2 (x1 t)`, both reduced to normal form.
    pub residual: Element,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapReport {
    pub failures: Vec<OverlapFailure>,
}

impl OverlapReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The three consistency checks, run in order; later checks are skipped
/// when an earlier one fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Consistency {
    pub sigma_hom: SigmaHomReport,
    pub delta_derivation: Option<DeltaReport>,
    pub overlap: Option<OverlapReport>,
}

impl Consistency {
    pub fn passed(&self) -> bool {
        self.sigma_hom.passed()
            && self.delta_derivation.as_ref().is_some_and(DeltaReport::passed)
            && self.overlap.as_ref().is_some_and(OverlapReport::passed)
    }

    /// Name of the first failing check.
    pub fn failure_reason(&self) -> Option<&'static str> {
        if !self.sigma_hom.passed() {
            Some("sigma is not an algebra homomorphism (generator matrices do not commute)")
        } else if !self.delta_derivation.as_ref().is_some_and(DeltaReport::passed) {
            Some("delta is not a sigma-derivation")
        } else if !self.overlap.as_ref().is_some_and(OverlapReport::passed) {
            Some("overlap x2*x1*t does not resolve")
        } else {
            None
        }
    }
}

/// A two-variable right double Ore extension presentation over `K[t1..tm]`.
///
/// Consistency is evaluated once at construction. Inconsistent presentations
/// are still values that can be classified and fed to the oracle, but the
/// normal-form arithmetic refuses them.
#[derive(Debug, Clone)]
pub struct DoePresentation {
    data: PresentationData,
    maps: StructureMaps,
    consistency: Consistency,
}

impl PartialEq for DoePresentation {
    fn eq(&self, other: &Self) -> bool {
        self.data == other.data
    }
}

impl Eq for DoePresentation {}

impl DoePresentation {
    pub fn new(data: PresentationData) -> Result<Self> {
        let m = data.ring.generator_count();
        for p in [&data.tau1, &data.tau2, &data.tau0] {
            if p.nvars() != m {
                return Err(Error::DescriptorMismatch {
                    expected: m,
                    found: p.nvars(),
                });
            }
        }
        let maps = StructureMaps::new(&data.ring, data.sigma.clone(), data.delta.clone())?;
        let sigma_hom = check_sigma_hom(&maps);
        let delta_derivation = sigma_hom.passed().then(|| check_delta_derivation(&maps));
        let overlap = if delta_derivation.as_ref().is_some_and(DeltaReport::passed) {
            Some(Engine::unchecked(&data, &maps).overlap_report())
        } else {
            None
        };
        Ok(DoePresentation {
            data,
            maps,
            consistency: Consistency {
                sigma_hom,
                delta_derivation,
                overlap,
            },
        })
    }

    pub fn data(&self) -> &PresentationData {
        &self.data
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.data.ring
    }

    pub fn maps(&self) -> &StructureMaps {
        &self.maps
    }

    pub fn p12(&self) -> &Scalar {
        &self.data.p12
    }

    pub fn p11(&self) -> &Scalar {
        &self.data.p11
    }

    /// `(tau1, tau2, tau0)`.
    pub fn tau(&self) -> [&BasePoly; 3] {
        [&self.data.tau1, &self.data.tau2, &self.data.tau0]
    }

    pub fn nvars(&self) -> usize {
        self.data.ring.generator_count()
    }

    /// Both extension variables have degree one.
    pub fn x_degrees(&self) -> (u32, u32) {
        (1, 1)
    }

    pub fn consistency(&self) -> &Consistency {
        &self.consistency
    }

    pub fn is_consistent(&self) -> bool {
        self.consistency.passed()
    }

    pub fn tail_is_zero(&self) -> bool {
        self.tau().iter().all(|p| p.is_zero())
    }

    /// `delta = 0` and `tau = 0`.
    pub fn is_trimmed(&self) -> bool {
        self.maps.delta_is_zero() && self.tail_is_zero()
    }

    /// The relation `x2 x1 = p12 x1 x2 + p11 x1^2 + tau1 x1 + tau2 x2 + tau0`,
    /// right-hand side as a normal-form element.
    pub fn commutation_rhs(&self) -> Element {
        commutation_rhs(&self.data)
    }

    pub(crate) fn require_consistent(&self) -> Result<()> {
        match self.consistency.failure_reason() {
            None => Ok(()),
            Some(r) => Err(Error::InconsistentPresentation(r.to_string())),
        }
    }
}

pub(crate) fn commutation_rhs(data: &PresentationData) -> Element {
    let m = data.ring.generator_count();
    let mut e = Element::zero(m);
    e.add_term((1, 1).into(), BasePoly::constant(m, data.p12.clone()));
    e.add_term((2, 0).into(), BasePoly::constant(m, data.p11.clone()));
    e.add_term((1, 0).into(), data.tau1.clone());
    e.add_term((0, 1).into(), data.tau2.clone());
    e.add_term((0, 0).into(), data.tau0.clone());
    e
}

impl From<(u32, u32)> for crate::element::XMonomial {
    fn from((a1, a2): (u32, u32)) -> Self {
        crate::element::XMonomial::new(a1, a2)
    }
}

/// Reduces `(x2 x1) t` and `x2 (x1 t)` for every generator `t` and compares.
pub fn overlap_consistency_check(pres: &DoePresentation) -> OverlapReport {
    match &pres.consistency.overlap {
        Some(r) => r.clone(),
        None => Engine::unchecked(&pres.data, &pres.maps).overlap_report(),
    }
}

/// Outcome of the homogeneity test with `deg x1 = deg x2 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingReport {
    pub graded: bool,
    /// All base generators have positive degree.
    pub connected: bool,
    /// One line per inhomogeneous relation.
    pub inhomogeneous: Vec<String>,
}

/// Every relation is homogeneous when `sigma(t_k)` has entries of degree
/// `deg t_k`, `delta(t_k)` entries of degree `deg t_k + 1`, `tau1, tau2` of
/// degree one and `tau0` of degree two.
pub fn grading_check(pres: &DoePresentation) -> GradingReport {
    let ring = pres.ring();
    let mut bad = Vec::new();
    for (k, name) in ring.names().iter().enumerate() {
        let d = ring.degrees()[k];
        let s = &pres.data.sigma[k];
        for i in 0..2 {
            for j in 0..2 {
                if !ring.is_homogeneous_of(s.entry(i, j), d) {
                    bad.push(format!(
                        "sigma{}{}({}) = {} is not homogeneous of degree {}",
                        i + 1,
                        j + 1,
                        name,
                        ring.fmt_poly(s.entry(i, j)),
                        d
                    ));
                }
            }
            let dl = pres.data.delta[k].get(i);
            if !ring.is_homogeneous_of(dl, d + 1) {
                bad.push(format!(
                    "delta{}({}) = {} is not homogeneous of degree {}",
                    i + 1,
                    name,
                    ring.fmt_poly(dl),
                    d + 1
                ));
            }
        }
    }
    for (label, p, d) in [
        ("tau1", &pres.data.tau1, 1),
        ("tau2", &pres.data.tau2, 1),
        ("tau0", &pres.data.tau0, 2),
    ] {
        if !ring.is_homogeneous_of(p, d) {
            bad.push(format!(
                "{label} = {} is not homogeneous of degree {d}",
                ring.fmt_poly(p)
            ));
        }
    }
    GradingReport {
        graded: bad.is_empty(),
        connected: ring.is_connected(),
        inhomogeneous: bad,
    }
}

/// Degree of an element under the grading `deg(r t^b x^a) = deg(t^b) + |a|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementDegree {
    Zero,
    Homogeneous(u32),
    Inhomogeneous(BTreeSet<u32>),
}

pub fn element_degree(pres: &DoePresentation, u: &Element) -> Result<ElementDegree> {
    if !grading_check(pres).graded {
        return Err(Error::Refused("presentation is not graded".into()));
    }
    let ring = pres.ring();
    let degs: BTreeSet<u32> = u
        .terms()
        .flat_map(|(m, r)| r.terms().map(move |(e, _)| ring.monomial_degree(e) + m.degree()))
        .collect();
    Ok(match degs.len() {
        0 => ElementDegree::Zero,
        1 => ElementDegree::Homogeneous(*degs.iter().next().unwrap()),
        _ => ElementDegree::Inhomogeneous(degs),
    })
}

/// `det sigma(r) = -p11 s12 s11(r) + s22 s11(r) - p12 s12 s21(r)`.
pub fn det_sigma(pres: &DoePresentation, r: &BasePoly) -> Result<BasePoly> {
    if r.nvars() != pres.nvars() {
        return Err(Error::DescriptorMismatch {
            expected: pres.nvars(),
            found: r.nvars(),
        });
    }
    if !pres.maps.sigma_is_hom() {
        return Err(Error::InconsistentMaps("sigma generator matrices do not commute".into()));
    }
    Ok(MapsEvaluator::new(&pres.maps).det_sigma(&pres.data.p12, &pres.data.p11, r))
}

/// `det sigma` packaged as an endomorphism, with its multiplicativity checked
/// on all generator pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetSigmaReport {
    pub endo: EndoDescriptor,
    /// `(j, k, det(t_j t_k) - det(t_j) det(t_k))` for each failing pair, `j <= k`.
    pub failures: Vec<(usize, usize, BasePoly)>,
    pub invertibility: Verdict,
}

impl DetSigmaReport {
    pub fn multiplicative(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn det_sigma_endo(pres: &DoePresentation) -> Result<DetSigmaReport> {
    if !pres.maps.sigma_is_hom() {
        return Err(Error::InconsistentMaps("sigma generator matrices do not commute".into()));
    }
    let ring = pres.ring();
    let m = ring.generator_count();
    let mut ev = MapsEvaluator::new(&pres.maps);
    let (p12, p11) = (&pres.data.p12, &pres.data.p11);
    let images: Vec<BasePoly> = (0..m).map(|k| ev.det_sigma(p12, p11, &ring.var(k))).collect();
    let mut failures = Vec::new();
    for j in 0..m {
        for k in j..m {
            let prod = &ring.var(j) * &ring.var(k);
            let lhs = ev.det_sigma(p12, p11, &prod);
            let diff = &lhs - &(&images[j] * &images[k]);
            if !diff.is_zero() {
                failures.push((j, k, diff));
            }
        }
    }
    let endo = EndoDescriptor::new(images);
    let invertibility = endo.invertibility(ring);
    Ok(DetSigmaReport {
        endo,
        failures,
        invertibility,
    })
}
