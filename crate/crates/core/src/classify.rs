//! Classification of presentations: double Ore validity, skew PBW
//! compatibility, the graded biconditionals and the skew PBW subclasses.

use num_traits::Zero;

use crate::element::XMonomial;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::maps::{Column2, EndoDescriptor, Matrix2};
use crate::poly::{BasePoly, RingDescriptor};
use crate::presentation::{det_sigma_endo, grading_check, DoePresentation, PresentationData};
use crate::scalar::{fmt_scalar, Scalar};
use crate::verdict::{Decision, Verdict};

/// Structured verdicts for one presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub right_doe: Decision,
    pub double_via_det: Decision,
    pub trimmed: bool,
    pub graded: bool,
    pub connected: bool,
    pub spbw: Decision,
    pub quasi_commutative: bool,
    pub bijective: Decision,
    pub derivation_type: bool,
    pub endomorphism_type: bool,
    pub constant: bool,
    /// `(field, justification)` pairs naming the result each verdict rests on.
    pub citations: Vec<(String, String)>,
}

/// Skew PBW data in two variables:
/// `x_i r = sigma_i(r) x_i + delta_i(r)`,
/// `x2 x1 = c12 x1 x2 + r1 x1 + r2 x2 + r0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpbwView {
    pub sigma1: EndoDescriptor,
    pub sigma2: EndoDescriptor,
    pub delta1: Vec<BasePoly>,
    pub delta2: Vec<BasePoly>,
    pub c12: Scalar,
    pub r1: BasePoly,
    pub r2: BasePoly,
    pub r0: BasePoly,
}

impl SpbwView {
    /// The constant of the reversed relation, `x1 x2 = c21 x2 x1 + ...`.
    pub fn c21(&self) -> Option<Scalar> {
        (!self.c12.is_zero()).then(|| self.c12.recip())
    }
}

fn sym(i: usize, j: usize) -> String {
    format!("σ{}{}", i + 1, j + 1)
}

/// The skew PBW conditions read off the engine's normal forms of `x_i t_k`
/// and `x2 x1`. Returns the conjunction plus one line per condition that did
/// not pass.
fn structural_spbw(pres: &DoePresentation) -> Decision {
    if let Some(why) = pres.consistency().failure_reason() {
        return Decision::fail(format!("not a right double Ore extension: {why}"));
    }
    let ring = pres.ring();
    let m = ring.generator_count();
    let mut engine = Engine::new(pres).expect("consistency checked above");
    let mut verdict = Verdict::Pass;
    let mut reasons = Vec::new();
    let mut diag: [Vec<BasePoly>; 2] = [Vec::new(), Vec::new()];
    for (i, images) in diag.iter_mut().enumerate() {
        let other = XMonomial::new(u32::from(i == 1), u32::from(i == 0));
        let own = XMonomial::new(u32::from(i == 0), u32::from(i == 1));
        for k in 0..m {
            let nf = engine.x_times_ring(i + 1, &ring.var(k));
            let off = nf.coeff(other);
            if !off.is_zero() {
                verdict = Verdict::Fail;
                reasons.push(format!(
                    "{}({}) = {} ≠ 0",
                    sym(i, 1 - i),
                    ring.names()[k],
                    ring.fmt_poly(&off)
                ));
            }
            images.push(nf.coeff(own));
        }
    }
    let x2x1 = engine.left_mul_x(2, &crate::element::Element::x(m, 1, 0));
    if x2x1.coeff(XMonomial::new(1, 1)).is_zero() {
        verdict = Verdict::Fail;
        reasons.push("p12 = 0".to_string());
    }
    if !x2x1.coeff(XMonomial::new(2, 0)).is_zero() {
        verdict = Verdict::Fail;
        reasons.push("p11 ≠ 0".to_string());
    }
    if verdict == Verdict::Pass {
        for (i, images) in diag.into_iter().enumerate() {
            let v = EndoDescriptor::new(images).invertibility(ring);
            match v {
                Verdict::Pass => {}
                Verdict::Fail => reasons.push(format!("{} is not injective", sym(i, i))),
                Verdict::Unknown => reasons.push(format!("injectivity of {} undecided", sym(i, i))),
            }
            verdict = verdict.and(v);
        }
    }
    if verdict == Verdict::Pass {
        Decision::pass("σ diagonal, p12 ≠ 0, p11 = 0, σ11 and σ22 injective")
    } else {
        Decision::new(verdict, reasons.join("; "))
    }
}

/// The four conditions of the graded biconditionals, read from the
/// presentation data.
fn biconditional_conditions(pres: &DoePresentation) -> Decision {
    let ring = pres.ring();
    let maps = pres.maps();
    let mut verdict = Verdict::Pass;
    let mut reasons = Vec::new();
    if pres.p12().is_zero() {
        verdict = Verdict::Fail;
        reasons.push("p12 = 0".to_string());
    }
    if !pres.p11().is_zero() {
        verdict = Verdict::Fail;
        reasons.push(format!("p11 ≠ 0 (p11 = {})", fmt_scalar(pres.p11())));
    }
    for (i, j) in [(0, 1), (1, 0)] {
        if !maps.entry_endo(i, j).generator_images.iter().all(BasePoly::is_zero) {
            verdict = Verdict::Fail;
            reasons.push(format!("{} ≠ 0", sym(i, j)));
        }
    }
    if maps.sigma_is_diagonal() {
        for i in 0..2 {
            let v = maps.entry_endo(i, i).invertibility(ring);
            match v {
                Verdict::Pass => {}
                Verdict::Fail => reasons.push(format!("{} is not an automorphism", sym(i, i))),
                Verdict::Unknown => reasons.push(format!("automorphism status of {} undecided", sym(i, i))),
            }
            verdict = verdict.and(v);
        }
    }
    // Not a hypothesis here: an inconsistent presentation is reported as a
    // failing condition so the named conditions still show up.
    if let Some(why) = pres.consistency().failure_reason() {
        verdict = Verdict::Fail;
        reasons.push(format!("not a right double Ore extension ({why})"));
    }
    if verdict == Verdict::Pass {
        Decision::pass("p12 ≠ 0, p11 = 0, σ11 and σ22 automorphisms, σ12 = σ21 = 0")
    } else {
        Decision::new(verdict, reasons.join("; "))
    }
}

fn graded_hypotheses(pres: &DoePresentation) -> Result<()> {
    let g = grading_check(pres);
    if !g.graded {
        return Err(Error::Refused(format!(
            "hypothesis unmet: presentation is not graded ({})",
            g.inhomogeneous.join("; ")
        )));
    }
    if !g.connected {
        return Err(Error::Refused("hypothesis unmet: base ring is not connected".into()));
    }
    Ok(())
}

/// For a connected graded double Ore extension: graded skew PBW iff
/// `p12 ≠ 0`, `p11 = 0`, `σ11, σ22` automorphisms and `σ12 = σ21 = 0`.
pub fn check_graded_biconditional(pres: &DoePresentation) -> Result<Decision> {
    graded_hypotheses(pres)?;
    Ok(biconditional_conditions(pres))
}

/// The same four conditions for a connected graded trimmed extension, which
/// then decide quasi-commutativity.
pub fn check_trimmed_biconditional(pres: &DoePresentation) -> Result<Decision> {
    graded_hypotheses(pres)?;
    if !pres.is_trimmed() {
        return Err(Error::Refused(
            "hypothesis unmet: presentation is not trimmed (delta or tau nonzero)".into(),
        ));
    }
    Ok(biconditional_conditions(pres))
}

/// A connected graded right double extension with `p12 ≠ 0` and invertible
/// `det σ` is a two-sided double extension. Never answers "fail".
pub fn is_double_via_det(pres: &DoePresentation) -> Decision {
    if let Some(why) = pres.consistency().failure_reason() {
        return Decision::unknown(format!("not a right double Ore extension: {why}"));
    }
    let g = grading_check(pres);
    if !g.graded {
        return Decision::unknown("not graded");
    }
    if !g.connected {
        return Decision::unknown("not connected");
    }
    if pres.p12().is_zero() {
        return Decision::unknown("p12 = 0");
    }
    let det = match det_sigma_endo(pres) {
        Ok(d) => d,
        Err(e) => return Decision::unknown(e.to_string()),
    };
    match det.invertibility {
        Verdict::Pass => Decision::pass(format!(
            "connected graded, p12 ≠ 0, det σ = [{}] invertible",
            det.endo.display(pres.ring())
        )),
        Verdict::Fail => Decision::unknown(format!(
            "det σ = [{}] is not invertible",
            det.endo.display(pres.ring())
        )),
        Verdict::Unknown => Decision::unknown("invertibility of det σ undecided"),
    }
}

pub fn classify(pres: &DoePresentation) -> ClassificationReport {
    let maps = pres.maps();
    let g = grading_check(pres);
    let graded = g.graded;
    let connected = g.graded && g.connected;
    let right_doe = match pres.consistency().failure_reason() {
        None => Decision::pass("σ homomorphism, σ-derivation and overlap checks resolve"),
        Some(why) => Decision::fail(why),
    };
    let trimmed = pres.is_trimmed();
    let spbw = structural_spbw(pres);
    let is_spbw = spbw.verdict.is_pass();
    let delta_zero = maps.delta_is_zero();
    let quasi_commutative = is_spbw && pres.is_trimmed();

    let bijective = if !is_spbw {
        Decision::new(
            if spbw.verdict == Verdict::Unknown { Verdict::Unknown } else { Verdict::Fail },
            "not a skew PBW extension",
        )
    } else {
        let ring = pres.ring();
        let v = maps
            .entry_endo(0, 0)
            .invertibility(ring)
            .and(maps.entry_endo(1, 1).invertibility(ring));
        match v {
            Verdict::Pass => Decision::pass("σ1, σ2 bijective and c12 invertible"),
            Verdict::Fail => Decision::fail("σ1 or σ2 is not surjective"),
            Verdict::Unknown => Decision::unknown("bijectivity of σ1, σ2 undecided"),
        }
    };
    let sigma_identity = maps.sigma_is_identity();
    let derivation_type = is_spbw && sigma_identity;
    let endomorphism_type = is_spbw && delta_zero;
    let constant = is_spbw && sigma_identity && delta_zero;

    let mut citations = vec![
        (
            "right_doe".to_string(),
            "associativity reduces to generators: σ homomorphism, σ-derivation, overlap x2*x1*t".to_string(),
        ),
        (
            "spbw".to_string(),
            "double Ore extension with diagonal σ, P = (p12, 0), p12 ≠ 0 and σ11, σ22 nonzero on nonzero r is skew PBW"
                .to_string(),
        ),
        (
            "double_via_det".to_string(),
            "connected graded right double extension with p12 ≠ 0 and invertible det σ is a double extension"
                .to_string(),
        ),
        (
            "connected".to_string(),
            "for graded skew PBW extensions R is connected iff A is connected".to_string(),
        ),
    ];
    if quasi_commutative && graded && connected {
        citations.push((
            "trimmed".to_string(),
            "connected graded quasi-commutative skew PBW extensions are trimmed right double Ore extensions"
                .to_string(),
        ));
    }
    if is_spbw && graded && connected {
        citations.push((
            "spbw".to_string(),
            "graded right double Ore extension with diagonal automorphic σ, p12 ≠ 0, p11 = 0 is graded skew PBW"
                .to_string(),
        ));
    }
    if graded && connected {
        citations.push((
            "commentary".to_string(),
            "graded skew PBW extensions in two variables over Artin-Schelter regular algebras are Artin-Schelter regular (not computed)"
                .to_string(),
        ));
    }

    ClassificationReport {
        right_doe,
        double_via_det: is_double_via_det(pres),
        trimmed,
        graded,
        connected,
        spbw,
        quasi_commutative,
        bijective,
        derivation_type,
        endomorphism_type,
        constant,
        citations,
    }
}

/// Reads the skew PBW data off a double Ore extension that passes the
/// structural test.
pub fn doe_to_spbw(pres: &DoePresentation) -> Result<SpbwView> {
    let d = structural_spbw(pres);
    if d.verdict != Verdict::Pass {
        return Err(Error::Refused(d.reason));
    }
    let maps = pres.maps();
    let [tau1, tau2, tau0] = pres.tau();
    Ok(SpbwView {
        sigma1: maps.entry_endo(0, 0),
        sigma2: maps.entry_endo(1, 1),
        delta1: maps.delta_component(0),
        delta2: maps.delta_component(1),
        c12: pres.p12().clone(),
        r1: tau1.clone(),
        r2: tau2.clone(),
        r0: tau0.clone(),
    })
}

/// Assembles the connected graded double Ore extension of a graded skew PBW
/// view: `P = (c12, 0)`, `σ = diag(σ1, σ2)`, `δ = (δ1, δ2)`, `τ = (r1, r2, r0)`.
pub fn spbw_to_doe(view: &SpbwView, ring: &RingDescriptor) -> Result<DoePresentation> {
    if view.c12.is_zero() {
        return Err(Error::Refused("c12 = 0".into()));
    }
    if !ring.is_connected() {
        return Err(Error::Refused("base ring is not connected".into()));
    }
    let m = ring.generator_count();
    for len in [
        view.sigma1.generator_images.len(),
        view.sigma2.generator_images.len(),
        view.delta1.len(),
        view.delta2.len(),
    ] {
        if len != m {
            return Err(Error::DescriptorMismatch {
                expected: m,
                found: len,
            });
        }
    }
    let sigma = (0..m)
        .map(|k| {
            Matrix2::diagonal(
                view.sigma1.generator_images[k].clone(),
                view.sigma2.generator_images[k].clone(),
            )
        })
        .collect();
    let delta = (0..m)
        .map(|k| Column2::new(view.delta1[k].clone(), view.delta2[k].clone()))
        .collect();
    let pres = DoePresentation::new(PresentationData {
        ring: ring.clone(),
        sigma,
        delta,
        p12: view.c12.clone(),
        p11: Scalar::zero(),
        tau1: view.r1.clone(),
        tau2: view.r2.clone(),
        tau0: view.r0.clone(),
    })?;
    let g = grading_check(&pres);
    if !g.graded {
        return Err(Error::Refused(format!(
            "inhomogeneous relations: {}",
            g.inhomogeneous.join("; ")
        )));
    }
    if let Some(why) = pres.consistency().failure_reason() {
        return Err(Error::Refused(format!("view does not define an extension: {why}")));
    }
    Ok(pres)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue::default_example;
    use crate::scalar::{int, rat};

    fn pres(name: &str) -> DoePresentation {
        default_example(name).unwrap().presentation
    }

    fn trimmed_kt(sigma: Matrix2, p11: i64) -> DoePresentation {
        let ring = RingDescriptor::new(["t"]);
        let mut data = PresentationData::trivial(ring, int(5), int(p11));
        data.sigma = vec![sigma];
        DoePresentation::new(data).unwrap()
    }

    #[test]
    fn weyl_report() {
        let r = classify(&pres("weyl_a2"));
        assert_eq!(r.spbw.verdict, Verdict::Pass);
        assert!(!r.graded && !r.quasi_commutative && r.derivation_type);
        assert_eq!(r.double_via_det.verdict, Verdict::Unknown);
    }

    #[test]
    fn biconditional_examples() {
        let t = BasePoly::var(1, 0);
        let diag = Matrix2::diagonal(t.scale(&int(2)), t.scale(&int(3)));
        let p = trimmed_kt(diag.clone(), 0);
        assert_eq!(check_graded_biconditional(&p).unwrap().verdict, Verdict::Pass);
        assert_eq!(check_trimmed_biconditional(&p).unwrap().verdict, Verdict::Pass);
        assert!(classify(&p).quasi_commutative);

        let p = trimmed_kt(diag, 1);
        let d = check_graded_biconditional(&p).unwrap();
        assert_eq!(d.verdict, Verdict::Fail);
        assert!(d.reason.contains("p11 ≠ 0"));

        let tri = Matrix2([[t.scale(&int(2)), t.clone()], [BasePoly::zero(1), t.scale(&int(3))]]);
        let p = trimmed_kt(tri, 0);
        let d = check_graded_biconditional(&p).unwrap();
        assert_eq!(d.verdict, Verdict::Fail);
        assert!(d.reason.contains("σ12 ≠ 0"));
        assert_eq!(classify(&p).spbw.verdict, Verdict::Fail);
    }

    #[test]
    fn biconditional_refuses_ungraded() {
        let e = check_graded_biconditional(&pres("weyl_a2")).unwrap_err();
        assert!(e.to_string().contains("not graded"));
        let e = check_trimmed_biconditional(&pres("a1")).unwrap_err();
        assert!(e.to_string().contains("not trimmed"));
    }

    #[test]
    fn a1_view_and_det() {
        let p = pres("a1");
        let v = doe_to_spbw(&p).unwrap();
        let t = BasePoly::var(1, 0);
        assert_eq!(v.sigma1.generator_images, vec![t.scale(&int(2))]);
        assert_eq!(v.sigma2.generator_images, vec![t.scale(&rat(1, 2))]);
        assert_eq!(v.delta2, vec![t.pow(2)]);
        assert_eq!(v.c12, int(3));
        assert_eq!(v.c21(), Some(rat(1, 3)));
        assert_eq!(is_double_via_det(&p).verdict, Verdict::Pass);
        assert_eq!(spbw_to_doe(&v, p.ring()).unwrap(), p);
    }

    #[test]
    fn a3_refused_with_named_entry() {
        let e = doe_to_spbw(&pres("a3_doe")).unwrap_err();
        assert_eq!(e.to_string(), "refused: σ12(t) = t ≠ 0");
        assert_eq!(is_double_via_det(&pres("a3_doe")).verdict, Verdict::Pass);
    }

    #[test]
    fn quantum_plane_view() {
        let v = doe_to_spbw(&pres("quantum_plane")).unwrap();
        assert_eq!(v.c12, int(2));
        assert!(v.sigma1.generator_images.is_empty() && v.r0.is_zero());
    }

    #[test]
    fn homogenized_view_builds_graded_doe() {
        let ring = RingDescriptor::new(["z"]);
        let z = ring.var(0);
        let v = SpbwView {
            sigma1: EndoDescriptor::identity(&ring),
            sigma2: EndoDescriptor::identity(&ring),
            delta1: vec![ring.zero()],
            delta2: vec![ring.zero()],
            c12: int(1),
            r1: z.scale(&int(-1)),
            r2: ring.zero(),
            r0: ring.zero(),
        };
        let p = spbw_to_doe(&v, &ring).unwrap();
        let r = classify(&p);
        assert!(r.graded && !r.trimmed);
        assert_eq!(r.right_doe.verdict, Verdict::Pass);
        assert_eq!(doe_to_spbw(&p).unwrap(), v);

        let mut bad = v.clone();
        bad.c12 = int(0);
        assert!(spbw_to_doe(&bad, &ring).is_err());
        let mut bad = v;
        bad.r0 = z.clone();
        let e = spbw_to_doe(&bad, &ring).unwrap_err();
        assert!(e.to_string().contains("inhomogeneous"), "{e}");
    }

    #[test]
    fn free_doe_reasons() {
        let ring = RingDescriptor::field();
        let p = DoePresentation::new(PresentationData::trivial(ring.clone(), int(0), int(0))).unwrap();
        assert_eq!(classify(&p).spbw.reason, "p12 = 0");
        let p = DoePresentation::new(PresentationData::trivial(ring, int(1), int(0))).unwrap();
        assert!(classify(&p).constant);
    }
}
