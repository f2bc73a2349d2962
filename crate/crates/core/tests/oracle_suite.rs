mod common;

use skewpbw::oracle::{free_dims, hilbert_closed_form, pbw_freeness_check, OracleMode, DEFAULT_WORD_CAP};
use skewpbw::{catalogue, BasePoly, DoePresentation};

fn pres(name: &str) -> DoePresentation {
    catalogue::default_example(name).unwrap().presentation
}

#[test]
fn catalogue_passes_freeness() {
    for name in catalogue::names() {
        let p = pres(name);
        let n = if name == "weyl_a2" { 4 } else { 6 };
        let c = pbw_freeness_check(&p, n, DEFAULT_WORD_CAP).unwrap();
        assert!(c.passed(), "{name}: {c:?}");
        if c.mode == OracleMode::Graded {
            assert_eq!(c.expected, hilbert_closed_form(&p, n).unwrap());
        }
    }
}

#[test]
fn weyl_filtration_counts() {
    let c = pbw_freeness_check(&pres("weyl_a2"), 4, DEFAULT_WORD_CAP).unwrap();
    // cumulative C(n+4, 4)
    assert_eq!(c.expected, vec![1, 5, 15, 35, 70]);
    assert_eq!(c.oracle, vec![1, 5, 15, 35, 70]);
    assert!(c.oracle.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn filtered_dims_are_monotone_under_tampering() {
    for (label, p) in common::tamper_suite() {
        let (mode, d) = free_dims(&p, 3, DEFAULT_WORD_CAP).unwrap();
        if mode == OracleMode::Filtered {
            assert!(d.windows(2).all(|w| w[0] <= w[1]), "{label}: {d:?}");
        }
    }
}

#[test]
fn a3_presentations_share_dimensions() {
    let (_, a) = free_dims(&pres("a3_doe"), 6, DEFAULT_WORD_CAP).unwrap();
    let (_, b) = free_dims(&pres("a3_spbw"), 6, DEFAULT_WORD_CAP).unwrap();
    assert_eq!(a, b);
    assert_eq!(a, vec![1, 3, 6, 10, 15, 21, 28]);
}

#[test]
fn oracle_reruns_are_identical() {
    let p = pres("diffusion");
    assert_eq!(free_dims(&p, 5, DEFAULT_WORD_CAP).unwrap(), free_dims(&p, 5, DEFAULT_WORD_CAP).unwrap());
}

#[test]
fn a1_without_tau1_has_deficit() {
    let mut d = pres("a1").data().clone();
    d.tau1 = BasePoly::zero(1);
    let p = DoePresentation::new(d).unwrap();
    assert!(!p.is_consistent());
    let c = pbw_freeness_check(&p, 3, DEFAULT_WORD_CAP).unwrap();
    let (deg, deficit) = c.first_deficit.unwrap();
    assert!(deg <= 3 && deficit > 0, "{c:?}");
}

#[test]
fn tamper_detectors_agree() {
    let suite = common::tamper_suite();
    assert!(suite.len() >= 30);
    let mut broken = 0;
    for (label, p) in &suite {
        let cert = pbw_freeness_check(p, 3, DEFAULT_WORD_CAP).unwrap();
        assert_eq!(p.is_consistent(), cert.passed(), "{label}: {:?} {cert:?}", p.consistency().failure_reason());
        if let Some((_, k)) = cert.first_deficit {
            assert!(k > 0, "{label}");
            broken += 1;
        }
    }
    // Both outcomes occur, so the agreement is not vacuous.
    assert!(broken > 0 && broken < suite.len(), "{broken}");
}
