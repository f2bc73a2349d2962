//! Runs the eight acceptance criteria and prints one line each.
//! Exits non-zero if any criterion fails.

mod common;

use rand::Rng;
use skewpbw::catalogue::{self, check_expected};
use skewpbw::oracle::{hilbert_closed_form, pbw_freeness_check, OracleMode, DEFAULT_WORD_CAP};
use skewpbw::presentation::{element_degree, ElementDegree};
use skewpbw::report::classification_report;
use skewpbw::scalar::int;
use skewpbw::{
    check_graded_biconditional, check_trimmed_biconditional, classify, det_sigma, det_sigma_endo, doe_to_spbw,
    grading_check, overlap_consistency_check, parse_presentation, print_presentation, spbw_to_doe, BasePoly,
    DoePresentation, Engine, Verdict,
};
use std::collections::BTreeMap;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

fn pres(name: &str) -> DoePresentation {
    catalogue::default_example(name).unwrap().presentation
}

fn with_bindings(name: &str, kv: &[(&str, i64)]) -> DoePresentation {
    let b: BTreeMap<String, _> = kv.iter().map(|(k, v)| (k.to_string(), int(*v))).collect();
    catalogue::get_example(name, &b).unwrap().presentation
}

fn catalogue_consistency() {
    let start = Instant::now();
    for name in catalogue::names() {
        let p = pres(name);
        let c = p.consistency();
        assert!(c.sigma_hom.passed(), "{name}: sigma hom");
        assert!(c.delta_derivation.as_ref().unwrap().passed(), "{name}: delta");
        assert!(c.overlap.as_ref().unwrap().passed(), "{name}: overlap");
        assert!(overlap_consistency_check(&p).passed(), "{name}");
    }
    let t = start.elapsed();
    assert!(t < Duration::from_secs(5), "took {t:?}");
}

fn oracle_equivalence() {
    let start = Instant::now();
    for name in catalogue::names() {
        let p = pres(name);
        if grading_check(&p).graded {
            let c = pbw_freeness_check(&p, 6, DEFAULT_WORD_CAP).unwrap();
            assert_eq!(c.mode, OracleMode::Graded);
            let closed = hilbert_closed_form(&p, 6).unwrap();
            let got: Vec<u128> = c.oracle.iter().map(|&d| d as u128).collect();
            assert_eq!(got, closed, "{name}");
        } else {
            let c = pbw_freeness_check(&p, 4, DEFAULT_WORD_CAP).unwrap();
            assert_eq!(c.mode, OracleMode::Filtered);
            // PBW monomials t1^a t2^b x1^c x2^d of total degree <= n: C(n+4, 4)
            assert_eq!(c.expected, vec![1, 5, 15, 35, 70], "{name}");
            assert_eq!(c.oracle, vec![1, 5, 15, 35, 70], "{name}");
        }
    }
    let t = start.elapsed();
    assert!(t < Duration::from_secs(180), "took {t:?}");
}

fn classification_golden() {
    for name in catalogue::names() {
        let ex = catalogue::default_example(name).unwrap();
        let miss = check_expected(&classify(&ex.presentation), &ex.expected);
        assert!(miss.is_empty(), "{name}: {miss:?}");
    }
    let r = classify(&pres("weyl_a2"));
    assert_eq!(r.spbw.verdict, Verdict::Pass);
    assert!(!r.graded && !r.quasi_commutative);

    for name in ["quantum_plane", "q_dilation"] {
        let p = pres(name);
        let r = classify(&p);
        assert!(r.quasi_commutative, "{name}");
        assert!(r.trimmed, "{name}");
        assert_eq!(check_trimmed_biconditional(&p).unwrap().verdict, Verdict::Pass, "{name}");
    }

    let r = classify(&pres("diffusion"));
    assert!(r.graded && !r.quasi_commutative);
    assert_eq!(r.spbw.verdict, Verdict::Pass);

    let r = classify(&pres("a1"));
    assert!(r.graded && r.connected);
    assert_eq!(r.spbw.verdict, Verdict::Pass);

    let r = classify(&pres("a3_doe"));
    assert_eq!(r.right_doe.verdict, Verdict::Pass);
    assert_eq!(r.spbw.verdict, Verdict::Fail);
    assert_eq!(r.spbw.reason, "σ12(t) = t ≠ 0");
    assert_eq!(classify(&pres("a3_spbw")).spbw.verdict, Verdict::Pass);

    let r = classify(&with_bindings("free_doe", &[("p12", 3), ("p11", 0)]));
    assert_eq!(r.spbw.verdict, Verdict::Pass);
    assert!(r.constant);
    let r = classify(&with_bindings("free_doe", &[("p11", 1)]));
    assert_eq!(r.spbw.verdict, Verdict::Fail);
    assert_eq!(r.spbw.reason, "p11 ≠ 0");
}

fn biconditional_suite() {
    let pool = common::biconditional_pool(101, 10);
    assert!(pool.len() >= 50);
    let mut decided = 0;
    for (label, p) in &pool {
        assert!(p.is_consistent(), "{label}");
        let r = classify(p);
        let bic = check_graded_biconditional(p).unwrap();
        if bic.verdict == Verdict::Unknown || r.spbw.verdict == Verdict::Unknown {
            continue;
        }
        decided += 1;
        assert_eq!(bic.verdict, r.spbw.verdict, "{label}");
        if p.is_trimmed() {
            let tri = check_trimmed_biconditional(p).unwrap();
            assert_eq!(tri.verdict == Verdict::Pass, r.quasi_commutative, "{label}");
        }
    }
    assert!(decided >= 50, "{decided}");
}

fn algebra_laws() {
    let mut r = common::rng(102);
    for name in catalogue::names() {
        let p = pres(name);
        let ring = p.ring().clone();
        let mut eng = Engine::new(&p).unwrap();
        for _ in 0..200 {
            let u = common::element(&mut r, &ring, 4, 2);
            let v = common::element(&mut r, &ring, 4, 2);
            let w = common::element(&mut r, &ring, 4, 2);
            let uv = eng.multiply(&u, &v);
            let vw = eng.multiply(&v, &w);
            assert_eq!(eng.multiply(&uv, &w), eng.multiply(&u, &vw), "{name}");
        }
        if !grading_check(&p).graded || !ring.all_degree_one() {
            continue;
        }
        for _ in 0..40 {
            let (da, db) = (r.gen_range(0..=3), r.gen_range(0..=3));
            let u = common::homogeneous_element(&mut r, &ring, da, 3);
            let v = common::homogeneous_element(&mut r, &ring, db, 3);
            let got = element_degree(&p, &eng.multiply(&u, &v)).unwrap();
            assert!(got == ElementDegree::Homogeneous(da + db) || got == ElementDegree::Zero, "{name}: {got:?}");
        }
    }
}

fn det_sigma_checks() {
    for name in catalogue::names() {
        let p = pres(name);
        let rep = det_sigma_endo(&p).unwrap();
        assert!(rep.multiplicative(), "{name}: {:?}", rep.failures);
    }

    // a1: sigma(t) = diag(b t, t/b), P = (p, 0), so sigma12 = sigma21 = 0 and
    // det sigma(t) = sigma22(sigma11(t)) = sigma22(b t) = b (t/b) = t.
    let p = pres("a1");
    let t = p.ring().var(0);
    assert_eq!(det_sigma(&p, &t).unwrap(), t);
    assert!(det_sigma_endo(&p).unwrap().endo.is_identity());

    // a3_doe: sigma(t) = [[a t, t], [0, a t]], P = (1, 0), so p11 = 0 and
    // sigma21 = 0 kill the outer terms and
    // det sigma(t) = sigma22(sigma11(t)) = sigma22(a t) = a (a t) = a^2 t.
    for a in [2, -3, 5] {
        let p = with_bindings("a3_doe", &[("a", a)]);
        let t = p.ring().var(0);
        assert_eq!(det_sigma(&p, &t).unwrap(), t.scale(&int(a * a)), "a = {a}");
    }
}

fn tamper_sensitivity() {
    let mut d = pres("a1").data().clone();
    d.tau1 = BasePoly::zero(1);
    let p = DoePresentation::new(d).unwrap();
    assert!(p.consistency().sigma_hom.passed());
    assert!(!overlap_consistency_check(&p).passed());
    let c = pbw_freeness_check(&p, 3, DEFAULT_WORD_CAP).unwrap();
    let (deg, deficit) = c.first_deficit.expect("oracle detects the tamper");
    assert!(deg <= 3 && deficit > 0);

    let suite = common::tamper_suite();
    let mut broken = 0;
    for (label, p) in &suite {
        let cert = pbw_freeness_check(p, 3, DEFAULT_WORD_CAP).unwrap();
        assert_eq!(p.is_consistent(), cert.passed(), "{label}");
        broken += usize::from(!cert.passed());
    }
    assert!(broken > 0 && broken < suite.len());
}

fn round_trips() {
    // Valid views: those of the graded connected catalogue entries and of
    // the skew PBW members of the pool, plus independently drawn ones.
    let mut views = Vec::new();
    let sources = catalogue::names().into_iter().map(|n| (n.to_string(), pres(n))).chain(common::biconditional_pool(103, 8));
    for (label, p) in sources {
        if grading_check(&p).graded && p.ring().is_connected() {
            if let Ok(v) = doe_to_spbw(&p) {
                assert_eq!(spbw_to_doe(&v, p.ring()).unwrap(), p, "{label}");
                views.push((label, v, p.ring().clone()));
            }
        }
    }
    let mut r = common::rng(104);
    for i in 0..60 {
        let (v, ring) = common::random_view(&mut r);
        views.push((format!("random view {i}"), v, ring));
    }
    for (label, v, ring) in &views {
        let back = spbw_to_doe(v, ring).unwrap();
        assert_eq!(&doe_to_spbw(&back).unwrap(), v, "{label}");
    }
    assert!(views.len() >= 80, "{}", views.len());

    for name in catalogue::names() {
        let p = pres(name);
        let text = print_presentation(&p);
        assert_eq!(parse_presentation(&text).unwrap().presentation, p, "{name}");
        let a = classification_report(&p, &classify(&p)).json_string();
        let q = parse_presentation(&text).unwrap().presentation;
        let b = classification_report(&q, &classify(&q)).json_string();
        assert_eq!(a, b, "{name}");
    }
}

fn main() {
    let criteria: [(&str, fn()); 8] = [
        ("catalogue consistency", catalogue_consistency),
        ("oracle equivalence", oracle_equivalence),
        ("classification golden tests", classification_golden),
        ("biconditional property suite", biconditional_suite),
        ("algebra laws", algebra_laws),
        ("det sigma", det_sigma_checks),
        ("tamper sensitivity", tamper_sensitivity),
        ("round trips", round_trips),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = panic::catch_unwind(AssertUnwindSafe(f));
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(()) => println!("criterion {} {name:<30} PASS ({secs:.2}s)", i + 1),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {} {name:<30} FAIL ({secs:.2}s): {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
