#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use skewpbw::scalar::rat;
use skewpbw::{BasePoly, Element, RingDescriptor, Scalar, XMonomial};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_scalar(r: &mut ChaCha8Rng) -> Scalar {
    loop {
        let n = r.gen_range(-4..=4);
        if n != 0 {
            return rat(n, r.gen_range(1..=3));
        }
    }
}

/// Exponent vector of total degree exactly `d`.
pub fn exps_of_degree(r: &mut ChaCha8Rng, m: usize, d: u32) -> Vec<u32> {
    let mut e = vec![0; m];
    for _ in 0..d {
        e[r.gen_range(0..m)] += 1;
    }
    e
}

/// Random polynomial with up to `terms` terms of degree at most `max_deg`.
pub fn poly(r: &mut ChaCha8Rng, m: usize, max_deg: u32, terms: usize) -> BasePoly {
    if m == 0 {
        return BasePoly::constant(0, small_scalar(r));
    }
    let n = r.gen_range(1..=terms);
    let ts: Vec<(Vec<u32>, Scalar)> = (0..n)
        .map(|_| {
            let d = r.gen_range(0..=max_deg);
            (exps_of_degree(r, m, d), small_scalar(r))
        })
        .collect();
    BasePoly::from_terms(m, ts).unwrap()
}

/// Homogeneous polynomial of degree `d` under unit weights, never zero.
pub fn homogeneous_poly(r: &mut ChaCha8Rng, m: usize, d: u32, terms: usize) -> BasePoly {
    loop {
        let p = if m == 0 {
            if d == 0 {
                BasePoly::constant(0, small_scalar(r))
            } else {
                return BasePoly::zero(0);
            }
        } else {
            let n = r.gen_range(1..=terms);
            let ts: Vec<(Vec<u32>, Scalar)> =
                (0..n).map(|_| (exps_of_degree(r, m, d), small_scalar(r))).collect();
            BasePoly::from_terms(m, ts).unwrap()
        };
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random element with terms of total degree (x-degree plus coefficient
/// degree) at most `max_deg`.
pub fn element(r: &mut ChaCha8Rng, ring: &RingDescriptor, max_deg: u32, terms: usize) -> Element {
    let m = ring.generator_count();
    let mut e = Element::zero(m);
    for _ in 0..r.gen_range(1..=terms) {
        let xd = r.gen_range(0..=max_deg);
        let a1 = r.gen_range(0..=xd);
        let cd = if m == 0 { 0 } else { r.gen_range(0..=max_deg - xd) };
        e.add_term(XMonomial::new(a1, xd - a1), poly(r, m, cd, 2));
    }
    e
}

/// Homogeneous element of total degree `d` (all base degrees one).
pub fn homogeneous_element(r: &mut ChaCha8Rng, ring: &RingDescriptor, d: u32, terms: usize) -> Element {
    let m = ring.generator_count();
    loop {
        let mut e = Element::zero(m);
        for _ in 0..r.gen_range(1..=terms) {
            let xd = if m == 0 { d } else { r.gen_range(0..=d) };
            let a1 = r.gen_range(0..=xd);
            e.add_term(XMonomial::new(a1, xd - a1), homogeneous_poly(r, m, d - xd, 2));
        }
        if !e.is_zero() {
            return e;
        }
    }
}

/// Every single-edit tamper of the catalogue: each tail entry and each
/// delta generator image raised by the constant 1.
pub fn tamper_suite() -> Vec<(String, skewpbw::DoePresentation)> {
    use skewpbw::catalogue;
    let mut out = Vec::new();
    for name in catalogue::names() {
        let base = catalogue::default_example(name).unwrap().presentation;
        let ring = base.ring().clone();
        let one = ring.one();
        for (i, label) in ["tau1", "tau2", "tau0"].iter().enumerate() {
            let mut d = base.data().clone();
            let slot = match i {
                0 => &mut d.tau1,
                1 => &mut d.tau2,
                _ => &mut d.tau0,
            };
            *slot = &*slot + &one;
            out.push((format!("{name}/{label}+1"), skewpbw::DoePresentation::new(d).unwrap()));
        }
        for k in 0..ring.generator_count() {
            for i in 0..2 {
                let mut d = base.data().clone();
                let col = &mut d.delta[k].0[i];
                *col = &*col + &one;
                let label = format!("{name}/delta{}({})+1", i + 1, ring.names()[k]);
                out.push((label, skewpbw::DoePresentation::new(d).unwrap()));
            }
        }
    }
    out
}

/// A connected graded presentation over K[t] from explicit data.
pub fn over_kt(
    sigma: [[i64; 2]; 2],
    delta: [Scalar; 2],
    p: (Scalar, Scalar),
    tau: [Scalar; 3],
) -> skewpbw::DoePresentation {
    use skewpbw::{Column2, Matrix2, PresentationData};
    let ring = RingDescriptor::new(["t"]);
    let t = ring.var(0);
    let t2 = t.pow(2);
    let s = |c: i64| t.scale(&rat(c, 1));
    let mut d = PresentationData::trivial(ring, p.0, p.1);
    d.sigma = vec![Matrix2([[s(sigma[0][0]), s(sigma[0][1])], [s(sigma[1][0]), s(sigma[1][1])]])];
    d.delta = vec![Column2::new(t2.scale(&delta[0]), t2.scale(&delta[1]))];
    d.tau1 = t.scale(&tau[0]);
    d.tau2 = t.scale(&tau[1]);
    d.tau0 = t2.scale(&tau[2]);
    skewpbw::DoePresentation::new(d).unwrap()
}

fn nonzero_int(r: &mut ChaCha8Rng, lo: i64, hi: i64) -> i64 {
    loop {
        let v = r.gen_range(lo..=hi);
        if v != 0 {
            return v;
        }
    }
}

/// Randomized connected graded presentations over K[t], drawn from families
/// that are consistent by construction (checked by hand):
///
/// * diagonal `σ(t) = diag(a t, d t)`, `P = (p, 0)`, `δ = τ = 0`;
/// * the same with `a = d` and `p11 ≠ 0`;
/// * `A1(p, a, b, c)` with its consistent tail;
/// * upper triangular `[[a t, s t], [0, a t]]` with `P = (1, 0)`;
/// * lower triangular `[[a t, 0], [s t, a t]]` with `P = (1, 0)`;
/// * a zero diagonal entry, `diag(0, d t)`.
///
/// Each family contributes `per_family` members.
pub fn biconditional_pool(seed: u64, per_family: usize) -> Vec<(String, skewpbw::DoePresentation)> {
    let mut r = rng(seed);
    let z = || rat(0, 1);
    let mut out = Vec::new();
    for _ in 0..per_family {
        let (a, d, p) = (nonzero_int(&mut r, -3, 3), nonzero_int(&mut r, -3, 3), nonzero_int(&mut r, -3, 3));
        out.push((
            format!("diag({a},{d}) p={p}"),
            over_kt([[a, 0], [0, d]], [z(), z()], (rat(p, 1), z()), [z(), z(), z()]),
        ));

        let (a, p, q) = (nonzero_int(&mut r, -3, 3), nonzero_int(&mut r, -3, 3), nonzero_int(&mut r, -3, 3));
        out.push((
            format!("diag({a},{a}) p=({p},{q})"),
            over_kt([[a, 0], [0, a]], [z(), z()], (rat(p, 1), rat(q, 1)), [z(), z(), z()]),
        ));

        let p = rat(nonzero_int(&mut r, -3, 3), 1);
        let b = loop {
            let b = small_scalar(&mut r);
            if b != rat(1, 1) {
                break b;
            }
        };
        let (a0, c) = (rat(r.gen_range(-2..=2), 1), rat(r.gen_range(-2..=2), 1));
        let k = skewpbw::catalogue::a1_tau1_coefficient(&p, &b, &c);
        out.push((format!("A1(p={p}, a={a0}, b={b}, c={c})"), a1_over_kt(&p, &a0, &b, &c, &k)));

        let (a, s) = (nonzero_int(&mut r, -3, 3), nonzero_int(&mut r, -3, 3));
        out.push((
            format!("upper({a},{s})"),
            over_kt([[a, s], [0, a]], [z(), z()], (rat(1, 1), z()), [z(), z(), z()]),
        ));
        out.push((
            format!("lower({a},{s})"),
            over_kt([[a, 0], [s, a]], [z(), z()], (rat(1, 1), z()), [z(), z(), z()]),
        ));

        let (d, p) = (nonzero_int(&mut r, -3, 3), nonzero_int(&mut r, -3, 3));
        out.push((
            format!("diag(0,{d}) p={p}"),
            over_kt([[0, 0], [0, d]], [z(), z()], (rat(p, 1), z()), [z(), z(), z()]),
        ));
    }
    out
}

/// A1 with rational `b`, built directly since `over_kt` takes integer sigma.
pub fn a1_over_kt(p: &Scalar, a: &Scalar, b: &Scalar, c: &Scalar, k: &Scalar) -> skewpbw::DoePresentation {
    use skewpbw::{Column2, Matrix2, PresentationData};
    let ring = RingDescriptor::new(["t"]);
    let t = ring.var(0);
    let t2 = t.pow(2);
    let mut d = PresentationData::trivial(ring, p.clone(), rat(0, 1));
    d.sigma = vec![Matrix2::diagonal(t.scale(b), t.scale(&b.recip()))];
    d.delta = vec![Column2::new(BasePoly::zero(1), t2.scale(c))];
    d.tau1 = t.scale(k);
    d.tau0 = t2.scale(a);
    skewpbw::DoePresentation::new(d).unwrap()
}

/// A random view that `spbw_to_doe` accepts: graded, connected, consistent.
pub fn random_view(r: &mut ChaCha8Rng) -> (skewpbw::SpbwView, RingDescriptor) {
    let ring = RingDescriptor::new(["t"]);
    let t = ring.var(0);
    let t2 = t.pow(2);
    match r.gen_range(0..3) {
        0 => {
            // A1 shape, consistent for the matching tail coefficient
            let p = small_scalar(r);
            let b = loop {
                let b = small_scalar(r);
                if b != rat(1, 1) {
                    break b;
                }
            };
            let c = small_scalar(r);
            let a = small_scalar(r);
            let v = skewpbw::SpbwView {
                sigma1: skewpbw::EndoDescriptor::new(vec![t.scale(&b)]),
                sigma2: skewpbw::EndoDescriptor::new(vec![t.scale(&b.recip())]),
                delta1: vec![ring.zero()],
                delta2: vec![t2.scale(&c)],
                c12: p.clone(),
                r1: t.scale(&skewpbw::catalogue::a1_tau1_coefficient(&p, &b, &c)),
                r2: ring.zero(),
                r0: t2.scale(&a),
            };
            (v, ring)
        }
        1 => {
            // quasi-commutative in two base variables
            let ring = RingDescriptor::new(["u", "v"]);
            let s = |r: &mut ChaCha8Rng| {
                skewpbw::EndoDescriptor::new(vec![ring.var(0).scale(&small_scalar(r)), ring.var(1).scale(&small_scalar(r))])
            };
            let v = skewpbw::SpbwView {
                sigma1: s(r),
                sigma2: s(r),
                delta1: vec![ring.zero(), ring.zero()],
                delta2: vec![ring.zero(), ring.zero()],
                c12: small_scalar(r),
                r1: ring.zero(),
                r2: ring.zero(),
                r0: ring.zero(),
            };
            (v, ring)
        }
        _ => {
            // identity sigma with a Lie-type tail, as in the diffusion algebra
            let ring = RingDescriptor::new(["y1", "y2"]);
            let c = small_scalar(r);
            let v = skewpbw::SpbwView {
                sigma1: skewpbw::EndoDescriptor::identity(&ring),
                sigma2: skewpbw::EndoDescriptor::identity(&ring),
                delta1: vec![ring.zero(), ring.zero()],
                delta2: vec![ring.zero(), ring.zero()],
                c12: rat(1, 1),
                r1: ring.var(1).scale(&-c.clone()),
                r2: ring.var(0).scale(&c),
                r0: ring.zero(),
            };
            (v, ring)
        }
    }
}
