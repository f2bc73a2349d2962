//! Built-in presentations with their parameters, constraints and the
//! classification claims each one is known to satisfy.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::classify::ClassificationReport;
use crate::error::{Error, Result};
use crate::maps::{Column2, Matrix2};
use crate::poly::{BasePoly, RingDescriptor};
use crate::presentation::{DoePresentation, PresentationData};
use crate::scalar::{fmt_scalar, int, Scalar};

/// A named scalar parameter with its default and the constraint it must meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub default: i64,
    pub constraint: &'static str,
}

/// One asserted field of the expected classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expected {
    pub field: &'static str,
    /// `"pass"`, `"fail"`, `"true"` or `"false"`.
    pub value: &'static str,
    /// Substring the verdict's reason must contain, if any.
    pub reason: Option<&'static str>,
}

impl Expected {
    fn is(field: &'static str, value: &'static str) -> Self {
        Expected { field, value, reason: None }
    }

    fn because(field: &'static str, value: &'static str, reason: &'static str) -> Self {
        Expected { field, value, reason: Some(reason) }
    }
}

/// Mismatches between a report and a list of expectations, one line each.
pub fn check_expected(report: &ClassificationReport, expected: &[Expected]) -> Vec<String> {
    let mut out = Vec::new();
    for e in expected {
        let (actual, reason) = match e.field {
            "right_doe" => (report.right_doe.verdict.as_str().to_string(), Some(&report.right_doe.reason)),
            "double_via_det" => (
                report.double_via_det.verdict.as_str().to_string(),
                Some(&report.double_via_det.reason),
            ),
            "spbw" => (report.spbw.verdict.as_str().to_string(), Some(&report.spbw.reason)),
            "bijective" => (report.bijective.verdict.as_str().to_string(), Some(&report.bijective.reason)),
            "trimmed" => (report.trimmed.to_string(), None),
            "graded" => (report.graded.to_string(), None),
            "connected" => (report.connected.to_string(), None),
            "quasi_commutative" => (report.quasi_commutative.to_string(), None),
            "derivation_type" => (report.derivation_type.to_string(), None),
            "endomorphism_type" => (report.endomorphism_type.to_string(), None),
            "constant" => (report.constant.to_string(), None),
            other => {
                out.push(format!("unknown field {other}"));
                continue;
            }
        };
        if actual != e.value {
            out.push(format!("{}: expected {}, got {}", e.field, e.value, actual));
        }
        if let (Some(want), Some(got)) = (e.reason, reason) {
            if !got.contains(want) {
                out.push(format!("{}: reason {:?} lacks {:?}", e.field, got, want));
            }
        }
    }
    out
}

/// A constructed catalogue entry.
#[derive(Debug, Clone)]
pub struct Example {
    pub name: &'static str,
    pub description: &'static str,
    pub bindings: BTreeMap<String, Scalar>,
    pub presentation: DoePresentation,
    pub expected: Vec<Expected>,
    /// Remarks such as renamings, shown by `catalog show`.
    pub notes: Vec<String>,
}

/// Static metadata for an entry.
#[derive(Debug, Clone)]
pub struct EntryInfo {
    pub name: &'static str,
    pub description: &'static str,
    pub params: Vec<ParamSpec>,
    /// The presentation is graded for default bindings.
    pub graded: bool,
}

type Builder = fn(&BTreeMap<String, Scalar>) -> Result<(PresentationData, Vec<Expected>, Vec<String>)>;

struct Entry {
    name: &'static str,
    description: &'static str,
    params: &'static [ParamSpec],
    graded: bool,
    build: Builder,
}

const fn p(name: &'static str, default: i64, constraint: &'static str) -> ParamSpec {
    ParamSpec { name, default, constraint }
}

static ENTRIES: &[Entry] = &[
    Entry {
        name: "weyl_a2",
        description: "second Weyl algebra K[t1,t2][x1; d/dt1][x2; d/dt2]",
        params: &[],
        graded: false,
        build: weyl_a2,
    },
    Entry {
        name: "quantum_plane",
        description: "quantum plane x2*x1 = lambda*x1*x2 over K",
        params: &[p("lambda", 2, "lambda != 0")],
        graded: true,
        build: quantum_plane,
    },
    Entry {
        name: "diffusion",
        description: "diffusion algebra c12*D1*D2 - c21*D2*D1 = y2*D1 - y1*D2 over K[y1,y2]",
        params: &[p("c12", 1, "c12 != 0"), p("c21", 1, "c21 != 0")],
        graded: true,
        build: diffusion,
    },
    Entry {
        name: "q_dilation",
        description: "linear partial q-dilation operators K[t1..tn][H1,H2]",
        params: &[p("q", 2, "q != 0"), p("n", 2, "n integer >= 2")],
        graded: true,
        build: q_dilation,
    },
    Entry {
        name: "homogenized_env",
        description: "homogenized enveloping algebra of [x1,x2] = alpha*x1 + beta*x2 over K[z]",
        params: &[p("alpha", 1, "none"), p("beta", 0, "none")],
        graded: true,
        build: homogenized_env,
    },
    Entry {
        name: "a1",
        description: "A1(p,a,b,c) over K[t]",
        params: &[
            p("p", 3, "p != 0"),
            p("a", 1, "none"),
            p("b", 2, "b not in {0, 1}"),
            p("c", 1, "none"),
        ],
        graded: true,
        build: a1,
    },
    Entry {
        name: "a3_doe",
        description: "A3(a) over K[t]: x1*t = a*t*x1 + t*x2, x2*t = a*t*x2",
        params: &[p("a", 2, "a != 0")],
        graded: true,
        build: a3_doe,
    },
    Entry {
        name: "a3_spbw",
        description: "A3(a) re-presented over K[u]",
        params: &[p("a", 2, "a != 0")],
        graded: true,
        build: a3_spbw,
    },
    Entry {
        name: "free_doe",
        description: "K<x1,x2>/(x2*x1 - p12*x1*x2 - p11*x1^2 - a1*x1 - a2*x2 - a3)",
        params: &[
            p("p12", 1, "none"),
            p("p11", 0, "none"),
            p("a1", 0, "none"),
            p("a2", 0, "none"),
            p("a3", 0, "none"),
        ],
        graded: true,
        build: free_doe,
    },
];

/// Every entry in catalogue order.
pub fn list() -> Vec<EntryInfo> {
    ENTRIES
        .iter()
        .map(|e| EntryInfo {
            name: e.name,
            description: e.description,
            params: e.params.to_vec(),
            graded: e.graded,
        })
        .collect()
}

pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}

/// Builds an entry, filling unbound parameters with their defaults.
pub fn get_example(name: &str, bindings: &BTreeMap<String, Scalar>) -> Result<Example> {
    let entry = ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownExample(name.to_string()))?;
    let mut resolved = BTreeMap::new();
    for spec in entry.params {
        resolved.insert(spec.name.to_string(), int(spec.default));
    }
    for (k, v) in bindings {
        if !resolved.contains_key(k) {
            return Err(Error::Constraint(format!("{name} has no parameter {k}")));
        }
        resolved.insert(k.clone(), v.clone());
    }
    let (data, expected, notes) = (entry.build)(&resolved)?;
    Ok(Example {
        name: entry.name,
        description: entry.description,
        bindings: resolved,
        presentation: DoePresentation::new(data)?,
        expected,
        notes,
    })
}

/// `get_example` with default bindings.
pub fn default_example(name: &str) -> Result<Example> {
    get_example(name, &BTreeMap::new())
}

fn get(b: &BTreeMap<String, Scalar>, k: &str) -> Scalar {
    b[k].clone()
}

fn nonzero(b: &BTreeMap<String, Scalar>, k: &str) -> Result<Scalar> {
    let v = get(b, k);
    if v.is_zero() {
        return Err(Error::Constraint(format!("{k} != 0 violated")));
    }
    Ok(v)
}

fn weyl_a2(_: &BTreeMap<String, Scalar>) -> Result<(PresentationData, Vec<Expected>, Vec<String>)> {
    let ring = RingDescriptor::new(["t1", "t2"]);
    let mut data = PresentationData::trivial(ring.clone(), Scalar::one(), Scalar::zero());
    data.delta = vec![
        Column2::new(ring.one(), ring.zero()),
        Column2::new(ring.zero(), ring.one()),
    ];
    let expected = vec![
        Expected::is("spbw", "pass"),
        Expected::is("graded", "false"),
        Expected::is("quasi_commutative", "false"),
        Expected::is("derivation_type", "true"),
    ];
    Ok((data, expected, vec![]))
}

fn quantum_plane(b: &BTreeMap<String, Scalar>) -> Result<(PresentationData, Vec<Expected>, Vec<String>)> {
    let lambda = nonzero(b, "lambda")?;
    let data = PresentationData::trivial(RingDescriptor::field(), lambda, Scalar::zero());
    let expected = vec![
        Expected::is("graded", "true"),
        Expected::is("connected", "true"),
        Expected::is("spbw", "pass"),
        Expected::is("quasi_commutative", "true"),
        Expected::is("trimmed", "true"),
    ];
    Ok((data, expected, vec![]))
}

fn diffusion(b: &BTreeMap<String, Scalar>) -> Result<(PresentationData, Vec<Expected>, Vec<String>)> {
    let c12 = nonzero(b, "c12")?;
    let c21 = nonzero(b, "c21")?;
    let ring = RingDescriptor::new(["y1", "y2"]);
    let mut data = PresentationData::trivial(ring.clone(), &c12 / &c21, Scalar::zero());
    let inv = c21.recip();
    data.tau1 = ring.var(1).scale(&-inv.clone());
    data.tau2 = ring.var(0).scale(&inv);
    let expected = vec![
        Expected::is("right_doe", "pass"),
        Expected::is("graded", "true"),
        Expected::is("spbw", "pass"),
        Expected::is("quasi_commutative", "false"),
    ];
    let notes = vec!["base generators x1, x2 renamed y1, y2; D1, D2 are x1, x2".to_string()];
    Ok((data, expected, notes))
}

fn q_dilation(b: &BTreeMap<String, Scalar>) -> Result<(PresentationData, Vec<Expected>, Vec<String>)> {
    let q = nonzero(b, "q")?;
    let n = get(b, "n");
    if !n.is_integer() || n < int(2) || n > int(16) {
        return Err(Error::Constraint("n integer >= 2 violated (at most 16 supported)".into()));
    }
    let n: usize = n.to_integer().try_into().expect("bounded above");
    let ring = RingDescriptor::new((1..=n).map(|i| format!("t{i}")));
    let mut data = PresentationData::trivial(ring.clone(), Scalar::one(), Scalar::zero());
    for (k, s) in data.sigma.iter_mut().enumerate() {
        let t = ring.var(k);
        let scaled = t.scale(&q);
        *s = match k {
            0 => Matrix2::diagonal(scaled, t),
            1 => Matrix2::diagonal(t, scaled),
            _ => Matrix2::diagonal(t.clone(), t),
        };
    }
    let expected = vec![
        Expected::is("graded", "true"),
        Expected::is("connected", "true"),
        Expected::is("spbw", "pass"),
        Expected::is("quasi_commutative", "true"),
        Expected::is("trimmed", "true"),
    ];
    let notes = vec!["H1, H2 are x1, x2".to_string()];
    Ok((data, expected, notes))
}

fn homogenized_env(b: &BTreeMap<String, Scalar>) -> Result<(PresentationData, Vec<Expected>, Vec<String>)> {
    let alpha = get(b, "alpha");
    let beta = get(b, "beta");
    let ring = RingDescriptor::new(["z"]);
    let mut data = PresentationData::trivial(ring.clone(), Scalar::one(), Scalar::zero());
    data.tau1 = ring.var(0).scale(&-alpha);
    data.tau2 = ring.var(0).scale(&-beta);
    let expected = vec![Expected::is("right_doe", "pass"), Expected::is("graded", "true")];
    Ok((data, expected, vec![]))
}

/// The tail coefficient that makes A1 consistent: `bc(pb - 1)/(1 - b)`.
pub fn a1_tau1_coefficient(p: &Scalar, b: &Scalar, c: &Scalar) -> Scalar {
    b * c * (p * b - Scalar::one()) / (Scalar::one() - b)
}

fn a1(bd: &BTreeMap<String, Scalar>) -> Result<(PresentationData, Vec<Expected>, Vec<String>)> {
    let p = nonzero(bd, "p")?;
    let a = get(bd, "a");
    let b = get(bd, "b");
    let c = get(bd, "c");
    if b.is_zero() || b.is_one() {
        return Err(Error::Constraint("b not in {0, 1} violated".into()));
    }
    let ring = RingDescriptor::new(["t"]);
    let t = ring.var(0);
    let t2 = t.pow(2);
    let mut data = PresentationData::trivial(ring, p.clone(), Scalar::zero());
    data.sigma = vec![Matrix2::diagonal(t.scale(&b), t.scale(&b.recip()))];
    data.delta = vec![Column2::new(BasePoly::zero(1), t2.scale(&c))];
    data.tau1 = t.scale(&a1_tau1_coefficient(&p, &b, &c));
    data.tau0 = t2.scale(&a);
    let expected = vec![
        Expected::is("graded", "true"),
        Expected::is("connected", "true"),
        Expected::is("spbw", "pass"),
    ];
    Ok((data, expected, vec![]))
}

fn a3_doe(b: &BTreeMap<String, Scalar>) -> Result<(PresentationData, Vec<Expected>, Vec<String>)> {
    let a = nonzero(b, "a")?;
    let ring = RingDescriptor::new(["t"]);
    let t = ring.var(0);
    let mut data = PresentationData::trivial(ring, Scalar::one(), Scalar::zero());
    data.sigma = vec![Matrix2([
        [t.scale(&a), t.clone()],
        [BasePoly::zero(1), t.scale(&a)],
    ])];
    let expected = vec![
        Expected::is("right_doe", "pass"),
        Expected::is("graded", "true"),
        Expected::is("connected", "true"),
        Expected::because("spbw", "fail", "σ12(t) = t ≠ 0"),
    ];
    Ok((data, expected, vec![]))
}

fn a3_spbw(b: &BTreeMap<String, Scalar>) -> Result<(PresentationData, Vec<Expected>, Vec<String>)> {
    let a = nonzero(b, "a")?;
    let ring = RingDescriptor::new(["u"]);
    let u = ring.var(0);
    let inv = a.recip();
    let mut data = PresentationData::trivial(ring, a, Scalar::zero());
    data.sigma = vec![Matrix2::diagonal(u.scale(&inv), u.clone())];
    data.tau1 = u.scale(&inv);
    let expected = vec![
        Expected::is("graded", "true"),
        Expected::is("connected", "true"),
        Expected::is("spbw", "pass"),
    ];
    let notes = vec![format!(
        "renamed from a3_doe: old x2 -> u, old t -> x1, old x1 -> x2 (a = {})",
        fmt_scalar(&inv.recip())
    )];
    Ok((data, expected, notes))
}

fn free_doe(b: &BTreeMap<String, Scalar>) -> Result<(PresentationData, Vec<Expected>, Vec<String>)> {
    let p12 = get(b, "p12");
    let p11 = get(b, "p11");
    let ring = RingDescriptor::field();
    let mut data = PresentationData::trivial(ring.clone(), p12.clone(), p11.clone());
    data.tau1 = ring.constant(get(b, "a1"));
    data.tau2 = ring.constant(get(b, "a2"));
    data.tau0 = ring.constant(get(b, "a3"));
    let expected = if !p11.is_zero() {
        vec![Expected::because("spbw", "fail", "p11 ≠ 0")]
    } else if p12.is_zero() {
        vec![Expected::because("spbw", "fail", "p12 = 0")]
    } else {
        vec![Expected::is("spbw", "pass"), Expected::is("constant", "true")]
    };
    Ok((data, expected, vec![]))
}
