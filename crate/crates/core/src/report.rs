//! Text and JSON renderings of check, classification, Hilbert series and
//! det sigma results. JSON objects use sorted keys and rationals as
//! `{"den", "num"}` strings, so equal inputs serialize byte-identically.

use serde_json::{json, Map, Value};

use crate::catalogue::EntryInfo;
use crate::classify::ClassificationReport;
use crate::element::Element;
use crate::oracle::FreenessCertificate;
use crate::presentation::{grading_check, DetSigmaReport, DoePresentation};
use crate::scalar::scalar_json;
use crate::verdict::{Decision, Verdict};

/// A machine form and a human form of the same result.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportDocument {
    pub json: Value,
    pub text: String,
}

impl ReportDocument {
    /// Pretty JSON with a trailing newline.
    pub fn json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.json).expect("values serialize");
        s.push('\n');
        s
    }
}

fn aligned(rows: &[(String, String)]) -> String {
    let w = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        let pad = w - k.chars().count();
        out.push_str(&format!("{k}{}  {v}\n", " ".repeat(pad)));
    }
    out
}

fn decision_text(d: &Decision) -> String {
    if d.reason.is_empty() {
        d.verdict.as_str().to_string()
    } else {
        format!("{} ({})", d.verdict.as_str(), d.reason)
    }
}

/// The consistency triple with residuals. The bool is the overall verdict.
pub fn check_report(pres: &DoePresentation) -> (bool, ReportDocument) {
    let ring = pres.ring();
    let c = pres.consistency();
    let mut rows = Vec::new();
    let mut j = Map::new();

    let hom_fail: Vec<Value> = c
        .sigma_hom
        .failures
        .iter()
        .map(|(a, b, m)| {
            json!({
                "pair": [ring.names()[*a], ring.names()[*b]],
                "commutator": m.display(ring),
            })
        })
        .collect();
    rows.push((
        "sigma_hom".to_string(),
        if c.sigma_hom.passed() {
            "pass".to_string()
        } else {
            let parts: Vec<String> = c
                .sigma_hom
                .failures
                .iter()
                .map(|(a, b, m)| format!("[σ({}), σ({})] = {}", ring.names()[*a], ring.names()[*b], m.display(ring)))
                .collect();
            format!("fail: {}", parts.join("; "))
        },
    ));
    j.insert("sigma_hom".into(), json!({"verdict": Verdict::from_bool(c.sigma_hom.passed()).as_str(), "failures": hom_fail}));

    let (dv, dtext, dfail) = match &c.delta_derivation {
        None => ("unknown", "skipped".to_string(), vec![]),
        Some(r) if r.passed() => ("pass", "pass".to_string(), vec![]),
        Some(r) => {
            let parts: Vec<String> = r
                .failures
                .iter()
                .map(|(a, b, col)| format!("({}, {}): {}", ring.names()[*a], ring.names()[*b], col.display(ring)))
                .collect();
            let vals = r
                .failures
                .iter()
                .map(|(a, b, col)| json!({"pair": [ring.names()[*a], ring.names()[*b]], "residual": col.display(ring)}))
                .collect();
            ("fail", format!("fail: {}", parts.join("; ")), vals)
        }
    };
    rows.push(("delta_derivation".to_string(), dtext));
    j.insert("delta_derivation".into(), json!({"verdict": dv, "failures": dfail}));

    let (ov, otext, ofail) = match &c.overlap {
        None => ("unknown", "skipped".to_string(), vec![]),
        Some(r) if r.passed() => ("pass", "pass".to_string(), vec![]),
        Some(r) => {
            let name = |g: &Option<usize>| g.map_or("1".to_string(), |k| ring.names()[k].clone());
            let parts: Vec<String> = r
                .failures
                .iter()
                .map(|f| format!("(x2*x1)*{0} - x2*(x1*{0}) = {1}", name(&f.generator), f.residual.display(ring)))
                .collect();
            let vals = r
                .failures
                .iter()
                .map(|f| json!({"generator": name(&f.generator), "residual": f.residual.to_json(ring)}))
                .collect();
            ("fail", format!("fail: {}", parts.join("; ")), vals)
        }
    };
    rows.push(("overlap".to_string(), otext));
    j.insert("overlap".into(), json!({"verdict": ov, "failures": ofail}));

    let ok = c.passed();
    j.insert("consistent".into(), Value::Bool(ok));
    rows.push(("consistent".to_string(), ok.to_string()));
    (ok, ReportDocument { json: Value::Object(j), text: aligned(&rows) })
}

pub fn classification_report(pres: &DoePresentation, r: &ClassificationReport) -> ReportDocument {
    let decisions = [
        ("right_doe", &r.right_doe),
        ("double_via_det", &r.double_via_det),
        ("spbw", &r.spbw),
        ("bijective", &r.bijective),
    ];
    let flags = [
        ("trimmed", r.trimmed),
        ("graded", r.graded),
        ("connected", r.connected),
        ("quasi_commutative", r.quasi_commutative),
        ("derivation_type", r.derivation_type),
        ("endomorphism_type", r.endomorphism_type),
        ("constant", r.constant),
    ];
    let mut j = Map::new();
    let mut reasons = Map::new();
    for (k, d) in decisions {
        j.insert(k.into(), Value::String(d.verdict.as_str().into()));
        reasons.insert(k.into(), Value::String(d.reason.clone()));
    }
    for (k, f) in flags {
        j.insert(k.into(), Value::Bool(f));
    }
    j.insert("reasons".into(), Value::Object(reasons));
    j.insert(
        "citations".into(),
        Value::Array(
            r.citations
                .iter()
                .map(|(f, t)| json!({"field": f, "justification": t}))
                .collect(),
        ),
    );
    let g = grading_check(pres);
    j.insert("inhomogeneous".into(), json!(g.inhomogeneous));

    let rows: Vec<(String, String)> = vec![
        ("right_doe".into(), decision_text(&r.right_doe)),
        ("double_via_det".into(), decision_text(&r.double_via_det)),
        ("trimmed".into(), r.trimmed.to_string()),
        ("graded".into(), r.graded.to_string()),
        ("connected".into(), r.connected.to_string()),
        ("spbw".into(), decision_text(&r.spbw)),
        ("quasi_commutative".into(), r.quasi_commutative.to_string()),
        ("bijective".into(), decision_text(&r.bijective)),
        ("derivation_type".into(), r.derivation_type.to_string()),
        ("endomorphism_type".into(), r.endomorphism_type.to_string()),
        ("constant".into(), r.constant.to_string()),
    ];
    let mut text = aligned(&rows);
    for (f, t) in &r.citations {
        text.push_str(&format!("  [{f}] {t}\n"));
    }
    ReportDocument { json: Value::Object(j), text }
}

pub fn element_report(pres: &DoePresentation, e: &Element) -> ReportDocument {
    let ring = pres.ring();
    ReportDocument {
        json: e.to_json(ring),
        text: format!("{}\n", e.display(ring)),
    }
}

/// Closed-form dimensions, optionally with an oracle certificate.
pub fn hilbert_report(closed: Option<&[u128]>, cert: Option<&FreenessCertificate>) -> ReportDocument {
    let seq = |v: &[u128]| v.iter().map(u128::to_string).collect::<Vec<_>>().join(" ");
    let mut j = Map::new();
    let mut text = String::new();
    if let Some(c) = closed {
        j.insert("closed_form".into(), json!(c.iter().map(u128::to_string).collect::<Vec<_>>()));
        text.push_str(&seq(c));
    }
    if let Some(cert) = cert {
        let oracle: Vec<String> = cert.oracle.iter().map(usize::to_string).collect();
        let mut o = Map::new();
        o.insert("mode".into(), cert.mode.as_str().into());
        o.insert("dims".into(), json!(oracle));
        o.insert(
            "expected".into(),
            json!(cert.expected.iter().map(u128::to_string).collect::<Vec<_>>()),
        );
        o.insert("match".into(), Value::Bool(cert.passed()));
        if let Some((d, k)) = cert.first_deficit {
            o.insert("first_deficit".into(), json!({"degree": d, "deficit": k.to_string()}));
        }
        j.insert("oracle".into(), Value::Object(o));
        if closed.is_none() {
            text.push_str(&format!("{} ({} expected: {})", oracle.join(" "), cert.mode.as_str(), seq(&cert.expected)));
        }
        match cert.first_deficit {
            None => text.push_str(" | oracle: match"),
            Some((d, k)) => {
                text.push_str(&format!(" | oracle: mismatch at degree {d} (deficit {k}; oracle {})", oracle.join(" ")))
            }
        }
    }
    text.push('\n');
    ReportDocument { json: Value::Object(j), text }
}

pub fn det_sigma_report(pres: &DoePresentation, r: &DetSigmaReport) -> ReportDocument {
    let ring = pres.ring();
    let mut j = Map::new();
    let images: Map<String, Value> = ring
        .names()
        .iter()
        .zip(&r.endo.generator_images)
        .map(|(n, p)| (n.clone(), ring.poly_json(p)))
        .collect();
    j.insert("images".into(), Value::Object(images));
    j.insert("multiplicative".into(), Value::Bool(r.multiplicative()));
    j.insert("invertible".into(), Value::String(r.invertibility.as_str().into()));
    j.insert(
        "failures".into(),
        Value::Array(
            r.failures
                .iter()
                .map(|(a, b, p)| json!({"pair": [ring.names()[*a], ring.names()[*b]], "residual": ring.fmt_poly(p)}))
                .collect(),
        ),
    );
    let mut rows: Vec<(String, String)> = ring
        .names()
        .iter()
        .zip(&r.endo.generator_images)
        .map(|(n, p)| (format!("det σ({n})"), ring.fmt_poly(p)))
        .collect();
    rows.push(("multiplicative".into(), if r.multiplicative() { "pass".into() } else { "fail".into() }));
    rows.push(("invertible".into(), r.invertibility.as_str().into()));
    ReportDocument { json: Value::Object(j), text: aligned(&rows) }
}

pub fn catalogue_list_report(entries: &[EntryInfo]) -> ReportDocument {
    let mut text = String::new();
    let w = entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
    let mut arr = Vec::new();
    for e in entries {
        let params: Vec<String> = e.params.iter().map(|p| format!("{}={}", p.name, p.default)).collect();
        text.push_str(&format!("{:w$}  {}", e.name, e.description));
        if !params.is_empty() {
            text.push_str(&format!(" [{}]", params.join(" ")));
        }
        text.push('\n');
        arr.push(json!({
            "name": e.name,
            "description": e.description,
            "graded": e.graded,
            "params": e.params.iter().map(|p| json!({
                "name": p.name,
                "default": scalar_json(&crate::scalar::int(p.default)),
                "constraint": p.constraint,
            })).collect::<Vec<_>>(),
        }));
    }
    ReportDocument { json: Value::Array(arr), text }
}
