//! Text format for presentations and elements.
//!
//! ```text
//! # A1(p, a, b, c)
//! params p=3 a=1 b=2 c=1
//! require b != 1
//! base poly(t) deg 1
//! sigma11: t -> b*t
//! sigma22: t -> (1/b)*t
//! delta2: t -> c*t^2
//! P = (p, 0)
//! tau = ((b*c/(1-b))*(p*b-1)*t, 0, a*t^2)
//! ```
//!
//! One directive per line, `#` starts a comment. Omitted diagonal entries of
//! sigma are identity images; omitted off-diagonal entries, deltas and tails
//! are zero. `σ` and `δ` may replace `sigma` and `delta`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::element::Element;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::maps::{Column2, Matrix2};
use crate::poly::{BasePoly, RingDescriptor};
use crate::presentation::{DoePresentation, PresentationData};
use crate::scalar::{fmt_scalar, Scalar};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(&'static str),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn tokenize(line_no: usize, line: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token {
                tok: Tok::Num(s.parse().expect("digits")),
                line: line_no,
                col,
            });
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                line: line_no,
                col,
            });
            continue;
        }
        let two: String = chars[i..(i + 2).min(chars.len())].iter().collect();
        let sym = match two.as_str() {
            "->" => Some("->"),
            "!=" => Some("!="),
            _ => None,
        };
        if let Some(s) = sym {
            out.push(Token { tok: Tok::Sym(s), line: line_no, col });
            i += 2;
            continue;
        }
        let s = match c {
            '+' => "+",
            '-' => "-",
            '*' => "*",
            '/' => "/",
            '^' => "^",
            '(' => "(",
            ')' => ")",
            ',' => ",",
            '=' => "=",
            ':' => ":",
            '[' => "[",
            ']' => "]",
            '→' => "->",
            '≠' => "!=",
            _ => return Err(Error::parse(line_no, col, format!("unexpected character `{c}`"))),
        };
        out.push(Token { tok: Tok::Sym(s), line: line_no, col });
        i += 1;
    }
    Ok(out)
}

#[derive(Debug, Clone)]
enum Expr {
    Num(BigInt),
    Ident(String, usize, usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    /// Divisor position is kept for error reporting.
    Div(Box<Expr>, Box<Expr>, usize, usize),
    Pow(Box<Expr>, u32),
}

struct Cursor<'a> {
    toks: &'a [Token],
    pos: usize,
    line: usize,
    eol: usize,
}

impl<'a> Cursor<'a> {
    fn new(toks: &'a [Token], line: usize, len: usize) -> Self {
        Cursor { toks, pos: 0, line, eol: len + 1 }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        match self.toks.get(self.pos) {
            Some(t) => (t.line, t.col),
            None => (self.line, self.eol),
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        let (l, c) = self.here();
        Err(Error::parse(l, c, msg))
    }

    fn eat(&mut self, s: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Sym(x)) if *x == s) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.eat(s) {
            Ok(())
        } else {
            self.err(format!("expected `{s}`"))
        }
    }

    fn ident(&mut self) -> Result<(String, usize, usize)> {
        let (l, c) = self.here();
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok((s, l, c))
            }
            _ => self.err("expected identifier"),
        }
    }

    fn keyword(&mut self, k: &str) -> Result<()> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == k => {
                self.pos += 1;
                Ok(())
            }
            _ => self.err(format!("expected `{k}`")),
        }
    }

    fn uint(&mut self) -> Result<u32> {
        match self.peek() {
            Some(Tok::Num(n)) => {
                let v = n.to_u32();
                match v {
                    Some(v) => {
                        self.pos += 1;
                        Ok(v)
                    }
                    None => self.err("exponent too large"),
                }
            }
            _ => self.err("malformed exponent: expected a nonnegative integer"),
        }
    }

    fn done(&self) -> Result<()> {
        if self.pos < self.toks.len() {
            self.err("unexpected trailing input")
        } else {
            Ok(())
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat("+") {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat("-") {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat("*") {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat("/") {
                let (l, c) = self.here();
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), l, c);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat("-") {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat("+") {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat("^") {
            let e = self.uint()?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let (l, c) = self.here();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Ident(s, l, c))
            }
            Some(Tok::Sym("(")) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(")")?;
                Ok(e)
            }
            _ => self.err("expected a number, identifier or `(`"),
        }
    }
}

/// An evaluation context: the ring of values plus identifier lookup.
trait Domain {
    type V: Clone;
    fn scalar(&self, c: Scalar) -> Self::V;
    fn lookup(&mut self, name: &str, line: usize, col: usize) -> Result<Self::V>;
    fn add(&mut self, a: &Self::V, b: &Self::V) -> Self::V;
    fn mul(&mut self, a: &Self::V, b: &Self::V) -> Self::V;
    fn as_scalar(&self, v: &Self::V) -> Option<Scalar>;
    fn scale(&self, v: &Self::V, c: &Scalar) -> Self::V;
}

fn eval<D: Domain>(d: &mut D, e: &Expr) -> Result<D::V> {
    Ok(match e {
        Expr::Num(n) => d.scalar(Scalar::from_integer(n.clone())),
        Expr::Ident(s, l, c) => d.lookup(s, *l, *c)?,
        Expr::Neg(a) => {
            let v = eval(d, a)?;
            d.scale(&v, &-Scalar::one())
        }
        Expr::Add(a, b) => {
            let (x, y) = (eval(d, a)?, eval(d, b)?);
            d.add(&x, &y)
        }
        Expr::Sub(a, b) => {
            let (x, y) = (eval(d, a)?, eval(d, b)?);
            let y = d.scale(&y, &-Scalar::one());
            d.add(&x, &y)
        }
        Expr::Mul(a, b) => {
            let (x, y) = (eval(d, a)?, eval(d, b)?);
            d.mul(&x, &y)
        }
        Expr::Div(a, b, l, c) => {
            let x = eval(d, a)?;
            let y = eval(d, b)?;
            match d.as_scalar(&y) {
                Some(s) if !s.is_zero() => d.scale(&x, &s.recip()),
                Some(_) => return Err(Error::parse(*l, *c, "division by zero")),
                None => return Err(Error::parse(*l, *c, "division by a non-constant")),
            }
        }
        Expr::Pow(a, n) => {
            let x = eval(d, a)?;
            let mut acc = d.scalar(Scalar::one());
            for _ in 0..*n {
                acc = d.mul(&acc, &x);
            }
            acc
        }
    })
}

/// Base-ring polynomials; parameters evaluate to constants.
struct PolyDomain<'a> {
    ring: &'a RingDescriptor,
    params: &'a BTreeMap<String, Scalar>,
}

impl Domain for PolyDomain<'_> {
    type V = BasePoly;

    fn scalar(&self, c: Scalar) -> BasePoly {
        self.ring.constant(c)
    }

    fn lookup(&mut self, name: &str, line: usize, col: usize) -> Result<BasePoly> {
        if let Some(k) = self.ring.index_of(name) {
            return Ok(self.ring.var(k));
        }
        if let Some(v) = self.params.get(name) {
            return Ok(self.ring.constant(v.clone()));
        }
        Err(Error::parse(line, col, format!("unbound identifier `{name}`")))
    }

    fn add(&mut self, a: &BasePoly, b: &BasePoly) -> BasePoly {
        a + b
    }

    fn mul(&mut self, a: &BasePoly, b: &BasePoly) -> BasePoly {
        a * b
    }

    fn as_scalar(&self, v: &BasePoly) -> Option<Scalar> {
        v.as_constant()
    }

    fn scale(&self, v: &BasePoly, c: &Scalar) -> BasePoly {
        v.scale(c)
    }
}

/// Elements of the extension, multiplied through the engine.
struct ElementDomain<'a> {
    ring: &'a RingDescriptor,
    engine: Engine<'a>,
}

impl Domain for ElementDomain<'_> {
    type V = Element;

    fn scalar(&self, c: Scalar) -> Element {
        Element::scalar(self.ring.generator_count(), c)
    }

    fn lookup(&mut self, name: &str, line: usize, col: usize) -> Result<Element> {
        let n = self.ring.generator_count();
        if let Some(k) = self.ring.index_of(name) {
            return Ok(Element::from_ring(self.ring.var(k)));
        }
        match name {
            "x1" => Ok(Element::x(n, 1, 0)),
            "x2" => Ok(Element::x(n, 0, 1)),
            _ => Err(Error::parse(line, col, format!("unknown generator `{name}`"))),
        }
    }

    fn add(&mut self, a: &Element, b: &Element) -> Element {
        a.add(b)
    }

    fn mul(&mut self, a: &Element, b: &Element) -> Element {
        self.engine.multiply(a, b)
    }

    fn as_scalar(&self, v: &Element) -> Option<Scalar> {
        if v.is_zero() {
            return Some(Scalar::zero());
        }
        if v.len() != 1 {
            return None;
        }
        let (m, r) = v.terms().next()?;
        if m.degree() != 0 {
            return None;
        }
        r.as_constant()
    }

    fn scale(&self, v: &Element, c: &Scalar) -> Element {
        v.scale(c)
    }
}

/// A parsed presentation file.
#[derive(Debug, Clone)]
pub struct PresentationSource {
    pub text: String,
    pub presentation: DoePresentation,
    /// Parameter values after applying overrides.
    pub bindings: BTreeMap<String, Scalar>,
    /// `(line, column)` of each directive, keyed by directive name
    /// (`params`, `base`, `sigma11:t`, `delta2:t`, `P`, `tau`, ...).
    pub spans: BTreeMap<String, (usize, usize)>,
}

pub fn parse_presentation(text: &str) -> Result<PresentationSource> {
    parse_presentation_with(text, &BTreeMap::new())
}

/// Parses with parameter overrides; every override must name a declared
/// parameter.
pub fn parse_presentation_with(
    text: &str,
    overrides: &BTreeMap<String, Scalar>,
) -> Result<PresentationSource> {
    let mut params: BTreeMap<String, Scalar> = BTreeMap::new();
    let mut spans: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    let mut ring: Option<RingDescriptor> = None;
    let mut sigma: BTreeMap<(usize, usize, usize), BasePoly> = BTreeMap::new();
    let mut delta: BTreeMap<(usize, usize), BasePoly> = BTreeMap::new();
    let mut pvals: Option<(Scalar, Scalar)> = None;
    let mut tau: Option<[BasePoly; 3]> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks = tokenize(line, raw)?;
        if toks.is_empty() {
            continue;
        }
        let mut cur = Cursor::new(&toks, line, raw.chars().count());
        let (head, hl, hc) = cur.ident()?;
        let mut claim = |key: String| -> Result<()> {
            if spans.insert(key.clone(), (hl, hc)).is_some() {
                return Err(Error::parse(hl, hc, format!("duplicate directive `{key}`")));
            }
            Ok(())
        };
        match head.as_str() {
            "params" => {
                if ring.is_some() {
                    return Err(Error::parse(hl, hc, "params must precede base"));
                }
                while cur.peek().is_some() {
                    let (name, l, c) = cur.ident()?;
                    cur.expect("=")?;
                    let e = cur.expr()?;
                    let field = RingDescriptor::field();
                    let v = eval_poly(&field, &params, &e)?;
                    let v = v
                        .as_constant()
                        .ok_or_else(|| Error::parse(l, c, "parameter value must be constant"))?;
                    let v = overrides.get(&name).cloned().unwrap_or(v);
                    if params.insert(name.clone(), v).is_some() {
                        return Err(Error::parse(l, c, format!("parameter `{name}` declared twice")));
                    }
                    spans.insert(format!("param:{name}"), (l, c));
                    cur.eat(",");
                }
            }
            "require" => {
                let lhs = cur.expr()?;
                let ne = if cur.eat("!=") {
                    true
                } else if cur.eat("=") {
                    false
                } else {
                    return cur.err("expected `!=` or `=`");
                };
                let rhs = cur.expr()?;
                cur.done()?;
                check_requirement(&params, &lhs, ne, &rhs, hl, hc)?;
            }
            "base" => {
                claim("base".into())?;
                cur.keyword("poly")?;
                cur.expect("(")?;
                let mut names = Vec::new();
                if !cur.eat(")") {
                    loop {
                        let (n, l, c) = cur.ident()?;
                        if n == "x1" || n == "x2" || params.contains_key(&n) || names.contains(&n) {
                            return Err(Error::parse(l, c, format!("generator name `{n}` is reserved or repeated")));
                        }
                        names.push(n);
                        if cur.eat(")") {
                            break;
                        }
                        cur.expect(",")?;
                    }
                }
                let mut r = RingDescriptor::new(names);
                let bracket = cur.eat("[");
                if matches!(cur.peek(), Some(Tok::Ident(s)) if s == "deg") {
                    cur.pos += 1;
                    let (l, c) = cur.here();
                    let mut degs = Vec::new();
                    while matches!(cur.peek(), Some(Tok::Num(_))) {
                        degs.push(cur.uint()?);
                        cur.eat(",");
                    }
                    r = r.with_degrees(degs).map_err(|e| Error::parse(l, c, e.to_string()))?;
                } else if bracket {
                    return cur.err("expected `deg`");
                }
                if bracket {
                    cur.expect("]")?;
                }
                cur.done()?;
                ring = Some(r);
            }
            "P" => {
                claim("P".into())?;
                cur.expect("=")?;
                cur.expect("(")?;
                let field = RingDescriptor::field();
                let mut vals = Vec::new();
                for k in 0..2 {
                    if k > 0 {
                        cur.expect(",")?;
                    }
                    let (l, c) = cur.here();
                    let e = cur.expr()?;
                    let v = eval_poly(&field, &params, &e)?
                        .as_constant()
                        .ok_or_else(|| Error::parse(l, c, "entries of P must be constants"))?;
                    vals.push(v);
                }
                cur.expect(")")?;
                cur.done()?;
                pvals = Some((vals[0].clone(), vals[1].clone()));
            }
            "tau" | "τ" => {
                claim("tau".into())?;
                let r = ring.as_ref().ok_or_else(|| Error::parse(hl, hc, "tau before base"))?;
                cur.expect("=")?;
                cur.expect("(")?;
                let mut vals = Vec::new();
                for k in 0..3 {
                    if k > 0 {
                        cur.expect(",")?;
                    }
                    let e = cur.expr()?;
                    vals.push(eval_poly(r, &params, &e)?);
                }
                cur.expect(")")?;
                cur.done()?;
                let [a, b, c]: [BasePoly; 3] = vals.try_into().expect("three entries");
                tau = Some([a, b, c]);
            }
            other => {
                let (kind, digits) = if let Some(d) = other.strip_prefix("sigma").or_else(|| other.strip_prefix('σ')) {
                    ("sigma", d)
                } else if let Some(d) = other.strip_prefix("delta").or_else(|| other.strip_prefix('δ')) {
                    ("delta", d)
                } else {
                    return Err(Error::parse(hl, hc, format!("unknown directive `{other}`")));
                };
                let idx: Vec<usize> = digits
                    .chars()
                    .map(|c| match c {
                        '1' => Some(0),
                        '2' => Some(1),
                        _ => None,
                    })
                    .collect::<Option<Vec<_>>>()
                    .unwrap_or_default();
                let want = if kind == "sigma" { 2 } else { 1 };
                if idx.len() != want {
                    return Err(Error::parse(hl, hc, format!("unknown directive `{other}`")));
                }
                let r = ring
                    .as_ref()
                    .ok_or_else(|| Error::parse(hl, hc, format!("{kind} before base")))?;
                cur.expect(":")?;
                let (g, gl, gc) = cur.ident()?;
                let k = r
                    .index_of(&g)
                    .ok_or_else(|| Error::parse(gl, gc, format!("unknown generator `{g}`")))?;
                cur.expect("->")?;
                let e = cur.expr()?;
                cur.done()?;
                let v = eval_poly(r, &params, &e)?;
                let label: String = idx.iter().map(|i| char::from(b'1' + *i as u8)).collect();
                claim(format!("{kind}{label}:{g}"))?;
                if kind == "sigma" {
                    sigma.insert((k, idx[0], idx[1]), v);
                } else {
                    delta.insert((k, idx[0]), v);
                }
            }
        }
    }

    for k in overrides.keys() {
        if !params.contains_key(k) {
            return Err(Error::Constraint(format!("no parameter `{k}` declared")));
        }
    }
    let ring = ring.ok_or_else(|| Error::parse(1, 1, "missing `base poly(...)` directive"))?;
    let (p12, p11) = pvals.ok_or_else(|| Error::parse(1, 1, "missing `P = (p12, p11)` directive"))?;
    let m = ring.generator_count();
    let mut data = PresentationData::trivial(ring.clone(), p12, p11);
    for k in 0..m {
        let mut mat = Matrix2::identity(m).0;
        for (i, row) in mat.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = match sigma.remove(&(k, i, j)) {
                    Some(v) => v,
                    None if i == j => ring.var(k),
                    None => ring.zero(),
                };
            }
        }
        data.sigma[k] = Matrix2(mat);
        data.delta[k] = Column2::new(
            delta.remove(&(k, 0)).unwrap_or_else(|| ring.zero()),
            delta.remove(&(k, 1)).unwrap_or_else(|| ring.zero()),
        );
    }
    if let Some([a, b, c]) = tau {
        data.tau1 = a;
        data.tau2 = b;
        data.tau0 = c;
    }
    Ok(PresentationSource {
        text: text.to_string(),
        presentation: DoePresentation::new(data)?,
        bindings: params,
        spans,
    })
}

fn check_requirement(
    params: &BTreeMap<String, Scalar>,
    lhs: &Expr,
    ne: bool,
    rhs: &Expr,
    l: usize,
    c: usize,
) -> Result<()> {
    let field = RingDescriptor::field();
    let a = eval_poly(&field, params, lhs)?;
    let b = eval_poly(&field, params, rhs)?;
    if (a == b) == ne {
        return Err(Error::Constraint(format!(
            "line {l}, column {c}: requirement `{} {} {}` fails",
            field.fmt_poly(&a),
            if ne { "!=" } else { "=" },
            field.fmt_poly(&b)
        )));
    }
    Ok(())
}

/// Canonical text of a presentation. Parameters are already substituted,
/// so the output has no `params` line.
pub fn print_presentation(pres: &DoePresentation) -> String {
    let ring = pres.ring();
    let mut out = String::new();
    out.push_str(&format!("base poly({})", ring.names().join(", ")));
    if !ring.all_degree_one() {
        let d: Vec<String> = ring.degrees().iter().map(u32::to_string).collect();
        out.push_str(&format!(" deg {}", d.join(" ")));
    }
    out.push('\n');
    let maps = pres.maps();
    for i in 0..2 {
        for j in 0..2 {
            for (k, name) in ring.names().iter().enumerate() {
                let v = maps.sigma_images()[k].entry(i, j);
                let default = if i == j { ring.var(k) } else { ring.zero() };
                if *v != default {
                    out.push_str(&format!("sigma{}{}: {} -> {}\n", i + 1, j + 1, name, ring.fmt_poly(v)));
                }
            }
        }
    }
    for i in 0..2 {
        for (k, name) in ring.names().iter().enumerate() {
            let v = maps.delta_images()[k].get(i);
            if !v.is_zero() {
                out.push_str(&format!("delta{}: {} -> {}\n", i + 1, name, ring.fmt_poly(v)));
            }
        }
    }
    out.push_str(&format!(
        "P = ({}, {})\n",
        fmt_scalar(pres.p12()),
        fmt_scalar(pres.p11())
    ));
    let [t1, t2, t0] = pres.tau();
    if !(t1.is_zero() && t2.is_zero() && t0.is_zero()) {
        out.push_str(&format!(
            "tau = ({}, {}, {})\n",
            ring.fmt_poly(t1),
            ring.fmt_poly(t2),
            ring.fmt_poly(t0)
        ));
    }
    out
}

/// Parses an element expression such as `2*t1*x1^2 - x2*x1 + 1/3` and
/// returns its normal form. Products are computed by the engine, so the
/// presentation must be consistent.
pub fn parse_element(pres: &DoePresentation, text: &str) -> Result<Element> {
    let mut toks = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        toks.extend(tokenize(idx + 1, raw)?);
    }
    let last_len = text.lines().last().map_or(0, |l| l.chars().count());
    let mut cur = Cursor::new(&toks, text.lines().count().max(1), last_len);
    if toks.is_empty() {
        return cur.err("empty expression");
    }
    let e = cur.expr()?;
    cur.done()?;
    let mut d = ElementDomain {
        ring: pres.ring(),
        engine: Engine::new(pres)?,
    };
    eval(&mut d, &e)
}

/// Parses a base-ring polynomial over `ring`.
pub fn parse_poly(ring: &RingDescriptor, text: &str) -> Result<BasePoly> {
    let toks = tokenize(1, text)?;
    let mut cur = Cursor::new(&toks, 1, text.chars().count());
    let e = cur.expr()?;
    cur.done()?;
    eval_poly(ring, &BTreeMap::new(), &e)
}

fn eval_poly(ring: &RingDescriptor, params: &BTreeMap<String, Scalar>, e: &Expr) -> Result<BasePoly> {
    let mut d = PolyDomain { ring, params };
    eval(&mut d, e)
}
