//! Brute-force dimension counts in the free algebra on `t1..tm, x1, x2`
//! modulo the defining relations, for certifying PBW freeness independently
//! of the rewriting engine.
//!
//! Degree-n words index the columns, and each product `u*g*v` of a relation
//! generator `g` with words `u, v` is a row. The dimension is
//! `#words - rank`. Ungraded presentations use the total-degree filtration
//! instead: words and products of degree at most n.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseRow};
use crate::poly::{BasePoly, RingDescriptor};
use crate::presentation::{grading_check, DoePresentation};
use crate::scalar::Scalar;

/// Default bound on the number of words in a single degree.
pub const DEFAULT_WORD_CAP: usize = 60_000;

type Word = Vec<u8>;

/// A relation generator as a linear combination of words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeRelation {
    pub terms: BTreeMap<Word, Scalar>,
}

impl FreeRelation {
    fn add(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    fn add_poly(&mut self, p: &BasePoly, suffix: &[u8], sign: &Scalar) {
        for (exps, c) in p.terms() {
            let mut w = monomial_word(exps);
            w.extend_from_slice(suffix);
            self.add(w, c * sign);
        }
    }
}

/// Whether counts are for graded pieces or filtration pieces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMode {
    Graded,
    Filtered,
}

impl OracleMode {
    pub fn as_str(self) -> &'static str {
        match self {
            OracleMode::Graded => "graded",
            OracleMode::Filtered => "filtered",
        }
    }
}

/// Letters `0..m` are the base generators, then `m` is x1 and `m+1` is x2.
fn monomial_word(exps: &[u32]) -> Word {
    let mut w = Vec::new();
    for (k, e) in exps.iter().enumerate() {
        w.extend(std::iter::repeat_n(k as u8, *e as usize));
    }
    w
}

/// The relation generators: commutators of the base generators, the
/// straightening elements and the commutation relation of `x2 x1`.
pub fn relation_set(pres: &DoePresentation) -> Vec<FreeRelation> {
    let m = pres.nvars();
    let (x1, x2) = (m as u8, m as u8 + 1);
    let one = Scalar::from_integer(1.into());
    let minus = -one.clone();
    let mut out = Vec::new();
    for j in 0..m {
        for k in 0..j {
            let mut g = FreeRelation { terms: BTreeMap::new() };
            g.add(vec![j as u8, k as u8], one.clone());
            g.add(vec![k as u8, j as u8], minus.clone());
            out.push(g);
        }
    }
    let maps = pres.maps();
    for i in 0..2 {
        for k in 0..m {
            let mut g = FreeRelation { terms: BTreeMap::new() };
            g.add(vec![x1 + i as u8, k as u8], one.clone());
            let s = &maps.sigma_images()[k];
            g.add_poly(s.entry(i, 0), &[x1], &minus);
            g.add_poly(s.entry(i, 1), &[x2], &minus);
            g.add_poly(maps.delta_images()[k].get(i), &[], &minus);
            out.push(g);
        }
    }
    let mut g = FreeRelation { terms: BTreeMap::new() };
    g.add(vec![x2, x1], one);
    g.add(vec![x1, x2], -pres.p12().clone());
    g.add(vec![x1, x1], -pres.p11().clone());
    let [t1, t2, t0] = pres.tau();
    g.add_poly(t1, &[x1], &minus);
    g.add_poly(t2, &[x2], &minus);
    g.add_poly(t0, &[], &minus);
    out.push(g);
    out
}

struct Alphabet {
    weights: Vec<u32>,
}

impl Alphabet {
    fn new(ring: &RingDescriptor) -> Self {
        let mut weights = ring.degrees().to_vec();
        weights.extend([1, 1]);
        Alphabet { weights }
    }

    fn degree(&self, w: &[u8]) -> u32 {
        w.iter().map(|&l| self.weights[l as usize]).sum()
    }

    /// Number of words of each weighted degree `0..=n`.
    fn counts(&self, n: usize) -> Vec<u128> {
        let mut c = vec![0u128; n + 1];
        c[0] = 1;
        for d in 1..=n {
            let mut s = 0u128;
            for &w in &self.weights {
                let w = w as usize;
                if w >= 1 && w <= d {
                    s = s.saturating_add(c[d - w]);
                }
            }
            c[d] = s;
        }
        c
    }

    /// Words of each degree `0..=n`, sorted in deglex order.
    fn words(&self, n: usize) -> Vec<Vec<Word>> {
        let mut by_deg: Vec<Vec<Word>> = vec![Vec::new(); n + 1];
        by_deg[0].push(Vec::new());
        for d in 1..=n {
            let mut ws = Vec::new();
            for (l, &w) in self.weights.iter().enumerate() {
                let w = w as usize;
                if w == 0 || w > d {
                    continue;
                }
                for tail in &by_deg[d - w] {
                    let mut word = Vec::with_capacity(tail.len() + 1);
                    word.push(l as u8);
                    word.extend_from_slice(tail);
                    ws.push(word);
                }
            }
            ws.sort();
            by_deg[d] = ws;
        }
        by_deg
    }
}

/// Dimension of the quotient on the span of `words`, with rows the products
/// `u*g*v` landing in `lo..=hi` total degree.
fn quotient_dim(
    alpha: &Alphabet,
    words: &[Vec<Word>],
    rels: &[(u32, FreeRelation)],
    lo: usize,
    hi: usize,
) -> usize {
    let mut index: HashMap<&[u8], usize> = HashMap::new();
    for ws in &words[lo..=hi] {
        for w in ws {
            let i = index.len();
            index.insert(w.as_slice(), i);
        }
    }
    let mut ech = Echelon::new();
    for (dg, g) in rels {
        let dg = *dg as usize;
        if dg > hi {
            continue;
        }
        for total in lo.max(dg)..=hi {
            let free = total - dg;
            for du in 0..=free {
                for u in &words[du] {
                    for v in &words[free - du] {
                        let mut row: SparseRow = g
                            .terms
                            .iter()
                            .map(|(w, c)| {
                                let mut full = Vec::with_capacity(u.len() + w.len() + v.len());
                                full.extend_from_slice(u);
                                full.extend_from_slice(w);
                                full.extend_from_slice(v);
                                (index[full.as_slice()], c.clone())
                            })
                            .collect();
                        row.sort_by_key(|e| e.0);
                        ech.insert(row);
                    }
                }
            }
        }
    }
    debug_assert!(alpha.weights.len() < 256);
    index.len() - ech.rank()
}

/// Graded-piece dimensions `d_0..d_N`, or filtration-piece dimensions when
/// the presentation is not graded. Refuses once a degree has more than
/// `cap` words.
pub fn free_dims(pres: &DoePresentation, n: usize, cap: usize) -> Result<(OracleMode, Vec<usize>)> {
    let graded = grading_check(pres).graded;
    let ring = pres.ring();
    if ring.degrees().contains(&0) {
        return Err(Error::Refused("base generators of degree 0 give infinite pieces".into()));
    }
    let alpha = Alphabet::new(ring);
    let counts = alpha.counts(n);
    let mode = if graded { OracleMode::Graded } else { OracleMode::Filtered };
    let mut acc = 0u128;
    for (d, c) in counts.iter().enumerate() {
        acc = acc.saturating_add(*c);
        let size = if graded { *c } else { acc };
        if size > cap as u128 {
            return Err(Error::ResourceCap {
                degree: d,
                words: size,
                cap,
            });
        }
    }
    let words = alpha.words(n);
    let rels: Vec<(u32, FreeRelation)> = relation_set(pres)
        .into_iter()
        .filter(|g| !g.terms.is_empty())
        .map(|g| {
            let d = g.terms.keys().map(|w| alpha.degree(w)).max().unwrap_or(0);
            (d, g)
        })
        .collect();
    let dims = (0..=n)
        .into_par_iter()
        .map(|d| {
            let lo = if graded { d } else { 0 };
            quotient_dim(&alpha, &words, &rels, lo, d)
        })
        .collect();
    Ok((mode, dims))
}

/// Coefficients of `H_R(s) / (1-s)^2` with `H_R(s) = prod 1/(1 - s^deg t_k)`.
/// With all degrees one this is `C(n+m+1, m+1)`.
pub fn hilbert_closed_form(pres: &DoePresentation, n: usize) -> Result<Vec<u128>> {
    let g = grading_check(pres);
    if !g.graded {
        return Err(Error::Refused(
            "presentation is not graded; use the oracle's filtered counts".into(),
        ));
    }
    pbw_series(pres.ring(), n)
}

fn pbw_series(ring: &RingDescriptor, n: usize) -> Result<Vec<u128>> {
    if !ring.is_connected() {
        return Err(Error::Refused("base ring is not connected".into()));
    }
    let mut c = vec![0u128; n + 1];
    c[0] = 1;
    for w in ring.degrees().iter().copied().chain([1, 1]) {
        let w = w as usize;
        // multiply by 1/(1 - s^w)
        for d in w..=n {
            c[d] = c[d].saturating_add(c[d - w]);
        }
    }
    Ok(c)
}

/// Outcome of comparing oracle counts with the PBW monomial counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreenessCertificate {
    pub mode: OracleMode,
    pub max_deg: usize,
    pub oracle: Vec<usize>,
    pub expected: Vec<u128>,
    /// First degree where the counts differ, with `expected - oracle`.
    pub first_deficit: Option<(usize, i128)>,
}

impl FreenessCertificate {
    pub fn passed(&self) -> bool {
        self.first_deficit.is_none()
    }
}

/// PBW freeness through degree `n`: graded dimensions against the closed
/// form, or filtration dimensions against the count of monomials
/// `t^b x1^a1 x2^a2` of degree at most `n`.
pub fn pbw_freeness_check(pres: &DoePresentation, n: usize, cap: usize) -> Result<FreenessCertificate> {
    let (mode, oracle) = free_dims(pres, n, cap)?;
    let mut expected = pbw_series(pres.ring(), n)?;
    if mode == OracleMode::Filtered {
        for d in 1..=n {
            expected[d] = expected[d].saturating_add(expected[d - 1]);
        }
    }
    let first_deficit = oracle
        .iter()
        .zip(&expected)
        .enumerate()
        .find(|(_, (o, e))| **o as u128 != **e)
        .map(|(d, (o, e))| (d, *e as i128 - *o as i128));
    Ok(FreenessCertificate {
        mode,
        max_deg: n,
        oracle,
        expected,
        first_deficit,
    })
}
