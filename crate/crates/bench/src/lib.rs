//! Seeded inputs shared by the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewpbw::scalar::rat;
use skewpbw::{catalogue, BasePoly, DoePresentation, Element, XMonomial};

pub fn presentation(name: &str) -> DoePresentation {
    catalogue::default_example(name).expect("catalogue entry").presentation
}

/// Random element with `terms` terms: coefficients `c t^e` with `|e| <= deg`
/// times `x1^a x2^b` with `a + b <= deg`.
pub fn random_element(pres: &DoePresentation, seed: u64, deg: u32, terms: usize) -> Element {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    let m = pres.nvars();
    let mut out = Element::zero(m);
    for _ in 0..terms {
        let mut e = vec![0u32; m];
        if m > 0 {
            for _ in 0..r.gen_range(0..=deg) {
                e[r.gen_range(0..m)] += 1;
            }
        }
        let c = rat(r.gen_range(1..=9), r.gen_range(1..=3));
        let coeff = BasePoly::from_terms(m, vec![(e, c)]).expect("exponent length matches");
        let a = r.gen_range(0..=deg);
        let b = r.gen_range(0..=deg - a);
        out.add_term(XMonomial::new(a, b), coeff);
    }
    out
}

/// `x2^n` and `x1^n`, whose product needs the most rewriting.
pub fn reversed_powers(pres: &DoePresentation, n: u32) -> (Element, Element) {
    let m = pres.nvars();
    (Element::x(m, 0, n), Element::x(m, n, 0))
}
