//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Element of the coefficient field, fixed to the rationals.
pub type Scalar = BigRational;

/// Builds `num/den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn is_one(c: &Scalar) -> bool {
    c.is_one()
}

/// Formats as `n` or `n/d`.
pub fn fmt_scalar(c: &Scalar) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Parses an integer or fraction literal such as `-3`, `7/2`.
pub fn parse_scalar(s: &str) -> Option<Scalar> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

/// Canonical JSON form: `{"den": "...", "num": "..."}` with a positive denominator.
pub fn scalar_json(c: &Scalar) -> serde_json::Value {
    let mut m = serde_json::Map::new();
    m.insert("den".into(), c.denom().to_string().into());
    m.insert("num".into(), c.numer().to_string().into());
    serde_json::Value::Object(m)
}

pub(crate) fn is_negative(c: &Scalar) -> bool {
    c.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        let c = rat(6, -4);
        assert_eq!(c.numer(), &BigInt::from(-3));
        assert_eq!(c.denom(), &BigInt::from(2));
        assert_eq!(fmt_scalar(&c), "-3/2");
    }

    #[test]
    fn parse_literals() {
        assert_eq!(parse_scalar("-3"), Some(int(-3)));
        assert_eq!(parse_scalar("10/4"), Some(rat(5, 2)));
        assert_eq!(parse_scalar("1/0"), None);
        assert_eq!(parse_scalar("x"), None);
    }

    #[test]
    fn json_uses_strings() {
        assert_eq!(scalar_json(&rat(-1, 3)).to_string(), r#"{"den":"3","num":"-1"}"#);
    }
}
