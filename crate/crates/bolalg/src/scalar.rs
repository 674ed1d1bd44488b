use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. `BigRational` keeps values in lowest terms with a
/// positive denominator, which is exactly the invariant the whole crate
/// relies on for decidable equality.
pub type Scalar = BigRational;

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Test/fixture helper; panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Scalar {
    assert!(den != 0, "zero denominator");
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses the rational literal grammar used by every file format and CLI
/// flag: optional sign, integer, optional `/` followed by a positive
/// integer. `-3/2` and `7` are valid; `3/-2` and `3/0` are not.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let err = |reason: &str| Error::Rational {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let s = text.trim();
    if s.is_empty() {
        return Err(err("empty"));
    }
    let (num_part, den_part) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numerator = parse_signed_int(num_part).ok_or_else(|| err("bad numerator"))?;
    let denominator = match den_part {
        None => BigInt::one(),
        Some(d) => {
            // Denominator sign is part of the grammar, not normalization:
            // only an unsigned positive integer is accepted.
            let d = d.trim();
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err("denominator must be a positive integer"));
            }
            let value: BigInt = d.parse().expect("digits");
            if value.is_zero() {
                return Err(err("denominator must be a positive integer"));
            }
            value
        }
    };
    Ok(Scalar::new(numerator, denominator))
}

fn parse_signed_int(text: &str) -> Option<BigInt> {
    let t = text.trim();
    let digits = t.strip_prefix('-').or_else(|| t.strip_prefix('+')).unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    t.parse().ok()
}

/// Canonical display form: `n` when the denominator is 1, else `n/d` with
/// d > 0. This is re-parseable by `parse_scalar`.
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

pub fn is_negative(x: &Scalar) -> bool {
    x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_integers() {
        assert_eq!(parse_scalar("7").unwrap(), int(7));
        assert_eq!(parse_scalar("-12").unwrap(), int(-12));
        assert_eq!(parse_scalar("+3").unwrap(), int(3));
        assert_eq!(parse_scalar("0").unwrap(), zero());
    }

    #[test]
    fn parses_fractions_in_lowest_terms() {
        assert_eq!(parse_scalar("-3/2").unwrap(), frac(-3, 2));
        assert_eq!(parse_scalar("4/6").unwrap(), frac(2, 3));
        assert_eq!(parse_scalar("0/5").unwrap(), zero());
    }

    #[test]
    fn rejects_malformed_literals() {
        for bad in ["", "/2", "3/", "3/-2", "3/0", "1.5", "2/2/2", "a", "- 3"] {
            assert!(parse_scalar(bad).is_err(), "accepted `{bad}`");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in ["-3/2", "7", "0", "22/7"] {
            let v = parse_scalar(s).unwrap();
            assert_eq!(parse_scalar(&format_scalar(&v)).unwrap(), v);
        }
        assert_eq!(format_scalar(&frac(4, 6)), "2/3");
        assert_eq!(format_scalar(&int(-5)), "-5");
    }
}
