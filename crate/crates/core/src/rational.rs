//! Exact rational scalars.
//!
//! Every function value, LP coefficient and relaxation value in this crate is a
//! [`Rational`]. The canonical text form is `p/q` with `q` omitted when it is 1,
//! which is exactly what `Display` on [`BigRational`] produces.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Rational = BigRational;

/// `p/q` as a rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

pub fn half() -> Rational {
    rat(1, 2)
}

/// Parses an optionally signed integer or `p/q` with `q > 0`.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = || Error::BadRational(s.to_string());
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (s, None),
    };
    let num: BigInt = parse_int(num).ok_or_else(bad)?;
    let den: BigInt = match den {
        Some(q) => {
            if q.starts_with(['+', '-']) {
                return Err(bad());
            }
            parse_int(q).ok_or_else(bad)?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn is_integer_valued(r: &Rational) -> bool {
    r.is_integer()
}

/// Sign as -1, 0 or 1.
pub fn signum(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

pub fn min_of<'a, I: IntoIterator<Item = &'a Rational>>(values: I) -> Option<Rational> {
    values.into_iter().min().cloned()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_text_form() {
        assert_eq!(format_rational(&rat(-6, 20)), "-3/10");
        assert_eq!(format_rational(&rat(4, 2)), "2");
        assert_eq!(format_rational(&rat(0, 7)), "0");
        assert_eq!(format_rational(&rat(3, -4)), "-3/4");
    }

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("-3/10").unwrap(), rat(-3, 10));
        assert_eq!(parse_rational("+7").unwrap(), int(7));
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        for bad in ["", "1/0", "a", "1/", "/2", "1.5", "1/-2", "--1"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn lowest_terms_positive_denominator() {
        let r = rat(10, -4);
        assert_eq!(r.numer(), &BigInt::from(-5));
        assert_eq!(r.denom(), &BigInt::from(2));
    }
}
