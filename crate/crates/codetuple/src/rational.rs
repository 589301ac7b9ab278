//! Exact rational arithmetic. Every probability and every average length in
//! this crate is a [`Rational`]; floating point is never used for a value
//! that a test compares.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Convenience constructor from machine integers.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses `"p/q"`, a plain integer, or a finite decimal such as `"0.3"`
/// (which converts exactly to `3/10`).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::InvalidRational(text.to_string()));
    }
    if let Some(dot) = s.find('.') {
        let (int_part, frac_part) = (&s[..dot], &s[dot + 1..]);
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::InvalidRational(text.to_string()));
        }
        let (sign, digits) = match int_part.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, int_part.strip_prefix('+').unwrap_or(int_part)),
        };
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::InvalidRational(text.to_string()));
        }
        let int: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits
                .parse()
                .map_err(|_| Error::InvalidRational(text.to_string()))?
        };
        let frac: BigInt = frac_part
            .parse()
            .map_err(|_| Error::InvalidRational(text.to_string()))?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let numer = (int * &scale + frac) * BigInt::from(sign);
        return Ok(Rational::new(numer, scale));
    }
    s.parse::<Rational>()
        .map_err(|_| Error::InvalidRational(text.to_string()))
}

/// `2^(-len)` as an exact rational; `len = 0` gives 1.
pub fn pow2_inverse(len: usize) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << len)
}

pub fn is_one(r: &Rational) -> bool {
    r.is_one()
}

pub fn is_positive(r: &Rational) -> bool {
    r.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fraction_and_decimal() {
        assert_eq!(parse_rational("7/68").unwrap(), ratio(7, 68));
        assert_eq!(parse_rational("0.1").unwrap(), ratio(1, 10));
        assert_eq!(parse_rational("0.3").unwrap(), ratio(3, 10));
        assert_eq!(parse_rational("2").unwrap(), ratio(2, 1));
        assert_eq!(parse_rational("-1.25").unwrap(), ratio(-5, 4));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/").is_err());
        assert!(parse_rational("0.1.2").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn kraft_term() {
        assert_eq!(pow2_inverse(0), ratio(1, 1));
        assert_eq!(pow2_inverse(3), ratio(1, 8));
    }
}
