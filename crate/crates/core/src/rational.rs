//! Exact rational helpers. Every length, offset and function value in the
//! crate is a [`Rational`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"`. Denominators must be nonzero.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::validation(format!("cannot parse rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Lowest-terms rendering: `"p/q"`, or `"p"` when the denominator is one.
pub fn format(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Returns the integer value if `r` is integral.
pub fn as_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}

pub fn to_i64(r: &Rational) -> Option<i64> {
    use num_traits::ToPrimitive;
    as_integer(r).and_then(|n| n.to_i64())
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Fractional part in `[0, 1)`.
pub fn fract_floor(r: &Rational) -> Rational {
    r - r.floor()
}

/// `x mod c` in `[0, c)` for positive `c`.
pub fn modulo(x: &Rational, c: &Rational) -> Rational {
    x - c * (x / c).floor()
}

pub fn min_of<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Option<Rational> {
    values.into_iter().min().cloned()
}

pub fn is_positive(r: &Rational) -> bool {
    r.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        assert_eq!(parse("6/4").unwrap(), frac(3, 2));
        assert_eq!(format(&frac(3, 2)), "3/2");
        assert_eq!(format(&int(-2)), "-2");
        assert_eq!(parse(" 7 ").unwrap(), int(7));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn common_denominator_is_lcm() {
        let v = [frac(1, 4), frac(5, 6), int(3)];
        assert_eq!(common_denominator(&v), BigInt::from(12));
    }

    #[test]
    fn fractional_part_of_negative() {
        assert_eq!(fract_floor(&frac(-1, 3)), frac(2, 3));
    }
}
