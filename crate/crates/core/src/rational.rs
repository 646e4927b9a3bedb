//! Exact rational scalars and their canonical string form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Canonical form: reduced, positive denominator, bare numerator when the
/// denominator is one.
pub fn format(q: &Rational) -> String {
    // BigRational is always kept reduced with a positive denominator.
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"n"`, `"-n"` or `"p/q"`.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::input(format!("`{s}` is not a rational number"));
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Rational::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::input(format!("`{s}` has a zero denominator")));
            }
            Ok(Rational::new(p, q))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_strings() {
        assert_eq!(format(&ratio(2, 4)), "1/2");
        assert_eq!(format(&ratio(4, 2)), "2");
        assert_eq!(format(&ratio(3, -6)), "-1/2");
        assert_eq!(format(&zero()), "0");
    }

    #[test]
    fn parse_round_trip() {
        assert_eq!(parse("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse(" -7 ").unwrap(), int(-7));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }
}
