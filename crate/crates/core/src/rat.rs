//! Exact rational scalars: parsing, rendering, and conversions.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// Parses `"p"` or `"p/q"` with optional sign, exactly.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let make_err = || Error::Parse(format!("invalid rational literal `{s}`"));
    match s.split_once('/') {
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().map_err(|_| make_err())?;
            let d: BigInt = den.trim().parse().map_err(|_| make_err())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(Rat::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| make_err())?;
            Ok(Rat::from_integer(n))
        }
    }
}

/// Canonical text form: `p` for integers, `p/q` otherwise, denominator positive.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// The integer value of `r`, if it is an integer.
pub fn rat_to_int(r: &Rat) -> Option<BigInt> {
    if r.denom().is_one() {
        Some(r.numer().clone())
    } else {
        None
    }
}

/// `base^exp` for nonzero rational base and any integer exponent.
pub fn rat_pow(base: &Rat, exp: &BigInt) -> Rat {
    assert!(!base.is_zero() || !exp.is_negative(), "0 to negative power");
    let e = i64::try_from(exp).expect("exponent out of machine range");
    if e >= 0 {
        num_traits::pow::Pow::pow(base, e as u64)
    } else {
        num_traits::pow::Pow::pow(&base.recip(), (-e) as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rat("3").unwrap(), rat_int(3));
        assert_eq!(parse_rat("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rat(" 7 / -2 ").unwrap(), rat(-7, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("1.5").is_err());
    }

    #[test]
    fn format_canonical() {
        assert_eq!(format_rat(&rat(4, 2)), "2");
        assert_eq!(format_rat(&rat(-1, 3)), "-1/3");
        assert_eq!(format_rat(&rat(1, -3)), "-1/3");
    }

    #[test]
    fn pow_negative_exponent() {
        assert_eq!(rat_pow(&rat(2, 3), &BigInt::from(-2)), rat(9, 4));
        assert_eq!(rat_pow(&rat(5, 1), &BigInt::from(0)), rat_int(1));
    }
}
