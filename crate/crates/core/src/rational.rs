//! Exact rational scalars; every coefficient in the crate lives here.

use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational. Always reduced, denominator always positive.
pub type Rational = BigRational;

/// Rational from machine integers; handy for tables and tests.
pub fn rat(numer: i64, denom: i64) -> Rational {
    assert!(denom != 0, "zero denominator");
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rational {
    BigRational::from(BigInt::from(n))
}

/// Parses "p" or "p/q" with arbitrary-precision integers.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidNumber(s.to_string());
    let t = s.trim();
    match t.split_once('/') {
        Some((numer, denom)) => {
            let n = BigInt::from_str(numer.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(denom.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from(BigInt::from_str(t).map_err(|_| bad())?)),
    }
}

/// Canonical text form: "p" when integral, "p/q" otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
