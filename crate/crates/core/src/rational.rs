//! Exact rational helpers shared by the matrix engine and the file formats.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Parses `3/5`, `-1/2`, `7` or `-0` into an exact rational.
pub fn parse_rational(token: &str) -> Result<BigRational> {
    let token = token.trim();
    let bad = || Error::Parse(format!("bad rational `{token}`"));
    let (num, den) = match token.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (token, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Canonical text: reduced, sign on the numerator, no `/1`.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}
