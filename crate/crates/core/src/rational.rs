//! The scalar type used everywhere: arbitrary precision fractions kept in
//! lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Reduced fraction with positive denominator. `0` is stored as `0/1`.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: impl Into<BigInt>) -> Rational {
    Rational::from_integer(value.into())
}

/// Returns the integer value of `value`, or [`Error::NonIntegral`] tagged
/// with `context` when the denominator is not one.
pub fn to_integer(value: &Rational, context: &str) -> Result<BigInt> {
    if value.denom().is_one() {
        Ok(value.numer().clone())
    } else {
        Err(Error::NonIntegral {
            context: context.to_string(),
            value: format_rational(value),
        })
    }
}

/// `"p/q"`, or `"p"` when `q = 1`.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let err = || Error::ParseRational(text.to_string());
    let (numer, denom) = match text.split_once('/') {
        Some((p, q)) => (p, q),
        None => (text, "1"),
    };
    let numer: BigInt = numer.trim().parse().map_err(|_| err())?;
    let denom: BigInt = denom.trim().parse().map_err(|_| err())?;
    if denom.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(numer, denom))
}

/// True when the fraction is already in canonical form.
pub fn is_canonical(value: &Rational) -> bool {
    value.denom() > &BigInt::zero() && value.numer().gcd(value.denom()).is_one()
}
