//! Exact rational scalars.
//!
//! `num_rational::BigRational` already keeps values reduced with a positive
//! denominator, so it is used directly; this module adds the canonical
//! `"p/q"` text form shared by every JSON schema in the crate.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `"p/q"`, or `"p"` when the denominator is 1.
pub fn to_string(r: &Rational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"` or `"p/q"` (base 10, optional sign on `p`). Non-reduced
/// input is accepted and reduced.
pub fn parse(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer: BigInt = n.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = d.trim().parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}
