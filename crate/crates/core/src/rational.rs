//! Exact arbitrary-precision rationals.
//!
//! Backed by [`num_rational::BigRational`], which keeps fractions reduced
//! with a positive denominator. The canonical text form is `"p/q"` with the
//! denominator omitted when it is 1 (`"-1/2"`, `"0"`, `"3"`), which is what
//! `Display` and `FromStr` already produce and accept.

use num_bigint::BigInt;

pub use num_rational::BigRational as Rational;

use crate::error::{Error, Result};

/// Rational `numer/denom` from machine integers.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Rational from a machine integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses the canonical `"p/q"` (or plain `"p"`) form.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| Error::Domain(format!("invalid rational {s:?}: {e}")))
}
