//! Exact dense linear algebra over big integers and rationals.
//!
//! Determinants use fraction-free (Bareiss) elimination on an integer matrix
//! obtained by clearing row denominators, so no intermediate rational ever
//! needs to be normalized.

mod det;
mod matrix;
mod triangular;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

pub use det::{bareiss_det, det};
pub use matrix::ExactMatrix;
pub use triangular::{invert_unitriangular, schur_complement, schur_reduce};

pub type BigInteger = BigInt;
pub type Rational = num_rational::BigRational;

/// Parses `p` or `p/q` (base 10) into a rational in lowest terms.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
    let den: BigInt = den
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_weight_strings() {
        assert_eq!(parse_rational("3").unwrap(), integer(3));
        assert_eq!(parse_rational("-6/4").unwrap(), rational(-3, 2));
        assert_eq!(parse_rational("2/-4").unwrap(), rational(-1, 2));
        assert_eq!(parse_rational("-6/4").unwrap().to_string(), "-3/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }
}
