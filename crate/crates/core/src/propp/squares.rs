use num_bigint::{BigInt, Sign};
use num_integer::Roots;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::BigInteger;

pub const TWO_SQUARES_LIMIT: u128 = 100_000_000_000_000;

/// All ways to write `n = a^2 + b^2` with `0 <= a <= b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoSquaresReport {
    pub n: BigInteger,
    pub representations: Vec<(u64, u64)>,
    /// For each representation, whether the supplied `l` divides both `a` and `b`.
    pub divisible: Option<Vec<bool>>,
}

impl TwoSquaresReport {
    /// `reps=K` plus `l_divides=J` when `l` was supplied.
    pub fn summary(&self) -> String {
        let mut out = format!("reps={}", self.representations.len());
        if let Some(flags) = &self.divisible {
            out.push_str(&format!(";l_divides={}", flags.iter().filter(|&&f| f).count()));
        }
        out
    }
}

/// Exhaustive scan over `a <= sqrt(n / 2)`; `n` must not exceed 10^14.
pub fn two_square_reps(n: &BigInteger, l: Option<&BigInteger>) -> Result<TwoSquaresReport> {
    if n.sign() == Sign::Minus {
        return Err(Error::InvalidArgument(format!("{n} is negative")));
    }
    let value = n
        .to_u128()
        .filter(|&v| v <= TWO_SQUARES_LIMIT)
        .ok_or_else(|| Error::SizeBound {
            what: "two-squares scan",
            actual: n.to_u128().unwrap_or(u128::MAX),
            limit: TWO_SQUARES_LIMIT,
        })?;
    let mut representations = Vec::new();
    let mut a: u128 = 0;
    while 2 * a * a <= value {
        let rest = value - a * a;
        let b = rest.sqrt();
        if b * b == rest {
            representations.push((a as u64, b as u64));
        }
        a += 1;
    }
    let divisible = l.map(|l| {
        representations
            .iter()
            .map(|&(a, b)| {
                !l.is_zero() && (BigInt::from(a) % l).is_zero() && (BigInt::from(b) % l).is_zero()
            })
            .collect()
    });
    Ok(TwoSquaresReport {
        n: n.clone(),
        representations,
        divisible,
    })
}
