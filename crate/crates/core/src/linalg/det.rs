use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::{ExactMatrix, Rational};

/// Exact determinant. The empty matrix has determinant 1.
pub fn det(m: &ExactMatrix) -> Result<Rational> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "determinant needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    // Scale each row by the lcm of its denominators; det(M) = det(scaled) / prod(scales).
    let mut cleared = Vec::with_capacity(n);
    let mut scale = BigInt::one();
    for i in 0..n {
        let row = m.row(i);
        let lcm = row
            .iter()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
        cleared.push(
            row.iter()
                .map(|e| e.numer() * (&lcm / e.denom()))
                .collect::<Vec<_>>(),
        );
        scale *= lcm;
    }
    let d = bareiss_det(cleared)?;
    Ok(Rational::new(d, scale))
}

/// Fraction-free elimination on a square integer matrix (given as rows).
///
/// Pivots on the first nonzero entry in the current column; every interior
/// division is checked to be exact.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> Result<BigInt> {
    let n = m.len();
    if let Some(bad) = m.iter().position(|r| r.len() != n) {
        return Err(Error::Dimension(format!(
            "row {bad} has {} entries in a {n}x{n} matrix",
            m[bad].len()
        )));
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return Ok(BigInt::zero());
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        for row in tail.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let num = &row[j] * pivot - &lead * &pivot_row[j];
                let (q, r) = num.div_rem(&prev);
                if !r.is_zero() {
                    return Err(Error::Invariant(format!(
                        "inexact Bareiss division at step {k}, column {j}"
                    )));
                }
                row[j] = q;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}
