use num_traits::Zero;

use crate::error::{Error, Result};

use super::{ExactMatrix, Rational};

/// Inverse of an upper or lower triangular matrix with unit diagonal.
///
/// Back substitution only adds and multiplies, so an integer input yields an
/// integer inverse.
pub fn invert_unitriangular(m: &ExactMatrix) -> Result<ExactMatrix> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "cannot invert a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    if !m.has_unit_diagonal() {
        return Err(Error::NotUnitriangular("diagonal is not all ones".into()));
    }
    if m.is_upper_triangular() {
        Ok(invert_upper(m))
    } else if m.is_lower_triangular() {
        Ok(invert_upper(&m.transpose()).transpose())
    } else {
        Err(Error::NotUnitriangular(
            "matrix is neither upper nor lower triangular".into(),
        ))
    }
}

fn invert_upper(m: &ExactMatrix) -> ExactMatrix {
    let n = m.rows();
    let mut inv = ExactMatrix::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            let mut acc = Rational::zero();
            for t in i..j {
                let a = &inv[(i, t)];
                let b = &m[(t, j)];
                if !a.is_zero() && !b.is_zero() {
                    acc += a * b;
                }
            }
            inv[(i, j)] = -acc;
        }
    }
    inv
}

/// Schur complement of the unitriangular block `b` in `[[a, upper_right], [lower_left, b]]`,
/// i.e. `a - upper_right * b^-1 * lower_left`. Its determinant equals the
/// determinant of the full block matrix because `det b = 1`.
pub fn schur_complement(
    a: &ExactMatrix,
    upper_right: &ExactMatrix,
    lower_left: &ExactMatrix,
    b: &ExactMatrix,
) -> Result<ExactMatrix> {
    if !b.is_unitriangular() {
        return Err(Error::NotUnitriangular(
            "Schur complement needs a unitriangular lower-right block".into(),
        ));
    }
    let b_inv = invert_unitriangular(b)?;
    let correction = upper_right.matmul(&b_inv)?.matmul(lower_left)?;
    a.sub(&correction)
}

/// Reduced hamburger matrix `a + d1 * b^-1 * d2` for diagonal `d1`, `d2`.
pub fn schur_reduce(
    a: &ExactMatrix,
    b: &ExactMatrix,
    d1: &ExactMatrix,
    d2: &ExactMatrix,
) -> Result<ExactMatrix> {
    let k = a.rows();
    for (name, m) in [("A", a), ("B", b), ("D1", d1), ("D2", d2)] {
        if m.rows() != k || m.cols() != k {
            return Err(Error::Dimension(format!(
                "block {name} is {}x{}, expected {k}x{k}",
                m.rows(),
                m.cols()
            )));
        }
    }
    for (name, m) in [("D1", d1), ("D2", d2)] {
        if !m.is_diagonal() {
            return Err(Error::NotDiagonal(format!("block {name}")));
        }
    }
    schur_complement(a, d1, &d2.neg(), b)
}
