use crate::error::{Error, Result};
use crate::linalg::{det, schur_complement, schur_reduce, ExactMatrix, Rational};

use super::{validate, validate_generalized, Dag, GeneralizedHamburgerGraph, HamburgerGraph};

/// The `2k x 2k` matrix `[[A, D1], [-D2, B]]` together with its blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamburgerMatrix {
    pub a: ExactMatrix,
    pub b: ExactMatrix,
    pub d1: ExactMatrix,
    pub d2: ExactMatrix,
    pub matrix: ExactMatrix,
}

impl HamburgerMatrix {
    pub fn k(&self) -> usize {
        self.a.rows()
    }

    pub fn det(&self) -> Result<Rational> {
        det(&self.matrix)
    }

    /// The `k x k` Schur complement `A + D1 B^-1 D2`.
    pub fn reduced(&self) -> Result<ExactMatrix> {
        schur_reduce(&self.a, &self.b, &self.d1, &self.d2)
    }

    pub fn reduced_det(&self) -> Result<Rational> {
        det(&self.reduced()?)
    }
}

/// `out[i][j]` = weighted path sum from distinguished `i` to distinguished `j`.
fn distinguished_path_matrix(dag: &Dag) -> Result<ExactMatrix> {
    let k = dag.distinguished.len();
    let mut out = ExactMatrix::zeros(k, k);
    for (i, &src) in dag.distinguished.iter().enumerate() {
        let sums = dag.path_sums_from(src)?;
        for (j, &dst) in dag.distinguished.iter().enumerate() {
            out[(i, j)] = sums[dst].clone();
        }
    }
    Ok(out)
}

pub fn build_matrix(h: &HamburgerGraph) -> Result<HamburgerMatrix> {
    let report = validate(h);
    if !report.is_valid() {
        return Err(Error::InvalidGraph(report));
    }
    let a = distinguished_path_matrix(&h.g1)?;
    let b = distinguished_path_matrix(&h.g2)?;
    let d1 = ExactMatrix::diagonal(h.links.iter().map(|l| l.forward.clone()).collect());
    let d2 = ExactMatrix::diagonal(h.links.iter().map(|l| l.backward.clone()).collect());
    let matrix = ExactMatrix::block_assemble(&a, &d1, &d2.neg(), &b)?;
    Ok(HamburgerMatrix {
        a,
        b,
        d1,
        d2,
        matrix,
    })
}

/// Determinant of the full `2k x 2k` hamburger matrix.
pub fn hamburger_det(h: &HamburgerGraph) -> Result<Rational> {
    build_matrix(h)?.det()
}

/// Determinant of the reduced `k x k` matrix; always equal to [`hamburger_det`].
pub fn reduced_det(h: &HamburgerGraph) -> Result<Rational> {
    build_matrix(h)?.reduced_det()
}

struct GeneralizedBlocks {
    a: ExactMatrix,
    b: ExactMatrix,
    upper_right: ExactMatrix,
    lower_left: ExactMatrix,
}

fn generalized_blocks(h: &GeneralizedHamburgerGraph) -> Result<GeneralizedBlocks> {
    let report = validate_generalized(h);
    if !report.is_valid() {
        return Err(Error::InvalidGraph(report));
    }
    let k = h.k();
    let a = distinguished_path_matrix(&h.g1)?;
    let b = distinguished_path_matrix(&h.g2)?;
    let mut upper_right = ExactMatrix::zeros(k, k);
    for (i, link) in h.forward.iter().enumerate() {
        upper_right[(i, link.target)] = link.weight.clone();
    }
    let mut lower_left = ExactMatrix::zeros(k, k);
    for (i, link) in h.backward.iter().enumerate() {
        lower_left[(i, link.target)] = -link.weight.clone();
    }
    Ok(GeneralizedBlocks {
        a,
        b,
        upper_right,
        lower_left,
    })
}

/// Matrix with `wt` at `(i, j)` of the upper-right block for each edge
/// `v_i -> w_{k+j}` and `-wt` at `(i, j)` of the lower-left block for each
/// edge `w_{k+i} -> v_j`.
pub fn build_generalized_matrix(h: &GeneralizedHamburgerGraph) -> Result<ExactMatrix> {
    let g = generalized_blocks(h)?;
    ExactMatrix::block_assemble(&g.a, &g.upper_right, &g.lower_left, &g.b)
}

pub fn generalized_det(h: &GeneralizedHamburgerGraph) -> Result<Rational> {
    det(&build_generalized_matrix(h)?)
}

/// Determinant via the Schur complement of `B`; equals [`generalized_det`].
pub fn generalized_reduced_det(h: &GeneralizedHamburgerGraph) -> Result<Rational> {
    let g = generalized_blocks(h)?;
    det(&schur_complement(&g.a, &g.upper_right, &g.lower_left, &g.b)?)
}
