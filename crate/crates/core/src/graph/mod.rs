//! Hamburger graphs: two acyclic halves joined by a belt of connecting edges.
//!
//! Vertices of each half are numbered `0..vertex_count` locally. The
//! distinguished vertices `v_1..v_k` of the top half and `w_{k+1}..w_{2k}` of
//! the bottom half are listed in index order in [`Dag::distinguished`].

mod dag;
mod file;
mod matrix;
mod validate;

use crate::linalg::Rational;

pub use dag::{Dag, Edge};
pub use file::{GraphFile, GraphInput};
pub use matrix::{
    build_generalized_matrix, build_matrix, generalized_det, generalized_reduced_det,
    hamburger_det, reduced_det, HamburgerMatrix,
};
pub use validate::{validate, validate_generalized, Half, ValidationReport, Violation};

/// Weights of the pair `e_i: v_i -> w_{k+i}` and `e_i': w_{k+i} -> v_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkWeights {
    pub forward: Rational,
    pub backward: Rational,
}

impl LinkWeights {
    pub fn unit() -> Self {
        LinkWeights {
            forward: crate::linalg::integer(1),
            backward: crate::linalg::integer(1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamburgerGraph {
    pub g1: Dag,
    pub g2: Dag,
    pub links: Vec<LinkWeights>,
}

impl HamburgerGraph {
    pub fn new(g1: Dag, g2: Dag, links: Vec<LinkWeights>) -> Self {
        HamburgerGraph { g1, g2, links }
    }

    /// All belt weights equal to 1.
    pub fn unweighted(g1: Dag, g2: Dag) -> Self {
        let k = g1.distinguished.len();
        HamburgerGraph {
            g1,
            g2,
            links: vec![LinkWeights::unit(); k],
        }
    }

    pub fn k(&self) -> usize {
        self.g1.distinguished.len()
    }

    /// The same graph seen as a generalized graph with identity pairings.
    pub fn to_generalized(&self) -> GeneralizedHamburgerGraph {
        GeneralizedHamburgerGraph {
            g1: self.g1.clone(),
            g2: self.g2.clone(),
            forward: self
                .links
                .iter()
                .enumerate()
                .map(|(i, l)| Link {
                    target: i,
                    weight: l.forward.clone(),
                })
                .collect(),
            backward: self
                .links
                .iter()
                .enumerate()
                .map(|(i, l)| Link {
                    target: i,
                    weight: l.backward.clone(),
                })
                .collect(),
        }
    }
}

/// One belt edge of a generalized graph; `target` is a 0-based index into the
/// other half's distinguished list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Link {
    pub target: usize,
    pub weight: Rational,
}

/// A hamburger graph whose belt edges pair `v_i` with `w_{k+forward[i]}` and
/// `w_{k+i}` with `v_{backward[i]}`, each direction a bijection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedHamburgerGraph {
    pub g1: Dag,
    pub g2: Dag,
    pub forward: Vec<Link>,
    pub backward: Vec<Link>,
}

impl GeneralizedHamburgerGraph {
    pub fn k(&self) -> usize {
        self.g1.distinguished.len()
    }

    /// Unit-weight belt built from the two pairing permutations (0-based).
    pub fn with_pairings(g1: Dag, g2: Dag, forward: &[usize], backward: &[usize]) -> Self {
        let unit = |&t: &usize| Link {
            target: t,
            weight: crate::linalg::integer(1),
        };
        GeneralizedHamburgerGraph {
            g1,
            g2,
            forward: forward.iter().map(unit).collect(),
            backward: backward.iter().map(unit).collect(),
        }
    }

    /// The permutation `i -> backward[forward[i]]` of the top distinguished
    /// vertices, which is the identity for an ordinary hamburger graph.
    pub fn pairing_permutation(&self) -> Option<Vec<usize>> {
        self.forward
            .iter()
            .map(|f| self.backward.get(f.target).map(|b| b.target))
            .collect()
    }

    /// Returns the ordinary hamburger graph when both pairings are the identity.
    pub fn as_standard(&self) -> Option<HamburgerGraph> {
        let identity = |links: &[Link]| links.iter().enumerate().all(|(i, l)| l.target == i);
        if self.forward.len() != self.backward.len()
            || !identity(&self.forward)
            || !identity(&self.backward)
        {
            return None;
        }
        Some(HamburgerGraph {
            g1: self.g1.clone(),
            g2: self.g2.clone(),
            links: self
                .forward
                .iter()
                .zip(&self.backward)
                .map(|(f, b)| LinkWeights {
                    forward: f.weight.clone(),
                    backward: b.weight.clone(),
                })
                .collect(),
        })
    }
}

/// Sign of a permutation given in one-line form; `None` if it is not a permutation.
pub fn permutation_sign(perm: &[usize]) -> Option<i8> {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut sign = 1i8;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = *perm.get(i).filter(|&&p| p < n)?;
            len += 1;
        }
        if i != start {
            return None;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    Some(sign)
}

/// The 3+3 vertex example graph with `v_1 -> v_2 -> v_3`, `v_1 -> v_3` and
/// the mirrored bottom half. Its matrix has determinant 17.
pub fn example_graph() -> HamburgerGraph {
    let g1 = Dag::unweighted(3, &[(0, 1), (1, 2), (0, 2)], vec![0, 1, 2]);
    let g2 = Dag::unweighted(3, &[(2, 1), (1, 0), (2, 0)], vec![0, 1, 2]);
    HamburgerGraph::unweighted(g1, g2)
}

/// The generalized graph whose belt sends `w_4 -> v_1`, `w_5 -> v_3`, `w_6 -> v_2`.
/// It has ten cycle systems while its matrix has determinant -5.
pub fn counterexample_graph() -> GeneralizedHamburgerGraph {
    let g1 = Dag::unweighted(3, &[(0, 1), (1, 2)], vec![0, 1, 2]);
    let g2 = Dag::unweighted(3, &[(2, 1), (1, 0)], vec![0, 1, 2]);
    GeneralizedHamburgerGraph::with_pairings(g1, g2, &[0, 1, 2], &[0, 2, 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_signs() {
        assert_eq!(permutation_sign(&[]), Some(1));
        assert_eq!(permutation_sign(&[0, 1, 2]), Some(1));
        assert_eq!(permutation_sign(&[0, 2, 1]), Some(-1));
        assert_eq!(permutation_sign(&[1, 2, 0]), Some(1));
        assert_eq!(permutation_sign(&[1, 0, 3, 2]), Some(1));
        assert_eq!(permutation_sign(&[0, 0, 1]), None);
        assert_eq!(permutation_sign(&[0, 3, 1]), None);
    }

    #[test]
    fn counterexample_pairing_is_odd() {
        let g = counterexample_graph();
        let perm = g.pairing_permutation().unwrap();
        assert_eq!(perm, vec![0, 2, 1]);
        assert_eq!(permutation_sign(&perm), Some(-1));
        assert!(g.as_standard().is_none());
    }

    #[test]
    fn standard_round_trips_through_generalized() {
        let h = example_graph();
        assert_eq!(h.to_generalized().as_standard().unwrap(), h);
    }
}
