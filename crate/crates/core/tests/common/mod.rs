#![allow(dead_code)]

use hamburger::graph::{Dag, Edge, HamburgerGraph, LinkWeights};
use hamburger::linalg::{integer, rational, ExactMatrix, Rational};
use hamburger::region::PillowSteps;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Determinant by Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    let mut total = Rational::zero();
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != c)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][c] * cofactor_det(&minor);
        if c % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

pub fn rows_of(m: &ExactMatrix) -> Vec<Vec<Rational>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

pub fn random_small_rational(rng: &mut TestRng) -> Rational {
    let num = rng.gen_range(1..=5) * if rng.gen_bool(0.2) { -1 } else { 1 };
    rational(num, rng.gen_range(1..=4))
}

pub fn random_int_matrix(rng: &mut TestRng, n: usize, lo: i64, hi: i64) -> ExactMatrix {
    ExactMatrix::from_fn(n, n, |_, _| integer(rng.gen_range(lo..=hi)))
}

/// Random DAG on `k + extra` vertices whose distinguished vertices
/// `0..k` appear in a topological order in increasing (`ascending`) or
/// decreasing index order, so paths between them respect the hamburger
/// ordering. Auxiliary vertices are `k..k+extra`.
pub fn random_half(
    rng: &mut TestRng,
    k: usize,
    extra: usize,
    ascending: bool,
    density: f64,
    weighted: bool,
) -> Dag {
    let n = k + extra;
    let mut dist: Vec<usize> = (0..k).collect();
    if !ascending {
        dist.reverse();
    }
    // Interleave auxiliary vertices at random positions of the order.
    let mut order = dist.clone();
    for v in k..n {
        let pos = rng.gen_range(0..=order.len());
        order.insert(pos, v);
    }
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(density) {
                let weight = if weighted && rng.gen_bool(0.5) {
                    random_small_rational(rng)
                } else {
                    Rational::one()
                };
                edges.push(Edge {
                    from: order[a],
                    to: order[b],
                    weight,
                });
            }
        }
    }
    if rng.gen_bool(0.1) && !edges.is_empty() {
        let dup = edges.choose(rng).unwrap().clone();
        edges.push(dup);
    }
    edges.shuffle(rng);
    Dag::new(n, edges, (0..k).collect())
}

/// Random valid hamburger graph. With `weighted`, edge weights are small
/// rationals and belt weights satisfy `wt(e_i) wt(e_i') = 1` for interior `i`.
pub fn random_hamburger(rng: &mut TestRng, weighted: bool) -> HamburgerGraph {
    let k = rng.gen_range(1..=4);
    let e1 = rng.gen_range(0..=6);
    let e2 = rng.gen_range(0..=6);
    let density = rng.gen_range(0.15..0.45);
    let g1 = random_half(rng, k, e1, true, density, weighted);
    let g2 = random_half(rng, k, e2, false, density, weighted);
    let links = (0..k)
        .map(|i| {
            if !weighted {
                return LinkWeights::unit();
            }
            let forward = random_small_rational(rng);
            let backward = if i == 0 || i + 1 == k {
                random_small_rational(rng)
            } else {
                forward.recip()
            };
            LinkWeights { forward, backward }
        })
        .collect();
    HamburgerGraph::new(g1, g2, links)
}

/// Random generalized pillow with every boundary row nonempty.
pub fn random_steps(rng: &mut TestRng) -> PillowSteps {
    let n = rng.gen_range(2..=6);
    let half = |rng: &mut TestRng| {
        let (mut lo, mut hi) = (-n, n);
        let (mut left, mut right) = (Vec::new(), Vec::new());
        loop {
            let a = 2 * rng.gen_range(0..3) + 1;
            let b = 2 * rng.gen_range(0..3) + 1;
            if hi - b <= lo + a || rng.gen_bool(0.15) {
                break;
            }
            lo += a;
            hi -= b;
            left.push(a);
            right.push(b);
        }
        (left, right)
    };
    let (top_left, top_right) = half(rng);
    let (bottom_left, bottom_right) = half(rng);
    PillowSteps {
        n,
        top_left,
        top_right,
        bottom_left,
        bottom_right,
    }
}
