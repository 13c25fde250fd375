//! Large and modified Schröder numbers as lattice-path counts.
//!
//! Paths use steps E = (1,0), N = (0,1) and D = (1,1). Large Schröder paths
//! stay weakly below `y = x`; modified ones must also satisfy `2y > x` at
//! every lattice point they visit.

use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::linalg::{BigInteger, ExactMatrix};

/// Path counts from `(start, start)` to every `(x, y)` with `x, y <= end`.
/// `dp[x - start][y - start]`.
fn path_table(start: usize, end: usize, strict_lower: bool) -> Vec<Vec<BigInteger>> {
    let size = end.saturating_sub(start) + 1;
    let allowed = |x: usize, y: usize| y <= x && (!strict_lower || 2 * y > x);
    let mut dp = vec![vec![BigInteger::zero(); size]; size];
    if end < start || !allowed(start, start) {
        return dp;
    }
    for dx in 0..size {
        for dy in 0..=dx {
            let (x, y) = (start + dx, start + dy);
            if !allowed(x, y) {
                continue;
            }
            if dx == 0 && dy == 0 {
                dp[0][0] = BigInteger::one();
                continue;
            }
            let mut v = BigInteger::zero();
            if dx > 0 {
                v += &dp[dx - 1][dy];
            }
            if dy > 0 {
                v += &dp[dx][dy - 1];
            }
            if dx > 0 && dy > 0 {
                v += &dp[dx - 1][dy - 1];
            }
            dp[dx][dy] = v;
        }
    }
    dp
}

/// `s_m`: paths from `(0,0)` to `(m,m)` weakly below the diagonal.
pub fn large_schroeder(m: usize) -> BigInteger {
    large_schroeder_numbers(m).pop().unwrap()
}

/// `s_0, ..., s_m`.
pub fn large_schroeder_numbers(m: usize) -> Vec<BigInteger> {
    let dp = path_table(0, m, false);
    (0..=m).map(|d| dp[d][d].clone()).collect()
}

/// Upper unitriangular `n x n` matrix with `s_{j-i}` at `(i, j)`.
pub fn schroeder_matrix(n: usize) -> ExactMatrix {
    let s = large_schroeder_numbers(n.saturating_sub(1));
    ExactMatrix::from_fn(n, n, |i, j| {
        if j >= i {
            s[j - i].clone().into()
        } else {
            Default::default()
        }
    })
}

/// `s_{i,j}` of the modified table (1-based). Zero when `j < i`, and for
/// `i = 0`, whose start point already violates `2y > x`.
pub fn modified_schroeder(i: usize, j: usize) -> BigInteger {
    if j < i {
        return BigInteger::zero();
    }
    path_table(i, j, true)[j - i][j - i].clone()
}

/// The modified Schröder numbers `s_{i,j}`, `1 <= i <= j <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModifiedSchroederTable {
    n: usize,
    rows: Vec<Vec<BigInteger>>,
}

impl ModifiedSchroederTable {
    pub fn new(n: usize) -> Self {
        let rows = (1..=n)
            .map(|i| {
                let dp = path_table(i, n, true);
                (0..n)
                    .map(|c| {
                        let j = c + 1;
                        if j < i {
                            BigInteger::zero()
                        } else {
                            dp[j - i][j - i].clone()
                        }
                    })
                    .collect()
            })
            .collect();
        ModifiedSchroederTable { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 1-based lookup.
    pub fn get(&self, i: usize, j: usize) -> &BigInteger {
        &self.rows[i - 1][j - 1]
    }

    pub fn to_matrix(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.n, self.n, |i, j| self.rows[i][j].clone().into())
    }

    /// One line per row, entries separated by tabs, zeros included.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(out, "{}", cells.join("\t")).unwrap();
        }
        out
    }
}

pub fn modified_matrix(n: usize) -> ExactMatrix {
    ModifiedSchroederTable::new(n).to_matrix()
}
