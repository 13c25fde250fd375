//! Domino tiling counters that do not go through the hamburger matrix:
//! exhaustive enumeration for tiny regions and a broken-profile DP.

use std::mem;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::linalg::BigInteger;
use crate::region::Region;

pub const DEFAULT_MAX_ENUM_CELLS: u64 = 36;
pub const MAX_FRONTIER_WIDTH: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// A domino anchored at its left (horizontal) or lower (vertical) cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlacedDomino {
    pub cell: (i64, i64),
    pub orientation: Orientation,
}

impl PlacedDomino {
    pub fn cells(&self) -> [(i64, i64); 2] {
        let (x, y) = self.cell;
        match self.orientation {
            Orientation::Horizontal => [(x, y), (x + 1, y)],
            Orientation::Vertical => [(x, y), (x, y + 1)],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tiling {
    pub dominoes: Vec<PlacedDomino>,
}

impl Tiling {
    /// Dominoes are disjoint and cover exactly the cells of `region`.
    pub fn is_tiling_of(&self, region: &Region) -> bool {
        let mut seen = std::collections::HashSet::new();
        for d in &self.dominoes {
            for (x, y) in d.cells() {
                if !region.contains(x, y) || !seen.insert((x, y)) {
                    return false;
                }
            }
        }
        seen.len() as u64 == region.cell_count()
    }
}

/// Cell-occupancy grid over the bounding box.
struct Grid {
    min_x: i64,
    min_y: i64,
    width: usize,
    height: usize,
    inside: Vec<bool>,
}

impl Grid {
    fn new(region: &Region) -> Self {
        let (min_x, max_x, min_y, max_y) = region.bounding_box();
        let width = (max_x - min_x) as usize;
        let height = (max_y - min_y) as usize;
        let mut inside = vec![false; width * height];
        for (x, y) in region.cells() {
            inside[(y - min_y) as usize * width + (x - min_x) as usize] = true;
        }
        Grid { min_x, min_y, width, height, inside }
    }

    fn cell(&self, p: usize) -> (i64, i64) {
        (
            self.min_x + (p % self.width) as i64,
            self.min_y + (p / self.width) as i64,
        )
    }

    fn right_of(&self, p: usize) -> Option<usize> {
        (p % self.width + 1 < self.width && self.inside[p + 1]).then_some(p + 1)
    }

    fn above(&self, p: usize) -> Option<usize> {
        let q = p + self.width;
        (q < self.inside.len() && self.inside[q]).then_some(q)
    }
}

pub fn enumerate_tilings(region: &Region) -> Result<Vec<Tiling>> {
    enumerate_tilings_bounded(region, DEFAULT_MAX_ENUM_CELLS)
}

/// Every tiling exactly once. Recurses on the first uncovered cell in
/// row-major order, trying the horizontal domino before the vertical one.
pub fn enumerate_tilings_bounded(region: &Region, max_cells: u64) -> Result<Vec<Tiling>> {
    let cells = region.cell_count();
    if cells > max_cells {
        return Err(Error::SizeBound {
            what: "cells for tiling enumeration",
            actual: cells as u128,
            limit: max_cells as u128,
        });
    }
    let grid = Grid::new(region);
    let mut covered: Vec<bool> = grid.inside.iter().map(|&c| !c).collect();
    let mut current = Vec::new();
    let mut out = Vec::new();
    fn go(
        grid: &Grid,
        covered: &mut [bool],
        from: usize,
        current: &mut Vec<PlacedDomino>,
        out: &mut Vec<Tiling>,
    ) {
        let Some(p) = (from..covered.len()).find(|&p| !covered[p]) else {
            out.push(Tiling { dominoes: current.clone() });
            return;
        };
        for (orientation, partner) in [
            (Orientation::Horizontal, grid.right_of(p)),
            (Orientation::Vertical, grid.above(p)),
        ] {
            let Some(q) = partner else { continue };
            if covered[q] {
                continue;
            }
            covered[p] = true;
            covered[q] = true;
            current.push(PlacedDomino { cell: grid.cell(p), orientation });
            go(grid, covered, p + 1, current, out);
            current.pop();
            covered[p] = false;
            covered[q] = false;
        }
    }
    if grid.height > 0 {
        go(&grid, &mut covered, 0, &mut current, &mut out);
    }
    Ok(out)
}

trait Count: Clone {
    fn unit() -> Self;
    fn add(&mut self, other: &Self) -> bool;
    fn into_big(self) -> BigUint;
}

impl Count for u128 {
    fn unit() -> Self {
        1
    }
    fn add(&mut self, other: &Self) -> bool {
        match self.checked_add(*other) {
            Some(s) => {
                *self = s;
                true
            }
            None => false,
        }
    }
    fn into_big(self) -> BigUint {
        BigUint::from(self)
    }
}

impl Count for BigUint {
    fn unit() -> Self {
        One::one()
    }
    fn add(&mut self, other: &Self) -> bool {
        *self += other;
        true
    }
    fn into_big(self) -> BigUint {
        self
    }
}

/// Bit `j` of a state says cell `p + j` is already covered, `p` being the
/// cell about to be processed. `None` on counter overflow.
fn profile_dp<T: Count>(grid: &Grid) -> Option<BigUint> {
    let w = grid.width;
    let mut states: FxHashMap<u32, T> = FxHashMap::default();
    states.insert(0, T::unit());
    let mut next: FxHashMap<u32, T> = FxHashMap::default();
    let push = |map: &mut FxHashMap<u32, T>, key: u32, val: &T| -> bool {
        match map.get_mut(&key) {
            Some(v) => v.add(val),
            None => {
                map.insert(key, val.clone());
                true
            }
        }
    };
    for p in 0..grid.inside.len() {
        next.clear();
        for (&mask, count) in &states {
            if mask & 1 == 1 || !grid.inside[p] {
                // Already covered, or a hole (holes are never marked covered).
                if !push(&mut next, mask >> 1, count) {
                    return None;
                }
                continue;
            }
            if grid.right_of(p).is_some() && mask & 2 == 0 && !push(&mut next, (mask | 2) >> 1, count) {
                return None;
            }
            if grid.above(p).is_some() && !push(&mut next, (mask >> 1) | (1 << (w - 1)), count) {
                return None;
            }
        }
        mem::swap(&mut states, &mut next);
        if states.is_empty() {
            return Some(BigUint::zero());
        }
    }
    Some(states.remove(&0).map(T::into_big).unwrap_or_default())
}

/// Exact tiling count by a broken-profile DP over the bounding box.
pub fn count_tilings(region: &Region) -> Result<BigInteger> {
    let grid = Grid::new(region);
    if grid.width > MAX_FRONTIER_WIDTH {
        return Err(Error::SizeBound {
            what: "frontier width for the profile DP",
            actual: grid.width as u128,
            limit: MAX_FRONTIER_WIDTH as u128,
        });
    }
    let (even, odd) = region.color_counts();
    if even != odd {
        return Ok(BigInteger::zero());
    }
    let n = match profile_dp::<u128>(&grid) {
        Some(n) => n,
        None => profile_dp::<BigUint>(&grid).expect("big counts never overflow"),
    };
    Ok(BigInteger::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::{aztec_diamond, Row};

    fn rect(w: i64, h: i64) -> Region {
        Region::new((0..h).map(|y| Row { y, x_start: 0, len: w }).collect()).unwrap()
    }

    #[test]
    fn small_rectangles() {
        assert_eq!(enumerate_tilings(&rect(2, 2)).unwrap().len(), 2);
        assert_eq!(count_tilings(&rect(2, 2)).unwrap(), BigInteger::from(2));
        // 2 x n strips give Fibonacci numbers.
        let fib = [1u32, 2, 3, 5, 8, 13, 21, 34];
        for (n, f) in fib.iter().enumerate() {
            assert_eq!(count_tilings(&rect(n as i64 + 1, 2)).unwrap(), BigInteger::from(*f));
        }
        assert_eq!(count_tilings(&rect(8, 8)).unwrap(), BigInteger::from(12_988_816));
        assert_eq!(count_tilings(&rect(3, 3)).unwrap(), BigInteger::zero());
    }

    #[test]
    fn enumeration_order_and_validity() {
        let t = enumerate_tilings(&rect(2, 2)).unwrap();
        assert_eq!(t[0].dominoes[0].orientation, Orientation::Horizontal);
        assert_eq!(t[1].dominoes[0].orientation, Orientation::Vertical);
        let d = aztec_diamond(2).unwrap();
        let all = enumerate_tilings(&d).unwrap();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|t| t.is_tiling_of(&d)));
    }

    #[test]
    fn diamond_counts() {
        for n in 1..=10 {
            let expected = BigInteger::one() << (n * (n + 1) / 2);
            assert_eq!(count_tilings(&aztec_diamond(n as i64).unwrap()).unwrap(), expected);
        }
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(enumerate_tilings(&rect(7, 6)).unwrap_err().is_budget());
        assert!(count_tilings(&rect(31, 2)).unwrap_err().is_budget());
        assert_eq!(enumerate_tilings_bounded(&rect(4, 4), 16).unwrap().len(), 36);
    }

    #[test]
    fn big_fallback() {
        // 2^(14*15/2) = 2^105 fits in u128; a 30 x 30 square would not but is slow,
        // so force the BigUint path directly.
        let g = Grid::new(&aztec_diamond(6).unwrap());
        assert_eq!(profile_dp::<BigUint>(&g).unwrap(), BigUint::from(1u32 << 21));
    }
}
