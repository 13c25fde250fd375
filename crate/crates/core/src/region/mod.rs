//! Lattice regions made of unit squares, given row by row.
//!
//! Cell `(x, y)` is the unit square `[x, x+1] x [y, y+1]`. Row `y` covers
//! cells `x_start .. x_start + len`. The belt sits between rows `-1` and `0`:
//! rows with `y >= 0` form the top half, rows with `y < 0` the bottom half.

mod digraph;
mod file;
mod pillow;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

pub use digraph::{build_digraph, natural_tiling, region_digraph, Domino, NaturalTiling, RegionDigraph};
pub use file::RegionFile;
pub use pillow::{aztec_diamond, enclosing_diamond_order, generalized_pillow, q_pillow, PillowSteps};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Row {
    pub y: i64,
    pub x_start: i64,
    pub len: i64,
}

impl Row {
    pub fn x_end(&self) -> i64 {
        self.x_start + self.len
    }

    pub fn contains(&self, x: i64) -> bool {
        (self.x_start..self.x_end()).contains(&x)
    }
}

/// A region with one interval per row and no gaps between rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Region {
    rows: Vec<Row>,
}

impl Region {
    pub fn new(mut rows: Vec<Row>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidRegion("region has no rows".into()));
        }
        rows.sort_by_key(|r| r.y);
        for r in &rows {
            if r.len <= 0 {
                return Err(Error::InvalidRegion(format!("row {} has length {}", r.y, r.len)));
            }
        }
        for w in rows.windows(2) {
            if w[1].y != w[0].y + 1 {
                return Err(Error::InvalidRegion(format!(
                    "rows {} and {} are not contiguous",
                    w[0].y, w[1].y
                )));
            }
        }
        Ok(Region { rows })
    }

    /// Builds a region from a cell set; each row must be a single interval.
    pub fn from_cells(cells: impl IntoIterator<Item = (i64, i64)>) -> Result<Self> {
        let mut by_row: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
        for (x, y) in cells {
            by_row.entry(y).or_default().push(x);
        }
        let mut rows = Vec::with_capacity(by_row.len());
        for (y, mut xs) in by_row {
            xs.sort_unstable();
            xs.dedup();
            let (first, last) = (xs[0], xs[xs.len() - 1]);
            if last - first + 1 != xs.len() as i64 {
                return Err(Error::InvalidRegion(format!(
                    "row {y} is not horizontally convex"
                )));
            }
            rows.push(Row {
                y,
                x_start: first,
                len: xs.len() as i64,
            });
        }
        Region::new(rows)
    }

    /// Rows ordered by increasing `y`.
    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn row_at(&self, y: i64) -> Option<&Row> {
        let first = self.rows[0].y;
        usize::try_from(y - first).ok().and_then(|i| self.rows.get(i))
    }

    pub fn contains(&self, x: i64, y: i64) -> bool {
        self.row_at(y).is_some_and(|r| r.contains(x))
    }

    pub fn cell_count(&self) -> u64 {
        self.rows.iter().map(|r| r.len as u64).sum()
    }

    /// Cells in row-major order: rows by increasing `y`, cells by increasing `x`.
    pub fn cells(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.rows
            .iter()
            .flat_map(|r| (r.x_start..r.x_end()).map(move |x| (x, r.y)))
    }

    /// `(min_x, max_x_exclusive, min_y, max_y_exclusive)`.
    pub fn bounding_box(&self) -> (i64, i64, i64, i64) {
        let min_x = self.rows.iter().map(|r| r.x_start).min().unwrap();
        let max_x = self.rows.iter().map(Row::x_end).max().unwrap();
        (min_x, max_x, self.rows[0].y, self.rows[self.rows.len() - 1].y + 1)
    }

    /// Cells with `x + y` even and odd under the checkerboard colouring.
    pub fn color_counts(&self) -> (u64, u64) {
        self.cells().fold((0, 0), |(even, odd), (x, y)| {
            if (x + y).rem_euclid(2) == 0 {
                (even + 1, odd)
            } else {
                (even, odd + 1)
            }
        })
    }

    /// Rotation by 180 degrees about the origin: `(x, y) -> (-x-1, -y-1)`.
    pub fn rotate_half_turn(&self) -> Region {
        let rows = self
            .rows
            .iter()
            .map(|r| Row {
                y: -r.y - 1,
                x_start: -r.x_end(),
                len: r.len,
            })
            .collect();
        Region::new(rows).expect("rotation keeps rows contiguous")
    }

    pub fn is_vertically_convex(&self) -> bool {
        let (min_x, max_x, _, _) = self.bounding_box();
        (min_x..max_x).all(|x| {
            let hits: Vec<usize> = self
                .rows
                .iter()
                .enumerate()
                .filter(|(_, r)| r.contains(x))
                .map(|(i, _)| i)
                .collect();
            hits.windows(2).all(|w| w[1] == w[0] + 1)
        })
    }

    /// Problems that prevent building a hamburger digraph from the region:
    /// vertical convexity, even row lengths, and odd offsets between adjacent
    /// rows of the same half (even across the belt), which is how rows of an
    /// Aztec diamond line up.
    pub fn shape_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.is_vertically_convex() {
            out.push("region is not vertically convex".to_string());
        }
        for r in &self.rows {
            if r.len % 2 != 0 {
                out.push(format!("row {} has odd length {}", r.y, r.len));
            }
        }
        for w in self.rows.windows(2) {
            let across_belt = w[0].y == -1;
            let offset = (w[1].x_start - w[0].x_start).rem_euclid(2);
            if across_belt && offset != 0 {
                out.push("belt rows are offset by an odd amount".to_string());
            } else if !across_belt && offset != 1 {
                out.push(format!(
                    "rows {} and {} are offset by an even amount",
                    w[0].y, w[1].y
                ));
            }
        }
        out
    }

    /// ASCII cell map, top row first: `#` for cells, `.` elsewhere in the bounding box.
    pub fn render(&self) -> String {
        let (min_x, max_x, _, _) = self.bounding_box();
        let mut out = String::new();
        for r in self.rows.iter().rev() {
            for x in min_x..max_x {
                out.push(if r.contains(x) { '#' } else { '.' });
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
