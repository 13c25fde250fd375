use crate::error::{Error, Result};

use super::{Region, Row};

/// Aztec diamond of order `n`: the `2n(n+1)` unit squares whose corners
/// satisfy `|x| + |y| <= n + 1`.
pub fn aztec_diamond(n: i64) -> Result<Region> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!("diamond order {n} < 1")));
    }
    let rows = (0..n)
        .flat_map(|j| {
            let len = 2 * (n - j);
            [
                Row { y: j, x_start: -n + j, len },
                Row { y: -1 - j, x_start: -n + j, len },
            ]
        })
        .collect();
    Region::new(rows)
}

/// The `q`-pillow of order `n`: squares whose four corners satisfy
/// `|x + y| <= n + 1` and `|q y - x| <= n + q`. This is the lattice version of
/// the strict inequalities `|x+y| < n+1`, `|qy-x| < n+q`, fixed so that the
/// two central rows have length `2n` and `q = 1` gives the Aztec diamond.
pub fn q_pillow(n: i64, q: i64) -> Result<Region> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!("pillow order {n} < 1")));
    }
    if q < 1 || q % 2 == 0 {
        return Err(Error::InvalidArgument(format!("step length q = {q} must be odd and positive")));
    }
    let inside = |x: i64, y: i64| (x + y).abs() <= n + 1 && (q * y - x).abs() <= n + q;
    let span = (q + 1) * (n + 2);
    let mut cells = Vec::new();
    for y in -(n + 1)..=n {
        for x in -span..=span {
            if inside(x, y) && inside(x + 1, y) && inside(x, y + 1) && inside(x + 1, y + 1) {
                cells.push((x, y));
            }
        }
    }
    Region::from_cells(cells)
}

/// Boundary steps of a generalized pillow with central rows `[-n, n)` at
/// `y = 0` and `y = -1`. Walking away from the belt, each row moves its left
/// end right by the next `*_left` step and its right end left by the next
/// `*_right` step. Every step must be odd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PillowSteps {
    pub n: i64,
    pub top_left: Vec<i64>,
    pub top_right: Vec<i64>,
    pub bottom_left: Vec<i64>,
    pub bottom_right: Vec<i64>,
}

impl PillowSteps {
    /// Steps of the `q`-pillow: `q` on the top-left and bottom-right
    /// diagonals, `1` on the other two, continued while rows stay nonempty.
    pub fn uniform(n: i64, q: i64) -> Self {
        let rows = if n >= 1 && q >= 1 { ((2 * n - 1) / (q + 1)) as usize } else { 0 };
        PillowSteps {
            n,
            top_left: vec![q; rows],
            top_right: vec![1; rows],
            bottom_left: vec![1; rows],
            bottom_right: vec![q; rows],
        }
    }
}

/// Builds a generalized Aztec pillow from its boundary steps.
pub fn generalized_pillow(boundary: &PillowSteps) -> Result<Region> {
    if boundary.n < 1 {
        return Err(Error::InvalidRegion(format!("order {} < 1", boundary.n)));
    }
    for (name, steps) in [
        ("top_left", &boundary.top_left),
        ("top_right", &boundary.top_right),
        ("bottom_left", &boundary.bottom_left),
        ("bottom_right", &boundary.bottom_right),
    ] {
        if let Some(bad) = steps.iter().find(|&&s| s < 1 || s % 2 == 0) {
            return Err(Error::InvalidRegion(format!(
                "{name} step {bad} is not a positive odd number"
            )));
        }
    }
    let n = boundary.n;
    let mut rows = vec![
        Row { y: 0, x_start: -n, len: 2 * n },
        Row { y: -1, x_start: -n, len: 2 * n },
    ];
    for (half, left, right) in [
        ("top", &boundary.top_left, &boundary.top_right),
        ("bottom", &boundary.bottom_left, &boundary.bottom_right),
    ] {
        if left.len() != right.len() {
            return Err(Error::InvalidRegion(format!(
                "{half} boundary does not close: {} left steps, {} right steps",
                left.len(),
                right.len()
            )));
        }
        let (mut lo, mut hi) = (-n, n);
        for (r, (a, b)) in left.iter().zip(right).enumerate() {
            lo += a;
            hi -= b;
            if hi <= lo {
                return Err(Error::InvalidRegion(format!(
                    "{half} boundary does not close: row {} would be empty",
                    r + 1
                )));
            }
            let y = if half == "top" { r as i64 + 1 } else { -(r as i64) - 2 };
            rows.push(Row { y, x_start: lo, len: hi - lo });
        }
    }
    let region = Region::new(rows)?;
    let problems = region.shape_violations();
    if !problems.is_empty() {
        return Err(Error::InvalidRegion(problems.join("; ")));
    }
    Ok(region)
}

/// Smallest `N` such that the region is a union of natural-tiling dominoes of
/// the Aztec diamond of order `N`.
pub fn enclosing_diamond_order(region: &Region) -> Result<i64> {
    let problems = region.shape_violations();
    if !problems.is_empty() {
        return Err(Error::InvalidRegion(problems.join("; ")));
    }
    let row0 = region
        .row_at(0)
        .ok_or_else(|| Error::InvalidRegion("region has no row at y = 0".into()))?;
    let mut order = region
        .rows()
        .iter()
        .map(|r| {
            // Diamond row y spans [-N + d, N - d) with d the distance from the belt.
            let d = if r.y >= 0 { r.y } else { -r.y - 1 };
            (d - r.x_start).max(r.x_end() + d)
        })
        .max()
        .unwrap()
        .max(1);
    // Row 0 of the diamond starts at -N; domino boundaries must agree.
    if (order + row0.x_start).rem_euclid(2) != 0 {
        order += 1;
    }
    Ok(order)
}
