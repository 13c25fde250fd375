use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::graph::{Dag, HamburgerGraph};

use super::Region;

/// Horizontal domino covering cells `(x_left, y)` and `(x_left + 1, y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Domino {
    pub y: i64,
    pub x_left: i64,
}

impl Domino {
    /// Integer centre `(x_left + 1, y)`; adjacent rows' centres differ by 1 in `x`.
    pub fn center(&self) -> (i64, i64) {
        (self.x_left + 1, self.y)
    }
}

/// The all-horizontal tiling, split at the belt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaturalTiling {
    pub top: Vec<Domino>,
    pub bottom: Vec<Domino>,
}

impl NaturalTiling {
    pub fn len(&self) -> usize {
        self.top.len() + self.bottom.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Tiles each row left to right with horizontal dominoes.
pub fn natural_tiling(region: &Region) -> Result<NaturalTiling> {
    let mut tiling = NaturalTiling {
        top: Vec::new(),
        bottom: Vec::new(),
    };
    for r in region.rows() {
        if r.len % 2 != 0 {
            return Err(Error::InvalidRegion(format!(
                "row {} has odd length {}; no natural tiling",
                r.y, r.len
            )));
        }
        let half = if r.y >= 0 {
            &mut tiling.top
        } else {
            &mut tiling.bottom
        };
        half.extend((0..r.len / 2).map(|i| Domino {
            y: r.y,
            x_left: r.x_start + 2 * i,
        }));
    }
    Ok(tiling)
}

/// A region's hamburger graph plus the domino centre behind every vertex.
#[derive(Clone, Debug)]
pub struct RegionDigraph {
    pub graph: HamburgerGraph,
    pub top_centers: Vec<(i64, i64)>,
    pub bottom_centers: Vec<(i64, i64)>,
}

impl RegionDigraph {
    /// Edges of both halves as centre pairs, for comparing digraphs of different regions.
    pub fn center_edges(&self) -> (Vec<((i64, i64), (i64, i64))>, Vec<((i64, i64), (i64, i64))>) {
        let map = |dag: &Dag, centers: &[(i64, i64)]| {
            let mut out: Vec<_> = dag
                .edges
                .iter()
                .map(|e| (centers[e.from], centers[e.to]))
                .collect();
            out.sort_unstable();
            out
        };
        (
            map(&self.graph.g1, &self.top_centers),
            map(&self.graph.g2, &self.bottom_centers),
        )
    }
}

fn half_dag(centers: &[(i64, i64)], k: usize, steps: &[(i64, i64)]) -> Dag {
    let index: FxHashMap<(i64, i64), usize> =
        centers.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut edges = Vec::new();
    for (i, &(x, y)) in centers.iter().enumerate() {
        for &(dx, dy) in steps {
            if let Some(&j) = index.get(&(x + dx, y + dy)) {
                edges.push((i, j));
            }
        }
    }
    Dag::unweighted(centers.len(), &edges, (0..k).collect())
}

/// Contracts the natural tiling to a hamburger graph: one vertex per domino,
/// top-half edges east / northeast / southeast, bottom-half edges west /
/// southwest / northwest, staying inside each half. `v_1..v_k` are the
/// dominoes of row 0 and `w_{k+1}..w_{2k}` those of row -1, both west to east.
pub fn region_digraph(region: &Region) -> Result<RegionDigraph> {
    let problems = region.shape_violations();
    if !problems.is_empty() {
        return Err(Error::InvalidRegion(problems.join("; ")));
    }
    let tiling = natural_tiling(region)?;
    let (Some(top_belt), Some(bottom_belt)) = (region.row_at(0), region.row_at(-1)) else {
        return Err(Error::InvalidRegion(
            "both halves must be nonempty (rows 0 and -1 present)".into(),
        ));
    };
    if top_belt.x_start != bottom_belt.x_start || top_belt.len != bottom_belt.len {
        return Err(Error::InvalidRegion(
            "belt rows 0 and -1 are not aligned".into(),
        ));
    }
    let k = (top_belt.len / 2) as usize;

    // Belt row first, then away from the belt; west to east inside each row.
    let mut top = tiling.top;
    top.sort_by_key(|d| (d.y, d.x_left));
    let mut bottom = tiling.bottom;
    bottom.sort_by_key(|d| (-d.y, d.x_left));
    let top_centers: Vec<_> = top.iter().map(Domino::center).collect();
    let bottom_centers: Vec<_> = bottom.iter().map(Domino::center).collect();

    let g1 = half_dag(&top_centers, k, &[(2, 0), (1, 1), (1, -1)]);
    let g2 = half_dag(&bottom_centers, k, &[(-2, 0), (-1, -1), (-1, 1)]);
    Ok(RegionDigraph {
        graph: HamburgerGraph::unweighted(g1, g2),
        top_centers,
        bottom_centers,
    })
}

pub fn build_digraph(region: &Region) -> Result<HamburgerGraph> {
    Ok(region_digraph(region)?.graph)
}
