//! Brute-force enumeration of cycle systems, independent of any determinant.
//!
//! The two halves and the belt are merged into one digraph. Simple cycles are
//! found with Johnson's circuit search (one root per vertex, restricted to
//! larger vertex ids, so every cycle appears once starting at its minimum
//! vertex). Cycle systems are the pairwise vertex-disjoint subsets of that
//! inventory, the empty system included.

use std::fmt;

use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::graph::{
    generalized_det, permutation_sign, validate_generalized, Dag, GeneralizedHamburgerGraph,
    HamburgerGraph,
};
use crate::linalg::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_vertices: usize,
    pub max_systems: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_vertices: 64,
            max_systems: 10_000_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum EdgeKind {
    Inner,
    Down,
    Up,
}

/// Merged digraph: top-half vertices first, then bottom-half vertices.
/// Parallel edges are merged by summing their weights.
#[derive(Clone, Debug)]
pub struct CombinedDigraph {
    top: usize,
    k: usize,
    top_labels: FxHashMap<usize, usize>,
    bottom_labels: FxHashMap<usize, usize>,
    adj: Vec<Vec<(usize, Rational, EdgeKind)>>,
}

impl CombinedDigraph {
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    fn from_parts(g1: &Dag, g2: &Dag, down: &[(usize, usize, Rational)], up: &[(usize, usize, Rational)]) -> Self {
        let top = g1.vertex_count;
        let n = top + g2.vertex_count;
        let mut merged: Vec<FxHashMap<usize, (Rational, EdgeKind)>> = vec![FxHashMap::default(); n];
        let mut add = |from: usize, to: usize, w: &Rational, kind: EdgeKind| {
            merged[from]
                .entry(to)
                .and_modify(|(acc, _)| *acc += w)
                .or_insert_with(|| (w.clone(), kind));
        };
        for e in &g1.edges {
            add(e.from, e.to, &e.weight, EdgeKind::Inner);
        }
        for e in &g2.edges {
            add(top + e.from, top + e.to, &e.weight, EdgeKind::Inner);
        }
        for (i, j, w) in down {
            add(g1.distinguished[*i], top + g2.distinguished[*j], w, EdgeKind::Down);
        }
        for (i, j, w) in up {
            add(top + g2.distinguished[*i], g1.distinguished[*j], w, EdgeKind::Up);
        }
        let adj = merged
            .into_iter()
            .map(|m| {
                let mut out: Vec<_> = m
                    .into_iter()
                    .filter(|(_, (w, _))| !w.is_zero())
                    .map(|(to, (w, kind))| (to, w, kind))
                    .collect();
                out.sort_by_key(|&(to, _, _)| to);
                out
            })
            .collect();
        CombinedDigraph {
            top,
            k: g1.distinguished.len(),
            top_labels: g1.distinguished.iter().enumerate().map(|(i, &v)| (v, i)).collect(),
            bottom_labels: g2.distinguished.iter().enumerate().map(|(i, &v)| (v, i)).collect(),
            adj,
        }
    }

    pub fn from_generalized(h: &GeneralizedHamburgerGraph) -> Result<Self> {
        let report = validate_generalized(h);
        if !report.is_valid() {
            return Err(Error::InvalidGraph(report));
        }
        let down: Vec<_> = h
            .forward
            .iter()
            .enumerate()
            .map(|(i, l)| (i, l.target, l.weight.clone()))
            .collect();
        let up: Vec<_> = h
            .backward
            .iter()
            .enumerate()
            .map(|(i, l)| (i, l.target, l.weight.clone()))
            .collect();
        Ok(Self::from_parts(&h.g1, &h.g2, &down, &up))
    }

    pub fn from_standard(h: &HamburgerGraph) -> Result<Self> {
        let report = crate::graph::validate(h);
        if !report.is_valid() {
            return Err(Error::InvalidGraph(report));
        }
        Self::from_generalized(&h.to_generalized())
    }

    /// Readable vertex name: `v{i}` / `w{k+i}` for distinguished vertices,
    /// `a{id}` / `b{id}` for auxiliary top / bottom vertices.
    pub fn label(&self, v: usize) -> String {
        if v < self.top {
            match self.top_labels.get(&v) {
                Some(i) => format!("v{}", i + 1),
                None => format!("a{v}"),
            }
        } else {
            let local = v - self.top;
            match self.bottom_labels.get(&local) {
                Some(i) => format!("w{}", self.k + i + 1),
                None => format!("b{local}"),
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleCycle {
    /// Vertices in traversal order, starting at the smallest id.
    pub vertices: Vec<usize>,
    pub weight: Rational,
    /// Number of belt edges used from the bottom half to the top half.
    pub up_edges: usize,
    mask: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleSystem {
    /// Indices into the cycle inventory, increasing.
    pub cycles: Vec<usize>,
    /// Total number of bottom-to-top belt edges (`l`).
    pub up_edges: usize,
    pub sign: i8,
    pub weight: Rational,
}

impl CycleSystem {
    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }
}

/// Totals over all systems. `positive` and `negative` are weight sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemSummary {
    pub systems: u64,
    pub positive_systems: u64,
    pub negative_systems: u64,
    pub positive: Rational,
    pub negative: Rational,
}

impl SystemSummary {
    pub fn signed_sum(&self) -> Rational {
        &self.positive - &self.negative
    }
}

pub struct CycleOracle {
    graph: CombinedDigraph,
    config: OracleConfig,
    cycles: Vec<SimpleCycle>,
}

impl CycleOracle {
    pub fn new(graph: CombinedDigraph, config: OracleConfig) -> Result<Self> {
        let n = graph.vertex_count();
        let limit = config.max_vertices.min(64);
        if n > limit {
            return Err(Error::SizeBound {
                what: "combined vertex count",
                actual: n as u128,
                limit: limit as u128,
            });
        }
        let cycles = find_cycles(&graph);
        Ok(CycleOracle {
            graph,
            config,
            cycles,
        })
    }

    pub fn for_standard(h: &HamburgerGraph) -> Result<Self> {
        Self::new(CombinedDigraph::from_standard(h)?, OracleConfig::default())
    }

    pub fn for_generalized(h: &GeneralizedHamburgerGraph) -> Result<Self> {
        Self::new(CombinedDigraph::from_generalized(h)?, OracleConfig::default())
    }

    pub fn with_config(mut self, config: OracleConfig) -> Self {
        self.config = config;
        self
    }

    pub fn graph(&self) -> &CombinedDigraph {
        &self.graph
    }

    pub fn cycles(&self) -> &[SimpleCycle] {
        &self.cycles
    }

    /// Visits every system once, in lexicographic order of inventory indices.
    fn visit(&self, mut f: impl FnMut(&[usize], usize, &Rational)) -> Result<u64> {
        struct Walk<'a, F> {
            cycles: &'a [SimpleCycle],
            cap: u64,
            seen: u64,
            chosen: Vec<usize>,
            f: F,
        }
        impl<F: FnMut(&[usize], usize, &Rational)> Walk<'_, F> {
            fn go(&mut self, from: usize, mask: u64, up: usize, weight: &Rational) -> Result<()> {
                self.seen += 1;
                if self.seen > self.cap {
                    return Err(Error::SizeBound {
                        what: "cycle systems",
                        actual: self.seen as u128,
                        limit: self.cap as u128,
                    });
                }
                (self.f)(&self.chosen, up, weight);
                for i in from..self.cycles.len() {
                    let c = &self.cycles[i];
                    if c.mask & mask != 0 {
                        continue;
                    }
                    self.chosen.push(i);
                    let w = weight * &c.weight;
                    self.go(i + 1, mask | c.mask, up + c.up_edges, &w)?;
                    self.chosen.pop();
                }
                Ok(())
            }
        }
        let mut walk = Walk {
            cycles: &self.cycles,
            cap: self.config.max_systems,
            seen: 0,
            chosen: Vec::new(),
            f: &mut f,
        };
        walk.go(0, 0, 0, &Rational::one())?;
        Ok(walk.seen)
    }

    pub fn systems(&self) -> Result<Vec<CycleSystem>> {
        let mut out = Vec::new();
        self.visit(|chosen, up, weight| {
            out.push(CycleSystem {
                cycles: chosen.to_vec(),
                up_edges: up,
                sign: system_sign(up, chosen.len()),
                weight: weight.clone(),
            })
        })?;
        Ok(out)
    }

    pub fn summary(&self) -> Result<SystemSummary> {
        let mut s = SystemSummary {
            systems: 0,
            positive_systems: 0,
            negative_systems: 0,
            positive: Rational::zero(),
            negative: Rational::zero(),
        };
        s.systems = self.visit(|chosen, up, weight| {
            if system_sign(up, chosen.len()) > 0 {
                s.positive_systems += 1;
                s.positive += weight;
            } else {
                s.negative_systems += 1;
                s.negative += weight;
            }
        })?;
        Ok(s)
    }

    pub fn signed_sum(&self) -> Result<Rational> {
        Ok(self.summary()?.signed_sum())
    }

    pub fn format_cycle(&self, c: &SimpleCycle) -> String {
        let names: Vec<String> = c.vertices.iter().map(|&v| self.graph.label(v)).collect();
        format!("({})", names.join(","))
    }

    /// One line per system: cycles, `l`, `m`, sign and weight.
    pub fn format_system(&self, s: &CycleSystem) -> String {
        let cycles: Vec<String> = s
            .cycles
            .iter()
            .map(|&i| self.format_cycle(&self.cycles[i]))
            .collect();
        format!(
            "[{}] l={} m={} sign={} weight={}",
            cycles.join(" "),
            s.up_edges,
            s.cycle_count(),
            if s.sign > 0 { "+1" } else { "-1" },
            s.weight
        )
    }
}

/// `(-1)^(l + m)`.
pub fn system_sign(up_edges: usize, cycles: usize) -> i8 {
    if (up_edges + cycles) % 2 == 0 {
        1
    } else {
        -1
    }
}

fn find_cycles(g: &CombinedDigraph) -> Vec<SimpleCycle> {
    struct Search<'a> {
        g: &'a CombinedDigraph,
        root: usize,
        blocked: Vec<bool>,
        blocked_by: Vec<Vec<usize>>,
        path: Vec<usize>,
        out: Vec<SimpleCycle>,
    }

    impl Search<'_> {
        fn unblock(&mut self, v: usize) {
            let mut stack = vec![v];
            while let Some(u) = stack.pop() {
                if self.blocked[u] {
                    self.blocked[u] = false;
                    stack.append(&mut self.blocked_by[u]);
                }
            }
        }

        fn emit(&mut self) {
            let mut weight = Rational::one();
            let mut up = 0;
            let mut mask = 0u64;
            for (i, &v) in self.path.iter().enumerate() {
                let next = self.path[(i + 1) % self.path.len()];
                let (_, w, kind) = self.g.adj[v]
                    .iter()
                    .find(|(to, _, _)| *to == next)
                    .expect("cycle edge exists");
                weight *= w;
                if *kind == EdgeKind::Up {
                    up += 1;
                }
                mask |= 1u64 << v;
            }
            self.out.push(SimpleCycle {
                vertices: self.path.clone(),
                weight,
                up_edges: up,
                mask,
            });
        }

        fn circuit(&mut self, v: usize) -> bool {
            let mut found = false;
            self.path.push(v);
            self.blocked[v] = true;
            let g = self.g;
            for &(w, _, _) in &g.adj[v] {
                if w < self.root {
                    continue;
                }
                if w == self.root {
                    self.emit();
                    found = true;
                } else if !self.blocked[w] && self.circuit(w) {
                    found = true;
                }
            }
            if found {
                self.unblock(v);
            } else {
                for &(w, _, _) in &g.adj[v] {
                    if w >= self.root && !self.blocked_by[w].contains(&v) {
                        self.blocked_by[w].push(v);
                    }
                }
            }
            self.path.pop();
            found
        }
    }

    let n = g.vertex_count();
    let mut search = Search {
        g,
        root: 0,
        blocked: vec![false; n],
        blocked_by: vec![Vec::new(); n],
        path: Vec::new(),
        out: Vec::new(),
    };
    for root in 0..n {
        search.root = root;
        search.blocked.iter_mut().for_each(|b| *b = false);
        search.blocked_by.iter_mut().for_each(Vec::clear);
        search.circuit(root);
    }
    search.out
}

pub fn enumerate_cycles(h: &HamburgerGraph) -> Result<Vec<SimpleCycle>> {
    Ok(CycleOracle::for_standard(h)?.cycles)
}

pub fn enumerate_systems(h: &HamburgerGraph) -> Result<Vec<CycleSystem>> {
    CycleOracle::for_standard(h)?.systems()
}

/// Sum of `sign * weight` over all cycle systems, the empty system giving +1.
pub fn signed_sum(h: &HamburgerGraph) -> Result<Rational> {
    CycleOracle::for_standard(h)?.signed_sum()
}

/// Determinant versus system count for a generalized graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityReport {
    pub det: Rational,
    pub system_count: u64,
    pub signed_sum: Rational,
    /// Sign of the belt permutation `i -> backward[forward[i]]`.
    pub permutation_sign: i8,
    /// Integer determinant with the same parity as the system count.
    pub parity_match: bool,
}

impl fmt::Display for ParityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "det={} systems={} signed_sum={} permutation={} parity_match={}",
            self.det,
            self.system_count,
            self.signed_sum,
            if self.permutation_sign > 0 { "even" } else { "odd" },
            self.parity_match
        )
    }
}

pub fn parity_experiment(h: &GeneralizedHamburgerGraph) -> Result<ParityReport> {
    let det = generalized_det(h)?;
    let oracle = CycleOracle::for_generalized(h)?;
    let summary = oracle.summary()?;
    let perm = h
        .pairing_permutation()
        .and_then(|p| permutation_sign(&p))
        .ok_or_else(|| Error::Invariant("validated pairing is not a permutation".into()))?;
    let parity_match = det.is_integer()
        && (det.numer() - num_bigint::BigInt::from(summary.systems)).abs() % 2u32
            == num_bigint::BigInt::zero();
    Ok(ParityReport {
        det,
        system_count: summary.systems,
        signed_sum: summary.signed_sum(),
        permutation_sign: perm,
        parity_match,
    })
}
