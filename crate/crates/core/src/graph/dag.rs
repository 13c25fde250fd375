use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{integer, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub weight: Rational,
}

/// One half of a hamburger graph. Acyclicity and the ordering of the
/// distinguished vertices are checked by [`super::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dag {
    pub vertex_count: usize,
    pub edges: Vec<Edge>,
    pub distinguished: Vec<usize>,
}

impl Dag {
    pub fn new(vertex_count: usize, edges: Vec<Edge>, distinguished: Vec<usize>) -> Self {
        Dag {
            vertex_count,
            edges,
            distinguished,
        }
    }

    pub fn unweighted(vertex_count: usize, edges: &[(usize, usize)], distinguished: Vec<usize>) -> Self {
        Dag {
            vertex_count,
            edges: edges
                .iter()
                .map(|&(from, to)| Edge {
                    from,
                    to,
                    weight: integer(1),
                })
                .collect(),
            distinguished,
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                count: self.vertex_count,
            });
        }
        Ok(())
    }

    /// Outgoing adjacency lists; `None` if an edge endpoint is out of range.
    pub(crate) fn successors(&self) -> Option<Vec<Vec<(usize, &Rational)>>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for e in &self.edges {
            if e.from >= self.vertex_count || e.to >= self.vertex_count {
                return None;
            }
            adj[e.from].push((e.to, &e.weight));
        }
        Some(adj)
    }

    /// Kahn's algorithm; `None` when the graph has a cycle or a dangling edge.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let adj = self.successors()?;
        let mut indegree = vec![0usize; self.vertex_count];
        for e in &self.edges {
            indegree[e.to] += 1;
        }
        let mut ready: Vec<usize> = (0..self.vertex_count)
            .rev()
            .filter(|&v| indegree[v] == 0)
            .collect();
        let mut order = Vec::with_capacity(self.vertex_count);
        while let Some(v) = ready.pop() {
            order.push(v);
            for &(w, _) in &adj[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    ready.push(w);
                }
            }
        }
        (order.len() == self.vertex_count).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Weighted path sums from `src` to every vertex. The empty path gives
    /// `src` itself weight 1.
    pub fn path_sums_from(&self, src: usize) -> Result<Vec<Rational>> {
        self.check_vertex(src)?;
        let order = self.topological_order().ok_or_else(|| {
            Error::InvalidArgument("path counting needs an acyclic graph".into())
        })?;
        let adj = self.successors().expect("checked by topological_order");
        let mut sums = vec![Rational::zero(); self.vertex_count];
        sums[src] = Rational::one();
        let start = order.iter().position(|&v| v == src).expect("src in order");
        for &v in &order[start..] {
            if sums[v].is_zero() {
                continue;
            }
            let here = sums[v].clone();
            for &(w, weight) in &adj[v] {
                sums[w] += &here * weight;
            }
        }
        Ok(sums)
    }

    /// Sum over all directed paths `src -> dst` of the product of edge weights.
    pub fn count_paths(&self, src: usize, dst: usize) -> Result<Rational> {
        self.check_vertex(dst)?;
        let mut sums = self.path_sums_from(src)?;
        Ok(std::mem::take(&mut sums[dst]))
    }

    /// `reach[a][b]` is true when a nonempty path leads from `a` to `b`.
    pub(crate) fn reachability(&self) -> Option<Vec<Vec<bool>>> {
        let adj = self.successors()?;
        let n = self.vertex_count;
        let mut reach = vec![vec![false; n]; n];
        for (src, row) in reach.iter_mut().enumerate() {
            let mut stack: Vec<usize> = adj[src].iter().map(|&(w, _)| w).collect();
            while let Some(v) = stack.pop() {
                if !row[v] {
                    row[v] = true;
                    stack.extend(adj[v].iter().map(|&(w, _)| w));
                }
            }
        }
        Some(reach)
    }
}
