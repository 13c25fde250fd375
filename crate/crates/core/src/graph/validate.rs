use std::fmt;

use num_traits::One;

use super::{Dag, GeneralizedHamburgerGraph, HamburgerGraph, Link};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Half {
    Top,
    Bottom,
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Half::Top => "G1",
            Half::Bottom => "G2",
        })
    }
}

/// A single structural problem. Distinguished vertices are named by their
/// 1-based labels: `v_1..v_k` on top, `w_{k+1}..w_{2k}` on the bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    EdgeOutOfRange { half: Half, edge: usize },
    DistinguishedOutOfRange { half: Half, vertex: usize },
    DuplicateDistinguished { half: Half, vertex: usize },
    SizeMismatch { top: usize, bottom: usize, links: usize },
    Cycle { half: Half },
    /// A path runs from the distinguished vertex labelled `from` to the one
    /// labelled `to` against the required order.
    Ordering { half: Half, from: usize, to: usize },
    /// `wt(e_i) * wt(e_i') != 1` for an interior index `i`.
    WeightProduct { index: usize },
    MalformedLinks(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EdgeOutOfRange { half, edge } => {
                write!(f, "{half}: edge #{edge} has an endpoint out of range")
            }
            Violation::DistinguishedOutOfRange { half, vertex } => {
                write!(f, "{half}: distinguished vertex {vertex} out of range")
            }
            Violation::DuplicateDistinguished { half, vertex } => {
                write!(f, "{half}: vertex {vertex} distinguished twice")
            }
            Violation::SizeMismatch { top, bottom, links } => write!(
                f,
                "G1 has {top} distinguished vertices, G2 has {bottom}, belt has {links} pairs"
            ),
            Violation::Cycle { half } => write!(f, "{half} contains a directed cycle"),
            Violation::Ordering { half, from, to } => {
                let name = if *half == Half::Top { "v" } else { "w" };
                write!(f, "{half}: path from {name}_{from} to {name}_{to} violates the ordering")
            }
            Violation::WeightProduct { index } => {
                write!(f, "wt(e_{index}) * wt(e_{index}') != 1")
            }
            Violation::MalformedLinks(msg) => write!(f, "malformed belt: {msg}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join("; "))
    }
}

fn check_half(dag: &Dag, half: Half, k: usize, out: &mut Vec<Violation>) {
    for (i, e) in dag.edges.iter().enumerate() {
        if e.from >= dag.vertex_count || e.to >= dag.vertex_count {
            out.push(Violation::EdgeOutOfRange { half, edge: i });
        }
    }
    let mut ok = true;
    for (i, &v) in dag.distinguished.iter().enumerate() {
        if v >= dag.vertex_count {
            out.push(Violation::DistinguishedOutOfRange { half, vertex: v });
            ok = false;
        } else if dag.distinguished[..i].contains(&v) {
            out.push(Violation::DuplicateDistinguished { half, vertex: v });
            ok = false;
        }
    }
    // Anything below needs well-formed edges.
    let Some(reach) = dag.reachability() else {
        return;
    };
    if !dag.is_acyclic() {
        out.push(Violation::Cycle { half });
    }
    if !ok {
        return;
    }
    let label_offset = match half {
        Half::Top => 1,
        Half::Bottom => k + 1,
    };
    for (i, &a) in dag.distinguished.iter().enumerate() {
        for (j, &b) in dag.distinguished.iter().enumerate() {
            let allowed = match half {
                Half::Top => i < j,
                Half::Bottom => i > j,
            };
            if reach[a][b] && !allowed {
                out.push(Violation::Ordering {
                    half,
                    from: i + label_offset,
                    to: j + label_offset,
                });
            }
        }
    }
}

fn check_sizes(g1: &Dag, g2: &Dag, links: usize, out: &mut Vec<Violation>) -> bool {
    let (top, bottom) = (g1.distinguished.len(), g2.distinguished.len());
    if top != bottom || top != links {
        out.push(Violation::SizeMismatch { top, bottom, links });
        return false;
    }
    true
}

/// Structural check of an ordinary (possibly weighted) hamburger graph.
pub fn validate(h: &HamburgerGraph) -> ValidationReport {
    let mut violations = Vec::new();
    let k = h.k();
    check_sizes(&h.g1, &h.g2, h.links.len(), &mut violations);
    check_half(&h.g1, Half::Top, k, &mut violations);
    check_half(&h.g2, Half::Bottom, k, &mut violations);
    // Indices 1 and k are exempt.
    for i in 1..h.links.len().saturating_sub(1) {
        let l = &h.links[i];
        if !(&l.forward * &l.backward).is_one() {
            violations.push(Violation::WeightProduct { index: i + 1 });
        }
    }
    ValidationReport { violations }
}

fn check_bijection(links: &[Link], k: usize, name: &str, out: &mut Vec<Violation>) {
    let mut seen = vec![false; k];
    for (i, l) in links.iter().enumerate() {
        if l.target >= k {
            out.push(Violation::MalformedLinks(format!(
                "{name} link {} points to index {} (k = {k})",
                i + 1,
                l.target + 1
            )));
        } else if std::mem::replace(&mut seen[l.target], true) {
            out.push(Violation::MalformedLinks(format!(
                "{name} links are not a bijection: index {} used twice",
                l.target + 1
            )));
        }
    }
}

/// Structural check of a generalized graph; each belt direction must be a bijection.
pub fn validate_generalized(h: &GeneralizedHamburgerGraph) -> ValidationReport {
    let mut violations = Vec::new();
    let k = h.k();
    if check_sizes(&h.g1, &h.g2, h.forward.len(), &mut violations)
        && h.backward.len() != k
    {
        violations.push(Violation::MalformedLinks(format!(
            "{} backward links for k = {k}",
            h.backward.len()
        )));
    }
    check_half(&h.g1, Half::Top, k, &mut violations);
    check_half(&h.g2, Half::Bottom, k, &mut violations);
    check_bijection(&h.forward, k, "forward", &mut violations);
    check_bijection(&h.backward, k, "backward", &mut violations);
    ValidationReport { violations }
}
