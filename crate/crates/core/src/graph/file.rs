//! JSON interchange format for hamburger graphs.
//!
//! ```json
//! {
//!   "k": 3,
//!   "g1": { "vertices": 3, "distinguished": [0, 1, 2],
//!           "edges": [[0, 1, "1"], [1, 2, "1"], [0, 2, "1"]] },
//!   "g2": { "vertices": 3, "distinguished": [0, 1, 2],
//!           "edges": [[2, 1, "1"], [1, 0, "1"], [2, 0, "1"]] },
//!   "e3": [["1", "1"], ["1", "1"], ["1", "1"]],
//!   "pairing": { "forward": [0, 1, 2], "backward": [0, 2, 1] }
//! }
//! ```
//!
//! Weights are `"p"` or `"p/q"`. `e3[i]` holds the weights of the edge leaving
//! `v_{i+1}` and of the edge leaving `w_{k+i+1}`; it defaults to all ones.
//! `pairing` is optional and makes the graph generalized: `forward[i] = j`
//! means `v_{i+1} -> w_{k+j+1}`, `backward[i] = j` means `w_{k+i+1} -> v_{j+1}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{parse_rational, Rational};

use super::{Dag, Edge, GeneralizedHamburgerGraph, HamburgerGraph, Link, LinkWeights};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct HalfFile {
    pub vertices: usize,
    pub distinguished: Vec<usize>,
    #[serde(default)]
    pub edges: Vec<(usize, usize, String)>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PairingFile {
    pub forward: Vec<usize>,
    pub backward: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub k: usize,
    pub g1: HalfFile,
    pub g2: HalfFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e3: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairing: Option<PairingFile>,
}

/// A parsed graph file: ordinary unless a pairing was given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphInput {
    Standard(HamburgerGraph),
    Generalized(GeneralizedHamburgerGraph),
}

impl GraphInput {
    pub fn generalized(&self) -> GeneralizedHamburgerGraph {
        match self {
            GraphInput::Standard(h) => h.to_generalized(),
            GraphInput::Generalized(g) => g.clone(),
        }
    }
}

fn half_to_dag(half: &HalfFile) -> Result<Dag> {
    let edges = half
        .edges
        .iter()
        .map(|(from, to, w)| {
            Ok(Edge {
                from: *from,
                to: *to,
                weight: parse_rational(w)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Dag::new(half.vertices, edges, half.distinguished.clone()))
}

fn dag_to_half(dag: &Dag) -> HalfFile {
    HalfFile {
        vertices: dag.vertex_count,
        distinguished: dag.distinguished.clone(),
        edges: dag
            .edges
            .iter()
            .map(|e| (e.from, e.to, e.weight.to_string()))
            .collect(),
    }
}

fn all_unit(weights: &[&Rational]) -> bool {
    weights.iter().all(|w| num_traits::One::is_one(*w))
}

impl GraphFile {
    pub fn parse(text: &str) -> Result<GraphFile> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("graph file serializes");
        s.push('\n');
        s
    }

    pub fn to_input(&self) -> Result<GraphInput> {
        let k = self.k;
        for (name, half) in [("g1", &self.g1), ("g2", &self.g2)] {
            if half.distinguished.len() != k {
                return Err(Error::Parse(format!(
                    "{name} lists {} distinguished vertices, k = {k}",
                    half.distinguished.len()
                )));
            }
        }
        let g1 = half_to_dag(&self.g1)?;
        let g2 = half_to_dag(&self.g2)?;
        let weights: Vec<(Rational, Rational)> = match &self.e3 {
            Some(pairs) => {
                if pairs.len() != k {
                    return Err(Error::Parse(format!(
                        "e3 has {} weight pairs, k = {k}",
                        pairs.len()
                    )));
                }
                pairs
                    .iter()
                    .map(|(f, b)| Ok((parse_rational(f)?, parse_rational(b)?)))
                    .collect::<Result<_>>()?
            }
            None => vec![(crate::linalg::integer(1), crate::linalg::integer(1)); k],
        };
        match &self.pairing {
            None => Ok(GraphInput::Standard(HamburgerGraph::new(
                g1,
                g2,
                weights
                    .into_iter()
                    .map(|(forward, backward)| LinkWeights { forward, backward })
                    .collect(),
            ))),
            Some(p) => {
                if p.forward.len() != k || p.backward.len() != k {
                    return Err(Error::Parse(format!(
                        "pairing must list k = {k} targets in each direction"
                    )));
                }
                Ok(GraphInput::Generalized(GeneralizedHamburgerGraph {
                    g1,
                    g2,
                    forward: p
                        .forward
                        .iter()
                        .zip(&weights)
                        .map(|(&target, (w, _))| Link {
                            target,
                            weight: w.clone(),
                        })
                        .collect(),
                    backward: p
                        .backward
                        .iter()
                        .zip(&weights)
                        .map(|(&target, (_, w))| Link {
                            target,
                            weight: w.clone(),
                        })
                        .collect(),
                }))
            }
        }
    }

    pub fn from_standard(h: &HamburgerGraph) -> GraphFile {
        let weights: Vec<&Rational> = h
            .links
            .iter()
            .flat_map(|l| [&l.forward, &l.backward])
            .collect();
        GraphFile {
            k: h.k(),
            g1: dag_to_half(&h.g1),
            g2: dag_to_half(&h.g2),
            e3: (!all_unit(&weights)).then(|| {
                h.links
                    .iter()
                    .map(|l| (l.forward.to_string(), l.backward.to_string()))
                    .collect()
            }),
            pairing: None,
        }
    }

    pub fn from_generalized(h: &GeneralizedHamburgerGraph) -> GraphFile {
        GraphFile {
            k: h.k(),
            g1: dag_to_half(&h.g1),
            g2: dag_to_half(&h.g2),
            e3: Some(
                h.forward
                    .iter()
                    .zip(&h.backward)
                    .map(|(f, b)| (f.weight.to_string(), b.weight.to_string()))
                    .collect(),
            ),
            pairing: Some(PairingFile {
                forward: h.forward.iter().map(|l| l.target).collect(),
                backward: h.backward.iter().map(|l| l.target).collect(),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{counterexample_graph, example_graph};
    use crate::linalg::rational;

    #[test]
    fn example_round_trip() {
        let h = example_graph();
        let text = GraphFile::from_standard(&h).to_json();
        assert!(!text.contains("e3"));
        let back = GraphFile::parse(&text).unwrap().to_input().unwrap();
        assert_eq!(back, GraphInput::Standard(h));
    }

    #[test]
    fn weighted_and_generalized_round_trip() {
        let mut h = example_graph();
        h.links[2].forward = rational(-3, 4);
        h.g1.edges[0].weight = rational(5, 2);
        let text = GraphFile::from_standard(&h).to_json();
        assert!(text.contains("\"-3/4\""));
        assert_eq!(
            GraphFile::parse(&text).unwrap().to_input().unwrap(),
            GraphInput::Standard(h)
        );

        let g = counterexample_graph();
        let text = GraphFile::from_generalized(&g).to_json();
        assert_eq!(
            GraphFile::parse(&text).unwrap().to_input().unwrap(),
            GraphInput::Generalized(g)
        );
    }

    #[test]
    fn bad_files() {
        assert!(GraphFile::parse("{").is_err());
        let text = r#"{"k":1,"g1":{"vertices":1,"distinguished":[0],"edges":[]},
            "g2":{"vertices":1,"distinguished":[0]},"e3":[["1","1/0"]]}"#;
        assert!(GraphFile::parse(text).unwrap().to_input().is_err());
        let text = r#"{"k":2,"g1":{"vertices":1,"distinguished":[0]},
            "g2":{"vertices":1,"distinguished":[0]}}"#;
        assert!(GraphFile::parse(text).unwrap().to_input().is_err());
        let text = r#"{"k":1,"g1":{"vertices":1,"distinguished":[0]},
            "g2":{"vertices":1,"distinguished":[0]},"extra":1}"#;
        assert!(GraphFile::parse(text).is_err());
    }
}
