//! Partial cubes and daisy cubes.
//!
//! Labels are `u64` bit strings: bit `i` is coordinate `i`, written as the
//! `i`-th character of the string form. At most 64 coordinates.

mod construct;
mod daisy;
mod hypercubes;
mod iso;
mod theta;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::{Error, Result};

pub use construct::{
    build_di, fibonacci_cube, hypercube, lucas_cube, lucas_forest_search, simplex_graph,
    ForestSearchReport,
};
pub use daisy::{
    downward_closure, is_daisy_cube, is_daisy_labelled, is_median_graph, maximal_elements,
    verify_daisy_certificate, DaisyCertificate, DaisyOutcome, MedianOutcome,
};
pub use hypercubes::{
    induced_hypercubes, is_hypercube, maximal_hypercubes, maximal_hypercubes_labelled, Subcube,
};
pub use iso::find_isomorphism;
pub use theta::{partial_cube_labelling, theta_classes, CubeLabelling, ThetaResult};

pub const MAX_COORDS: usize = 64;

/// Bit string of length `n`, coordinate 0 first.
pub fn label_string(label: u64, n: usize) -> String {
    (0..n)
        .map(|i| if label >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

pub fn parse_label(s: &str) -> Option<u64> {
    if s.len() > MAX_COORDS {
        return None;
    }
    s.chars().enumerate().try_fold(0u64, |acc, (i, c)| match c {
        '0' => Some(acc),
        '1' => Some(acc | 1 << i),
        _ => None,
    })
}

/// A graph whose vertices carry bit-string labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledGraph {
    pub graph: Graph,
    pub labels: Vec<u64>,
    pub n_coords: usize,
}

impl LabelledGraph {
    /// Induced subgraph of the hypercube on `labels` (duplicates removed,
    /// vertices in ascending label order).
    pub fn from_labels(n_coords: usize, labels: impl IntoIterator<Item = u64>) -> Result<Self> {
        if n_coords > MAX_COORDS {
            return Err(Error::SizeLimitExceeded {
                what: "coordinate count",
                actual: n_coords,
                limit: MAX_COORDS,
            });
        }
        let set: BTreeSet<u64> = labels.into_iter().collect();
        let labels: Vec<u64> = set.into_iter().collect();
        let index: HashMap<u64, usize> = labels.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut graph = Graph::new(labels.len());
        for (i, &x) in labels.iter().enumerate() {
            for bit in 0..n_coords {
                let y = x ^ 1 << bit;
                if y > x {
                    if let Some(&j) = index.get(&y) {
                        graph.add_edge(i, j)?;
                    }
                }
            }
        }
        Ok(LabelledGraph {
            graph,
            labels,
            n_coords,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn label_set(&self) -> BTreeSet<u64> {
        self.labels.iter().copied().collect()
    }

    pub fn vertex_of_label(&self, label: u64) -> Option<usize> {
        self.labels.iter().position(|&x| x == label)
    }

    pub fn label_string(&self, v: usize) -> String {
        label_string(self.labels[v], self.n_coords)
    }

    /// Edges as label pairs, each pair ordered.
    pub fn label_edges(&self) -> BTreeSet<(u64, u64)> {
        self.graph
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (self.labels[u], self.labels[v]);
                (a.min(b), a.max(b))
            })
            .collect()
    }

    /// Same coordinate count, same label set, same edges between labels.
    /// The identity on labels is then an isomorphism.
    pub fn same_labelled(&self, other: &LabelledGraph) -> bool {
        self.n_coords == other.n_coords
            && self.label_set() == other.label_set()
            && self.label_edges() == other.label_edges()
    }

    /// Every edge joins labels at Hamming distance one and every such pair
    /// of vertices is an edge.
    pub fn is_induced_hypercube_subgraph(&self) -> bool {
        let labels = self.label_set();
        if labels.len() != self.labels.len() {
            return false;
        }
        let expected =
            Self::from_labels(self.n_coords, labels.iter().copied()).map(|l| l.label_edges());
        expected.is_ok_and(|e| e == self.label_edges())
    }

    /// Old coordinate `i` becomes coordinate `perm[i]`.
    pub fn permute_coordinates(&self, perm: &[usize]) -> LabelledGraph {
        let labels = self
            .labels
            .iter()
            .map(|&x| {
                perm.iter()
                    .enumerate()
                    .filter(|&(i, _)| x >> i & 1 == 1)
                    .fold(0u64, |acc, (_, &j)| acc | 1 << j)
            })
            .collect();
        LabelledGraph {
            graph: self.graph.clone(),
            labels,
            n_coords: perm.len().max(self.n_coords),
        }
    }

    pub fn translate(&self, by: u64) -> LabelledGraph {
        LabelledGraph {
            graph: self.graph.clone(),
            labels: self.labels.iter().map(|&x| x ^ by).collect(),
            n_coords: self.n_coords,
        }
    }

    pub fn to_json(&self) -> LabelledJson {
        LabelledJson {
            n_coords: self.n_coords,
            labels: (0..self.vertex_count())
                .map(|v| (v.to_string(), self.label_string(v)))
                .collect(),
            edges: self.graph.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph {name} {{\n");
        for v in 0..self.vertex_count() {
            s.push_str(&format!("  {v} [label=\"{}\"];\n", self.label_string(v)));
        }
        for &(u, v) in self.graph.edges() {
            s.push_str(&format!("  {u} -- {v};\n"));
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelledJson {
    pub n_coords: usize,
    pub labels: BTreeMap<String, String>,
    pub edges: Vec<[usize; 2]>,
}

impl LabelledJson {
    pub fn to_labelled(&self) -> Result<LabelledGraph> {
        let n = self.labels.len();
        let mut labels = vec![None; n];
        for (key, value) in &self.labels {
            let v: usize = key
                .parse()
                .ok()
                .filter(|&v| v < n)
                .ok_or_else(|| Error::Schema {
                    field: format!("labels.{key}"),
                    message: format!("vertex keys must be 0..{n}"),
                })?;
            let label = parse_label(value)
                .filter(|_| value.len() == self.n_coords)
                .ok_or_else(|| Error::Schema {
                    field: format!("labels.{key}"),
                    message: format!("expected a 0/1 string of length {}", self.n_coords),
                })?;
            labels[v] = Some(label);
        }
        let labels: Vec<u64> = labels
            .into_iter()
            .map(|l| l.expect("keys cover 0..n"))
            .collect();
        let graph = Graph::from_edges(n, self.edges.iter().map(|&[u, v]| (u, v)))?;
        Ok(LabelledGraph {
            graph,
            labels,
            n_coords: self.n_coords,
        })
    }
}
