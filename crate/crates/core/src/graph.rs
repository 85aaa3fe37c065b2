//! Simple undirected graphs with dense vertex ids and stable edge ids.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
    index: HashMap<(usize, usize), usize>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            index: HashMap::new(),
        }
    }

    /// Builds a graph from an edge list; loops and repeated edges are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize> {
        if u >= self.n || v >= self.n {
            return Err(Error::BadParameter(format!(
                "edge ({u}, {v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::BadParameter(format!("loop at vertex {u}")));
        }
        let key = (u.min(v), u.max(v));
        if self.index.contains_key(&key) {
            return Err(Error::BadParameter(format!("repeated edge ({u}, {v})")));
        }
        let id = self.edges.len();
        self.edges.push((u, v));
        self.adj[u].push((v, id));
        self.adj[v].push((u, id));
        self.index.insert(key, id);
        Ok(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    /// `(neighbor, edge id)` pairs in insertion order.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.index.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Neighborhood as a bit mask; only meaningful for graphs on at most 64 vertices.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.neighbors(v).fold(0, |m, w| m | 1 << w)
    }

    pub fn bfs_distances(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.n];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs distances; fails on disconnected graphs.
    pub fn distance_matrix(&self) -> Result<Vec<Vec<u32>>> {
        let rows: Vec<Vec<u32>> = (0..self.n).map(|v| self.bfs_distances(v)).collect();
        if rows.iter().any(|r| r.contains(&UNREACHABLE)) {
            return Err(Error::Disconnected);
        }
        Ok(rows)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).expect("fresh edge");
                }
            }
        }
        g
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let pos: HashMap<usize, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut g = Graph::new(vertices.len());
        for &(u, v) in &self.edges {
            if let (Some(&a), Some(&b)) = (pos.get(&u), pos.get(&v)) {
                g.add_edge(a, b).expect("induced edge");
            }
        }
        g
    }

    /// Edge ids with both ends in `vertices`.
    pub fn induced_edge_ids(&self, vertices: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.n];
        for &v in vertices {
            member[v] = true;
        }
        (0..self.edges.len())
            .filter(|&e| {
                let (u, v) = self.edges[e];
                member[u] && member[v]
            })
            .collect()
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for &(u, v) in &self.edges {
            g.add_edge(u, v).expect("edge");
        }
        for &(u, v) in &other.edges {
            g.add_edge(u + self.n, v + self.n).expect("edge");
        }
        g
    }

    /// Diameter of a connected graph.
    pub fn diameter(&self) -> Result<u32> {
        Ok(self
            .distance_matrix()?
            .iter()
            .flat_map(|r| r.iter().copied())
            .max()
            .unwrap_or(0))
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph {name} {{\n");
        for v in 0..self.n {
            s.push_str(&format!("  {v};\n"));
        }
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            s.push_str(&format!("  {u} -- {v}; // e{id}\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// Plain `{vertices, edges}` form used by the tree and graph subcommands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<i64>,
    pub edges: Vec<[i64; 2]>,
}

impl GraphJson {
    /// Dense graph plus the original id of every dense vertex.
    pub fn to_graph(&self) -> Result<(Graph, Vec<i64>)> {
        let mut pos = HashMap::new();
        for (i, &v) in self.vertices.iter().enumerate() {
            if pos.insert(v, i).is_some() {
                return Err(Error::Schema {
                    field: format!("vertices[{i}]"),
                    message: format!("duplicate vertex id {v}"),
                });
            }
        }
        let mut g = Graph::new(self.vertices.len());
        for (i, [a, b]) in self.edges.iter().enumerate() {
            let lookup = |x: &i64| {
                pos.get(x).copied().ok_or_else(|| Error::Schema {
                    field: format!("edges[{i}]"),
                    message: format!("unknown vertex {x}"),
                })
            };
            let (u, v) = (lookup(a)?, lookup(b)?);
            g.add_edge(u, v).map_err(|e| Error::Schema {
                field: format!("edges[{i}]"),
                message: e.to_string(),
            })?;
        }
        Ok((g, self.vertices.clone()))
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphJson {
            vertices: (0..g.vertex_count() as i64).collect(),
            edges: g
                .edges()
                .iter()
                .map(|&(u, v)| [u as i64, v as i64])
                .collect(),
        }
    }
}
