//! Resonance graphs: perfect matchings joined when their symmetric
//! difference is the boundary of a single finite face.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::graph::Graph;
use crate::matching::{self, Matching, Orientation};
use crate::plane_graph::PlaneGraph;
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct ResonanceGraph {
    /// Vertex `i` is `matchings[i]`, in enumeration order.
    pub matchings: Vec<Matching>,
    pub graph: Graph,
    /// Face label of each edge of `graph`, a finite-face id of the source.
    pub labels: Vec<usize>,
}

impl ResonanceGraph {
    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn label(&self, edge: usize) -> usize {
        self.labels[edge]
    }

    pub fn label_between(&self, u: usize, v: usize) -> Option<usize> {
        self.graph.edge_id(u, v).map(|e| self.labels[e])
    }

    pub fn index_of(&self, m: &Matching) -> Option<usize> {
        self.matchings.binary_search(m).ok()
    }

    pub fn to_json(&self) -> ResonanceJson {
        let edges = self.graph.edges().iter().map(|&(u, v)| [u, v]).collect();
        let labels = self
            .graph
            .edges()
            .iter()
            .zip(&self.labels)
            .map(|(&(u, v), &f)| (format!("{u}-{v}"), f))
            .collect();
        ResonanceJson {
            vertices: self.vertex_count(),
            edges,
            labels,
            matchings: self.matchings.iter().map(Matching::edge_ids).collect(),
        }
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph {name} {{\n");
        for (i, m) in self.matchings.iter().enumerate() {
            s.push_str(&format!("  {i} [tooltip=\"{:?}\"];\n", m.edge_ids()));
        }
        for (&(u, v), f) in self.graph.edges().iter().zip(&self.labels) {
            s.push_str(&format!("  {u} -- {v} [label=\"f{f}\"];\n"));
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResonanceJson {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
    /// `"i-j"` -> face label.
    pub labels: BTreeMap<String, usize>,
    pub matchings: Vec<Vec<usize>>,
}

pub fn build_resonance_graph(pg: &PlaneGraph) -> Result<ResonanceGraph> {
    let matchings = matching::enumerate_perfect_matchings(pg.graph())?;
    from_matchings(pg, matchings)
}

pub(crate) fn from_matchings(pg: &PlaneGraph, matchings: Vec<Matching>) -> Result<ResonanceGraph> {
    if matchings.is_empty() {
        return Err(Error::NoPerfectMatching);
    }
    let face_of: HashMap<&BitSet, usize> = pg
        .finite_faces()
        .into_iter()
        .filter_map(|f| pg.periphery(f).map(|p| (p, f)))
        .collect();
    let pairs: Vec<Vec<(usize, usize, usize)>> = (0..matchings.len())
        .into_par_iter()
        .map(|i| {
            ((i + 1)..matchings.len())
                .filter_map(|j| {
                    let diff = matchings[i]
                        .edge_set()
                        .symmetric_difference(matchings[j].edge_set());
                    face_of.get(&diff).map(|&f| (i, j, f))
                })
                .collect()
        })
        .collect();
    let mut graph = Graph::new(matchings.len());
    let mut labels = Vec::new();
    for (i, j, f) in pairs.into_iter().flatten() {
        graph.add_edge(i, j)?;
        labels.push(f);
    }
    Ok(ResonanceGraph {
        matchings,
        graph,
        labels,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityReport {
    pub resonance_connected: bool,
    pub weakly_elementary: bool,
    pub holds: bool,
}

/// Compares connectivity of R(G) with weak elementarity, each computed on
/// its own.
pub fn check_connectivity_equivalence(pg: &PlaneGraph) -> Result<ConnectivityReport> {
    let rg = build_resonance_graph(pg)?;
    let resonance_connected = rg.graph.is_connected();
    let weakly_elementary = matching::is_weakly_elementary(pg)?;
    Ok(ConnectivityReport {
        resonance_connected,
        weakly_elementary,
        holds: resonance_connected == weakly_elementary,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductReport {
    pub component_sizes: Vec<usize>,
    pub product_size: usize,
    pub resonance_size: usize,
    /// Restriction to the components is a bijection onto the product.
    pub coordinates_bijective: bool,
    /// Adjacency in R(G) is exactly adjacency in one coordinate.
    pub edges_agree: bool,
    pub holds: bool,
}

/// Checks R(G) against the Cartesian product of the resonance graphs of
/// the elementary components through the restriction map.
pub fn check_product_structure(pg: &PlaneGraph) -> Result<ProductReport> {
    if !matching::is_weakly_elementary(pg)? {
        return Err(Error::NotWeaklyElementary);
    }
    let rg = build_resonance_graph(pg)?;
    let parts = matching::elementary_components(pg)?;
    let part_graphs: Vec<ResonanceGraph> = parts
        .iter()
        .map(|p| build_resonance_graph(&p.graph))
        .collect::<Result<_>>()?;
    let component_sizes: Vec<usize> = part_graphs
        .iter()
        .map(ResonanceGraph::vertex_count)
        .collect();
    let product_size = component_sizes.iter().product();

    let mut coords: Vec<Vec<usize>> = Vec::with_capacity(rg.vertex_count());
    let mut bijective = rg.vertex_count() == product_size;
    for m in &rg.matchings {
        let mut coord = Vec::with_capacity(parts.len());
        for (part, prg) in parts.iter().zip(&part_graphs) {
            let local = Matching::from_edges(
                part.edge_map.len(),
                (0..part.edge_map.len()).filter(|&e| m.contains(part.edge_map[e])),
            );
            match prg.index_of(&local) {
                Some(i) => coord.push(i),
                None => {
                    bijective = false;
                    coord.push(usize::MAX);
                }
            }
        }
        coords.push(coord);
    }
    let mut sorted = coords.clone();
    sorted.sort();
    sorted.dedup();
    bijective &= sorted.len() == coords.len();

    let mut edges_agree = true;
    for a in 0..rg.vertex_count() {
        for b in (a + 1)..rg.vertex_count() {
            let differing: Vec<usize> = (0..parts.len())
                .filter(|&i| coords[a][i] != coords[b][i])
                .collect();
            let product_adjacent = differing.len() == 1 && {
                let i = differing[0];
                coords[a][i] != usize::MAX
                    && coords[b][i] != usize::MAX
                    && part_graphs[i].graph.has_edge(coords[a][i], coords[b][i])
            };
            if product_adjacent != rg.graph.has_edge(a, b) {
                edges_agree = false;
            }
        }
    }
    Ok(ProductReport {
        component_sizes,
        product_size,
        resonance_size: rg.vertex_count(),
        coordinates_bijective: bijective,
        edges_agree,
        holds: bijective && edges_agree,
    })
}

/// Distance between the bottom and top matchings in R(G).
pub fn height(pg: &PlaneGraph) -> Result<usize> {
    let rg = build_resonance_graph(pg)?;
    let pair = matching::extremal_from(pg, &rg.matchings)?;
    let from = rg.index_of(&pair.bottom).expect("enumerated");
    let to = rg.index_of(&pair.top).expect("enumerated");
    let dist = rg.graph.bfs_distances(from)[to];
    if dist == crate::graph::UNREACHABLE {
        return Err(Error::PreconditionFailed(
            "bottom and top matchings lie in different components of R(G)".into(),
        ));
    }
    Ok(dist as usize)
}

/// A 4-cycle `a-b-c-d` of R(G) whose labels break the antipodal rule or
/// whose two labels share a vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourCycleViolation {
    pub cycle: [usize; 4],
    pub labels: [usize; 4],
}

/// Scans every 4-cycle once (`a` smallest, `b < d`). Returns the number of
/// 4-cycles and the violations.
pub fn four_cycle_label_check(
    pg: &PlaneGraph,
    rg: &ResonanceGraph,
) -> (usize, Vec<FourCycleViolation>) {
    let g = &rg.graph;
    let mut count = 0;
    let mut bad = Vec::new();
    for a in 0..g.vertex_count() {
        let nbrs: Vec<usize> = g.neighbors(a).filter(|&x| x > a).collect();
        for (i, &b) in nbrs.iter().enumerate() {
            for &d in &nbrs[i + 1..] {
                let (lo, hi) = if b < d { (b, d) } else { (d, b) };
                for c in g.neighbors(lo) {
                    if c <= a || !g.has_edge(c, hi) {
                        continue;
                    }
                    count += 1;
                    let cycle = [a, lo, c, hi];
                    let labels = [
                        rg.label_between(a, lo).expect("edge"),
                        rg.label_between(lo, c).expect("edge"),
                        rg.label_between(c, hi).expect("edge"),
                        rg.label_between(hi, a).expect("edge"),
                    ];
                    let disjoint = {
                        let x = pg.face_vertices(labels[0]);
                        pg.face_vertices(labels[1]).iter().all(|v| !x.contains(v))
                    };
                    if labels[0] != labels[2] || labels[1] != labels[3] || !disjoint {
                        bad.push(FourCycleViolation { cycle, labels });
                    }
                }
            }
        }
    }
    (count, bad)
}

/// Finite faces whose boundary alternates under `m`, found by walking each
/// face rather than by looking at R(G).
pub fn resonant_faces(pg: &PlaneGraph, m: &Matching) -> Vec<usize> {
    pg.finite_faces()
        .into_iter()
        .filter(|&f| {
            pg.periphery_cycle(f).is_some_and(|cycle| {
                matches!(
                    matching::alternating_orientation(pg, m, &cycle),
                    Ok(Orientation::Proper | Orientation::Improper)
                )
            })
        })
        .collect()
}
