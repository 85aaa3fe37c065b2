//! Combinatorial plane embeddings given as rotation systems.
//!
//! Rotations list neighbors in clockwise order. Faces are traced by the
//! rule `next(u -> v) = (v -> w)` where `w` precedes `u` in the clockwise
//! rotation at `v`, which keeps the traced face on the right of every dart.
//! Finite faces are therefore walked clockwise and the outer face
//! counter-clockwise.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::graph::Graph;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    /// Closed walk; `boundary[i] -> boundary[i + 1]` is the dart `darts[i]`.
    pub boundary: Vec<usize>,
    pub darts: Vec<usize>,
    pub is_finite: bool,
    pub component: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerDual {
    /// Dual vertex `i` stands for face `faces[i]`.
    pub faces: Vec<usize>,
    pub graph: Graph,
}

impl InnerDual {
    pub fn dual_vertex_of(&self, face: usize) -> Option<usize> {
        self.faces.binary_search(&face).ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum P2cRefutation {
    Degree { vertex: i64, degree: usize },
    InteriorDegreeThree { vertex: i64 },
    NotAlternating { first: i64, second: i64 },
    OddDegreeThreeCount { count: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct P2cOutcome {
    pub colorable: bool,
    /// Degree-3 vertices in periphery order (the witness when colorable).
    pub degree_three_on_periphery: Vec<i64>,
    pub refutation: Option<P2cRefutation>,
}

#[derive(Debug, Clone)]
pub struct PlaneGraph {
    graph: Graph,
    ids: Vec<i64>,
    rotation: Vec<Vec<usize>>,
    faces: Vec<Face>,
    dart_face: Vec<usize>,
    outer: Vec<usize>,
    components: Vec<Vec<usize>>,
    component_of: Vec<usize>,
    coloring: Vec<Color>,
    periphery: Vec<Option<BitSet>>,
}

/// A sub-embedding together with the maps back into its parent.
#[derive(Debug, Clone)]
pub struct SubEmbedding {
    pub graph: PlaneGraph,
    /// New vertex index -> parent vertex index.
    pub vertex_map: Vec<usize>,
    /// New edge id -> parent edge id.
    pub edge_map: Vec<usize>,
}

impl PlaneGraph {
    /// Builds an embedding from original vertex ids, an edge list and a
    /// clockwise rotation per vertex. `outer_face` optionally names the
    /// boundary cycle of the outer face.
    pub fn build(
        vertices: &[i64],
        edges: &[(i64, i64)],
        rotations: &HashMap<i64, Vec<i64>>,
        outer_face: Option<&[i64]>,
    ) -> Result<PlaneGraph> {
        let hints: Vec<Vec<i64>> = outer_face.map(|f| vec![f.to_vec()]).unwrap_or_default();
        Self::build_with_outer_faces(vertices, edges, rotations, &hints)
    }

    /// Like [`PlaneGraph::build`], with at most one outer-face hint per component.
    pub fn build_with_outer_faces(
        vertices: &[i64],
        edges: &[(i64, i64)],
        rotations: &HashMap<i64, Vec<i64>>,
        outer_faces: &[Vec<i64>],
    ) -> Result<PlaneGraph> {
        let mut pos = HashMap::new();
        for (i, &v) in vertices.iter().enumerate() {
            if pos.insert(v, i).is_some() {
                return Err(Error::Schema {
                    field: format!("vertices[{i}]"),
                    message: format!("duplicate vertex id {v}"),
                });
            }
        }
        let dense = |field: String, v: i64| {
            pos.get(&v).copied().ok_or_else(|| Error::Schema {
                field,
                message: format!("unknown vertex {v}"),
            })
        };
        let mut graph = Graph::new(vertices.len());
        for (i, &(a, b)) in edges.iter().enumerate() {
            let (u, v) = (
                dense(format!("edges[{i}]"), a)?,
                dense(format!("edges[{i}]"), b)?,
            );
            graph.add_edge(u, v).map_err(|e| Error::Schema {
                field: format!("edges[{i}]"),
                message: e.to_string(),
            })?;
        }
        let mut rotation = vec![Vec::new(); vertices.len()];
        for (&v, nbrs) in rotations {
            let dv = dense(format!("rotations.{v}"), v)?;
            rotation[dv] = nbrs
                .iter()
                .map(|&w| dense(format!("rotations.{v}"), w))
                .collect::<Result<_>>()?;
        }
        let ids = vertices.to_vec();
        let hint_walks = outer_faces
            .iter()
            .enumerate()
            .map(|(i, f)| {
                f.iter()
                    .map(|&v| dense(format!("outer_face[{i}]"), v))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::assemble(graph, ids, rotation, OuterChoice::Walks(hint_walks), None)
    }

    fn assemble(
        graph: Graph,
        ids: Vec<i64>,
        rotation: Vec<Vec<usize>>,
        outer_choice: OuterChoice,
        coloring: Option<Vec<Color>>,
    ) -> Result<PlaneGraph> {
        let n = graph.vertex_count();
        let m = graph.edge_count();
        // Every neighbor appears exactly once in each rotation.
        for v in 0..n {
            let mut listed = rotation[v].clone();
            listed.sort_unstable();
            let mut actual: Vec<usize> = graph.neighbors(v).collect();
            actual.sort_unstable();
            if listed != actual {
                return Err(Error::BadRotation(format!(
                    "rotation of vertex {} lists {:?}, neighbors are {:?}",
                    ids[v],
                    listed.iter().map(|&w| ids[w]).collect::<Vec<_>>(),
                    actual.iter().map(|&w| ids[w]).collect::<Vec<_>>()
                )));
            }
        }
        let tail = |d: usize| {
            let (a, b) = graph.edge(d / 2);
            if d.is_multiple_of(2) {
                a
            } else {
                b
            }
        };
        let mut rot_pos = vec![0; 2 * m];
        for d in 0..2 * m {
            let (u, v) = (tail(d), tail(d ^ 1));
            rot_pos[d] = rotation[v]
                .iter()
                .position(|&w| w == u)
                .expect("checked above");
        }
        let dart_to = |u: usize, v: usize| {
            let e = graph.edge_id(u, v).expect("adjacent");
            if graph.edge(e).0 == u {
                2 * e
            } else {
                2 * e + 1
            }
        };

        let components = graph.components();
        let mut component_of = vec![0; n];
        for (c, comp) in components.iter().enumerate() {
            for &v in comp {
                component_of[v] = c;
            }
        }

        let mut dart_face = vec![usize::MAX; 2 * m];
        let mut faces: Vec<Face> = Vec::new();
        for start in 0..2 * m {
            if dart_face[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let (mut boundary, mut darts) = (Vec::new(), Vec::new());
            let mut d = start;
            loop {
                dart_face[d] = id;
                darts.push(d);
                boundary.push(tail(d));
                let v = tail(d ^ 1);
                let deg = rotation[v].len();
                let w = rotation[v][(rot_pos[d] + deg - 1) % deg];
                d = dart_to(v, w);
                if d == start {
                    break;
                }
            }
            faces.push(Face {
                id,
                component: component_of[tail(start)],
                boundary,
                darts,
                is_finite: true,
            });
        }

        for (c, comp) in components.iter().enumerate() {
            let v_count = comp.len() as i64;
            let e_count = comp.iter().map(|&v| graph.degree(v)).sum::<usize>() as i64 / 2;
            if e_count == 0 {
                continue;
            }
            let f_count = faces.iter().filter(|f| f.component == c).count() as i64;
            if v_count - e_count + f_count != 2 {
                return Err(Error::NonPlanarEmbedding(format!(
                    "component containing vertex {}: V - E + F = {} - {} + {} != 2",
                    ids[comp[0]], v_count, e_count, f_count
                )));
            }
        }

        let hint_darts: Vec<usize> = match outer_choice {
            OuterChoice::Darts(ds) => ds,
            OuterChoice::Walks(walks) => walks
                .iter()
                .enumerate()
                .map(|(i, walk)| {
                    faces
                        .iter()
                        .find(|f| same_cyclic_walk(&f.boundary, walk))
                        .map(|f| f.darts[0])
                        .ok_or_else(|| Error::Schema {
                            field: format!("outer_face[{i}]"),
                            message: "does not match the boundary of any traced face".into(),
                        })
                })
                .collect::<Result<_>>()?,
        };
        let mut outer = vec![usize::MAX; components.len()];
        for d in hint_darts {
            let f = dart_face[d];
            let c = faces[f].component;
            if outer[c] != usize::MAX && outer[c] != f {
                return Err(Error::Schema {
                    field: "outer_face".into(),
                    message: format!(
                        "two outer faces given for the component of vertex {}",
                        ids[components[c][0]]
                    ),
                });
            }
            outer[c] = f;
        }
        for (c, slot) in outer.iter_mut().enumerate() {
            if *slot != usize::MAX {
                continue;
            }
            // Longest boundary, then smallest minimum vertex id, then lowest face id.
            *slot = faces
                .iter()
                .filter(|f| f.component == c)
                .min_by_key(|f| {
                    let min_id = f.boundary.iter().map(|&v| ids[v]).min().unwrap_or(i64::MAX);
                    (std::cmp::Reverse(f.darts.len()), min_id, f.id)
                })
                .map(|f| f.id)
                .unwrap_or(usize::MAX);
        }
        for &f in &outer {
            if f != usize::MAX {
                faces[f].is_finite = false;
            }
        }

        let coloring = match coloring {
            Some(c) => {
                for &(u, v) in graph.edges() {
                    if c[u] == c[v] {
                        return Err(Error::NotBipartite(ids[u]));
                    }
                }
                c
            }
            None => two_coloring(&graph, &ids, &components)?,
        };

        let periphery = faces.iter().map(|f| simple_periphery(&graph, f)).collect();

        Ok(PlaneGraph {
            graph,
            ids,
            rotation,
            faces,
            dart_face,
            outer,
            components,
            component_of,
            coloring,
            periphery,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Original id of dense vertex `v`.
    pub fn id(&self, v: usize) -> i64 {
        self.ids[v]
    }

    pub fn ids(&self) -> &[i64] {
        &self.ids
    }

    pub fn vertex_of_id(&self, id: i64) -> Option<usize> {
        self.ids.iter().position(|&x| x == id)
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &Face {
        &self.faces[id]
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() <= 1
    }

    /// Outer face of every component with at least one edge.
    pub fn outer_faces(&self) -> Vec<usize> {
        self.outer
            .iter()
            .copied()
            .filter(|&f| f != usize::MAX)
            .collect()
    }

    /// Outer face of the component containing vertex 0.
    pub fn outer_face(&self) -> Option<usize> {
        self.outer.first().copied().filter(|&f| f != usize::MAX)
    }

    pub fn outer_face_of_component(&self, c: usize) -> Option<usize> {
        self.outer.get(c).copied().filter(|&f| f != usize::MAX)
    }

    /// Finite face ids in ascending order.
    pub fn finite_faces(&self) -> Vec<usize> {
        self.faces
            .iter()
            .filter(|f| f.is_finite)
            .map(|f| f.id)
            .collect()
    }

    pub fn coloring(&self) -> &[Color] {
        &self.coloring
    }

    pub fn color(&self, v: usize) -> Color {
        self.coloring[v]
    }

    pub fn dart_tail(&self, d: usize) -> usize {
        let (a, b) = self.graph.edge(d / 2);
        if d.is_multiple_of(2) {
            a
        } else {
            b
        }
    }

    pub fn dart(&self, u: usize, v: usize) -> Option<usize> {
        let e = self.graph.edge_id(u, v)?;
        Some(if self.graph.edge(e).0 == u {
            2 * e
        } else {
            2 * e + 1
        })
    }

    /// Face lying to the right of the dart `u -> v`.
    pub fn face_right_of(&self, u: usize, v: usize) -> Option<usize> {
        self.dart(u, v).map(|d| self.dart_face[d])
    }

    /// The two faces on either side of edge `e` (equal for a bridge).
    pub fn faces_of_edge(&self, e: usize) -> (usize, usize) {
        (self.dart_face[2 * e], self.dart_face[2 * e + 1])
    }

    /// Edges of the face boundary that form its periphery cycle, if the
    /// boundary walk traverses a single simple cycle once (ignoring edges
    /// walked twice).
    pub fn periphery(&self, face: usize) -> Option<&BitSet> {
        self.periphery[face].as_ref()
    }

    /// Sorted distinct vertices on the boundary of `face`.
    pub fn face_vertices(&self, face: usize) -> Vec<usize> {
        let mut vs = self.faces[face].boundary.clone();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Vertices of the periphery cycle of `face` in walk order.
    pub fn periphery_cycle(&self, face: usize) -> Option<Vec<usize>> {
        let edges = self.periphery[face].as_ref()?;
        let f = &self.faces[face];
        let walk: Vec<usize> = f
            .darts
            .iter()
            .filter(|&&d| edges.contains(d / 2))
            .map(|&d| self.dart_tail(d))
            .collect();
        Some(walk)
    }

    pub fn inner_dual(&self) -> InnerDual {
        let faces = self.finite_faces();
        let mut graph = Graph::new(faces.len());
        let index: HashMap<usize, usize> = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        for e in 0..self.edge_count() {
            let (a, b) = self.faces_of_edge(e);
            if let (Some(&x), Some(&y)) = (index.get(&a), index.get(&b)) {
                if x != y && !graph.has_edge(x, y) {
                    graph.add_edge(x.min(y), x.max(y)).expect("fresh dual edge");
                }
            }
        }
        InnerDual { faces, graph }
    }

    /// Edge ids of a simple cycle given as a vertex sequence.
    pub fn cycle_edges(&self, cycle: &[usize]) -> Result<Vec<usize>> {
        if cycle.len() < 3 {
            return Err(Error::NotACycle(format!(
                "length {} is too short",
                cycle.len()
            )));
        }
        let mut seen = vec![false; self.vertex_count()];
        let mut edges = Vec::with_capacity(cycle.len());
        for (i, &v) in cycle.iter().enumerate() {
            if v >= self.vertex_count() {
                return Err(Error::NotACycle(format!("vertex index {v} out of range")));
            }
            if seen[v] {
                return Err(Error::NotACycle(format!("vertex {} repeats", self.ids[v])));
            }
            seen[v] = true;
            let w = cycle[(i + 1) % cycle.len()];
            let e = self.graph.edge_id(v, w).ok_or_else(|| {
                Error::NotACycle(format!(
                    "{} and {} are not adjacent",
                    self.ids[v], self.ids[w]
                ))
            })?;
            edges.push(e);
        }
        Ok(edges)
    }

    /// Finite faces on the bounded side of a simple cycle: faces of the
    /// cycle's component not reachable from its outer face without crossing
    /// a cycle edge.
    pub fn cycle_interior(&self, cycle: &[usize]) -> Result<Vec<usize>> {
        let edges = self.cycle_edges(cycle)?;
        let on_cycle = BitSet::from_ids(self.edge_count(), edges);
        let c = self.component_of[cycle[0]];
        let start = self.outer[c];
        let mut reached = vec![false; self.faces.len()];
        reached[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(f) = queue.pop_front() {
            for &d in &self.faces[f].darts {
                if on_cycle.contains(d / 2) {
                    continue;
                }
                let g = self.dart_face[d ^ 1];
                if !reached[g] {
                    reached[g] = true;
                    queue.push_back(g);
                }
            }
        }
        Ok(self
            .faces
            .iter()
            .filter(|f| f.component == c && !reached[f.id])
            .map(|f| f.id)
            .collect())
    }

    /// The cycle re-ordered so that walking it keeps its interior on the
    /// right, i.e. clockwise.
    pub fn clockwise(&self, cycle: &[usize]) -> Result<Vec<usize>> {
        let interior = self.cycle_interior(cycle)?;
        let right = self.face_right_of(cycle[0], cycle[1]).expect("cycle edge");
        if interior.binary_search(&right).is_ok() {
            Ok(cycle.to_vec())
        } else {
            let mut rev = cycle.to_vec();
            rev.reverse();
            Ok(rev)
        }
    }

    /// Peripheral 2-colorability of an elementary plane bipartite graph
    /// other than `K2`.
    pub fn peripherally_2_colorable(&self) -> Result<P2cOutcome> {
        if self.vertex_count() == 2 && self.edge_count() == 1 {
            return Err(Error::PreconditionFailed("graph is K2".into()));
        }
        if !crate::matching::is_elementary(&self.graph)? {
            return Err(Error::NotElementary);
        }
        let refute = |r: P2cRefutation| P2cOutcome {
            colorable: false,
            degree_three_on_periphery: Vec::new(),
            refutation: Some(r),
        };
        for v in 0..self.vertex_count() {
            let d = self.graph.degree(v);
            if d != 2 && d != 3 {
                return Ok(refute(P2cRefutation::Degree {
                    vertex: self.ids[v],
                    degree: d,
                }));
            }
        }
        let outer = self.outer[0];
        let walk = &self.faces[outer].boundary;
        let mut on_periphery = vec![false; self.vertex_count()];
        for &v in walk {
            on_periphery[v] = true;
        }
        if let Some(v) =
            (0..self.vertex_count()).find(|&v| self.graph.degree(v) == 3 && !on_periphery[v])
        {
            return Ok(refute(P2cRefutation::InteriorDegreeThree {
                vertex: self.ids[v],
            }));
        }
        // Cyclic alternation is unchanged by reversing the walk or swapping
        // the two colors, so one pass covers both orientations and colorings.
        let cubic: Vec<usize> = walk
            .iter()
            .copied()
            .filter(|&v| self.graph.degree(v) == 3)
            .collect();
        if cubic.len() % 2 == 1 {
            return Ok(refute(P2cRefutation::OddDegreeThreeCount {
                count: cubic.len(),
            }));
        }
        for i in 0..cubic.len() {
            let (a, b) = (cubic[i], cubic[(i + 1) % cubic.len()]);
            if self.coloring[a] == self.coloring[b] {
                return Ok(refute(P2cRefutation::NotAlternating {
                    first: self.ids[a],
                    second: self.ids[b],
                }));
            }
        }
        Ok(P2cOutcome {
            colorable: true,
            degree_three_on_periphery: cubic.iter().map(|&v| self.ids[v]).collect(),
            refutation: None,
        })
    }

    /// Sub-embedding on the kept edges (and, when given, only the listed
    /// vertices). Rotations and the two-coloring are inherited; each new
    /// component's outer face is the face containing the parent's outer
    /// region.
    pub fn subgraph(&self, keep_edge: &BitSet, vertices: Option<&[usize]>) -> Result<SubEmbedding> {
        let vertex_map: Vec<usize> = match vertices {
            Some(vs) => vs.to_vec(),
            None => (0..self.vertex_count()).collect(),
        };
        let mut new_index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertex_map.iter().enumerate() {
            new_index[v] = i;
        }
        let mut graph = Graph::new(vertex_map.len());
        let mut edge_map = Vec::new();
        for (e, &(u, v)) in self.graph.edges().iter().enumerate() {
            if keep_edge.contains(e) && new_index[u] != usize::MAX && new_index[v] != usize::MAX {
                graph.add_edge(new_index[u], new_index[v])?;
                edge_map.push(e);
            }
        }
        let kept = BitSet::from_ids(self.edge_count(), edge_map.iter().copied());
        let rotation: Vec<Vec<usize>> = vertex_map
            .iter()
            .map(|&v| {
                self.rotation[v]
                    .iter()
                    .filter(|&&w| self.graph.edge_id(v, w).is_some_and(|e| kept.contains(e)))
                    .map(|&w| new_index[w])
                    .collect()
            })
            .collect();

        // Faces of the parent that merge with its outer face once every edge
        // outside a new component is gone.
        let mut outer_darts = Vec::new();
        for comp in graph.components() {
            let comp_edges: Vec<usize> = comp
                .iter()
                .flat_map(|&v| graph.incident(v).iter().map(|&(_, e)| edge_map[e]))
                .collect();
            if comp_edges.is_empty() {
                continue;
            }
            let in_comp = BitSet::from_ids(self.edge_count(), comp_edges.iter().copied());
            let parent_c = self.component_of[vertex_map[comp[0]]];
            let start = self.outer[parent_c];
            let mut reached = vec![false; self.faces.len()];
            reached[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(f) = queue.pop_front() {
                for &d in &self.faces[f].darts {
                    if in_comp.contains(d / 2) {
                        continue;
                    }
                    let g = self.dart_face[d ^ 1];
                    if !reached[g] {
                        reached[g] = true;
                        queue.push_back(g);
                    }
                }
            }
            let witness = comp_edges
                .iter()
                .flat_map(|&e| [2 * e, 2 * e + 1])
                .find(|&d| reached[self.dart_face[d]])
                .expect("a component borders the outer region");
            let (u, v) = (self.dart_tail(witness), self.dart_tail(witness ^ 1));
            let ne = graph
                .edge_id(new_index[u], new_index[v])
                .expect("kept edge");
            outer_darts.push(if graph.edge(ne).0 == new_index[u] {
                2 * ne
            } else {
                2 * ne + 1
            });
        }
        let ids = vertex_map.iter().map(|&v| self.ids[v]).collect();
        let coloring = vertex_map.iter().map(|&v| self.coloring[v]).collect();
        let sub = PlaneGraph::assemble(
            graph,
            ids,
            rotation,
            OuterChoice::Darts(outer_darts),
            Some(coloring),
        )?;
        Ok(SubEmbedding {
            graph: sub,
            vertex_map,
            edge_map,
        })
    }

    /// Embedding of `self` next to `other`, each keeping its own outer face.
    /// Vertex ids of `other` are shifted past the largest id of `self`.
    pub fn disjoint_union(&self, other: &PlaneGraph) -> PlaneGraph {
        let shift = self.ids.iter().copied().max().map_or(0, |m| m + 1)
            - other.ids.iter().copied().min().unwrap_or(0);
        let n = self.vertex_count();
        let graph = self.graph.disjoint_union(&other.graph);
        let mut ids = self.ids.clone();
        ids.extend(other.ids.iter().map(|&x| x + shift));
        let mut rotation = self.rotation.clone();
        rotation.extend(
            other
                .rotation
                .iter()
                .map(|r| r.iter().map(|&w| w + n).collect()),
        );
        let m = self.edge_count();
        let mut outer_darts: Vec<usize> = self
            .outer_faces()
            .iter()
            .map(|&f| self.faces[f].darts[0])
            .collect();
        outer_darts.extend(
            other
                .outer_faces()
                .iter()
                .map(|&f| other.faces[f].darts[0] + 2 * m),
        );
        let mut coloring = self.coloring.clone();
        coloring.extend(other.coloring.iter().copied());
        PlaneGraph::assemble(
            graph,
            ids,
            rotation,
            OuterChoice::Darts(outer_darts),
            Some(coloring),
        )
        .expect("union of valid embeddings is valid")
    }

    pub fn to_json(&self) -> EmbeddingJson {
        let rotations = (0..self.vertex_count())
            .map(|v| {
                (
                    self.ids[v].to_string(),
                    self.rotation[v].iter().map(|&w| self.ids[w]).collect(),
                )
            })
            .collect();
        let walks: Vec<Vec<i64>> = self
            .outer_faces()
            .iter()
            .map(|&f| {
                self.faces[f]
                    .boundary
                    .iter()
                    .map(|&v| self.ids[v])
                    .collect()
            })
            .collect();
        let (outer_face, outer_faces) = if walks.len() <= 1 {
            (walks.into_iter().next(), None)
        } else {
            (None, Some(walks))
        };
        EmbeddingJson {
            vertices: self.ids.clone(),
            edges: self
                .graph
                .edges()
                .iter()
                .map(|&(u, v)| [self.ids[u], self.ids[v]])
                .collect(),
            rotations,
            outer_face,
            outer_faces,
            face_names: None,
        }
    }

    /// Face whose boundary walk matches `walk` (original ids, either
    /// direction, any starting point).
    pub fn face_by_walk(&self, walk: &[i64]) -> Option<usize> {
        let local: Option<Vec<usize>> = walk.iter().map(|&id| self.vertex_of_id(id)).collect();
        let local = local?;
        self.faces
            .iter()
            .find(|f| same_cyclic_walk(&f.boundary, &local))
            .map(|f| f.id)
    }

    /// DOT rendering; each edge carries the ids of its two faces as a comment.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph {name} {{\n");
        for v in 0..self.vertex_count() {
            let color = match self.coloring[v] {
                Color::White => "white",
                Color::Black => "black",
            };
            s.push_str(&format!("  {} [color={color}];\n", self.ids[v]));
        }
        for (e, &(u, v)) in self.graph.edges().iter().enumerate() {
            let (a, b) = self.faces_of_edge(e);
            s.push_str(&format!(
                "  {} -- {}; // e{e} faces {a}|{b}\n",
                self.ids[u], self.ids[v]
            ));
        }
        s.push_str("}\n");
        s
    }
}

enum OuterChoice {
    Walks(Vec<Vec<usize>>),
    Darts(Vec<usize>),
}

fn same_cyclic_walk(walk: &[usize], hint: &[usize]) -> bool {
    if walk.len() != hint.len() || walk.is_empty() {
        return false;
    }
    let n = walk.len();
    (0..n).any(|shift| {
        (0..n).all(|i| walk[(i + shift) % n] == hint[i])
            || (0..n).all(|i| walk[(shift + n - i) % n] == hint[i])
    })
}

fn two_coloring(graph: &Graph, ids: &[i64], components: &[Vec<usize>]) -> Result<Vec<Color>> {
    let mut color: Vec<Option<Color>> = vec![None; graph.vertex_count()];
    for comp in components {
        let root = *comp
            .iter()
            .min_by_key(|&&v| ids[v])
            .expect("nonempty component");
        color[root] = Some(Color::White);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let cv = color[v].expect("colored");
            for w in graph.neighbors(v) {
                match color[w] {
                    None => {
                        color[w] = Some(cv.flip());
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cv => return Err(Error::NotBipartite(ids[w])),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(color
        .into_iter()
        .map(|c| c.expect("every vertex colored"))
        .collect())
}

fn simple_periphery(graph: &Graph, face: &Face) -> Option<BitSet> {
    let mut count: HashMap<usize, usize> = HashMap::new();
    for &d in &face.darts {
        *count.entry(d / 2).or_default() += 1;
    }
    let once: Vec<usize> = count
        .iter()
        .filter(|(_, &c)| c == 1)
        .map(|(&e, _)| e)
        .collect();
    if once.is_empty() {
        return None;
    }
    let mut degree: HashMap<usize, usize> = HashMap::new();
    for &e in &once {
        let (u, v) = graph.edge(e);
        *degree.entry(u).or_default() += 1;
        *degree.entry(v).or_default() += 1;
    }
    if degree.values().any(|&d| d != 2) || degree.len() != once.len() {
        return None;
    }
    // A 2-regular edge set is one cycle iff it is connected.
    let set = BitSet::from_ids(graph.edge_count(), once.iter().copied());
    let start = graph.edge(once[0]).0;
    let mut seen = vec![start];
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &(w, e) in graph.incident(v) {
            if set.contains(e) && !seen.contains(&w) {
                seen.push(w);
                stack.push(w);
            }
        }
    }
    (seen.len() == degree.len()).then_some(set)
}

/// Wire form: `{"vertices", "edges", "rotations", "outer_face"?}`; graphs
/// with several components may name one outer face each in `outer_faces`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingJson {
    pub vertices: Vec<i64>,
    pub edges: Vec<[i64; 2]>,
    pub rotations: BTreeMap<String, Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer_face: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer_faces: Option<Vec<Vec<i64>>>,
    /// Optional names for faces, each given by its boundary walk.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub face_names: Option<BTreeMap<String, Vec<i64>>>,
}

impl EmbeddingJson {
    pub fn to_plane_graph(&self) -> Result<PlaneGraph> {
        let mut rotations = HashMap::new();
        for (key, nbrs) in &self.rotations {
            let v = key.trim().parse::<i64>().map_err(|_| Error::Schema {
                field: format!("rotations.{key}"),
                message: "rotation keys must be integer vertex ids".into(),
            })?;
            rotations.insert(v, nbrs.clone());
        }
        let edges: Vec<(i64, i64)> = self.edges.iter().map(|&[a, b]| (a, b)).collect();
        let mut hints = Vec::new();
        hints.extend(self.outer_face.iter().cloned());
        hints.extend(self.outer_faces.iter().flatten().cloned());
        PlaneGraph::build_with_outer_faces(&self.vertices, &edges, &rotations, &hints)
    }

    pub fn parse(text: &str) -> Result<PlaneGraph> {
        Self::from_text(text)?.to_plane_graph()
    }

    pub fn from_text(text: &str) -> Result<EmbeddingJson> {
        serde_json::from_str(text).map_err(|e| Error::Schema {
            field: format!("line {} column {}", e.line(), e.column()),
            message: e.to_string(),
        })
    }

    /// Resolves `face_names` against the built embedding.
    pub fn named_faces(&self, pg: &PlaneGraph) -> Result<BTreeMap<String, usize>> {
        let Some(names) = &self.face_names else {
            return Ok(BTreeMap::new());
        };
        names
            .iter()
            .map(|(name, walk)| {
                pg.face_by_walk(walk)
                    .map(|f| (name.clone(), f))
                    .ok_or_else(|| Error::Schema {
                        field: format!("face_names.{name}"),
                        message: "does not match the boundary of any traced face".into(),
                    })
            })
            .collect()
    }
}
