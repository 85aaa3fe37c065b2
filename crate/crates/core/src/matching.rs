//! Perfect matchings and the matching-theoretic classifiers of plane
//! bipartite graphs.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::graph::Graph;
use crate::limits;
use crate::plane_graph::{Color, PlaneGraph, SubEmbedding};
use crate::{Error, Result};

/// A perfect matching, identified by its edge set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    edges: BitSet,
}

impl Matching {
    pub fn from_edges(edge_count: usize, ids: impl IntoIterator<Item = usize>) -> Self {
        Matching {
            edges: BitSet::from_ids(edge_count, ids),
        }
    }

    pub fn edge_set(&self) -> &BitSet {
        &self.edges
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.contains(e)
    }

    /// Sorted edge ids; the JSON form of a matching.
    pub fn edge_ids(&self) -> Vec<usize> {
        self.edges.iter().collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EdgeClass {
    Allowed,
    Forbidden,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClassification {
    pub classes: Vec<EdgeClass>,
}

impl EdgeClassification {
    pub fn is_allowed(&self, e: usize) -> bool {
        self.classes[e] == EdgeClass::Allowed
    }

    pub fn allowed(&self) -> BitSet {
        BitSet::from_ids(
            self.classes.len(),
            (0..self.classes.len()).filter(|&e| self.is_allowed(e)),
        )
    }

    pub fn forbidden_count(&self) -> usize {
        self.classes
            .iter()
            .filter(|&&c| c == EdgeClass::Forbidden)
            .count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    Proper,
    Improper,
    NotAlternating,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalPair {
    pub bottom: Matching,
    pub top: Matching,
}

/// Visits every perfect matching of the subgraph induced by `alive`,
/// branching on the smallest uncovered vertex. The visitor returns `false`
/// to stop early.
pub fn for_each_perfect_matching(
    g: &Graph,
    alive: &[bool],
    visit: &mut dyn FnMut(&[usize]) -> bool,
) {
    let mut covered: Vec<bool> = alive.iter().map(|&a| !a).collect();
    let mut chosen = Vec::new();
    search(g, &mut covered, &mut chosen, 0, visit);
}

fn search(
    g: &Graph,
    covered: &mut [bool],
    chosen: &mut Vec<usize>,
    from: usize,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let Some(v) = (from..covered.len()).find(|&v| !covered[v]) else {
        return visit(chosen);
    };
    covered[v] = true;
    for &(w, e) in g.incident(v) {
        if covered[w] {
            continue;
        }
        covered[w] = true;
        chosen.push(e);
        let go_on = search(g, covered, chosen, v + 1, visit);
        chosen.pop();
        covered[w] = false;
        if !go_on {
            covered[v] = false;
            return false;
        }
    }
    covered[v] = false;
    true
}

/// Number of perfect matchings of the subgraph induced by `alive`,
/// counting at most `cap`. The empty graph has exactly one.
pub fn count_perfect_matchings(g: &Graph, alive: &[bool], cap: usize) -> usize {
    let mut count = 0;
    for_each_perfect_matching(g, alive, &mut |_| {
        count += 1;
        count < cap
    });
    count
}

/// All perfect matchings, ordered by edge-set value.
pub fn enumerate_perfect_matchings(g: &Graph) -> Result<Vec<Matching>> {
    limits::check_edges(g.edge_count())?;
    let m = g.edge_count();
    let mut out = Vec::new();
    for_each_perfect_matching(g, &vec![true; g.vertex_count()], &mut |edges| {
        out.push(Matching::from_edges(m, edges.iter().copied()));
        true
    });
    out.sort();
    Ok(out)
}

pub fn classify_edges(g: &Graph) -> Result<EdgeClassification> {
    let matchings = enumerate_perfect_matchings(g)?;
    classify_from(g, &matchings)
}

fn classify_from(g: &Graph, matchings: &[Matching]) -> Result<EdgeClassification> {
    if matchings.is_empty() {
        return Err(Error::NoPerfectMatching);
    }
    let classes = (0..g.edge_count())
        .map(|e| {
            if matchings.iter().any(|m| m.contains(e)) {
                EdgeClass::Allowed
            } else {
                EdgeClass::Forbidden
            }
        })
        .collect();
    Ok(EdgeClassification { classes })
}

/// An edge is allowed iff deleting its two ends leaves a graph with a
/// perfect matching (or nothing). Independent of the enumeration.
pub fn edge_allowed_by_deletion(g: &Graph, e: usize) -> bool {
    let (u, v) = g.edge(e);
    let mut alive = vec![true; g.vertex_count()];
    alive[u] = false;
    alive[v] = false;
    count_perfect_matchings(g, &alive, 1) > 0
}

/// Connected with every edge allowed.
pub fn is_elementary(g: &Graph) -> Result<bool> {
    let classes = classify_edges(g)?;
    Ok(g.is_connected() && classes.forbidden_count() == 0)
}

/// Connected components of the allowed-edge subgraph, as sub-embeddings.
pub fn elementary_components(pg: &PlaneGraph) -> Result<Vec<SubEmbedding>> {
    let classes = classify_edges(pg.graph())?;
    let allowed = pg.subgraph(&classes.allowed(), None)?;
    allowed
        .graph
        .components()
        .iter()
        .map(|comp| {
            let parent_vertices: Vec<usize> = comp.iter().map(|&v| allowed.vertex_map[v]).collect();
            pg.subgraph(&classes.allowed(), Some(&parent_vertices))
        })
        .collect()
}

/// Deleting the forbidden edges creates no new finite face: every finite
/// face of the re-traced allowed-edge embedding is a finite face of `pg`.
pub fn is_weakly_elementary(pg: &PlaneGraph) -> Result<bool> {
    let classes = classify_edges(pg.graph())?;
    let sub = pg.subgraph(&classes.allowed(), None)?;
    let original: Vec<&BitSet> = pg
        .finite_faces()
        .into_iter()
        .filter_map(|f| pg.periphery(f))
        .collect();
    for f in sub.graph.finite_faces() {
        let lifted = match sub.graph.periphery(f) {
            Some(p) => BitSet::from_ids(pg.edge_count(), p.iter().map(|e| sub.edge_map[e])),
            None => return Ok(false),
        };
        if !original.contains(&&lifted) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Deleting the boundary vertices of `face` leaves nothing or a graph with
/// exactly one perfect matching.
pub fn is_forcing_face(pg: &PlaneGraph, face: usize) -> bool {
    let mut alive = vec![true; pg.vertex_count()];
    for v in pg.face_vertices(face) {
        alive[v] = false;
    }
    if alive.iter().all(|&a| !a) {
        return true;
    }
    count_perfect_matchings(pg.graph(), &alive, 2) == 1
}

pub fn is_outer_face_forcing(pg: &PlaneGraph) -> Result<bool> {
    let outer = pg
        .outer_face()
        .ok_or_else(|| Error::PreconditionFailed("graph has no faces".into()))?;
    Ok(is_forcing_face(pg, outer))
}

/// Orientation of a cycle relative to a matching, walking it clockwise.
pub fn alternating_orientation(
    pg: &PlaneGraph,
    m: &Matching,
    cycle: &[usize],
) -> Result<Orientation> {
    let cw = pg.clockwise(cycle)?;
    Ok(orientation_of_clockwise(pg, m, &cw))
}

fn orientation_of_clockwise(pg: &PlaneGraph, m: &Matching, cw: &[usize]) -> Orientation {
    let k = cw.len();
    let g = pg.graph();
    let in_m: Vec<bool> = (0..k)
        .map(|i| m.contains(g.edge_id(cw[i], cw[(i + 1) % k]).expect("cycle edge")))
        .collect();
    if k % 2 == 1 || (0..k).any(|i| in_m[i] == in_m[(i + 1) % k]) {
        return Orientation::NotAlternating;
    }
    let first = (0..k)
        .find(|&i| in_m[i])
        .expect("alternating cycle has matched edges");
    if pg.color(cw[first]) == Color::White {
        Orientation::Proper
    } else {
        Orientation::Improper
    }
}

/// Cycles of a 2-regular edge set, each as a vertex sequence.
pub(crate) fn cycles_of(g: &Graph, edges: &BitSet) -> Vec<Vec<usize>> {
    let mut used = BitSet::new(g.edge_count());
    let mut out = Vec::new();
    for e in edges.iter() {
        if used.contains(e) {
            continue;
        }
        let (start, mut v) = g.edge(e);
        used.insert(e);
        let mut cycle = vec![start];
        while v != start {
            cycle.push(v);
            let &(w, f) = g
                .incident(v)
                .iter()
                .find(|&&(_, f)| edges.contains(f) && !used.contains(f))
                .expect("2-regular");
            used.insert(f);
            v = w;
        }
        out.push(cycle);
    }
    out
}

/// The unique matchings without proper (bottom) and without improper (top)
/// alternating cycles. Every alternating cycle of `M` is a cycle of
/// `M xor M'` for some other matching `M'`, so scanning pairs suffices.
pub fn extremal_matchings(pg: &PlaneGraph) -> Result<ExtremalPair> {
    let matchings = enumerate_perfect_matchings(pg.graph())?;
    if matchings.is_empty() {
        return Err(Error::NoPerfectMatching);
    }
    extremal_from(pg, &matchings)
}

pub(crate) fn extremal_from(pg: &PlaneGraph, matchings: &[Matching]) -> Result<ExtremalPair> {
    let mut bottoms = Vec::new();
    let mut tops = Vec::new();
    for (i, m) in matchings.iter().enumerate() {
        let (mut has_proper, mut has_improper) = (false, false);
        for (j, other) in matchings.iter().enumerate() {
            if i == j {
                continue;
            }
            let diff = m.edge_set().symmetric_difference(other.edge_set());
            for cycle in cycles_of(pg.graph(), &diff) {
                match alternating_orientation(pg, m, &cycle)? {
                    Orientation::Proper => has_proper = true,
                    Orientation::Improper => has_improper = true,
                    Orientation::NotAlternating => unreachable!("cycles of m xor m' alternate"),
                }
            }
            if has_proper && has_improper {
                break;
            }
        }
        if !has_proper {
            bottoms.push(m.clone());
        }
        if !has_improper {
            tops.push(m.clone());
        }
    }
    if bottoms.len() != 1 {
        return Err(Error::NotUnique(bottoms.len()));
    }
    if tops.len() != 1 {
        return Err(Error::NotUnique(tops.len()));
    }
    Ok(ExtremalPair {
        bottom: bottoms.pop().expect("one"),
        top: tops.pop().expect("one"),
    })
}
