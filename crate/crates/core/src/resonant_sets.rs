//! Resonant sets of finite faces and their correspondence with hypercubes
//! of the resonance graph.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::cube;
use crate::limits;
use crate::matching;
use crate::plane_graph::PlaneGraph;
use crate::resonance::{self, ResonanceGraph};
use crate::{Error, Result};

/// A set of finite-face ids, sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FaceSet {
    pub faces: Vec<usize>,
}

impl FaceSet {
    pub fn new(mut faces: Vec<usize>) -> Self {
        faces.sort_unstable();
        faces.dedup();
        FaceSet { faces }
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn is_subset(&self, other: &FaceSet) -> bool {
        self.faces.iter().all(|f| other.faces.contains(f))
    }
}

/// Vertices of `pg` not on any face of `faces`, as an alive mask.
fn remainder(pg: &PlaneGraph, faces: &[usize]) -> Vec<bool> {
    let mut alive = vec![true; pg.vertex_count()];
    for &f in faces {
        for v in pg.face_vertices(f) {
            alive[v] = false;
        }
    }
    alive
}

/// Faces pairwise vertex-disjoint, each bounded by a simple cycle, and
/// the rest of the graph has a perfect matching (or nothing left).
pub fn is_resonant(pg: &PlaneGraph, s: &FaceSet) -> bool {
    let finite = pg.finite_faces();
    if !s
        .faces
        .iter()
        .all(|f| finite.contains(f) && pg.periphery(*f).is_some())
    {
        return false;
    }
    let mut seen = vec![false; pg.vertex_count()];
    for &f in &s.faces {
        for v in pg.face_vertices(f) {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
    }
    matching::count_perfect_matchings(pg.graph(), &remainder(pg, &s.faces), 1) == 1
}

/// Nonempty resonant sets ordered by size, then lexicographically. Resonant
/// sets are closed under subsets, so the search stops at the first failure.
pub fn enumerate_resonant_sets(pg: &PlaneGraph) -> Result<Vec<FaceSet>> {
    limits::check_edges(pg.edge_count())?;
    if matching::count_perfect_matchings(pg.graph(), &vec![true; pg.vertex_count()], 1) == 0 {
        return Err(Error::NoPerfectMatching);
    }
    let faces: Vec<usize> = pg
        .finite_faces()
        .into_iter()
        .filter(|&f| pg.periphery(f).is_some())
        .collect();
    let vertex_sets: Vec<BitSet> = faces
        .iter()
        .map(|&f| BitSet::from_ids(pg.vertex_count(), pg.face_vertices(f)))
        .collect();
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<usize>, BitSet)> = vec![(Vec::new(), BitSet::new(pg.vertex_count()))];
    while let Some((chosen, used)) = stack.pop() {
        let start = chosen.last().map_or(0, |&i| i + 1);
        for i in start..faces.len() {
            if !used.intersection(&vertex_sets[i]).is_empty() {
                continue;
            }
            let mut next = chosen.clone();
            next.push(i);
            let set = FaceSet::new(next.iter().map(|&k| faces[k]).collect());
            if is_resonant(pg, &set) {
                out.push(set);
                let mut used_next = used.clone();
                for v in vertex_sets[i].iter() {
                    used_next.insert(v);
                }
                stack.push((next, used_next));
            }
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.faces.cmp(&b.faces)));
    Ok(out)
}

/// Contained in no other resonant set of the enumeration.
pub fn is_maximal_resonant(pg: &PlaneGraph, s: &FaceSet) -> Result<bool> {
    if s.is_empty() || !is_resonant(pg, s) {
        return Err(Error::NotResonant);
    }
    let all = enumerate_resonant_sets(pg)?;
    Ok(!all.iter().any(|t| t.len() > s.len() && s.is_subset(t)))
}

/// The rest of the graph is empty or has exactly one perfect matching.
pub fn is_canonical_resonant(pg: &PlaneGraph, s: &FaceSet) -> Result<bool> {
    if s.is_empty() || !is_resonant(pg, s) {
        return Err(Error::NotResonant);
    }
    let alive = remainder(pg, &s.faces);
    Ok(alive.iter().all(|&a| !a) || matching::count_perfect_matchings(pg.graph(), &alive, 2) == 1)
}

/// Face labels on the edges of an induced hypercube of R(G).
pub fn hypercube_face_labels(rg: &ResonanceGraph, vertices: &[usize]) -> Result<FaceSet> {
    let sub = rg.graph.induced(vertices);
    let k = cube::is_hypercube(&sub).ok_or(Error::NotAHypercube)?;
    let labels = FaceSet::new(
        rg.graph
            .induced_edge_ids(vertices)
            .into_iter()
            .map(|e| rg.label(e))
            .collect(),
    );
    if labels.len() != k {
        return Err(Error::PreconditionFailed(format!(
            "hypercube of dimension {k} carries {} face labels",
            labels.len()
        )));
    }
    Ok(labels)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreimageReport {
    pub set: FaceSet,
    /// Induced hypercubes of R(G) whose labels are exactly the set.
    pub hypercubes: usize,
    /// Perfect matchings of the graph with the faces' vertices removed.
    pub remainder_matchings: usize,
    pub holds: bool,
}

pub fn preimage_count_check(pg: &PlaneGraph, s: &FaceSet) -> Result<PreimageReport> {
    if !is_resonant(pg, s) {
        return Err(Error::NotResonant);
    }
    let rg = resonance::build_resonance_graph(pg)?;
    let labelled = cube::partial_cube_labelling(&rg.graph)?;
    let mut hypercubes = 0;
    for q in cube::induced_hypercubes(&labelled) {
        if q.dimension == s.len() && hypercube_face_labels(&rg, &q.vertices)? == *s {
            hypercubes += 1;
        }
    }
    let remainder_matchings =
        matching::count_perfect_matchings(pg.graph(), &remainder(pg, &s.faces), usize::MAX);
    Ok(PreimageReport {
        set: s.clone(),
        hypercubes,
        remainder_matchings,
        holds: hypercubes == remainder_matchings,
    })
}

/// Every cycle once: smallest vertex first, second vertex smaller than the
/// last.
pub fn enumerate_cycles(pg: &PlaneGraph) -> Result<Vec<Vec<usize>>> {
    let g = pg.graph();
    let guard = limits::cycle_guard();
    let mut out = Vec::new();
    for s in 0..g.vertex_count() {
        let mut path = vec![s];
        let mut on_path = vec![false; g.vertex_count()];
        on_path[s] = true;
        extend_cycles(g, s, &mut path, &mut on_path, &mut out, guard)?;
    }
    Ok(out)
}

fn extend_cycles(
    g: &crate::Graph,
    s: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<usize>>,
    guard: usize,
) -> Result<()> {
    let v = *path.last().expect("nonempty path");
    for w in g.neighbors(v) {
        if w == s && path.len() >= 3 && path[1] < v {
            out.push(path.clone());
            if out.len() > guard {
                return Err(Error::SizeLimitExceeded {
                    what: "cycle count",
                    actual: out.len(),
                    limit: guard,
                });
            }
        }
        if w <= s || on_path[w] {
            continue;
        }
        on_path[w] = true;
        path.push(w);
        extend_cycles(g, s, path, on_path, out, guard)?;
        path.pop();
        on_path[w] = false;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NestedPair {
    /// Cycle whose interior contains the other, as vertex indices.
    pub outer: Vec<usize>,
    pub inner: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NestedScan {
    pub cycles: usize,
    /// Vertex-disjoint pairs whose union is nice.
    pub nice_pairs: usize,
    pub violations: Vec<NestedPair>,
}

/// Pairs of vertex-disjoint cycles whose union is nice and whose interiors
/// meet. For vertex-disjoint even cycles the union is nice exactly when the
/// rest of the graph has a perfect matching: each cycle can take either of
/// its two matchings independently.
pub fn nested_nice_cycles_scan(pg: &PlaneGraph) -> Result<NestedScan> {
    if pg.edge_count() == 1 {
        return Err(Error::PreconditionFailed("K2 has no cycles to scan".into()));
    }
    if !matching::is_elementary(pg.graph())? {
        return Err(Error::NotElementary);
    }
    let cycles = enumerate_cycles(pg)?;
    let n = pg.vertex_count();
    let vertex_sets: Vec<BitSet> = cycles
        .iter()
        .map(|c| BitSet::from_ids(n, c.iter().copied()))
        .collect();
    let interiors: Vec<BTreeSet<usize>> = cycles
        .iter()
        .map(|c| {
            pg.cycle_interior(c)
                .map(|faces| faces.into_iter().collect())
        })
        .collect::<Result<_>>()?;
    let mut scan = NestedScan {
        cycles: cycles.len(),
        nice_pairs: 0,
        violations: Vec::new(),
    };
    for i in 0..cycles.len() {
        for j in (i + 1)..cycles.len() {
            if !vertex_sets[i].intersection(&vertex_sets[j]).is_empty() {
                continue;
            }
            let mut alive = vec![true; n];
            for v in vertex_sets[i].iter().chain(vertex_sets[j].iter()) {
                alive[v] = false;
            }
            if matching::count_perfect_matchings(pg.graph(), &alive, 1) == 0 {
                continue;
            }
            scan.nice_pairs += 1;
            if interiors[i].is_disjoint(&interiors[j]) {
                continue;
            }
            let (outer, inner) = if interiors[j].is_subset(&interiors[i]) {
                (i, j)
            } else {
                (j, i)
            };
            scan.violations.push(NestedPair {
                outer: cycles[outer].clone(),
                inner: cycles[inner].clone(),
            });
        }
    }
    Ok(scan)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubeMatch {
    pub dimension: usize,
    pub vertices: Vec<usize>,
    pub faces: FaceSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionReport {
    pub elementary: bool,
    pub outer_face_forcing: bool,
    /// Elementary with a forcing outer face; otherwise the comparison is
    /// reported outside the hypothesis.
    pub within_hypothesis: bool,
    pub maximal_resonant_sets: Vec<FaceSet>,
    pub canonical_resonant_sets: Vec<FaceSet>,
    pub maximal_equals_canonical: bool,
    pub canonical_implies_maximal: bool,
    pub maximal_hypercubes: Vec<CubeMatch>,
    /// Labels of maximal hypercubes are distinct and are exactly the
    /// maximal resonant sets.
    pub bijection: bool,
    pub holds: bool,
}

pub fn verify_hypercube_bijection(pg: &PlaneGraph) -> Result<BijectionReport> {
    let elementary = matching::is_elementary(pg.graph())?;
    let outer_face_forcing = matching::is_outer_face_forcing(pg)?;
    let all = enumerate_resonant_sets(pg)?;
    let mut maximal = Vec::new();
    let mut canonical = Vec::new();
    for s in &all {
        if !all.iter().any(|t| t.len() > s.len() && s.is_subset(t)) {
            maximal.push(s.clone());
        }
        if is_canonical_resonant(pg, s)? {
            canonical.push(s.clone());
        }
    }
    let rg = resonance::build_resonance_graph(pg)?;
    let labelled = cube::partial_cube_labelling(&rg.graph)?;
    let cubes: Vec<CubeMatch> = cube::maximal_hypercubes_labelled(&labelled)
        .into_iter()
        .map(|q| {
            Ok(CubeMatch {
                dimension: q.dimension,
                faces: hypercube_face_labels(&rg, &q.vertices)?,
                vertices: q.vertices,
            })
        })
        .collect::<Result<_>>()?;
    let images: BTreeSet<&FaceSet> = cubes.iter().map(|c| &c.faces).collect();
    let maximal_set: BTreeSet<&FaceSet> = maximal.iter().collect();
    let bijection = images.len() == cubes.len() && images == maximal_set;
    let maximal_equals_canonical = maximal == canonical;
    let canonical_implies_maximal = canonical.iter().all(|s| maximal.contains(s));
    let within_hypothesis = elementary && outer_face_forcing;
    Ok(BijectionReport {
        elementary,
        outer_face_forcing,
        within_hypothesis,
        holds: maximal_equals_canonical && bijection,
        maximal_resonant_sets: maximal,
        canonical_resonant_sets: canonical,
        maximal_equals_canonical,
        canonical_implies_maximal,
        maximal_hypercubes: cubes,
        bijection,
    })
}
