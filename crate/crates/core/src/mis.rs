//! Independent sets: enumeration, the tree classifier for at most five
//! maximal independent sets, counting formulas, and the checks tying
//! maximal hypercubes of resonance graphs to independent sets of the
//! inner dual.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cube::{self, LabelledGraph};
use crate::graph::Graph;
use crate::limits;
use crate::matching;
use crate::plane_graph::PlaneGraph;
use crate::resonance;
use crate::resonant_sets;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IndepSet {
    /// Sorted vertex ids.
    pub vertices: Vec<usize>,
}

impl IndepSet {
    pub fn from_mask(mask: u64) -> Self {
        IndepSet {
            vertices: (0..64).filter(|&i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn mask(&self) -> u64 {
        self.vertices.iter().fold(0, |m, &v| m | 1 << v)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

fn masks(h: &Graph) -> Result<Vec<u64>> {
    limits::check_vertices(h.vertex_count())?;
    Ok((0..h.vertex_count()).map(|v| h.neighbor_mask(v)).collect())
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Maximal independent sets, as maximal cliques of the complement found by
/// Bron–Kerbosch with pivoting. Sorted lexicographically by vertex list.
pub fn enumerate_mis(h: &Graph) -> Result<Vec<IndepSet>> {
    let adj = masks(h)?;
    let n = h.vertex_count();
    // Complement neighbourhoods.
    let co: Vec<u64> = (0..n).map(|v| full(n) & !adj[v] & !(1 << v)).collect();
    let mut out = Vec::new();
    bron_kerbosch(&co, 0, full(n), 0, &mut out);
    let mut sets: Vec<IndepSet> = out.into_iter().map(IndepSet::from_mask).collect();
    sets.sort();
    Ok(sets)
}

fn bron_kerbosch(co: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot_pool = p | x;
    let pivot = (0..co.len())
        .filter(|&u| pivot_pool >> u & 1 == 1)
        .max_by_key(|&u| (p & co[u]).count_ones())
        .expect("nonempty pool");
    let mut todo = p & !co[pivot];
    while todo != 0 {
        let v = todo.trailing_zeros() as usize;
        todo &= todo - 1;
        bron_kerbosch(co, r | 1 << v, p & co[v], x & co[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// Every independent set, the empty one first, then lexicographic.
pub fn enumerate_all_independent(h: &Graph) -> Result<Vec<IndepSet>> {
    let adj = masks(h)?;
    let mut out = Vec::new();
    let mut stack = vec![(0u64, full(h.vertex_count()))];
    while let Some((set, candidates)) = stack.pop() {
        out.push(set);
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            stack.push((set | 1 << v, rest & !adj[v]));
        }
    }
    let mut sets: Vec<IndepSet> = out.into_iter().map(IndepSet::from_mask).collect();
    sets.sort();
    Ok(sets)
}

/// Number of independent sets (with the empty one), by branching on the
/// lowest remaining vertex.
pub fn count_independent_sets(h: &Graph) -> Result<u64> {
    let adj = masks(h)?;
    fn count(adj: &[u64], alive: u64) -> u64 {
        if alive == 0 {
            return 1;
        }
        let v = alive.trailing_zeros() as usize;
        let without = alive & !(1 << v);
        count(adj, without) + count(adj, without & !adj[v])
    }
    Ok(count(&adj, full(h.vertex_count())))
}

/// Number of maximal independent sets of a forest by dynamic programming
/// over rooted subtrees. Independent of the enumeration above.
pub fn forest_mis_count(t: &Graph) -> Result<u64> {
    let n = t.vertex_count();
    if t.edge_count() + t.components().len() != n {
        return Err(Error::NotATree);
    }
    // Per vertex: in the set / out and dominated by a child / out and not yet dominated.
    let mut inside = vec![1u64; n];
    let mut out_dom = vec![0u64; n];
    let mut out_free = vec![1u64; n];
    let mut total = 1u64;
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        let mut order = vec![root];
        let mut parent = vec![usize::MAX; n];
        seen[root] = true;
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            for w in t.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    order.push(w);
                }
            }
            i += 1;
        }
        for &v in order.iter().rev() {
            let mut in_v = 1u64;
            let mut out_any = 1u64;
            let mut free = 1u64;
            for c in t.neighbors(v).filter(|&c| parent[c] == v) {
                in_v *= out_dom[c] + out_free[c];
                out_any *= inside[c] + out_dom[c];
                free *= out_dom[c];
            }
            inside[v] = in_v;
            out_free[v] = free;
            out_dom[v] = out_any - free;
        }
        total *= inside[root] + out_dom[root];
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "class", content = "params")]
pub enum TreeClass {
    OneVertex,
    /// Leaf count.
    Star(usize),
    Bistar(usize, usize),
    S3(usize, usize),
    S4(usize, usize),
    S3pqr(usize, usize, usize),
    /// Not one of the above; carries the brute-force count.
    Other(u64),
}

impl TreeClass {
    pub fn predicted_mis(&self) -> u64 {
        match *self {
            TreeClass::OneVertex => 1,
            TreeClass::Star(_) => 2,
            TreeClass::Bistar(..) => 3,
            TreeClass::S3(..) => 4,
            TreeClass::S4(..) | TreeClass::S3pqr(..) => 5,
            TreeClass::Other(count) => count,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            TreeClass::OneVertex => "OneVertex",
            TreeClass::Star(_) => "Star",
            TreeClass::Bistar(..) => "Bistar",
            TreeClass::S3(..) => "S3",
            TreeClass::S4(..) => "S4",
            TreeClass::S3pqr(..) => "S3pqr",
            TreeClass::Other(_) => "Other",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match *self {
            TreeClass::OneVertex | TreeClass::Other(_) => vec![],
            TreeClass::Star(k) => vec![k],
            TreeClass::Bistar(p, q) | TreeClass::S3(p, q) | TreeClass::S4(p, q) => vec![p, q],
            TreeClass::S3pqr(p, q, r) => vec![p, q, r],
        }
    }
}

fn ordered(p: usize, q: usize) -> (usize, usize) {
    (p.min(q), p.max(q))
}

/// A longest path, found by two BFS sweeps.
fn diameter_path(t: &Graph) -> Vec<usize> {
    let far = |s: usize| {
        let d = t.bfs_distances(s);
        (0..t.vertex_count())
            .max_by_key(|&v| (d[v], std::cmp::Reverse(v)))
            .expect("nonempty")
    };
    let a = far(0);
    let b = far(a);
    let d = t.bfs_distances(b);
    let mut path = vec![a];
    let mut v = a;
    while v != b {
        v = t
            .neighbors(v)
            .find(|&w| d[w] + 1 == d[v])
            .expect("path to b");
        path.push(v);
    }
    path
}

/// Pattern match on the diameter path. The families have distinct
/// diameters (star at most 2, bistar 3, S3 and S3pqr 4, S4 5), so each tree
/// lands in exactly one class; `p <= q` after normalisation.
pub fn classify_tree(t: &Graph) -> Result<TreeClass> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.vertex_count();
    if n == 1 {
        return Ok(TreeClass::OneVertex);
    }
    let path = diameter_path(t);
    let leaf = |v: usize| t.degree(v) == 1;
    let class = match path.len() - 1 {
        1 | 2 => Some(TreeClass::Star(n - 1)),
        3 => {
            let (p, q) = ordered(t.degree(path[1]) - 1, t.degree(path[2]) - 1);
            Some(TreeClass::Bistar(p, q))
        }
        4 => {
            let (v1, v2, v3) = (path[1], path[2], path[3]);
            let spine_ok = t.neighbors(v2).filter(|&w| !leaf(w)).count() == 2
                && [v1, v3]
                    .iter()
                    .all(|&u| t.neighbors(u).all(|w| w == v2 || leaf(w)));
            spine_ok.then(|| {
                let (p, q) = ordered(t.degree(v1) - 1, t.degree(v3) - 1);
                match t.degree(v2) - 2 {
                    0 => TreeClass::S3(p, q),
                    r => TreeClass::S3pqr(p, q, r),
                }
            })
        }
        5 => {
            let (v1, v2, v3, v4) = (path[1], path[2], path[3], path[4]);
            let spine_ok = t.degree(v2) == 2
                && t.degree(v3) == 2
                && [v1, v4]
                    .iter()
                    .all(|&u| t.neighbors(u).all(|w| w == v2 || w == v3 || leaf(w)));
            spine_ok.then(|| {
                let (p, q) = ordered(t.degree(v1) - 1, t.degree(v4) - 1);
                TreeClass::S4(p, q)
            })
        }
        _ => None,
    };
    match class {
        Some(c) => Ok(c),
        None => Ok(TreeClass::Other(enumerate_mis(t)?.len() as u64)),
    }
}

pub fn padovan(n: usize) -> u64 {
    let mut a = vec![1u64, 1, 2];
    while a.len() <= n {
        let k = a.len();
        a.push(a[k - 2] + a[k - 3]);
    }
    a[n]
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of maximal `k`-dimensional hypercubes of the Fibonacci cube of
/// order `n`; zero outside `ceil(n/3) <= k <= floor((n+1)/2)`.
pub fn max_kcube_count(n: usize, k: usize) -> u64 {
    if k < n.div_ceil(3) || k > n.div_ceil(2) {
        return 0;
    }
    binomial((k + 1) as u64, (n + 1 - 2 * k) as u64)
}

/// Largest number of maximal independent sets in a tree of order `n`.
pub fn wilf_bound(n: usize) -> u64 {
    assert!(n >= 1, "trees have at least one vertex");
    if n.is_multiple_of(2) {
        (1u64 << (n / 2 - 1)) + 1
    } else {
        1u64 << ((n - 1) / 2)
    }
}

/// Labeled tree on `n` vertices from a Prüfer sequence of length `n - 2`.
pub fn prufer_decode(seq: &[usize], n: usize) -> Result<Graph> {
    if n == 1 {
        return Ok(Graph::new(1));
    }
    if seq.len() + 2 != n || seq.iter().any(|&x| x >= n) {
        return Err(Error::BadParameter(format!(
            "not a Prüfer sequence for {n} vertices"
        )));
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges)
}

/// Runs `visit` over every labeled tree on `n` vertices, split across
/// workers by the first sequence entry, and merges the per-worker results.
pub fn prufer_sweep<T, F, M>(n: usize, identity: T, visit: F, merge: M) -> T
where
    T: Send + Sync + Clone,
    F: Fn(&mut T, &Graph) + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    if n <= 2 {
        let mut acc = identity;
        visit(&mut acc, &prufer_decode(&[], n).expect("tiny tree"));
        return acc;
    }
    let len = n - 2;
    (0..n)
        .into_par_iter()
        .map(|first| {
            let mut acc = identity.clone();
            let mut seq = vec![0usize; len];
            seq[0] = first;
            loop {
                let t = prufer_decode(&seq, n).expect("valid sequence");
                visit(&mut acc, &t);
                let mut i = len - 1;
                loop {
                    if i == 0 {
                        return acc;
                    }
                    seq[i] += 1;
                    if seq[i] < n {
                        break;
                    }
                    seq[i] = 0;
                    i -= 1;
                }
            }
        })
        .reduce(|| identity.clone(), merge)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WilfRow {
    pub n: usize,
    pub trees: u64,
    pub max_mis: u64,
    pub bound: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WilfReport {
    pub rows: Vec<WilfRow>,
    pub holds: bool,
}

/// Largest maximal-independent-set count over all labeled trees of each
/// order up to `n_max`, against the bound.
pub fn verify_wilf(n_max: usize) -> Result<WilfReport> {
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let (trees, max_mis) = prufer_sweep(
            n,
            (0u64, 0u64),
            |acc, t| {
                acc.0 += 1;
                acc.1 = acc.1.max(forest_mis_count(t).expect("tree"));
            },
            |a, b| (a.0 + b.0, a.1.max(b.1)),
        );
        rows.push(WilfRow {
            n,
            trees,
            max_mis,
            bound: wilf_bound(n),
        });
    }
    let holds = rows.iter().all(|r| r.max_mis == r.bound);
    Ok(WilfReport { rows, holds })
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ClassificationSweep {
    pub n: usize,
    pub trees: u64,
    /// Trees where the predicted count differs from enumeration.
    pub mismatches: u64,
    /// Trees classified `Other` with fewer than six maximal independent sets.
    pub small_others: u64,
    /// Trees per class name.
    pub class_counts: BTreeMap<String, u64>,
    /// Trees per (diameter, maximal-independent-set count) pair, for the
    /// diameter statistics.
    pub diameter_mis: BTreeMap<String, u64>,
}

/// Classifies every labeled tree of order `n` and compares the prediction
/// with Bron–Kerbosch enumeration.
pub fn classification_sweep(n: usize) -> Result<ClassificationSweep> {
    limits::check_vertices(n)?;
    let merge = |mut a: ClassificationSweep, b: ClassificationSweep| {
        a.trees += b.trees;
        a.mismatches += b.mismatches;
        a.small_others += b.small_others;
        for (k, v) in b.class_counts {
            *a.class_counts.entry(k).or_default() += v;
        }
        for (k, v) in b.diameter_mis {
            *a.diameter_mis.entry(k).or_default() += v;
        }
        a
    };
    let mut sweep = prufer_sweep(
        n,
        ClassificationSweep::default(),
        |acc, t| {
            let class = classify_tree(t).expect("tree");
            let actual = enumerate_mis(t).expect("within guard").len() as u64;
            acc.trees += 1;
            if class.predicted_mis() != actual {
                acc.mismatches += 1;
            }
            if matches!(class, TreeClass::Other(_)) && actual < 6 {
                acc.small_others += 1;
            }
            *acc.class_counts
                .entry(class.name().to_string())
                .or_default() += 1;
            let diam = t.diameter().expect("connected");
            *acc.diameter_mis
                .entry(format!("{diam}:{actual}"))
                .or_default() += 1;
        },
        merge,
    );
    sweep.n = n;
    Ok(sweep)
}

fn require_p2c(pg: &PlaneGraph) -> Result<()> {
    let outcome = pg.peripherally_2_colorable()?;
    if !outcome.colorable {
        let why = outcome.refutation.map_or_else(
            || "no refutation recorded".to_string(),
            |r| serde_json::to_string(&r).expect("serializable"),
        );
        return Err(Error::NotP2C(why));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypercubeMisPair {
    pub faces: Vec<usize>,
    pub dual_vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualMisReport {
    pub maximal_hypercubes: usize,
    pub dual_mis: usize,
    pub pairs: Vec<HypercubeMisPair>,
    pub bijective: bool,
}

/// Maps each maximal hypercube of R(G) to the dual vertices of its face
/// labels and compares with the maximal independent sets of the inner dual.
pub fn verify_dual_mis_bijection(pg: &PlaneGraph) -> Result<DualMisReport> {
    require_p2c(pg)?;
    let rg = resonance::build_resonance_graph(pg)?;
    let labelled = cube::partial_cube_labelling(&rg.graph)?;
    let cubes = cube::maximal_hypercubes_labelled(&labelled);
    let dual = pg.inner_dual();
    let mut pairs = Vec::new();
    for q in &cubes {
        let faces = resonant_sets::hypercube_face_labels(&rg, &q.vertices)?.faces;
        let mut dual_vertices: Vec<usize> = faces
            .iter()
            .map(|&f| dual.dual_vertex_of(f).expect("finite face"))
            .collect();
        dual_vertices.sort_unstable();
        pairs.push(HypercubeMisPair {
            faces,
            dual_vertices,
        });
    }
    let mis: BTreeSet<Vec<usize>> = enumerate_mis(&dual.graph)?
        .into_iter()
        .map(|s| s.vertices)
        .collect();
    let images: BTreeSet<Vec<usize>> = pairs.iter().map(|p| p.dual_vertices.clone()).collect();
    let sizes_agree = cubes
        .iter()
        .zip(&pairs)
        .all(|(q, p)| q.dimension == p.dual_vertices.len());
    Ok(DualMisReport {
        maximal_hypercubes: cubes.len(),
        dual_mis: mis.len(),
        bijective: images.len() == cubes.len() && images == mis && sizes_agree,
        pairs,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingCountReport {
    pub perfect_matchings: u64,
    pub independent_sets: u64,
    pub holds: bool,
}

/// Perfect matchings of G against independent sets (with the empty one)
/// of the inner dual of the allowed-edge subgraph.
pub fn verify_matchings_equal_independent_sets(pg: &PlaneGraph) -> Result<MatchingCountReport> {
    if !matching::is_weakly_elementary(pg)? {
        return Err(Error::PreconditionFailed(
            "graph is not weakly elementary".into(),
        ));
    }
    for part in matching::elementary_components(pg)? {
        if part.graph.edge_count() > 1 {
            require_p2c(&part.graph).map_err(|e| {
                Error::PreconditionFailed(format!(
                    "an elementary component is not peripherally 2-colorable: {e}"
                ))
            })?;
        }
    }
    let classes = matching::classify_edges(pg.graph())?;
    let allowed = pg.subgraph(&classes.allowed(), None)?;
    let dual = allowed.graph.inner_dual();
    let perfect_matchings = matching::enumerate_perfect_matchings(pg.graph())?.len() as u64;
    let independent_sets = count_independent_sets(&dual.graph)?;
    Ok(MatchingCountReport {
        perfect_matchings,
        independent_sets,
        holds: perfect_matchings == independent_sets,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualDaisyReport {
    /// Face label of each Θ-class of R(G), in coordinate order.
    pub class_faces: Vec<usize>,
    /// Matching (vertex of R(G)) sent to `0^n`, if any base works.
    pub base: Option<usize>,
    pub base_is_bottom: bool,
    pub base_is_top: bool,
    pub holds: bool,
}

/// Relabels R(G) by faces, faces by dual vertices, and looks for a base
/// matching after which the labelled graph equals D_I of the inner dual.
/// Works on disconnected graphs whose elementary components are
/// peripherally 2-colorable; the dual is then a forest.
pub fn verify_resonance_is_dual_daisy(pg: &PlaneGraph) -> Result<DualDaisyReport> {
    if !matching::is_weakly_elementary(pg)? {
        return Err(Error::NotWeaklyElementary);
    }
    for part in matching::elementary_components(pg)? {
        if part.graph.edge_count() > 1 {
            require_p2c(&part.graph)?;
        }
    }
    let rg = resonance::build_resonance_graph(pg)?;
    let theta = cube::theta_classes(&rg.graph)?;
    let labelling = theta.labelling.ok_or(Error::NotPartialCube)?;
    let dual = pg.inner_dual();
    let mut class_faces = vec![usize::MAX; labelling.n_coords];
    let mut consistent = true;
    for (e, &c) in labelling.coordinate_of_edge.iter().enumerate() {
        let f = rg.label(e);
        if class_faces[c] == usize::MAX {
            class_faces[c] = f;
        } else if class_faces[c] != f {
            consistent = false;
        }
    }
    let perm: Option<Vec<usize>> = class_faces
        .iter()
        .map(|&f| dual.dual_vertex_of(f))
        .collect();
    let distinct: BTreeSet<usize> = class_faces.iter().copied().collect();
    let report = |base: Option<usize>, holds: bool| {
        let pair = matching::extremal_from(pg, &rg.matchings).ok();
        let is = |m: Option<&matching::Matching>| base.is_some_and(|b| m == Some(&rg.matchings[b]));
        DualDaisyReport {
            class_faces: class_faces.clone(),
            base,
            base_is_bottom: is(pair.as_ref().map(|p| &p.bottom)),
            base_is_top: is(pair.as_ref().map(|p| &p.top)),
            holds,
        }
    };
    let Some(perm) = perm.filter(|p| {
        consistent && distinct.len() == p.len() && p.len() == dual.graph.vertex_count()
    }) else {
        return Ok(report(None, false));
    };
    let relabelled = labelling.labelled(&rg.graph).permute_coordinates(&perm);
    let target: LabelledGraph = cube::build_di(&dual.graph)?;
    let base = (0..rg.vertex_count()).find(|&b| {
        relabelled
            .translate(relabelled.labels[b])
            .same_labelled(&target)
    });
    Ok(report(base, base.is_some()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoleCheck {
    pub role: char,
    pub dimension: usize,
    pub expected: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionCheck {
    pub pair: String,
    pub dimension: Option<usize>,
    pub expected: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DaisyStructureReport {
    pub class: TreeClass,
    pub n: usize,
    pub expected_n: usize,
    pub maximal_hypercubes: usize,
    /// Which maximal hypercube plays each role, by index in the sorted list.
    pub assignment: Option<Vec<usize>>,
    pub dimensions: Vec<RoleCheck>,
    pub intersections: Vec<IntersectionCheck>,
    /// The maximal hypercubes have exactly `0^n` in common.
    pub common_vertex_is_zero: bool,
    pub holds: bool,
}

/// Expected (n, role dimensions, pairwise intersection dimensions) per class.
/// (order, role dimensions, (role, role, intersection dimension) triples).
type StructureRow = (usize, Vec<usize>, Vec<(usize, usize, usize)>);

fn structure_table(class: TreeClass) -> Option<StructureRow> {
    const A: usize = 0;
    const B: usize = 1;
    const C: usize = 2;
    const D: usize = 3;
    const E: usize = 4;
    Some(match class {
        TreeClass::OneVertex => (1, vec![1], vec![]),
        TreeClass::Star(k) => (k + 1, vec![1, k], vec![(A, B, 0)]),
        TreeClass::Bistar(p, q) => (
            p + q + 2,
            vec![p + 1, p + q, q + 1],
            vec![(A, C, 0), (A, B, p), (B, C, q)],
        ),
        TreeClass::S3(p, q) => (
            p + q + 3,
            vec![p + 1, p + q + 1, q + 1, 2],
            vec![
                (A, C, 0),
                (B, D, 0),
                (A, B, p),
                (B, C, q),
                (A, D, 1),
                (C, D, 1),
            ],
        ),
        TreeClass::S4(p, q) => (
            p + q + 4,
            vec![p + q + 1, p + q + 1, p + 2, q + 2, 2],
            vec![
                (C, D, 0),
                (A, E, 0),
                (B, E, 0),
                (A, B, p + q),
                (A, C, p + 1),
                (A, D, q),
                (B, C, p),
                (B, D, q + 1),
                (C, E, 1),
                (D, E, 1),
            ],
        ),
        TreeClass::S3pqr(p, q, r) => (
            p + q + r + 3,
            vec![p + q + r, p + r + 1, p + q + 1, q + r + 1, r + 2],
            vec![
                (C, E, 0),
                (A, B, p + r),
                (A, C, p + q),
                (A, D, q + r),
                (A, E, r),
                (B, C, p),
                (B, D, r),
                (C, D, q),
                (B, E, r + 1),
                (D, E, r + 1),
            ],
        ),
        TreeClass::Other(_) => return None,
    })
}

/// Dimension of the induced subgraph on the common vertices of two
/// hypercubes, when that subgraph is itself a hypercube.
fn intersection_dimension(
    h: &LabelledGraph,
    a: &cube::Subcube,
    b: &cube::Subcube,
) -> Option<usize> {
    let common: Vec<usize> = a
        .vertices
        .iter()
        .copied()
        .filter(|v| b.vertices.contains(v))
        .collect();
    if common.is_empty() {
        return None;
    }
    cube::is_hypercube(&h.graph.induced(&common))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Builds D_I(t), enumerates its maximal hypercubes, and searches for an
/// assignment of hypercubes to the roles A, B, C, ... meeting every
/// dimension and intersection formula of the tree's class.
pub fn verify_small_daisy_structure(t: &Graph) -> Result<DaisyStructureReport> {
    let class = classify_tree(t)?;
    let (expected_n, dims, inters) = structure_table(class).ok_or_else(|| {
        Error::ClassMismatch(format!("tree class {class:?} is outside the table"))
    })?;
    let di = cube::build_di(t)?;
    let cubes = cube::maximal_hypercubes_labelled(&di);
    let zero = di.vertex_of_label(0).expect("empty set is independent");
    let common: Vec<usize> = (0..di.vertex_count())
        .filter(|v| cubes.iter().all(|q| q.vertices.contains(v)))
        .collect();
    // With a single maximal hypercube (the K2 case) there is nothing to intersect.
    let common_vertex_is_zero = if cubes.len() == 1 {
        di.vertex_count() == 2 && di.graph.edge_count() == 1
    } else {
        common == vec![zero]
    };

    let roles = dims.len();
    let pair_dims: Vec<Vec<Option<usize>>> = cubes
        .iter()
        .map(|a| {
            cubes
                .iter()
                .map(|b| intersection_dimension(&di, a, b))
                .collect()
        })
        .collect();
    let fits = |assign: &[usize]| {
        (0..roles).all(|r| cubes[assign[r]].dimension == dims[r])
            && inters
                .iter()
                .all(|&(x, y, d)| pair_dims[assign[x]][assign[y]] == Some(d))
    };
    let assignment = if cubes.len() == roles {
        permutations(roles).into_iter().find(|p| fits(p))
    } else {
        None
    };
    let name = |r: usize| (b'A' + r as u8) as char;
    let pick = |r: usize| assignment.as_ref().map_or(r, |a| a[r]);
    let dimensions = (0..roles.min(cubes.len()))
        .map(|r| RoleCheck {
            role: name(r),
            dimension: cubes[pick(r)].dimension,
            expected: dims[r],
        })
        .collect();
    let intersections = inters
        .iter()
        .filter(|&&(x, y, _)| x < cubes.len() && y < cubes.len())
        .map(|&(x, y, d)| IntersectionCheck {
            pair: format!("{}{}", name(x), name(y)),
            dimension: pair_dims[pick(x)][pick(y)],
            expected: d,
        })
        .collect();
    let holds = assignment.is_some() && common_vertex_is_zero && expected_n == t.vertex_count();
    Ok(DaisyStructureReport {
        class,
        n: t.vertex_count(),
        expected_n,
        maximal_hypercubes: cubes.len(),
        assignment,
        dimensions,
        intersections,
        common_vertex_is_zero,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn small_mis_counts() {
        assert_eq!(
            enumerate_mis(&generators::gen_star(3).unwrap())
                .unwrap()
                .len(),
            2
        );
        assert_eq!(
            enumerate_mis(&generators::gen_path(5).unwrap())
                .unwrap()
                .len(),
            4
        );
        let c4 = enumerate_mis(&generators::gen_cycle(4).unwrap()).unwrap();
        let sets: Vec<Vec<usize>> = c4.into_iter().map(|s| s.vertices).collect();
        assert_eq!(sets, vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn independent_sets_of_a_four_cycle() {
        let all = enumerate_all_independent(&generators::gen_cycle(4).unwrap()).unwrap();
        assert_eq!(all.len(), 7);
        assert!(all[0].is_empty());
        assert_eq!(
            count_independent_sets(&generators::gen_cycle(4).unwrap()).unwrap(),
            7
        );
    }

    #[test]
    fn forest_dp_agrees_with_enumeration() {
        for t in [
            generators::gen_path(7).unwrap(),
            generators::gen_s3pqr(1, 2, 1).unwrap(),
            generators::gen_star(4).unwrap(),
            generators::gen_path(3)
                .unwrap()
                .disjoint_union(&generators::gen_path(4).unwrap()),
        ] {
            assert_eq!(
                forest_mis_count(&t).unwrap(),
                enumerate_mis(&t).unwrap().len() as u64
            );
        }
    }

    #[test]
    fn classifier_examples() {
        assert_eq!(
            classify_tree(&generators::gen_path(4).unwrap()).unwrap(),
            TreeClass::Bistar(1, 1)
        );
        assert_eq!(
            classify_tree(&generators::gen_path(6).unwrap()).unwrap(),
            TreeClass::S4(1, 1)
        );
        assert_eq!(
            classify_tree(&generators::gen_path(5).unwrap()).unwrap(),
            TreeClass::S3(1, 1)
        );
        assert_eq!(
            classify_tree(&generators::gen_s3pqr(1, 1, 1).unwrap()).unwrap(),
            TreeClass::S3pqr(1, 1, 1)
        );
        assert_eq!(
            classify_tree(&generators::gen_bistar(3, 1).unwrap()).unwrap(),
            TreeClass::Bistar(1, 3)
        );
        assert_eq!(classify_tree(&Graph::new(1)).unwrap(), TreeClass::OneVertex);
        assert_eq!(
            classify_tree(&generators::gen_path(7).unwrap()).unwrap(),
            TreeClass::Other(7)
        );
        assert_eq!(
            classify_tree(&generators::gen_cycle(4).unwrap()),
            Err(Error::NotATree)
        );
    }

    #[test]
    fn padovan_and_binomials() {
        let a: Vec<u64> = (0..9).map(padovan).collect();
        assert_eq!(a, vec![1, 1, 2, 2, 3, 4, 5, 7, 9]);
        assert_eq!(max_kcube_count(5, 2), 3);
        assert_eq!(max_kcube_count(5, 3), 1);
        for n in 1..=12 {
            let sum: u64 = (0..=n).map(|k| max_kcube_count(n, k)).sum();
            assert_eq!(sum, padovan(n));
            let path = generators::gen_path(n).unwrap();
            let sets = enumerate_mis(&path).unwrap();
            assert_eq!(sets.len() as u64, padovan(n));
            for k in 0..=n {
                let sized = sets.iter().filter(|s| s.len() == k).count() as u64;
                assert_eq!(sized, max_kcube_count(n, k));
            }
        }
    }

    #[test]
    fn prufer_counts() {
        for n in 1..=6 {
            let count = prufer_sweep(
                n,
                0u64,
                |c, t| {
                    assert!(t.is_tree());
                    *c += 1;
                },
                |a, b| a + b,
            );
            assert_eq!(count, (n as u64).pow(n.saturating_sub(2) as u32));
        }
    }

    #[test]
    fn wilf_small() {
        assert_eq!((wilf_bound(1), wilf_bound(4), wilf_bound(5)), (1, 3, 4));
        let report = verify_wilf(6).unwrap();
        assert!(report.holds, "{report:?}");
    }

    #[test]
    fn classification_sweep_six() {
        let sweep = classification_sweep(6).unwrap();
        assert_eq!(sweep.trees, 1296);
        assert_eq!(sweep.mismatches, 0);
        assert_eq!(sweep.small_others, 0);
    }

    #[test]
    fn dual_mis_on_chains() {
        for n in 1..=5 {
            let g = generators::gen_fibonaccene(n).unwrap();
            let report = verify_dual_mis_bijection(&g).unwrap();
            assert!(report.bijective, "{report:?}");
            assert_eq!(report.maximal_hypercubes as u64, padovan(n));
        }
        assert!(matches!(
            verify_dual_mis_bijection(&generators::gen_coronene()),
            Err(Error::NotP2C(_))
        ));
    }

    #[test]
    fn matching_counts() {
        for (g, expected) in [
            (generators::gen_hexagon(), 2),
            (generators::gen_fibonaccene(2).unwrap(), 3),
            (generators::gen_fibonaccene(4).unwrap(), 8),
        ] {
            let report = verify_matchings_equal_independent_sets(&g).unwrap();
            assert!(report.holds);
            assert_eq!(report.perfect_matchings, expected);
        }
    }

    #[test]
    fn resonance_is_dual_daisy() {
        let h = generators::gen_hexagon();
        let n = generators::gen_fibonaccene(3).unwrap();
        for g in [h.clone(), n.clone(), h.disjoint_union(&n)] {
            let report = verify_resonance_is_dual_daisy(&g).unwrap();
            assert!(report.holds, "{report:?}");
        }
    }

    #[test]
    fn structure_small_cases() {
        for t in [
            Graph::new(1),
            generators::gen_star(3).unwrap(),
            generators::gen_bistar(1, 1).unwrap(),
            generators::gen_s3(1, 2).unwrap(),
            generators::gen_s4(2, 1).unwrap(),
            generators::gen_s3pqr(1, 1, 2).unwrap(),
        ] {
            let report = verify_small_daisy_structure(&t).unwrap();
            assert!(report.holds, "{report:?}");
        }
        assert!(matches!(
            verify_small_daisy_structure(&generators::gen_path(7).unwrap()),
            Err(Error::ClassMismatch(_))
        ));
    }
}
