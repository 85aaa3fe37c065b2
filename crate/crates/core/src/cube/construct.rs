use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::mis;
use crate::{Error, Result};

use super::{daisy, iso, LabelledGraph, MAX_COORDS};

fn check_coords(n: usize) -> Result<()> {
    if n > MAX_COORDS {
        return Err(Error::SizeLimitExceeded {
            what: "coordinate count",
            actual: n,
            limit: MAX_COORDS,
        });
    }
    Ok(())
}

fn all_strings(n: usize) -> Result<impl Iterator<Item = u64>> {
    if n > 24 {
        return Err(Error::SizeLimitExceeded {
            what: "cube dimension",
            actual: n,
            limit: 24,
        });
    }
    Ok(0..1u64 << n)
}

pub fn hypercube(n: usize) -> Result<LabelledGraph> {
    LabelledGraph::from_labels(n, all_strings(n)?)
}

/// Strings without two consecutive 1s.
pub fn fibonacci_cube(n: usize) -> Result<LabelledGraph> {
    if n == 0 {
        return Err(Error::BadParameter("fibonacci cube needs n >= 1".into()));
    }
    LabelledGraph::from_labels(n, all_strings(n)?.filter(|x| x & x >> 1 == 0))
}

/// Fibonacci strings that do not start and end with 1.
pub fn lucas_cube(n: usize) -> Result<LabelledGraph> {
    if n == 0 {
        return Err(Error::BadParameter("lucas cube needs n >= 1".into()));
    }
    let wrap = 1u64 | 1 << (n - 1);
    LabelledGraph::from_labels(
        n,
        all_strings(n)?.filter(|x| x & x >> 1 == 0 && x & wrap != wrap),
    )
}

/// The daisy cube generated by the maximal independent sets of `h`,
/// coordinate `i` being vertex `i`.
pub fn build_di(h: &Graph) -> Result<LabelledGraph> {
    check_coords(h.vertex_count())?;
    let tops: Vec<u64> = mis::enumerate_mis(h)?
        .iter()
        .map(mis::IndepSet::mask)
        .collect();
    LabelledGraph::from_labels(h.vertex_count(), daisy::downward_closure(&tops))
}

/// Cliques of `h` (with the empty one) as characteristic vectors, joined
/// when they differ in one vertex.
pub fn simplex_graph(h: &Graph) -> Result<LabelledGraph> {
    check_coords(h.vertex_count())?;
    let n = h.vertex_count();
    let masks: Vec<u64> = (0..n).map(|v| h.neighbor_mask(v)).collect();
    let mut cliques = Vec::new();
    let mut stack = vec![(0u64, (1u128 << n) - 1)];
    while let Some((clique, candidates)) = stack.pop() {
        cliques.push(clique);
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // Only extend by vertices above v so each clique is generated once.
            stack.push((clique | 1 << v, rest & masks[v] as u128));
        }
    }
    LabelledGraph::from_labels(n, cliques)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForestSearchReport {
    pub n: usize,
    pub lucas_vertices: usize,
    /// Forests visited, one per parent sequence (not up to isomorphism).
    pub forests_checked: usize,
    /// Forests whose independent-set count equals the vertex count of the Lucas cube.
    pub size_matches: usize,
    /// Edges of the first forest whose daisy cube is isomorphic to the Lucas cube.
    pub witness: Option<Vec<[usize; 2]>>,
}

/// Looks for a forest F on `n` vertices with the simplex graph of its
/// complement isomorphic to the Lucas cube, by way of D_I(F). Forests are
/// generated by parent sequences (parent of v below v, or none), which
/// reach every forest up to isomorphism.
pub fn lucas_forest_search(n: usize) -> Result<ForestSearchReport> {
    if !(1..=8).contains(&n) {
        return Err(Error::BadParameter(
            "forest search supports 1 <= n <= 8".into(),
        ));
    }
    let target = lucas_cube(n)?;
    let mut report = ForestSearchReport {
        n,
        lucas_vertices: target.vertex_count(),
        forests_checked: 0,
        size_matches: 0,
        witness: None,
    };
    let mut parent = vec![0usize; n];
    loop {
        report.forests_checked += 1;
        // parent[v] == v means no parent.
        let edges: Vec<(usize, usize)> = (1..n)
            .filter(|&v| parent[v] != v)
            .map(|v| (parent[v], v))
            .collect();
        let forest = Graph::from_edges(n, edges.iter().copied())?;
        if mis::count_independent_sets(&forest)? == target.vertex_count() as u64 {
            report.size_matches += 1;
            if report.witness.is_none() {
                let di = build_di(&forest)?;
                if iso::find_isomorphism(&di.graph, &target.graph)?.is_some() {
                    report.witness = Some(edges.iter().map(|&(u, v)| [u, v]).collect());
                }
            }
        }
        // Odometer over parent[v] in 0..=v.
        let mut v = 1;
        while v < n && parent[v] == v {
            parent[v] = 0;
            v += 1;
        }
        if v >= n {
            break;
        }
        parent[v] += 1;
    }
    Ok(report)
}
