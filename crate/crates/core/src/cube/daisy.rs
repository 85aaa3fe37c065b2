use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::Result;

use super::{theta, LabelledGraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DaisyCertificate {
    /// Vertex relabelled `0^n`.
    pub base_vertex: usize,
    pub n_coords: usize,
    /// Labels after translating the base to `0^n`.
    pub labels: Vec<u64>,
    /// The antichain of maximal labels, ascending.
    pub maximal_vertices: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum DaisyOutcome {
    Daisy(DaisyCertificate),
    NotPartialCube,
    NoDownwardClosedBase,
}

impl DaisyOutcome {
    pub fn certificate(&self) -> Option<&DaisyCertificate> {
        match self {
            DaisyOutcome::Daisy(c) => Some(c),
            _ => None,
        }
    }
}

fn is_downward_closed(set: &BTreeSet<u64>) -> bool {
    set.iter().all(|&x| {
        let mut bits = x;
        while bits != 0 {
            let low = bits & bits.wrapping_neg();
            if !set.contains(&(x ^ low)) {
                return false;
            }
            bits ^= low;
        }
        true
    })
}

/// Labels not strictly below another label of the set, ascending.
pub fn maximal_elements(set: &BTreeSet<u64>) -> Vec<u64> {
    set.iter()
        .copied()
        .filter(|&x| !set.iter().any(|&y| y != x && x & y == x))
        .collect()
}

/// Every label below some member of `tops`.
pub fn downward_closure(tops: &[u64]) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for &t in tops {
        let mut sub = t;
        loop {
            out.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & t;
        }
    }
    out
}

/// Tries every vertex as the bottom, in vertex order.
pub fn is_daisy_labelled(g: &LabelledGraph) -> Option<DaisyCertificate> {
    if !g.is_induced_hypercube_subgraph() {
        return None;
    }
    (0..g.vertex_count()).find_map(|b| {
        let shifted = g.translate(g.labels[b]);
        let set = shifted.label_set();
        is_downward_closed(&set).then(|| DaisyCertificate {
            base_vertex: b,
            n_coords: g.n_coords,
            maximal_vertices: maximal_elements(&set),
            labels: shifted.labels,
        })
    })
}

pub fn is_daisy_cube(h: &Graph) -> Result<DaisyOutcome> {
    let t = theta::theta_classes(h)?;
    let Some(labelling) = t.labelling else {
        return Ok(DaisyOutcome::NotPartialCube);
    };
    Ok(match is_daisy_labelled(&labelling.labelled(h)) {
        Some(c) => DaisyOutcome::Daisy(c),
        None => DaisyOutcome::NoDownwardClosedBase,
    })
}

/// Re-checks a certificate against `h` from scratch: the closure of the
/// maximal vertices is the label set, the maximal vertices form an
/// antichain, edges are exactly the Hamming-one pairs, and the labelling is
/// isometric.
pub fn verify_daisy_certificate(h: &Graph, cert: &DaisyCertificate) -> bool {
    let set: BTreeSet<u64> = cert.labels.iter().copied().collect();
    let antichain = cert.maximal_vertices.iter().enumerate().all(|(i, &x)| {
        cert.maximal_vertices
            .iter()
            .skip(i + 1)
            .all(|&y| x & y != x && x & y != y)
    });
    let closure_ok = downward_closure(&cert.maximal_vertices) == set;
    let labelled = LabelledGraph {
        graph: h.clone(),
        labels: cert.labels.clone(),
        n_coords: cert.n_coords,
    };
    let induced = set.len() == h.vertex_count() && labelled.is_induced_hypercube_subgraph();
    let isometric = h.distance_matrix().is_ok_and(|d| {
        (0..h.vertex_count()).all(|u| {
            (0..h.vertex_count()).all(|v| (cert.labels[u] ^ cert.labels[v]).count_ones() == d[u][v])
        })
    });
    cert.labels[cert.base_vertex] == 0 && antichain && closure_ok && induced && isometric
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MedianOutcome {
    pub is_median: bool,
    /// First triple, in lexicographic order, without exactly one median.
    pub witness: Option<[usize; 3]>,
    pub witness_median_count: Option<usize>,
}

/// Exhaustive triple check with interval bitsets.
pub fn is_median_graph(h: &Graph) -> Result<MedianOutcome> {
    let d = h.distance_matrix()?;
    let n = h.vertex_count();
    let words = n.div_ceil(64);
    let mut interval = vec![vec![0u64; words]; n * n];
    for u in 0..n {
        for v in 0..n {
            let row = &mut interval[u * n + v];
            for x in 0..n {
                if d[u][x] + d[x][v] == d[u][v] {
                    row[x / 64] |= 1 << (x % 64);
                }
            }
        }
    }
    for u in 0..n {
        for v in (u + 1)..n {
            for w in (v + 1)..n {
                let (a, b, c) = (
                    &interval[u * n + v],
                    &interval[u * n + w],
                    &interval[v * n + w],
                );
                let count: usize = (0..words)
                    .map(|i| (a[i] & b[i] & c[i]).count_ones() as usize)
                    .sum();
                if count != 1 {
                    return Ok(MedianOutcome {
                        is_median: false,
                        witness: Some([u, v, w]),
                        witness_median_count: Some(count),
                    });
                }
            }
        }
    }
    Ok(MedianOutcome {
        is_median: true,
        witness: None,
        witness_median_count: None,
    })
}
