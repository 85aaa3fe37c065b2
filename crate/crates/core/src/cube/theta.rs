use crate::graph::Graph;
use crate::{Error, Result};

use super::{LabelledGraph, MAX_COORDS};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeLabelling {
    /// Label of each vertex; vertex 0 is labelled `0^n`.
    pub labels: Vec<u64>,
    pub n_coords: usize,
    /// Coordinate (Θ-class id) flipped by each edge.
    pub coordinate_of_edge: Vec<usize>,
}

impl CubeLabelling {
    pub fn labelled(&self, g: &Graph) -> LabelledGraph {
        LabelledGraph {
            graph: g.clone(),
            labels: self.labels.clone(),
            n_coords: self.n_coords,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaResult {
    /// Classes of the transitive closure of Θ, as sorted edge ids, ordered
    /// by smallest edge.
    pub classes: Vec<Vec<usize>>,
    /// Θ itself is transitive.
    pub transitive: bool,
    pub is_partial_cube: bool,
    pub labelling: Option<CubeLabelling>,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Djoković–Winkler relation from all-pairs distances.
pub fn theta_classes(h: &Graph) -> Result<ThetaResult> {
    let d = h.distance_matrix()?;
    let edges = h.edges();
    let m = edges.len();
    let related = |e: usize, f: usize| {
        let (x, y) = edges[e];
        let (u, v) = edges[f];
        d[x][u] + d[y][v] != d[x][v] + d[y][u]
    };
    let mut parent: Vec<usize> = (0..m).collect();
    for e in 0..m {
        for f in (e + 1)..m {
            if related(e, f) {
                let (a, b) = (find(&mut parent, e), find(&mut parent, f));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut class_of_root = vec![usize::MAX; m];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut coordinate_of_edge = vec![0; m];
    for e in 0..m {
        let r = find(&mut parent, e);
        if class_of_root[r] == usize::MAX {
            class_of_root[r] = classes.len();
            classes.push(Vec::new());
        }
        coordinate_of_edge[e] = class_of_root[r];
        classes[class_of_root[r]].push(e);
    }
    let transitive = classes.iter().all(|c| {
        c.iter()
            .enumerate()
            .all(|(i, &e)| c[i + 1..].iter().all(|&f| related(e, f)))
    });

    let mut result = ThetaResult {
        classes,
        transitive,
        is_partial_cube: false,
        labelling: None,
    };
    if !transitive || result.classes.len() > MAX_COORDS {
        return Ok(result);
    }
    // Coordinate i of v is 1 when v lies on the other side of class i from vertex 0.
    let n = h.vertex_count();
    let mut labels = vec![0u64; n];
    for (i, class) in result.classes.iter().enumerate() {
        let (x, y) = edges[class[0]];
        let side = |v: usize| d[v][y] < d[v][x];
        let base_side = side(0);
        for (v, label) in labels.iter_mut().enumerate() {
            if side(v) != base_side {
                *label |= 1 << i;
            }
        }
    }
    let isometric =
        (0..n).all(|u| (u + 1..n).all(|v| (labels[u] ^ labels[v]).count_ones() == d[u][v]));
    if isometric {
        result.is_partial_cube = true;
        result.labelling = Some(CubeLabelling {
            labels,
            n_coords: result.classes.len(),
            coordinate_of_edge,
        });
    }
    Ok(result)
}

/// The Θ labelling of a connected partial cube.
pub fn partial_cube_labelling(h: &Graph) -> Result<LabelledGraph> {
    let theta = theta_classes(h)?;
    match theta.labelling {
        Some(l) => Ok(l.labelled(h)),
        None if theta.transitive && theta.classes.len() > MAX_COORDS => {
            Err(Error::SizeLimitExceeded {
                what: "coordinate count",
                actual: theta.classes.len(),
                limit: MAX_COORDS,
            })
        }
        None => Err(Error::NotPartialCube),
    }
}
