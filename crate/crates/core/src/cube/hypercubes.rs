use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::Result;

use super::{theta, LabelledGraph};

/// An induced hypercube of a labelled partial cube: the labels agreeing
/// with `corner` outside `coords`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subcube {
    /// Sorted vertex ids.
    pub vertices: Vec<usize>,
    pub dimension: usize,
    /// Coordinates spanned, ascending.
    pub coords: Vec<usize>,
    /// The member whose spanned coordinates are all zero.
    pub corner: u64,
}

impl Subcube {
    pub fn coord_mask(&self) -> u64 {
        self.coords.iter().fold(0, |m, &c| m | 1 << c)
    }
}

fn subsets(mask: u64) -> impl Iterator<Item = u64> {
    let mut sub = Some(mask);
    std::iter::from_fn(move || {
        let s = sub?;
        sub = if s == 0 { None } else { Some((s - 1) & mask) };
        Some(s)
    })
}

/// Every induced hypercube (including single vertices), each found once
/// from its corner. In a partial cube these are exactly the label subcubes.
pub fn induced_hypercubes(g: &LabelledGraph) -> Vec<Subcube> {
    let index: HashMap<u64, usize> = g.labels.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let mut out = Vec::new();
    for &corner in &g.labels {
        let ups: Vec<usize> = (0..g.n_coords)
            .filter(|&i| corner >> i & 1 == 0 && index.contains_key(&(corner | 1 << i)))
            .collect();
        grow(corner, 0, &ups, 0, &index, &mut out);
    }
    out.sort_by(|a, b| {
        b.dimension
            .cmp(&a.dimension)
            .then_with(|| a.vertices.cmp(&b.vertices))
    });
    out
}

fn grow(
    corner: u64,
    mask: u64,
    ups: &[usize],
    start: usize,
    index: &HashMap<u64, usize>,
    out: &mut Vec<Subcube>,
) {
    let mut vertices: Vec<usize> = subsets(mask).map(|s| index[&(corner | s)]).collect();
    vertices.sort_unstable();
    out.push(Subcube {
        vertices,
        dimension: mask.count_ones() as usize,
        coords: (0..64).filter(|&i| mask >> i & 1 == 1).collect(),
        corner,
    });
    for (k, &i) in ups.iter().enumerate().skip(start) {
        let bit = 1u64 << i;
        if subsets(mask).all(|s| index.contains_key(&(corner | s | bit))) {
            grow(corner, mask | bit, ups, k + 1, index, out);
        }
    }
}

/// Induced hypercubes not contained in a larger one, sorted by dimension
/// descending, then smallest vertex.
pub fn maximal_hypercubes_labelled(g: &LabelledGraph) -> Vec<Subcube> {
    let all = induced_hypercubes(g);
    let keys: HashSet<(u64, u64)> = all.iter().map(|c| (c.corner, c.coord_mask())).collect();
    all.into_iter()
        .filter(|c| {
            let mask = c.coord_mask();
            (0..g.n_coords)
                .filter(|&i| mask >> i & 1 == 0)
                .all(|i| !keys.contains(&(c.corner & !(1 << i), mask | 1 << i)))
        })
        .collect()
}

pub fn maximal_hypercubes(h: &Graph) -> Result<Vec<Subcube>> {
    let labelled = theta::partial_cube_labelling(h)?;
    Ok(maximal_hypercubes_labelled(&labelled))
}

/// Dimension `k` when `h` is isomorphic to `Q_k`.
pub fn is_hypercube(h: &Graph) -> Option<usize> {
    let n = h.vertex_count();
    if n == 0 || !n.is_power_of_two() {
        return None;
    }
    let k = n.trailing_zeros() as usize;
    if (0..n).any(|v| h.degree(v) != k) {
        return None;
    }
    let labelled = theta::partial_cube_labelling(h).ok()?;
    (labelled.n_coords == k).then_some(k)
}
