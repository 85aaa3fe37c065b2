use std::collections::HashMap;

use crate::graph::Graph;
use crate::{Error, Result};

const MAX_ISO_VERTICES: usize = 1000;

/// Colour refinement run on both graphs at once so colours are comparable.
fn refine(a: &Graph, b: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut ca: Vec<usize> = (0..a.vertex_count()).map(|v| a.degree(v)).collect();
    let mut cb: Vec<usize> = (0..b.vertex_count()).map(|v| b.degree(v)).collect();
    loop {
        let sig = |g: &Graph, c: &[usize], v: usize| {
            let mut nb: Vec<usize> = g.neighbors(v).map(|w| c[w]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let sa: Vec<_> = (0..a.vertex_count()).map(|v| sig(a, &ca, v)).collect();
        let sb: Vec<_> = (0..b.vertex_count()).map(|v| sig(b, &cb, v)).collect();
        let mut ids: HashMap<&(usize, Vec<usize>), usize> = HashMap::new();
        let mut all: Vec<&(usize, Vec<usize>)> = sa.iter().chain(&sb).collect();
        all.sort();
        for s in all {
            let next = ids.len();
            ids.entry(s).or_insert(next);
        }
        let na: Vec<usize> = sa.iter().map(|s| ids[s]).collect();
        let nb: Vec<usize> = sb.iter().map(|s| ids[s]).collect();
        let before = ca
            .iter()
            .chain(&cb)
            .collect::<std::collections::HashSet<_>>()
            .len();
        let stable = ids.len() == before;
        ca = na;
        cb = nb;
        if stable {
            return (ca, cb);
        }
    }
}

/// A vertex bijection `a -> b` preserving adjacency both ways, found by
/// backtracking over refined colour classes.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Result<Option<Vec<usize>>> {
    let n = a.vertex_count();
    for g in [a, b] {
        if g.vertex_count() > MAX_ISO_VERTICES {
            return Err(Error::SizeLimitExceeded {
                what: "isomorphism vertex count",
                actual: g.vertex_count(),
                limit: MAX_ISO_VERTICES,
            });
        }
    }
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    let (ca, cb) = refine(a, b);
    let mut ha = ca.clone();
    let mut hb = cb.clone();
    ha.sort_unstable();
    hb.sort_unstable();
    if ha != hb {
        return Ok(None);
    }
    // Visit `a` in BFS order so every new vertex has a mapped neighbour when possible.
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in a.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(a, b, &ca, &cb, &order, 0, &mut map, &mut used).then_some(map))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &Graph,
    b: &Graph,
    ca: &[usize],
    cb: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    let mapped_nbrs: Vec<usize> = a
        .neighbors(v)
        .filter(|&u| map[u] != usize::MAX)
        .map(|u| map[u])
        .collect();
    let candidates: Vec<usize> = match mapped_nbrs.first() {
        Some(&anchor) => b.neighbors(anchor).collect(),
        None => (0..b.vertex_count()).collect(),
    };
    for w in candidates {
        if used[w] || cb[w] != ca[v] {
            continue;
        }
        let mapped_count = (0..depth).filter(|&i| b.has_edge(w, map[order[i]])).count();
        if mapped_count != mapped_nbrs.len() || !mapped_nbrs.iter().all(|&x| b.has_edge(w, x)) {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(a, b, ca, cb, order, depth + 1, map, used) {
            return true;
        }
        map[v] = usize::MAX;
        used[w] = false;
    }
    false
}
