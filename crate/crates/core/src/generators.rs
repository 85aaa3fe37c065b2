//! Deterministic builders for the named graphs and parametrized families.

use std::collections::HashMap;

use crate::graph::Graph;
use crate::plane_graph::PlaneGraph;
use crate::{Error, Result};

pub fn gen_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParameter("path needs at least one vertex".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn gen_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParameter(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Graph on `n` vertices with no edges.
pub fn gen_empty(n: usize) -> Graph {
    Graph::new(n)
}

/// A path on `spine` vertices (numbered first) with pendant vertices hung
/// on the listed spine positions, numbered in attachment order.
fn spine_tree(spine: usize, pendants: &[(usize, usize)]) -> Result<Graph> {
    let total = spine + pendants.iter().map(|&(_, k)| k).sum::<usize>();
    let mut g = Graph::new(total);
    for i in 1..spine {
        g.add_edge(i - 1, i)?;
    }
    let mut next = spine;
    for &(at, count) in pendants {
        for _ in 0..count {
            g.add_edge(at, next)?;
            next += 1;
        }
    }
    Ok(g)
}

fn positive(name: &str, values: &[usize]) -> Result<()> {
    if values.contains(&0) {
        return Err(Error::BadParameter(format!(
            "{name} parameters must be at least 1, got {values:?}"
        )));
    }
    Ok(())
}

/// Star with `leaves` leaves; vertex 0 is the center.
pub fn gen_star(leaves: usize) -> Result<Graph> {
    positive("star", &[leaves])?;
    spine_tree(1, &[(0, leaves)])
}

pub fn gen_bistar(p: usize, q: usize) -> Result<Graph> {
    positive("bistar", &[p, q])?;
    spine_tree(2, &[(0, p), (1, q)])
}

/// Path `v1 v2 v3` with `p` leaves on `v1` and `q` leaves on `v3`.
pub fn gen_s3(p: usize, q: usize) -> Result<Graph> {
    positive("S3", &[p, q])?;
    spine_tree(3, &[(0, p), (2, q)])
}

/// Path `v1 v2 v3 v4` with `p` leaves on `v1` and `q` leaves on `v4`.
pub fn gen_s4(p: usize, q: usize) -> Result<Graph> {
    positive("S4", &[p, q])?;
    spine_tree(4, &[(0, p), (3, q)])
}

/// Path `v1 v2 v3` with `p` leaves on `v1`, `q` on `v3` and `r` on `v2`.
pub fn gen_s3pqr(p: usize, q: usize, r: usize) -> Result<Graph> {
    positive("S3pqr", &[p, q, r])?;
    spine_tree(3, &[(0, p), (2, q), (1, r)])
}

/// Gear graph: hub 0 and rim cycle `1..=6`, hub joined to 1, 3 and 5.
pub fn gen_gear() -> Graph {
    let mut g = Graph::new(7);
    for i in 0..6 {
        g.add_edge(1 + i, 1 + (i + 1) % 6).expect("rim");
    }
    for rim in [1, 3, 5] {
        g.add_edge(0, rim).expect("spoke");
    }
    g
}

/// Path as a plane graph (its only face is the outer one).
pub fn gen_plane_path(n: usize) -> Result<PlaneGraph> {
    let g = gen_path(n)?;
    let vertices: Vec<i64> = (0..n as i64).collect();
    let edges: Vec<(i64, i64)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (u as i64, v as i64))
        .collect();
    let rotations = (0..n)
        .map(|v| (v as i64, g.neighbors(v).map(|w| w as i64).collect()))
        .collect();
    PlaneGraph::build(&vertices, &edges, &rotations, None)
}

// Hexagonal systems live on a triangular lattice `i*a + j*b` (a at 0 deg,
// b at 60 deg). Points with (i - j) divisible by 3 are hexagon centers, the
// rest are honeycomb vertices; a center's six lattice neighbors are the
// corners of its hexagon.

const CORNERS: [(i64, i64); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

/// Steps between adjacent hexagon centers, counter-clockwise from 30 deg.
const STEPS: [(i64, i64); 6] = [(1, 1), (-1, 2), (-2, 1), (-1, -1), (1, -2), (2, -1)];

fn cartesian((i, j): (i64, i64)) -> (f64, f64) {
    (i as f64 + j as f64 / 2.0, j as f64 * 3f64.sqrt() / 2.0)
}

fn benzenoid_from_cells(cells: &[(i64, i64)]) -> Result<PlaneGraph> {
    let mut index: HashMap<(i64, i64), usize> = HashMap::new();
    let mut points = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for &(ci, cj) in cells {
        let corner_ids: Vec<usize> = CORNERS
            .iter()
            .map(|&(di, dj)| {
                let p = (ci + di, cj + dj);
                *index.entry(p).or_insert_with(|| {
                    points.push(p);
                    points.len() - 1
                })
            })
            .collect();
        for k in 0..6 {
            let (u, v) = (corner_ids[k], corner_ids[(k + 1) % 6]);
            if !edges.contains(&(u, v)) && !edges.contains(&(v, u)) {
                edges.push((u, v));
            }
        }
    }
    let n = points.len();
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in &edges {
        nbrs[u].push(v);
        nbrs[v].push(u);
    }
    // Clockwise = decreasing polar angle.
    let rotations: HashMap<i64, Vec<i64>> = (0..n)
        .map(|v| {
            let (x0, y0) = cartesian(points[v]);
            let mut around = nbrs[v].clone();
            around.sort_by(|&a, &b| {
                let (xa, ya) = cartesian(points[a]);
                let (xb, yb) = cartesian(points[b]);
                let ta = (ya - y0).atan2(xa - x0);
                let tb = (yb - y0).atan2(xb - x0);
                tb.partial_cmp(&ta).expect("finite angles")
            });
            (v as i64, around.into_iter().map(|w| w as i64).collect())
        })
        .collect();
    let vertices: Vec<i64> = (0..n as i64).collect();
    let edge_ids: Vec<(i64, i64)> = edges.iter().map(|&(u, v)| (u as i64, v as i64)).collect();
    let first = PlaneGraph::build(&vertices, &edge_ids, &rotations, None)?;
    // The outer face is the one walked counter-clockwise (positive area).
    let outer = first
        .faces()
        .iter()
        .find(|f| {
            let k = f.boundary.len();
            let twice_area: f64 = (0..k)
                .map(|i| {
                    let (x1, y1) = cartesian(points[f.boundary[i]]);
                    let (x2, y2) = cartesian(points[f.boundary[(i + 1) % k]]);
                    x1 * y2 - x2 * y1
                })
                .sum();
            twice_area > 0.0
        })
        .expect("one face is walked counter-clockwise");
    let hint: Vec<i64> = outer.boundary.iter().map(|&v| v as i64).collect();
    PlaneGraph::build(&vertices, &edge_ids, &rotations, Some(&hint))
}

/// Hexagonal chain of `n` hexagons. `turns` has length `n - 2` (empty for
/// `n <= 2`): `L`/`R` bend the chain by 60 degrees, `S` continues straight.
pub fn gen_hex_chain(n: usize, turns: &str) -> Result<PlaneGraph> {
    if n == 0 {
        return Err(Error::InvalidChainSpec(
            "a chain needs at least one hexagon".into(),
        ));
    }
    if turns.chars().count() != n.saturating_sub(2) {
        return Err(Error::InvalidChainSpec(format!(
            "{n} hexagons need {} turns, got {:?}",
            n.saturating_sub(2),
            turns
        )));
    }
    let mut cells = vec![(0i64, 0i64)];
    let mut dir = 0usize;
    if n >= 2 {
        cells.push(STEPS[0]);
    }
    for t in turns.chars() {
        dir = match t.to_ascii_uppercase() {
            'L' => (dir + 1) % 6,
            'R' => (dir + 5) % 6,
            'S' => dir,
            other => return Err(Error::InvalidChainSpec(format!("unknown turn {other:?}"))),
        };
        let &(i, j) = cells.last().expect("nonempty");
        cells.push((i + STEPS[dir].0, j + STEPS[dir].1));
    }
    for a in 0..cells.len() {
        for b in a + 1..cells.len() {
            let d = (cells[b].0 - cells[a].0, cells[b].1 - cells[a].1);
            if d == (0, 0) {
                return Err(Error::InvalidChainSpec(format!(
                    "hexagons {a} and {b} overlap"
                )));
            }
            if b > a + 1 && STEPS.contains(&d) {
                return Err(Error::InvalidChainSpec(format!(
                    "hexagons {a} and {b} touch but are not consecutive"
                )));
            }
        }
    }
    benzenoid_from_cells(&cells)
}

/// Zigzag chain: turns alternate `L`, `R`, `L`, ...
pub fn gen_fibonaccene(n: usize) -> Result<PlaneGraph> {
    let turns: String = (0..n.saturating_sub(2))
        .map(|i| if i % 2 == 0 { 'L' } else { 'R' })
        .collect();
    gen_hex_chain(n, &turns)
}

pub fn gen_hexagon() -> PlaneGraph {
    benzenoid_from_cells(&[(0, 0)]).expect("hexagon")
}

/// Central hexagon surrounded by six.
pub fn gen_coronene() -> PlaneGraph {
    let mut cells = vec![(0, 0)];
    cells.extend(STEPS);
    benzenoid_from_cells(&cells).expect("coronene")
}

/// Coronene with one hexagon of the outer ring removed: six faces, the
/// central one sharing an edge with each of the five ring hexagons, which
/// form a path.
pub fn gen_coronene_minus_ring_hexagon() -> PlaneGraph {
    let mut cells = vec![(0, 0)];
    cells.extend(&STEPS[..5]);
    benzenoid_from_cells(&cells).expect("coronene minus one ring hexagon")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_sizes() {
        assert_eq!(gen_s3(2, 3).unwrap().vertex_count(), 8);
        assert!(gen_bistar(1, 1).unwrap().is_tree());
        assert_eq!(gen_bistar(1, 1).unwrap().diameter().unwrap(), 3);
        assert_eq!(gen_star(3).unwrap().vertex_count(), 4);
        assert_eq!(gen_s3pqr(1, 1, 1).unwrap().vertex_count(), 6);
        assert_eq!(gen_s4(1, 1).unwrap().diameter().unwrap(), 5);
        assert!(matches!(gen_bistar(0, 1), Err(Error::BadParameter(_))));
    }

    #[test]
    fn bistar_one_one_is_p4() {
        let b = gen_bistar(1, 1).unwrap();
        let degrees: Vec<usize> = (0..4).map(|v| b.degree(v)).collect();
        assert_eq!(degrees, vec![2, 2, 1, 1]);
    }

    #[test]
    fn fibonaccene_counts() {
        for n in 1..=8 {
            let g = gen_fibonaccene(n).unwrap();
            assert_eq!(g.vertex_count(), 4 * n + 2);
            assert_eq!(g.edge_count(), 5 * n + 1);
            assert_eq!(g.finite_faces().len(), n);
            for f in g.finite_faces() {
                assert_eq!(g.face(f).boundary.len(), 6);
            }
        }
    }

    #[test]
    fn coronene_counts() {
        let g = gen_coronene();
        assert_eq!(
            (g.vertex_count(), g.edge_count(), g.finite_faces().len()),
            (24, 30, 7)
        );
        let h = gen_coronene_minus_ring_hexagon();
        assert_eq!(
            (h.vertex_count(), h.edge_count(), h.finite_faces().len()),
            (22, 27, 6)
        );
    }

    #[test]
    fn chain_validation() {
        assert!(gen_hex_chain(3, "X").is_err());
        assert!(gen_hex_chain(3, "").is_err());
        // Four left turns close the ring: first and sixth hexagon touch.
        assert!(matches!(
            gen_hex_chain(6, "LLLL"),
            Err(Error::InvalidChainSpec(_))
        ));
        assert!(gen_hex_chain(5, "LLL").is_ok());
        assert!(gen_hex_chain(4, "SS").is_ok());
    }

    #[test]
    fn gear_graph_shape() {
        let g = gen_gear();
        assert_eq!((g.vertex_count(), g.edge_count()), (7, 9));
        assert_eq!(g.degree(0), 3);
    }
}
