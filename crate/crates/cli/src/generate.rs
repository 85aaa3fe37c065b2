use std::collections::BTreeMap;

use reslab_core::cube::{self, LabelledGraph};
use reslab_core::generators as gen;
use reslab_core::graph::GraphJson;
use reslab_core::{Error, Graph, PlaneGraph};

use crate::input::{self, Input};
use crate::CliError;

pub const FAMILIES: &str =
    "hexagon, fibonaccene N, chain N TURNS, coronene, open-coronene, plane-path N, \
path N, cycle N, empty N, star K, bistar P Q, s3 P Q, s4 P Q, s3pqr P Q R, gear, \
hypercube N, fibonacci-cube N, lucas-cube N, union FILE FILE";

fn numbers(family: &str, params: &[String], count: usize) -> Result<Vec<usize>, CliError> {
    if params.len() != count {
        return Err(CliError::input(format!(
            "{family} takes {count} parameter(s), got {}",
            params.len()
        )));
    }
    params
        .iter()
        .map(|p| {
            p.parse::<usize>().map_err(|_| {
                CliError::input(format!(
                    "{family}: expected a non-negative integer, got {p:?}"
                ))
            })
        })
        .collect()
}

fn plain(g: Graph) -> serde_json::Value {
    serde_json::to_value(GraphJson::from_graph(&g)).expect("serializable")
}

fn plane(pg: &PlaneGraph) -> serde_json::Value {
    serde_json::to_value(pg.to_json()).expect("serializable")
}

fn labelled(l: LabelledGraph) -> serde_json::Value {
    serde_json::to_value(l.to_json()).expect("serializable")
}

/// The coronene-minus-one-ring-hexagon graph with faces named `s1`..`s6`:
/// `s6` is the central hexagon and `s1`..`s5` run along the ring path.
pub fn open_coronene() -> serde_json::Value {
    let pg = gen::gen_coronene_minus_ring_hexagon();
    let dual = pg.inner_dual();
    let centre = *dual
        .faces
        .iter()
        .max_by_key(|&&f| dual.graph.degree(dual.dual_vertex_of(f).expect("finite")))
        .expect("faces");
    // Walk the ring path from the end with the smaller face id.
    let ring: Vec<usize> = dual
        .faces
        .iter()
        .copied()
        .filter(|&f| f != centre)
        .collect();
    let dv = |f: usize| dual.dual_vertex_of(f).expect("finite");
    let ring_degree = |f: usize| {
        ring.iter()
            .filter(|&&g| dual.graph.has_edge(dv(f), dv(g)))
            .count()
    };
    let mut path = vec![*ring
        .iter()
        .find(|&&f| ring_degree(f) == 1)
        .expect("path end")];
    while path.len() < ring.len() {
        let last = *path.last().expect("nonempty");
        let next = ring
            .iter()
            .copied()
            .find(|&g| !path.contains(&g) && dual.graph.has_edge(dv(last), dv(g)))
            .expect("ring is a path");
        path.push(next);
    }
    let walk = |f: usize| {
        pg.face(f)
            .boundary
            .iter()
            .map(|&v| pg.id(v))
            .collect::<Vec<i64>>()
    };
    let mut names = BTreeMap::new();
    for (i, &f) in path.iter().enumerate() {
        names.insert(format!("s{}", i + 1), walk(f));
    }
    names.insert("s6".to_string(), walk(centre));
    let mut json = pg.to_json();
    json.face_names = Some(names);
    serde_json::to_value(json).expect("serializable")
}

pub fn generate(family: &str, params: &[String]) -> Result<serde_json::Value, CliError> {
    let n = |count| numbers(family, params, count);
    let value = match family {
        "hexagon" => {
            n(0)?;
            plane(&gen::gen_hexagon())
        }
        "coronene" => {
            n(0)?;
            plane(&gen::gen_coronene())
        }
        "open-coronene" => {
            n(0)?;
            open_coronene()
        }
        "fibonaccene" => plane(&gen::gen_fibonaccene(n(1)?[0])?),
        "plane-path" => plane(&gen::gen_plane_path(n(1)?[0])?),
        "chain" => {
            let (count, turns) = match params {
                [count] => (count, ""),
                [count, turns] => (count, turns.as_str()),
                _ => {
                    return Err(CliError::input(
                        "chain takes N and an optional turn string over L, R, S",
                    ))
                }
            };
            let count = numbers(family, std::slice::from_ref(count), 1)?[0];
            plane(&gen::gen_hex_chain(count, turns)?)
        }
        "path" => plain(gen::gen_path(n(1)?[0])?),
        "cycle" => plain(gen::gen_cycle(n(1)?[0])?),
        "empty" => plain(gen::gen_empty(n(1)?[0])),
        "star" => plain(gen::gen_star(n(1)?[0])?),
        "bistar" => {
            let p = n(2)?;
            plain(gen::gen_bistar(p[0], p[1])?)
        }
        "s3" => {
            let p = n(2)?;
            plain(gen::gen_s3(p[0], p[1])?)
        }
        "s4" => {
            let p = n(2)?;
            plain(gen::gen_s4(p[0], p[1])?)
        }
        "s3pqr" => {
            let p = n(3)?;
            plain(gen::gen_s3pqr(p[0], p[1], p[2])?)
        }
        "gear" => {
            n(0)?;
            plain(gen::gen_gear())
        }
        "hypercube" => labelled(cube::hypercube(n(1)?[0])?),
        "fibonacci-cube" => labelled(cube::fibonacci_cube(n(1)?[0])?),
        "lucas-cube" => labelled(cube::lucas_cube(n(1)?[0])?),
        "union" => {
            let [a, b] = params else {
                return Err(CliError::input("union takes two plane-graph files"));
            };
            let left = input::load(a)?;
            let right = input::load(b)?;
            match (&left, &right) {
                (Input::Plane { pg: x, .. }, Input::Plane { pg: y, .. }) => {
                    plane(&x.disjoint_union(y))
                }
                _ => return Err(CliError::input("union needs two plane embeddings")),
            }
        }
        other => {
            return Err(CliError::from(Error::BadParameter(format!(
                "unknown family {other:?}; known: {FAMILIES}"
            ))))
        }
    };
    Ok(value)
}
