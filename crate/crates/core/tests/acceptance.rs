//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the lines are printed even when cargo captures test output.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use reslab_core::cube::{self, DaisyOutcome, LabelledGraph};
use reslab_core::generators as gen;
use reslab_core::plane_graph::EmbeddingJson;
use reslab_core::resonance::{self, ResonanceGraph};
use reslab_core::resonant_sets::{self, FaceSet};
use reslab_core::{matching, mis, Graph, PlaneGraph};

// ---------------------------------------------------------------------------
// Oracles. Deliberately naive and independent of the library routines they
// check.

fn corpus(name: &str) -> (PlaneGraph, EmbeddingJson) {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "corpus", name]
        .iter()
        .collect();
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let json = EmbeddingJson::from_text(&text).expect("corpus schema");
    (json.to_plane_graph().expect("corpus embedding"), json)
}

/// Perfect matchings of the alive part of `g`, by matching the lowest alive
/// vertex every possible way.
fn count_pm(g: &Graph, alive: &mut [bool]) -> u64 {
    let Some(v) = (0..alive.len()).find(|&v| alive[v]) else {
        return 1;
    };
    alive[v] = false;
    let mut total = 0;
    for w in g.neighbors(v).collect::<Vec<_>>() {
        if alive[w] {
            alive[w] = false;
            total += count_pm(g, alive);
            alive[w] = true;
        }
    }
    alive[v] = true;
    total
}

fn pm_without(pg: &PlaneGraph, faces: &[usize]) -> u64 {
    let mut alive = vec![true; pg.vertex_count()];
    for &f in faces {
        for &v in &pg.face(f).boundary {
            alive[v] = false;
        }
    }
    count_pm(pg.graph(), &mut alive)
}

fn faces_disjoint(pg: &PlaneGraph, faces: &[usize]) -> bool {
    let mut seen = BTreeSet::new();
    faces
        .iter()
        .all(|&f| pg.face(f).boundary.iter().all(|&v| seen.insert(v)))
}

/// Pairwise disjoint finite faces whose removal leaves a graph with a
/// perfect matching.
fn oracle_resonant(pg: &PlaneGraph, faces: &[usize]) -> bool {
    faces_disjoint(pg, faces) && pm_without(pg, faces) > 0
}

/// (maximal, canonical) resonant sets by brute force over face subsets.
fn oracle_resonant_sets(pg: &PlaneGraph) -> (BTreeSet<Vec<usize>>, BTreeSet<Vec<usize>>) {
    let finite = pg.finite_faces();
    let subsets: Vec<Vec<usize>> = (1u64..1 << finite.len())
        .map(|m| {
            (0..finite.len())
                .filter(|i| m >> i & 1 == 1)
                .map(|i| finite[i])
                .collect()
        })
        .collect();
    let resonant: Vec<&Vec<usize>> = subsets.iter().filter(|s| oracle_resonant(pg, s)).collect();
    let maximal = resonant
        .iter()
        .filter(|s| {
            !resonant
                .iter()
                .any(|t| t.len() > s.len() && s.iter().all(|f| t.contains(f)))
        })
        .map(|s| (*s).clone())
        .collect();
    let canonical = resonant
        .iter()
        .filter(|s| pm_without(pg, s) == 1)
        .map(|s| (*s).clone())
        .collect();
    (maximal, canonical)
}

fn independent_sets(h: &Graph) -> u64 {
    let n = h.vertex_count();
    (0u64..1 << n)
        .filter(|&m| {
            h.edges()
                .iter()
                .all(|&(u, v)| m >> u & 1 == 0 || m >> v & 1 == 0)
        })
        .count() as u64
}

fn maximal_independent_sets(h: &Graph) -> u64 {
    let n = h.vertex_count();
    let independent = |m: u64| {
        h.edges()
            .iter()
            .all(|&(u, v)| m >> u & 1 == 0 || m >> v & 1 == 0)
    };
    (0u64..1 << n)
        .filter(|&m| independent(m) && (0..n).all(|v| m >> v & 1 == 1 || !independent(m | 1 << v)))
        .count() as u64
}

fn fib(n: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

fn choose(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Order of the finite faces along the inner dual of a chain, from an end.
fn path_order(pg: &PlaneGraph) -> Vec<usize> {
    let dual = pg.inner_dual();
    let n = dual.graph.vertex_count();
    let start = (0..n)
        .find(|&v| dual.graph.degree(v) <= 1)
        .expect("path end");
    let mut order = vec![start];
    while order.len() < n {
        let last = *order.last().unwrap();
        let next = dual
            .graph
            .neighbors(last)
            .find(|w| !order.contains(w))
            .expect("path");
        order.push(next);
    }
    order.into_iter().map(|v| dual.faces[v]).collect()
}

/// The face carried by each Θ-class of R(G), with R(G) labelled.
fn face_labelled(rg: &ResonanceGraph) -> (LabelledGraph, Vec<usize>) {
    let theta = cube::theta_classes(&rg.graph).expect("connected");
    let lab = theta.labelling.expect("partial cube");
    let mut class_face = vec![usize::MAX; lab.n_coords];
    for (e, &c) in lab.coordinate_of_edge.iter().enumerate() {
        assert!(
            class_face[c] == usize::MAX || class_face[c] == rg.labels[e],
            "class with two faces"
        );
        class_face[c] = rg.labels[e];
    }
    (lab.labelled(&rg.graph), class_face)
}

fn bfs(g: &Graph, s: usize) -> Vec<usize> {
    let mut d = vec![usize::MAX; g.vertex_count()];
    d[s] = 0;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if d[w] == usize::MAX {
                d[w] = d[v] + 1;
                queue.push_back(w);
            }
        }
    }
    d
}

// ---------------------------------------------------------------------------
// Criteria. Each returns a one-line summary or an error message.

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {t:.1?}, limit {limit:?}"))
}

fn fibonacci_chain() -> Outcome {
    let start = Instant::now();
    for n in 1..=6 {
        let pg = gen::gen_fibonaccene(n).map_err(|e| e.to_string())?;
        let rg = resonance::build_resonance_graph(&pg).map_err(|e| e.to_string())?;
        ensure(rg.vertex_count() as u64 == fib(n + 2), || {
            format!(
                "n={n}: {} matchings, F(n+2) = {}",
                rg.vertex_count(),
                fib(n + 2)
            )
        })?;
        let daisy = cube::is_daisy_cube(&rg.graph).map_err(|e| e.to_string())?;
        ensure(matches!(daisy, DaisyOutcome::Daisy(_)), || {
            format!("n={n}: R is not a daisy cube")
        })?;
        // Coordinates in chain order, then translate some matching to 0^n.
        let (labelled, class_face) = face_labelled(&rg);
        let order = path_order(&pg);
        let perm: Vec<usize> = class_face
            .iter()
            .map(|f| order.iter().position(|g| g == f).expect("face on path"))
            .collect();
        let relabelled = labelled.permute_coordinates(&perm);
        let target = cube::fibonacci_cube(n).map_err(|e| e.to_string())?;
        let found = relabelled
            .labels
            .iter()
            .any(|&b| relabelled.translate(b).same_labelled(&target));
        ensure(found, || {
            format!("n={n}: no base matches the Fibonacci cube labelling")
        })?;
    }
    within(start, Duration::from_secs(10))?;
    Ok("R(fibonaccene n) equals the Fibonacci cube as labelled graphs, n = 1..6".into())
}

fn padovan_counts() -> Outcome {
    let start = Instant::now();
    for n in 1..=10 {
        let cubes =
            cube::maximal_hypercubes_labelled(&cube::fibonacci_cube(n).map_err(|e| e.to_string())?);
        let path = gen::gen_path(n).map_err(|e| e.to_string())?;
        let expected = maximal_independent_sets(&path);
        ensure(cubes.len() as u64 == expected, || {
            format!(
                "n={n}: {} maximal hypercubes, {expected} maximal independent sets of P_n",
                cubes.len()
            )
        })?;
        ensure(mis::padovan(n) == expected, || {
            format!("n={n}: padovan() disagrees with enumeration")
        })?;
        let mut by_dim: BTreeMap<usize, u64> = BTreeMap::new();
        for q in &cubes {
            *by_dim.entry(q.dimension).or_default() += 1;
        }
        for k in 0..=n {
            let formula = choose(k as i64 + 1, n as i64 + 1 - 2 * k as i64);
            let got = by_dim.get(&k).copied().unwrap_or(0);
            ensure(got == formula, || {
                format!("n={n} k={k}: {got} cubes, formula {formula}")
            })?;
        }
    }
    within(start, Duration::from_secs(30))?;
    Ok("maximal hypercubes of the Fibonacci cubes, total and per dimension, n = 1..10".into())
}

/// The quoted maximal resonant sets of the named graph, checked before the
/// graph is used anywhere else.
fn open_coronene_preamble() -> Result<(), String> {
    let (pg, json) = corpus("open_coronene.json");
    let names = json.named_faces(&pg).map_err(|e| e.to_string())?;
    ensure(names.len() == 6, || {
        "open_coronene.json must name six faces".into()
    })?;
    let name_of = |f: usize| {
        names
            .iter()
            .find(|(_, &g)| g == f)
            .map(|(n, _)| n.clone())
            .expect("named")
    };
    let (maximal, _) = oracle_resonant_sets(&pg);
    let got: BTreeSet<BTreeSet<String>> = maximal
        .iter()
        .map(|s| s.iter().map(|&f| name_of(f)).collect())
        .collect();
    let quoted: BTreeSet<BTreeSet<String>> = [
        &["s1", "s3", "s5"][..],
        &["s1", "s4"],
        &["s2", "s4"],
        &["s2", "s5"],
        &["s6"],
    ]
    .iter()
    .map(|s| s.iter().map(|x| x.to_string()).collect())
    .collect();
    ensure(got == quoted, || {
        format!("open coronene maximal resonant sets {got:?}")
    })
}

fn bijection_corpus() -> Outcome {
    open_coronene_preamble()?;
    let files = [
        "hexagon.json",
        "naphthalene.json",
        "fibonaccene_3.json",
        "fibonaccene_4.json",
        "fibonaccene_5.json",
        "open_coronene.json",
    ];
    for file in files {
        let (pg, _) = corpus(file);
        let report =
            resonant_sets::verify_hypercube_bijection(&pg).map_err(|e| format!("{file}: {e}"))?;
        ensure(report.within_hypothesis, || {
            format!("{file}: not elementary with a forcing outer face")
        })?;
        let (maximal, canonical) = oracle_resonant_sets(&pg);
        let as_set = |v: &[FaceSet]| v.iter().map(|s| s.faces.clone()).collect::<BTreeSet<_>>();
        ensure(as_set(&report.maximal_resonant_sets) == maximal, || {
            format!("{file}: maximal sets differ")
        })?;
        ensure(as_set(&report.canonical_resonant_sets) == canonical, || {
            format!("{file}: canonical sets differ")
        })?;
        ensure(maximal == canonical, || {
            format!("{file}: maximal != canonical")
        })?;
        // Labels of maximal hypercubes, read straight off the edge labels.
        let rg = resonance::build_resonance_graph(&pg).map_err(|e| e.to_string())?;
        let cubes = cube::maximal_hypercubes(&rg.graph).map_err(|e| e.to_string())?;
        let mut images = BTreeSet::new();
        for q in &cubes {
            let faces: BTreeSet<usize> = rg
                .graph
                .edges()
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| {
                    q.vertices.binary_search(&u).is_ok() && q.vertices.binary_search(&v).is_ok()
                })
                .map(|(e, _)| rg.labels[e])
                .collect();
            ensure(faces.len() == q.dimension, || {
                format!("{file}: cube with {} labels", faces.len())
            })?;
            images.insert(faces.into_iter().collect::<Vec<_>>());
        }
        ensure(images.len() == cubes.len() && images == maximal, || {
            format!("{file}: hypercube labels {images:?} vs maximal resonant sets {maximal:?}")
        })?;
        ensure(report.holds, || format!("{file}: library reports failure"))?;
        if file == "open_coronene.json" {
            let mut dims: Vec<usize> = cubes.iter().map(|q| q.dimension).collect();
            dims.sort_unstable_by(|a, b| b.cmp(a));
            ensure(dims == [3, 2, 2, 2, 1], || {
                format!("open coronene dimensions {dims:?}")
            })?;
        }
    }
    Ok(
        "maximal = canonical resonant sets, labels match maximal hypercubes on 6 corpus graphs"
            .into(),
    )
}

fn nested_cycles() -> Outcome {
    let start = Instant::now();
    let (coronene, _) = corpus("coronene.json");
    let forcing = matching::is_outer_face_forcing(&coronene).map_err(|e| e.to_string())?;
    ensure(!forcing, || "coronene outer face is forcing".into())?;
    let scan = resonant_sets::nested_nice_cycles_scan(&coronene).map_err(|e| e.to_string())?;
    ensure(!scan.violations.is_empty(), || {
        "no nested nice pair in coronene".into()
    })?;
    let mut clean = 0;
    for file in [
        "hexagon.json",
        "naphthalene.json",
        "anthracene.json",
        "fibonaccene_3.json",
        "fibonaccene_4.json",
        "fibonaccene_5.json",
        "open_coronene.json",
    ] {
        let (pg, _) = corpus(file);
        ensure(
            matching::is_outer_face_forcing(&pg).map_err(|e| e.to_string())?,
            || format!("{file}: outer face not forcing"),
        )?;
        let scan =
            resonant_sets::nested_nice_cycles_scan(&pg).map_err(|e| format!("{file}: {e}"))?;
        ensure(scan.violations.is_empty(), || {
            format!("{file}: nested pair {:?}", scan.violations[0])
        })?;
        clean += 1;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!(
        "coronene: not forcing, {} nested pairs; {clean} forcing corpus graphs have none",
        scan.violations.len()
    ))
}

fn di_is_simplex_of_complement() -> Outcome {
    let start = Instant::now();
    let mut graphs = 0u64;
    for n in 0..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u64..1 << pairs.len() {
            let h = Graph::from_edges(
                n,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &p)| p),
            )
            .expect("simple graph");
            let di = cube::build_di(&h).map_err(|e| e.to_string())?;
            let simplex = cube::simplex_graph(&h.complement()).map_err(|e| e.to_string())?;
            // Identity witness: independent set of h = clique of its complement.
            ensure(di.same_labelled(&simplex), || {
                format!("n={n} edges={:?}", h.edges())
            })?;
            ensure(di.vertex_count() as u64 == independent_sets(&h), || {
                format!("n={n}: size of D_I")
            })?;
            graphs += 1;
        }
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!(
        "D_I(H) = simplex graph of the complement on all {graphs} graphs with at most 6 vertices"
    ))
}

const P2C_FILES: [&str; 6] = [
    "hexagon.json",
    "naphthalene.json",
    "fibonaccene_3.json",
    "fibonaccene_4.json",
    "fibonaccene_5.json",
    "hexagon_naphthalene.json",
];

fn resonance_is_dual_daisy() -> Outcome {
    for file in P2C_FILES {
        let (pg, _) = corpus(file);
        let report =
            mis::verify_resonance_is_dual_daisy(&pg).map_err(|e| format!("{file}: {e}"))?;
        ensure(report.holds, || {
            format!("{file}: R(G) is not D_I of the inner dual")
        })?;
        let rg = resonance::build_resonance_graph(&pg).map_err(|e| e.to_string())?;
        let dual = pg.inner_dual();
        ensure(
            rg.vertex_count() as u64 == independent_sets(&dual.graph),
            || format!("{file}: sizes"),
        )?;
        if file == "hexagon_naphthalene.json" {
            ensure(!pg.is_connected() && !dual.graph.is_tree(), || {
                "union should have a forest dual".into()
            })?;
        }
    }
    Ok(format!(
        "R(G) = D_I(G*) under the face map on {} graphs, including a disconnected union",
        P2C_FILES.len()
    ))
}

fn matchings_count_independent_sets() -> Outcome {
    for file in P2C_FILES {
        let (pg, _) = corpus(file);
        let matchings = count_pm(pg.graph(), &mut vec![true; pg.vertex_count()]);
        let sets = independent_sets(&pg.inner_dual().graph);
        ensure(matchings == sets, || {
            format!("{file}: {matchings} matchings, {sets} independent sets")
        })?;
        let report = mis::verify_matchings_equal_independent_sets(&pg)
            .map_err(|e| format!("{file}: {e}"))?;
        ensure(
            report.holds && report.perfect_matchings == matchings,
            || format!("{file}: library disagrees"),
        )?;
    }
    Ok(format!(
        "|M(G)| = #independent sets of the inner dual on {} graphs",
        P2C_FILES.len()
    ))
}

fn tree_classification() -> Outcome {
    let start = Instant::now();
    let mut trees = 0;
    for n in 1..=8 {
        let sweep = mis::classification_sweep(n).map_err(|e| e.to_string())?;
        let expected = if n <= 2 {
            1
        } else {
            (n as u64).pow(n as u32 - 2)
        };
        ensure(sweep.trees == expected, || {
            format!("n={n}: {} trees, expected {expected}", sweep.trees)
        })?;
        ensure(sweep.mismatches == 0, || {
            format!("n={n}: {} mispredicted trees", sweep.mismatches)
        })?;
        ensure(sweep.small_others == 0, || {
            format!("n={n}: {} unclassified trees below 6", sweep.small_others)
        })?;
        trees += sweep.trees;
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!(
        "classifier matches enumeration on all {trees} labeled trees of order <= 8"
    ))
}

fn wilf_bound() -> Outcome {
    let report = mis::verify_wilf(9).map_err(|e| e.to_string())?;
    for row in &report.rows {
        let n = row.n as u32;
        let bound = if n.is_multiple_of(2) {
            (1u64 << (n / 2 - 1)) + 1
        } else {
            1u64 << ((n - 1) / 2)
        };
        ensure(row.max_mis == bound, || {
            format!("n={n}: max {} vs {bound}", row.max_mis)
        })?;
        let expected_trees = if n <= 2 { 1 } else { (n as u64).pow(n - 2) };
        ensure(row.trees == expected_trees, || {
            format!("n={n}: {} trees", row.trees)
        })?;
    }
    Ok("largest MIS count over labeled trees meets the bound exactly, n = 1..9".into())
}

fn daisy_median_examples() -> Outcome {
    let gear = gen::gen_gear();
    let daisy = cube::is_daisy_cube(&gear).map_err(|e| e.to_string())?;
    let cert = daisy.certificate().ok_or("BW3 is not a daisy cube")?;
    let median = cube::is_median_graph(&gear).map_err(|e| e.to_string())?;
    ensure(!median.is_median, || "BW3 is median".into())?;
    let witness = median.witness.ok_or("no witness triple")?;
    let labels: BTreeSet<u64> = witness.iter().map(|&v| cert.labels[v]).collect();
    // Up to rotation: three distinct strings of weight two on three coordinates.
    ensure(
        cert.n_coords == 3 && labels == BTreeSet::from([0b011, 0b101, 0b110]),
        || format!("witness labels {labels:?}"),
    )?;
    let p4 = gen::gen_path(4).map_err(|e| e.to_string())?;
    ensure(
        cube::is_median_graph(&p4)
            .map_err(|e| e.to_string())?
            .is_median,
        || "P4 not median".into(),
    )?;
    ensure(
        cube::is_daisy_cube(&p4)
            .map_err(|e| e.to_string())?
            .certificate()
            .is_none(),
        || "P4 daisy".into(),
    )?;
    let q3 = cube::hypercube(3).map_err(|e| e.to_string())?.graph;
    ensure(
        cube::is_median_graph(&q3)
            .map_err(|e| e.to_string())?
            .is_median,
        || "Q3 not median".into(),
    )?;
    ensure(
        cube::is_daisy_cube(&q3)
            .map_err(|e| e.to_string())?
            .certificate()
            .is_some(),
        || "Q3 not daisy".into(),
    )?;
    Ok("BW3 daisy not median (witness 110, 011, 101); P4 median not daisy; Q3 both".into())
}

fn small_daisy_structure() -> Outcome {
    let mut trees: Vec<(String, Graph)> = Vec::new();
    let e = |r: reslab_core::Result<Graph>| r.map_err(|e| e.to_string());
    for k in 1..=5 {
        trees.push((format!("star({k})"), e(gen::gen_star(k))?));
    }
    for p in 1..=5 {
        for q in 1..=6 - p {
            trees.push((format!("bistar({p},{q})"), e(gen::gen_bistar(p, q))?));
            trees.push((format!("s3({p},{q})"), e(gen::gen_s3(p, q))?));
            trees.push((format!("s4({p},{q})"), e(gen::gen_s4(p, q))?));
            for r in 1..=6usize.saturating_sub(p + q) {
                trees.push((format!("s3pqr({p},{q},{r})"), e(gen::gen_s3pqr(p, q, r))?));
            }
        }
    }
    for (name, t) in &trees {
        let report = mis::verify_small_daisy_structure(t).map_err(|e| format!("{name}: {e}"))?;
        ensure(report.holds, || format!("{name}: {report:?}"))?;
        ensure(
            report.maximal_hypercubes as u64 == maximal_independent_sets(t),
            || format!("{name}: cube count"),
        )?;
    }
    Ok(format!(
        "structure of D_I verified on {} trees of the five families",
        trees.len()
    ))
}

fn random_chain() -> impl Strategy<Value = PlaneGraph> {
    (1usize..=6)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(
                    prop_oneof![Just('L'), Just('R'), Just('S')],
                    n.saturating_sub(2),
                ),
            )
        })
        .prop_filter_map("self-overlapping chain", |(n, turns)| {
            gen::gen_hex_chain(n, &turns.into_iter().collect::<String>()).ok()
        })
}

fn properties() -> Outcome {
    let mut runner = TestRunner::new(Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&random_chain(), |pg| {
            let rg = resonance::build_resonance_graph(&pg).expect("chains have perfect matchings");
            let g = &rg.graph;

            // Opposite edges of every 4-cycle carry the same face, adjacent
            // edges different faces.
            let label = |u: usize, v: usize| rg.labels[g.edge_id(u, v).expect("edge")];
            for a in 0..g.vertex_count() {
                for b in g.neighbors(a) {
                    for c in g.neighbors(b).filter(|&c| c != a) {
                        for d in g
                            .neighbors(c)
                            .filter(|&d| d != b && d != a && g.has_edge(d, a))
                        {
                            prop_assert_eq!(label(a, b), label(c, d));
                            prop_assert_eq!(label(b, c), label(d, a));
                            prop_assert_ne!(label(a, b), label(b, c));
                        }
                    }
                }
            }

            // The accepted labelling is an isometry.
            let labelled =
                cube::partial_cube_labelling(g).expect("resonance graphs are partial cubes");
            for s in 0..g.vertex_count() {
                let d = bfs(g, s);
                for t in 0..g.vertex_count() {
                    prop_assert_eq!(
                        (labelled.labels[s] ^ labelled.labels[t]).count_ones() as usize,
                        d[t]
                    );
                }
            }

            // Daisy certificates are downward closed with the right antichain.
            if let DaisyOutcome::Daisy(cert) = cube::is_daisy_cube(g).expect("connected") {
                let set: BTreeSet<u64> = cert.labels.iter().copied().collect();
                for &x in &set {
                    for i in 0..cert.n_coords {
                        if x >> i & 1 == 1 {
                            prop_assert!(set.contains(&(x & !(1 << i))));
                        }
                    }
                }
                let tops: Vec<u64> = set
                    .iter()
                    .copied()
                    .filter(|&x| !set.iter().any(|&y| y != x && y & x == x))
                    .collect();
                prop_assert_eq!(&tops, &cert.maximal_vertices);
                prop_assert!(cube::verify_daisy_certificate(g, &cert));
            } else {
                let colorable = pg
                    .peripherally_2_colorable()
                    .map(|o| o.colorable)
                    .unwrap_or(false);
                prop_assert!(
                    !colorable,
                    "a peripherally 2-colorable chain has a daisy resonance graph"
                );
            }

            // Every induced hypercube is labelled by a resonant face set.
            for q in cube::induced_hypercubes(&labelled) {
                let faces =
                    resonant_sets::hypercube_face_labels(&rg, &q.vertices).expect("hypercube");
                prop_assert_eq!(faces.len(), q.dimension);
                prop_assert!(oracle_resonant(&pg, &faces.faces));
                prop_assert!(resonant_sets::is_resonant(&pg, &faces));
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok("4-cycle labels, isometric labelling, daisy closure and resonant hypercube labels on 1000 random chains".into())
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("Fibonacci chains", fibonacci_chain),
        ("Padovan counts", padovan_counts),
        ("maximal resonant sets vs hypercubes", bijection_corpus),
        ("nested nice cycles", nested_cycles),
        ("D_I vs simplex graphs", di_is_simplex_of_complement),
        (
            "resonance graph is D_I of the dual",
            resonance_is_dual_daisy,
        ),
        (
            "matchings vs independent sets",
            matchings_count_independent_sets,
        ),
        ("tree classification", tree_classification),
        ("Wilf bound", wilf_bound),
        ("daisy and median examples", daisy_median_examples),
        ("structure of small daisy cubes", small_daisy_structure),
        ("property suites", properties),
    ];
    // Filters passed by `cargo test <name>` select criteria by number or name.
    let filters: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    let mut ran = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = format!("{}", i + 1);
        if !filters.is_empty()
            && !filters
                .iter()
                .any(|f| *f == id || name.contains(f.as_str()))
        {
            continue;
        }
        ran += 1;
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(summary) => println!("criterion {id:>2} PASS [{name}] {summary} ({secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("criterion {id:>2} FAIL [{name}] {why} ({secs:.1}s)");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", ran - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
