use std::collections::BTreeMap;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use reslab_core::cube::{self, DaisyOutcome};
use reslab_core::generators as gen;
use reslab_core::{matching, mis, resonance, resonant_sets, Error, Graph, PlaneGraph};

use crate::input::{self, Input};
use crate::CliError;

pub const CORPUS_SUITES: &[&str] = &[
    "connectivity",
    "product",
    "cube-bijection",
    "nested",
    "dual-mis",
    "matching-count",
    "dual-daisy",
    "four-cycles",
    "daisy-p2c",
];

pub const SWEEP_SUITES: &[&str] = &[
    "fibonacci",
    "padovan",
    "simplex",
    "tree-classes",
    "wilf",
    "counterexamples",
    "structure",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
    Error,
}

#[derive(Debug, Clone, Serialize)]
pub struct Entry {
    pub name: String,
    pub status: Status,
    pub detail: Value,
}

impl Entry {
    fn new(name: impl Into<String>, pass: bool, detail: impl Serialize) -> Entry {
        Entry {
            name: name.into(),
            status: if pass { Status::Pass } else { Status::Fail },
            detail: serde_json::to_value(detail).expect("serializable"),
        }
    }

    fn skip(name: impl Into<String>, reason: impl Into<String>) -> Entry {
        Entry {
            name: name.into(),
            status: Status::Skip,
            detail: json!({ "reason": reason.into() }),
        }
    }

    fn error(name: impl Into<String>, e: &Error) -> Entry {
        Entry {
            name: name.into(),
            status: Status::Error,
            detail: json!({ "error": e.to_string() }),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corpus: Option<String>,
    pub entries: Vec<Entry>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub errors: usize,
}

impl SuiteReport {
    fn new(suite: &str, corpus: Option<String>, entries: Vec<Entry>) -> SuiteReport {
        let count = |s: Status| entries.iter().filter(|e| e.status == s).count();
        SuiteReport {
            suite: suite.to_string(),
            corpus,
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            skipped: count(Status::Skip),
            errors: count(Status::Error),
            entries,
        }
    }
}

fn corpus_files(dir: &str) -> Result<Vec<(String, String)>, CliError> {
    let read = std::fs::read_dir(Path::new(dir))
        .map_err(|e| CliError::input(format!("reading corpus {dir}: {e}")))?;
    let mut files = Vec::new();
    for entry in read {
        let entry = entry.map_err(|e| CliError::input(format!("reading corpus {dir}: {e}")))?;
        let path = entry.path();
        if path.extension().is_some_and(|x| x == "json") {
            let name = path
                .file_name()
                .expect("file")
                .to_string_lossy()
                .into_owned();
            files.push((name, path.to_string_lossy().into_owned()));
        }
    }
    files.sort();
    Ok(files)
}

/// Skips on unmet preconditions, errors on anything else.
fn guarded(name: &str, result: Result<Entry, Error>) -> Entry {
    match result {
        Ok(entry) => entry,
        Err(
            e @ (Error::PreconditionFailed(_)
            | Error::NotElementary
            | Error::NotWeaklyElementary
            | Error::NotP2C(_)
            | Error::NoPerfectMatching),
        ) => Entry::skip(name, e.to_string()),
        Err(e) => Entry::error(name, &e),
    }
}

fn p2c(pg: &PlaneGraph) -> Result<bool, Error> {
    Ok(pg.is_connected()
        && pg.edge_count() > 1
        && matching::is_elementary(pg.graph())?
        && pg.peripherally_2_colorable()?.colorable)
}

fn corpus_entry(suite: &str, name: &str, input: &Input) -> Entry {
    let Input::Plane { pg, json } = input else {
        return Entry::skip(
            name,
            format!("{} input, suite needs a plane embedding", input.kind()),
        );
    };
    let result = (|| -> Result<Entry, Error> {
        Ok(match suite {
            "connectivity" => {
                let r = resonance::check_connectivity_equivalence(pg)?;
                Entry::new(name, r.holds, r)
            }
            "product" => {
                let r = resonance::check_product_structure(pg)?;
                Entry::new(name, r.holds, r)
            }
            "cube-bijection" => {
                let r = resonant_sets::verify_hypercube_bijection(pg)?;
                let names = json.named_faces(pg)?;
                let named = |faces: &[usize]| -> Vec<String> {
                    let mut out: Vec<String> = faces
                        .iter()
                        .map(|f| {
                            names
                                .iter()
                                .find(|(_, &g)| g == *f)
                                .map_or_else(|| format!("f{f}"), |(n, _)| n.clone())
                        })
                        .collect();
                    out.sort();
                    out
                };
                let mut detail = serde_json::to_value(&r).expect("serializable");
                if !names.is_empty() {
                    detail["named_maximal_resonant_sets"] = json!(r
                        .maximal_resonant_sets
                        .iter()
                        .map(|s| named(&s.faces))
                        .collect::<Vec<_>>());
                }
                if r.within_hypothesis {
                    Entry {
                        name: name.to_string(),
                        status: if r.holds { Status::Pass } else { Status::Fail },
                        detail,
                    }
                } else {
                    Entry {
                        name: name.to_string(),
                        status: Status::Skip,
                        detail: json!({ "reason": "not elementary with a forcing outer face", "report": detail }),
                    }
                }
            }
            "nested" => {
                let scan = resonant_sets::nested_nice_cycles_scan(pg)?;
                let forcing = matching::is_outer_face_forcing(pg)?;
                let pass = forcing == scan.violations.is_empty();
                Entry::new(
                    name,
                    pass,
                    json!({ "outer_face_forcing": forcing, "cycles": scan.cycles, "nice_pairs": scan.nice_pairs,
                            "violations": scan.violations.len(), "first_violation": scan.violations.first() }),
                )
            }
            "dual-mis" => {
                if !p2c(pg)? {
                    return Ok(Entry::skip(
                        name,
                        "not an elementary peripherally 2-colorable graph",
                    ));
                }
                let r = mis::verify_dual_mis_bijection(pg)?;
                Entry::new(name, r.bijective, r)
            }
            "matching-count" => {
                let r = mis::verify_matchings_equal_independent_sets(pg)?;
                Entry::new(name, r.holds, r)
            }
            "dual-daisy" => {
                let r = mis::verify_resonance_is_dual_daisy(pg)?;
                Entry::new(name, r.holds, r)
            }
            "four-cycles" => {
                let rg = resonance::build_resonance_graph(pg)?;
                let (cycles, violations) = resonance::four_cycle_label_check(pg, &rg);
                Entry::new(
                    name,
                    violations.is_empty(),
                    json!({ "four_cycles": cycles, "violations": violations }),
                )
            }
            "daisy-p2c" => {
                if pg.edge_count() == 1 || !matching::is_elementary(pg.graph())? {
                    return Ok(Entry::skip(name, "not an elementary graph with a cycle"));
                }
                let colorable = pg.peripherally_2_colorable()?.colorable;
                let rg = resonance::build_resonance_graph(pg)?;
                let daisy = matches!(cube::is_daisy_cube(&rg.graph)?, DaisyOutcome::Daisy(_));
                Entry::new(
                    name,
                    colorable == daisy,
                    json!({ "peripherally_2_colorable": colorable, "resonance_is_daisy": daisy }),
                )
            }
            _ => unreachable!("suite names are checked before dispatch"),
        })
    })();
    guarded(name, result)
}

fn run_corpus(suite: &str, dir: &str) -> Result<SuiteReport, CliError> {
    let files = corpus_files(dir)?;
    let entries: Vec<Entry> = files
        .par_iter()
        .map(|(name, path)| match input::load(path) {
            Ok(input) => corpus_entry(suite, name, &input),
            Err(e) => Entry {
                name: name.clone(),
                status: Status::Error,
                detail: json!({ "error": e.message }),
            },
        })
        .collect();
    Ok(SuiteReport::new(suite, Some(dir.to_string()), entries))
}

fn fibonacci_numbers(n: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

fn fibonacci(n_max: usize) -> Result<Vec<Entry>, Error> {
    (1..=n_max)
        .map(|n| {
            let pg = gen::gen_fibonaccene(n)?;
            let rg = resonance::build_resonance_graph(&pg)?;
            let target = cube::fibonacci_cube(n)?;
            let daisy = mis::verify_resonance_is_dual_daisy(&pg)?;
            let iso = cube::find_isomorphism(&rg.graph, &target.graph)?.is_some();
            let expected = fibonacci_numbers(n + 2);
            let pass = daisy.holds && iso && rg.vertex_count() as u64 == expected;
            Ok(Entry::new(
                format!("n={n}"),
                pass,
                json!({ "matchings": rg.vertex_count(), "expected": expected, "dual_daisy": daisy.holds, "isomorphic": iso }),
            ))
        })
        .collect()
}

fn padovan(n_max: usize) -> Result<Vec<Entry>, Error> {
    (1..=n_max)
        .map(|n| {
            let cubes = cube::maximal_hypercubes_labelled(&cube::fibonacci_cube(n)?);
            let mut by_dim: BTreeMap<usize, u64> = BTreeMap::new();
            for q in &cubes {
                *by_dim.entry(q.dimension).or_default() += 1;
            }
            let expected: BTreeMap<usize, u64> = (0..=n)
                .map(|k| (k, mis::max_kcube_count(n, k)))
                .filter(|&(_, c)| c > 0)
                .collect();
            let pass = cubes.len() as u64 == mis::padovan(n) && by_dim == expected;
            Ok(Entry::new(
                format!("n={n}"),
                pass,
                json!({ "maximal_hypercubes": cubes.len(), "padovan": mis::padovan(n),
                        "by_dimension": by_dim, "expected_by_dimension": expected }),
            ))
        })
        .collect()
}

fn simplex(n_max: usize) -> Result<Vec<Entry>, Error> {
    (1..=n_max)
        .map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let (graphs, failures) = (0u64..1 << pairs.len())
                .into_par_iter()
                .map(|mask| -> Result<(u64, u64), Error> {
                    let h = Graph::from_edges(
                        n,
                        pairs
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| mask >> i & 1 == 1)
                            .map(|(_, &p)| p),
                    )?;
                    let same =
                        cube::build_di(&h)?.same_labelled(&cube::simplex_graph(&h.complement())?);
                    Ok((1, u64::from(!same)))
                })
                .try_reduce(|| (0, 0), |a, b| Ok((a.0 + b.0, a.1 + b.1)))?;
            Ok(Entry::new(
                format!("n={n}"),
                failures == 0,
                json!({ "graphs": graphs, "failures": failures }),
            ))
        })
        .collect()
}

fn tree_classes(n_max: usize) -> Result<Vec<Entry>, Error> {
    (1..=n_max)
        .map(|n| {
            let sweep = mis::classification_sweep(n)?;
            Ok(Entry::new(
                format!("n={n}"),
                sweep.mismatches == 0 && sweep.small_others == 0,
                sweep,
            ))
        })
        .collect()
}

fn wilf(n_max: usize) -> Result<Vec<Entry>, Error> {
    Ok(mis::verify_wilf(n_max)?
        .rows
        .into_iter()
        .map(|row| Entry::new(format!("n={}", row.n), row.max_mis == row.bound, row))
        .collect())
}

fn counterexamples() -> Result<Vec<Entry>, Error> {
    let mut entries = Vec::new();
    let cases: [(&str, Graph, bool, bool); 3] = [
        ("gear", gen::gen_gear(), true, false),
        ("p4", gen::gen_path(4)?, false, true),
        ("q3", cube::hypercube(3)?.graph, true, true),
    ];
    for (name, g, want_daisy, want_median) in cases {
        let daisy = cube::is_daisy_cube(&g)?;
        let median = cube::is_median_graph(&g)?;
        let is_daisy = matches!(daisy, DaisyOutcome::Daisy(_));
        let witness_labels = match (&median.witness, daisy.certificate()) {
            (Some(w), Some(cert)) => {
                let mut labels: Vec<String> = w
                    .iter()
                    .map(|&v| cube::label_string(cert.labels[v], cert.n_coords))
                    .collect();
                labels.sort();
                Some(labels)
            }
            _ => None,
        };
        entries.push(Entry::new(
            name,
            is_daisy == want_daisy && median.is_median == want_median,
            json!({ "daisy": daisy, "median": median, "witness_labels": witness_labels }),
        ));
    }
    Ok(entries)
}

/// Every tree of the small families with parameter sum at most `budget`.
pub fn structure_trees(budget: usize) -> Result<Vec<(String, Graph)>, Error> {
    let mut trees = Vec::new();
    for k in 1..=5.min(budget.max(1)) {
        trees.push((format!("star({k})"), gen::gen_star(k)?));
    }
    for p in 1..budget {
        for q in 1..=budget - p {
            trees.push((format!("bistar({p},{q})"), gen::gen_bistar(p, q)?));
            trees.push((format!("s3({p},{q})"), gen::gen_s3(p, q)?));
            trees.push((format!("s4({p},{q})"), gen::gen_s4(p, q)?));
            for r in 1..=budget.saturating_sub(p + q) {
                trees.push((format!("s3pqr({p},{q},{r})"), gen::gen_s3pqr(p, q, r)?));
            }
        }
    }
    Ok(trees)
}

fn structure(budget: usize) -> Result<Vec<Entry>, Error> {
    structure_trees(budget)?
        .into_par_iter()
        .map(|(name, t)| {
            let r = mis::verify_small_daisy_structure(&t)?;
            Ok(Entry::new(name, r.holds, r))
        })
        .collect()
}

pub fn run(suite: &str, corpus: &str, n: Option<usize>) -> Result<SuiteReport, CliError> {
    if CORPUS_SUITES.contains(&suite) {
        return run_corpus(suite, corpus);
    }
    let entries = match suite {
        "fibonacci" => fibonacci(n.unwrap_or(6))?,
        "padovan" => padovan(n.unwrap_or(10))?,
        "simplex" => simplex(n.unwrap_or(6))?,
        "tree-classes" => tree_classes(n.unwrap_or(8))?,
        "wilf" => wilf(n.unwrap_or(9))?,
        "counterexamples" => counterexamples()?,
        "structure" => structure(n.unwrap_or(6))?,
        other => {
            return Err(CliError::input(format!(
                "unknown suite {other:?}; corpus suites: {}; sweeps: {}",
                CORPUS_SUITES.join(", "),
                SWEEP_SUITES.join(", ")
            )))
        }
    };
    Ok(SuiteReport::new(suite, None, entries))
}
