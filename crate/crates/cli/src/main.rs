//! `reslab`: command-line front end over `reslab-core`.

mod generate;
mod input;
mod suites;

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use reslab_core::cube::{self, DaisyOutcome};
use reslab_core::graph::GraphJson;
use reslab_core::{limits, matching, mis, resonance, resonant_sets, Error};

use input::Input;
use suites::Status;

/// Exit 1: a check ran and failed. Exit 2: the input could not be used.
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> CliError {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    pub fn context(self, what: &str) -> CliError {
        CliError {
            message: format!("{what}: {}", self.message),
            ..self
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        let code = match e {
            Error::Schema { .. }
            | Error::BadRotation(_)
            | Error::NonPlanarEmbedding(_)
            | Error::NotBipartite(_)
            | Error::NotACycle(_)
            | Error::SizeLimitExceeded { .. }
            | Error::BadParameter(_)
            | Error::InvalidChainSpec(_)
            | Error::NotATree => 2,
            _ => 1,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "reslab",
    version,
    about = "Resonance graphs, daisy cubes and maximal independent sets"
)]
struct Cli {
    /// Machine-readable JSON on stdout instead of a summary.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a generated graph as JSON.
    Generate {
        /// One of the known families; run with an unknown name to list them.
        family: String,
        params: Vec<String>,
    },
    /// Run structural checks; with no flags, every check that applies.
    Check {
        file: String,
        #[arg(long)]
        elementary: bool,
        #[arg(long)]
        weakly_elementary: bool,
        #[arg(long)]
        p2c: bool,
        #[arg(long)]
        forcing_outer: bool,
        /// Daisy cube test (on the resonance graph for plane input).
        #[arg(long)]
        daisy: bool,
        /// Median graph test (on the resonance graph for plane input).
        #[arg(long)]
        median: bool,
    },
    /// Build the resonance graph.
    Resonance {
        file: String,
        /// Write the resonance graph in DOT form to this path (`-` for stdout).
        #[arg(long)]
        dot: Option<String>,
    },
    /// Resonant sets and their correspondence with maximal hypercubes.
    ResonantSets { file: String },
    /// Maximal independent sets (of the inner dual for plane input).
    Mis { file: String },
    /// Classify a tree and compare the predicted and actual MIS counts.
    ClassifyTree { file: String },
    /// Run a verification suite.
    Verify {
        suite: String,
        #[arg(long, default_value = "corpus")]
        corpus: String,
        /// Upper size bound for the sweep suites.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Print the input graph in DOT form.
    ExportDot { file: String },
}

#[derive(Serialize)]
struct Guards {
    edge_guard: usize,
    vertex_guard: usize,
    cycle_guard: usize,
}

fn guards() -> Guards {
    Guards {
        edge_guard: limits::edge_guard(),
        vertex_guard: limits::vertex_guard(),
        cycle_guard: limits::cycle_guard(),
    }
}

/// What a command produced: whether it passed, its JSON body, and the
/// human summary.
struct Outcome {
    pass: bool,
    body: Value,
    human: String,
}

fn wrap(command: &str, body: Value) -> Value {
    let mut report = json!({
        "tool": "reslab",
        "version": env!("CARGO_PKG_VERSION"),
        "guards": guards(),
        "command": command,
    });
    if let (Some(out), Value::Object(fields)) = (report.as_object_mut(), body) {
        out.extend(fields);
    }
    report
}

fn to_value(x: impl Serialize) -> Value {
    serde_json::to_value(x).expect("serializable")
}

struct CheckLine {
    name: &'static str,
    pass: bool,
    message: String,
    detail: Value,
}

fn check(input: &Input, flags: [bool; 6]) -> Result<Outcome, CliError> {
    let names = [
        "elementary",
        "weakly-elementary",
        "p2c",
        "forcing-outer",
        "daisy",
        "median",
    ];
    let plane_only = [true, true, true, true, false, false];
    let mut wanted: Vec<usize> = (0..6).filter(|&i| flags[i]).collect();
    if wanted.is_empty() {
        let plane = matches!(input, Input::Plane { .. });
        wanted = (0..6).filter(|&i| plane || !plane_only[i]).collect();
    }
    let (graph, _) = input.graph();
    // Daisy and median tests run on R(G) for plane input.
    let cube_host = match input {
        Input::Plane { pg, .. } if wanted.iter().any(|&i| i >= 4) => {
            Some(resonance::build_resonance_graph(pg)?.graph)
        }
        _ => None,
    };
    let host = cube_host.as_ref().unwrap_or(graph);
    let mut lines = Vec::new();
    for i in wanted {
        let name = names[i];
        let line = match name {
            "elementary" => {
                let pg = input.plane("--elementary")?;
                let ok = matching::is_elementary(pg.graph())?;
                CheckLine {
                    name,
                    pass: ok,
                    message: if ok { "elementary" } else { "not elementary" }.into(),
                    detail: json!(ok),
                }
            }
            "weakly-elementary" => {
                let pg = input.plane("--weakly-elementary")?;
                let ok = matching::is_weakly_elementary(pg)?;
                let message = if ok {
                    "weakly elementary"
                } else {
                    "not weakly elementary"
                };
                CheckLine {
                    name,
                    pass: ok,
                    message: message.into(),
                    detail: json!(ok),
                }
            }
            "p2c" => {
                let pg = input.plane("--p2c")?;
                match pg.peripherally_2_colorable() {
                    Ok(out) => CheckLine {
                        name,
                        pass: out.colorable,
                        message: match &out.refutation {
                            None => "peripherally 2-colorable".into(),
                            Some(r) => format!("not peripherally 2-colorable: {}", to_value(r)),
                        },
                        detail: to_value(&out),
                    },
                    Err(e @ (Error::NotElementary | Error::PreconditionFailed(_))) => CheckLine {
                        name,
                        pass: false,
                        message: format!("not peripherally 2-colorable: {e}"),
                        detail: json!({ "error": e.to_string() }),
                    },
                    Err(e) => return Err(e.into()),
                }
            }
            "forcing-outer" => {
                let pg = input.plane("--forcing-outer")?;
                let ok = matching::is_outer_face_forcing(pg)?;
                let message = if ok {
                    "outer face forcing"
                } else {
                    "outer face not forcing"
                };
                CheckLine {
                    name,
                    pass: ok,
                    message: message.into(),
                    detail: json!(ok),
                }
            }
            "daisy" => {
                let out = cube::is_daisy_cube(host)?;
                let ok = matches!(out, DaisyOutcome::Daisy(_));
                let message = match &out {
                    DaisyOutcome::Daisy(c) => format!("daisy cube (base vertex {})", c.base_vertex),
                    DaisyOutcome::NotPartialCube => "not a daisy cube: not a partial cube".into(),
                    DaisyOutcome::NoDownwardClosedBase => {
                        "not a daisy cube: no base gives a downward-closed label set".into()
                    }
                };
                CheckLine {
                    name,
                    pass: ok,
                    message,
                    detail: to_value(&out),
                }
            }
            _ => {
                let out = cube::is_median_graph(host)?;
                let message = match out.witness {
                    None => "median graph".to_string(),
                    Some(w) => format!(
                        "not a median graph: triple {w:?} has {} medians",
                        out.witness_median_count.unwrap_or(0)
                    ),
                };
                CheckLine {
                    name,
                    pass: out.is_median,
                    message,
                    detail: to_value(&out),
                }
            }
        };
        lines.push(line);
    }
    let pass = lines.iter().all(|l| l.pass);
    let human = lines
        .iter()
        .map(|l| {
            format!(
                "{} {}: {}",
                if l.pass { "PASS" } else { "FAIL" },
                l.name,
                l.message
            )
        })
        .collect::<Vec<_>>()
        .join("\n");
    let checks: BTreeMap<&str, Value> = lines
        .iter()
        .map(|l| {
            (
                l.name,
                json!({ "pass": l.pass, "message": l.message, "detail": l.detail }),
            )
        })
        .collect();
    Ok(Outcome {
        pass,
        body: json!({ "input": input.kind(), "pass": pass, "checks": checks }),
        human,
    })
}

fn write_out(path: &str, text: &str) -> Result<(), CliError> {
    if path == "-" {
        print!("{text}");
        Ok(())
    } else {
        std::fs::write(path, text).map_err(|e| CliError::input(format!("writing {path}: {e}")))
    }
}

fn face_walks(pg: &reslab_core::PlaneGraph) -> BTreeMap<usize, Vec<i64>> {
    pg.finite_faces()
        .into_iter()
        .map(|f| (f, pg.face(f).boundary.iter().map(|&v| pg.id(v)).collect()))
        .collect()
}

fn resonance_cmd(input: &Input, dot: Option<&str>) -> Result<Outcome, CliError> {
    let pg = input.plane("resonance")?;
    let rg = resonance::build_resonance_graph(pg)?;
    if let Some(path) = dot {
        write_out(path, &rg.to_dot("resonance"))?;
    }
    let connected = rg.graph.is_connected();
    let human = format!(
        "resonance graph: {} vertices, {} edges, {}",
        rg.vertex_count(),
        rg.edge_count(),
        if connected {
            "connected"
        } else {
            "disconnected"
        }
    );
    Ok(Outcome {
        pass: true,
        body: json!({
            "vertex_count": rg.vertex_count(),
            "edge_count": rg.edge_count(),
            "connected": connected,
            "faces": face_walks(pg),
            "resonance": rg.to_json(),
        }),
        human,
    })
}

fn resonant_sets_cmd(input: &Input) -> Result<Outcome, CliError> {
    let pg = input.plane("resonant-sets")?;
    let sets = resonant_sets::enumerate_resonant_sets(pg)?;
    let report = resonant_sets::verify_hypercube_bijection(pg)?;
    let show = |s: &resonant_sets::FaceSet| format!("{:?}", s.faces);
    let human = format!(
        "{} resonant sets\nmaximal: {}\ncanonical: {}\nmaximal hypercube dimensions: {:?}\nbijection with maximal hypercubes: {}{}",
        sets.len(),
        report.maximal_resonant_sets.iter().map(show).collect::<Vec<_>>().join(" "),
        report.canonical_resonant_sets.iter().map(show).collect::<Vec<_>>().join(" "),
        report.maximal_hypercubes.iter().map(|c| c.dimension).collect::<Vec<_>>(),
        report.bijection,
        if report.within_hypothesis { "" } else { " (graph is not elementary with a forcing outer face)" }
    );
    Ok(Outcome {
        pass: true,
        body: json!({ "faces": face_walks(pg), "resonant_sets": sets, "report": report }),
        human,
    })
}

fn mis_cmd(input: &Input) -> Result<Outcome, CliError> {
    let (host, names, graph) = match input {
        Input::Plane { pg, .. } => {
            let dual = pg.inner_dual();
            let names: Vec<i64> = dual.faces.iter().map(|&f| f as i64).collect();
            ("inner_dual", names, dual.graph)
        }
        Input::Plain { graph, ids } => ("graph", ids.clone(), graph.clone()),
        Input::Labelled(_) => {
            return Err(CliError::input(
                "mis needs a plane embedding or a plain graph",
            ))
        }
    };
    let sets: Vec<Vec<i64>> = mis::enumerate_mis(&graph)?
        .iter()
        .map(|s| s.vertices.iter().map(|&v| names[v]).collect())
        .collect();
    let independent = mis::count_independent_sets(&graph)?;
    let human = format!(
        "{} maximal independent sets of the {}: {}\n{} independent sets (with the empty set)",
        sets.len(),
        host.replace('_', " "),
        sets.iter()
            .map(|s| format!("{s:?}"))
            .collect::<Vec<_>>()
            .join(" "),
        independent
    );
    Ok(Outcome {
        pass: true,
        body: json!({ "host": host, "count": sets.len(), "maximal_independent_sets": sets,
                      "independent_sets": independent }),
        human,
    })
}

fn classify_cmd(input: &Input) -> Result<Outcome, CliError> {
    let (graph, ids) = input.graph();
    let class = mis::classify_tree(graph)?;
    let actual = mis::enumerate_mis(graph)?.len() as u64;
    let predicted = class.predicted_mis();
    let tree = GraphJson {
        vertices: ids.clone(),
        edges: graph
            .edges()
            .iter()
            .map(|&(u, v)| [ids[u], ids[v]])
            .collect(),
    };
    let human = format!(
        "class {} params {:?}: predicted {predicted}, actual {actual}",
        class.name(),
        class.params()
    );
    Ok(Outcome {
        pass: predicted == actual,
        body: json!({ "tree": tree, "class": class.name(), "params": class.params(),
                      "mis_predicted": predicted, "mis_actual": actual }),
        human,
    })
}

fn verify_cmd(suite: &str, corpus: &str, n: Option<usize>) -> Result<(Outcome, u8), CliError> {
    let report = suites::run(suite, corpus, n)?;
    let mut human: Vec<String> = report
        .entries
        .iter()
        .map(|e| {
            let tag = match e.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
                Status::Error => "ERROR",
            };
            match e.status {
                Status::Skip | Status::Error => {
                    let why = e.detail.get("reason").or_else(|| e.detail.get("error"));
                    format!(
                        "{tag} {}: {}",
                        e.name,
                        why.and_then(Value::as_str).unwrap_or("")
                    )
                }
                _ => format!("{tag} {}", e.name),
            }
        })
        .collect();
    human.push(format!(
        "{}: {} passed, {} failed, {} skipped, {} errors",
        report.suite, report.passed, report.failed, report.skipped, report.errors
    ));
    let code = if report.errors > 0 {
        2
    } else if report.failed > 0 {
        1
    } else {
        0
    };
    Ok((
        Outcome {
            pass: code == 0,
            body: to_value(&report),
            human: human.join("\n"),
        },
        code,
    ))
}

fn export_dot(input: &Input) -> String {
    match input {
        Input::Plane { pg, .. } => pg.to_dot("G"),
        Input::Labelled(l) => l.to_dot("G"),
        Input::Plain { graph, .. } => graph.to_dot("G"),
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    limits::edge_guard_from_env()?;
    let (name, outcome, code) = match cli.command {
        Command::Generate { family, params } => {
            let value = generate::generate(&family, &params)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&value).expect("serializable")
            );
            return Ok(0);
        }
        Command::ExportDot { file } => {
            print!("{}", export_dot(&input::load(&file)?));
            return Ok(0);
        }
        Command::Check {
            file,
            elementary,
            weakly_elementary,
            p2c,
            forcing_outer,
            daisy,
            median,
        } => {
            let input = input::load(&file)?;
            let out = check(
                &input,
                [
                    elementary,
                    weakly_elementary,
                    p2c,
                    forcing_outer,
                    daisy,
                    median,
                ],
            )?;
            let code = u8::from(!out.pass);
            ("check", out, code)
        }
        Command::Resonance { file, dot } => {
            let input = input::load(&file)?;
            ("resonance", resonance_cmd(&input, dot.as_deref())?, 0)
        }
        Command::ResonantSets { file } => {
            ("resonant-sets", resonant_sets_cmd(&input::load(&file)?)?, 0)
        }
        Command::Mis { file } => ("mis", mis_cmd(&input::load(&file)?)?, 0),
        Command::ClassifyTree { file } => {
            let out = classify_cmd(&input::load(&file)?)?;
            if cli.json {
                // One line, as other tools consume it line by line.
                println!("{}", wrap("classify-tree", out.body));
            } else {
                println!("{}", out.human);
            }
            return Ok(u8::from(!out.pass));
        }
        Command::Verify { suite, corpus, n } => {
            let (out, code) = verify_cmd(&suite, &corpus, n)?;
            ("verify", out, code)
        }
    };
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&wrap(name, outcome.body)).expect("serializable")
        );
    } else {
        println!("{}", outcome.human);
    }
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("reslab: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
