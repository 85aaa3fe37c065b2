use std::io::Read;
use std::path::Path;

use reslab_core::cube::{LabelledGraph, LabelledJson};
use reslab_core::graph::GraphJson;
use reslab_core::plane_graph::EmbeddingJson;
use reslab_core::{Error, Graph, PlaneGraph};

use crate::CliError;

pub enum Input {
    Plane {
        pg: Box<PlaneGraph>,
        json: EmbeddingJson,
    },
    Labelled(LabelledGraph),
    Plain {
        graph: Graph,
        ids: Vec<i64>,
    },
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Plane { .. } => "plane",
            Input::Labelled(_) => "labelled",
            Input::Plain { .. } => "graph",
        }
    }

    /// The underlying abstract graph with an original id per vertex.
    pub fn graph(&self) -> (&Graph, Vec<i64>) {
        match self {
            Input::Plane { pg, .. } => (pg.graph(), pg.ids().to_vec()),
            Input::Labelled(l) => (&l.graph, (0..l.vertex_count() as i64).collect()),
            Input::Plain { graph, ids } => (graph, ids.clone()),
        }
    }

    pub fn plane(&self, what: &str) -> Result<&PlaneGraph, CliError> {
        match self {
            Input::Plane { pg, .. } => Ok(pg),
            other => Err(CliError::input(format!(
                "{what} needs a plane embedding (input is a {} file)",
                other.kind()
            ))),
        }
    }
}

pub fn read_text(path: &str) -> Result<String, CliError> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::input(format!("reading stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(Path::new(path))
            .map_err(|e| CliError::input(format!("reading {path}: {e}")))?;
    }
    Ok(text)
}

fn schema(e: serde_json::Error) -> Error {
    Error::Schema {
        field: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    }
}

/// Picks the schema from the keys present: `rotations` means a plane
/// embedding, `n_coords` a labelled cube, anything else a plain graph.
pub fn parse(text: &str) -> Result<Input, Error> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(schema)?;
    let Some(obj) = value.as_object() else {
        return Err(Error::Schema {
            field: "<root>".into(),
            message: "expected a JSON object".into(),
        });
    };
    if obj.contains_key("rotations") {
        let json = EmbeddingJson::from_text(text)?;
        let pg = json.to_plane_graph()?;
        json.named_faces(&pg)?;
        Ok(Input::Plane {
            pg: Box::new(pg),
            json,
        })
    } else if obj.contains_key("n_coords") {
        let json: LabelledJson = serde_json::from_value(value).map_err(schema)?;
        Ok(Input::Labelled(json.to_labelled()?))
    } else {
        let json: GraphJson = serde_json::from_value(value).map_err(schema)?;
        let (graph, ids) = json.to_graph()?;
        Ok(Input::Plain { graph, ids })
    }
}

pub fn load(path: &str) -> Result<Input, CliError> {
    let text = read_text(path)?;
    parse(&text).map_err(|e| CliError::from(e).context(path))
}
