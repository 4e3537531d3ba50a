//! On-disk graph format: a JSON object with weighted vertices and directed
//! edges referring to vertices by id.

use anyhow::Context;
use serde::{Deserialize, Serialize};
use std::path::Path;
use wog::{GraphSpec, Normalization, WeightedOrientedGraph};

fn default_weight() -> u32 {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexEntry {
    pub id: String,
    /// Optional in the file; omitted means 1.
    #[serde(default = "default_weight")]
    pub weight: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: Vec<VertexEntry>,
    /// Directed edges as `[tail, head]` pairs of vertex ids.
    pub edges: Vec<(String, String)>,
}

impl GraphFile {
    pub fn spec(&self) -> GraphSpec {
        GraphSpec {
            name: self.name.clone(),
            vertices: self.vertices.iter().map(|v| (v.id.clone(), v.weight)).collect(),
            edges: self.edges.clone(),
        }
    }

    pub fn from_graph(d: &WeightedOrientedGraph) -> GraphFile {
        let labels = d.labels();
        GraphFile {
            name: d.name().map(str::to_owned),
            vertices: labels
                .iter()
                .zip(d.weights())
                .map(|(id, &weight)| VertexEntry { id: id.clone(), weight })
                .collect(),
            edges: d
                .edges()
                .iter()
                .map(|&(tail, head)| (labels[tail].clone(), labels[head].clone()))
                .collect(),
        }
    }

    pub fn save(&self, path: &Path) -> anyhow::Result<()> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
    }
}

/// Parses the file and builds the graph, rewriting source and sink weights.
pub fn load_graph(path: &Path) -> anyhow::Result<WeightedOrientedGraph> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file: GraphFile =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let graph = wog::graph::build_graph(&file.spec(), Normalization::Rewrite)
        .with_context(|| format!("building the graph from {}", path.display()))?;
    Ok(graph)
}
