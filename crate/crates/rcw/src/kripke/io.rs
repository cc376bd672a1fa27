//! JSON and Graphviz serialization.
//!
//! The JSON shape is stable:
//!
//! ```json
//! {"nodes":[0,1], "root":0,
//!  "edges":[{"from":0,"to":1,"mod":"w"}],
//!  "val":{"p":[1]}}
//! ```
//!
//! with `"mod"` a number or `"w"`, all lists sorted.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::formula::Modality;

use super::{Model, ModelError, NodeId};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub(super) struct ModelRepr {
    nodes: Vec<NodeId>,
    root: Option<NodeId>,
    edges: Vec<EdgeRepr>,
    val: BTreeMap<String, Vec<NodeId>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct EdgeRepr {
    from: NodeId,
    to: NodeId,
    #[serde(rename = "mod")]
    label: Modality,
}

impl From<&Model> for ModelRepr {
    fn from(m: &Model) -> Self {
        ModelRepr {
            nodes: m.nodes().collect(),
            root: m.root(),
            edges: m
                .all_edges()
                .map(|(label, from, to)| EdgeRepr { from, to, label })
                .collect(),
            val: m
                .valuation()
                .iter()
                .map(|(v, s)| (v.clone(), s.iter().copied().collect()))
                .collect(),
        }
    }
}

impl TryFrom<ModelRepr> for Model {
    type Error = ModelError;
    fn try_from(repr: ModelRepr) -> Result<Model, ModelError> {
        let mut m = Model::new();
        for id in repr.nodes {
            m.add_node(id);
        }
        if let Some(r) = repr.root {
            if !m.contains_node(r) {
                return Err(ModelError::UnknownNode(r));
            }
            m.set_root(Some(r));
        }
        for e in repr.edges {
            if !m.contains_node(e.from) {
                return Err(ModelError::UnknownNode(e.from));
            }
            if !m.contains_node(e.to) {
                return Err(ModelError::UnknownNode(e.to));
            }
            m.add_edge(e.label, e.from, e.to);
        }
        for (var, nodes) in repr.val {
            for n in nodes {
                if !m.contains_node(n) {
                    return Err(ModelError::UnknownNode(n));
                }
                m.set_true(var.clone(), n);
            }
        }
        Ok(m)
    }
}

impl Serialize for Model {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ModelRepr::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Model {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = ModelRepr::deserialize(d)?;
        Model::try_from(repr).map_err(serde::de::Error::custom)
    }
}

impl Model {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("model serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Model, ModelError> {
        serde_json::from_str(text).map_err(|e| ModelError::Invalid(e.to_string()))
    }

    /// Graphviz rendering: one digraph, nodes labelled by identifier plus
    /// the variables true there, edges labelled by modality.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph model {\n");
        if let Some(r) = self.root() {
            let _ = writeln!(out, "  // root: {r}");
        }
        for n in self.nodes() {
            let vars: Vec<&str> = self.true_vars(n).collect();
            let label = if vars.is_empty() {
                format!("{n}")
            } else {
                format!("{n}: {}", vars.join(","))
            };
            let _ = writeln!(out, "  n{n} [label=\"{label}\"];");
        }
        for (l, x, y) in self.all_edges() {
            let _ = writeln!(out, "  n{x} -> n{y} [label=\"{l}\"];");
        }
        out.push_str("}\n");
        out
    }
}
