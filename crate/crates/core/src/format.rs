//! JSON graph documents and DOT export.
//!
//! A graph document lists vertex labels and edges by label:
//!
//! ```json
//! {
//!   "comment": "optional free text",
//!   "nodes": ["a", "b"],
//!   "directed": [["a", "b"], ["b", "b"]],
//!   "bidirected": [["a", "b"]]
//! }
//! ```
//!
//! A DMEG document has the same shape, with a status of `"solid"` or
//! `"dashed"` as the third element of every edge. Canonical output keeps the
//! node order, sorts bidirected pairs and sorts edges by node position.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::equivalence::{is_maximal, Dmeg};
use crate::error::DmgError;
use crate::graph::{Dmg, Edge};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },

    #[error(transparent)]
    Graph(#[from] DmgError),

    #[error("loop {0} cannot be dashed")]
    DashedLoop(String),
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Syntax { line: e.line(), column: e.column(), message: e.to_string() }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
    pub nodes: Vec<String>,
    #[serde(default)]
    pub directed: Vec<(String, String)>,
    #[serde(default)]
    pub bidirected: Vec<(String, String)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeStatus {
    Solid,
    Dashed,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DmegDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
    pub nodes: Vec<String>,
    #[serde(default)]
    pub directed: Vec<(String, String, EdgeStatus)>,
    #[serde(default)]
    pub bidirected: Vec<(String, String, EdgeStatus)>,
}

fn pair(g: &Dmg, e: Edge) -> (String, String) {
    let (a, b) = e.endpoints();
    (g.label(a).to_owned(), g.label(b).to_owned())
}

impl GraphDocument {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_graph(g: &Dmg) -> Self {
        GraphDocument {
            comment: None,
            nodes: g.labels().to_vec(),
            directed: g.edges().filter(|e| e.is_directed()).map(|e| pair(g, e)).collect(),
            bidirected: g.edges().filter(|e| !e.is_directed()).map(|e| pair(g, e)).collect(),
        }
    }

    /// Validates labels and edges; duplicate edges are errors.
    pub fn to_graph(&self) -> Result<Dmg, FormatError> {
        let labels: Vec<&str> = self.nodes.iter().map(String::as_str).collect();
        let directed: Vec<(&str, &str)> = self.directed.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        let bidirected: Vec<(&str, &str)> =
            self.bidirected.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        Ok(Dmg::from_label_edges(&labels, &directed, &bidirected)?)
    }

    /// Same graph and comment, in canonical order.
    pub fn canonicalize(&self) -> Result<Self, FormatError> {
        let mut doc = Self::from_graph(&self.to_graph()?);
        doc.comment = self.comment.clone();
        Ok(doc)
    }

    /// Pretty JSON with one edge per line.
    pub fn to_json(&self) -> String {
        let edges = |list: &[(String, String)]| -> Vec<String> {
            list.iter().map(|(a, b)| format!("[{}, {}]", quote(a), quote(b))).collect()
        };
        write_document(&self.comment, &self.nodes, &edges(&self.directed), &edges(&self.bidirected))
    }
}

impl DmegDocument {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_dmeg(d: &Dmeg) -> Self {
        let g = &d.maximal;
        let status = |e: Edge| if d.dashed.contains(&e) { EdgeStatus::Dashed } else { EdgeStatus::Solid };
        let entry = |e: Edge| {
            let (a, b) = pair(g, e);
            (a, b, status(e))
        };
        DmegDocument {
            comment: None,
            nodes: g.labels().to_vec(),
            directed: g.edges().filter(|e| e.is_directed()).map(entry).collect(),
            bidirected: g.edges().filter(|e| !e.is_directed()).map(entry).collect(),
        }
    }

    pub fn graph_document(&self) -> GraphDocument {
        let strip = |list: &[(String, String, EdgeStatus)]| list.iter().map(|(a, b, _)| (a.clone(), b.clone())).collect();
        GraphDocument {
            comment: self.comment.clone(),
            nodes: self.nodes.clone(),
            directed: strip(&self.directed),
            bidirected: strip(&self.bidirected),
        }
    }

    /// Rebuilds the DMEG, checking that the graph is maximal and that no
    /// loop is dashed. The dashed marks are taken as given.
    pub fn to_dmeg(&self, cap: usize) -> Result<Dmeg, FormatError> {
        let g = self.graph_document().to_graph()?;
        if !is_maximal(&g, cap)? {
            return Err(DmgError::NotMaximal.into());
        }
        let mut dashed = BTreeSet::new();
        let marked = self
            .directed
            .iter()
            .map(|(a, b, s)| (format!("{a} -> {b}"), s))
            .chain(self.bidirected.iter().map(|(a, b, s)| (format!("{a} <-> {b}"), s)));
        for (spec, status) in marked {
            let e = g.parse_edge(&spec)?.canonical();
            if *status == EdgeStatus::Dashed {
                if e.is_loop() {
                    return Err(FormatError::DashedLoop(spec));
                }
                dashed.insert(e);
            }
        }
        Ok(Dmeg { maximal: g, dashed })
    }

    pub fn to_json(&self) -> String {
        let edges = |list: &[(String, String, EdgeStatus)]| -> Vec<String> {
            list.iter()
                .map(|(a, b, s)| {
                    let status = match s {
                        EdgeStatus::Solid => "solid",
                        EdgeStatus::Dashed => "dashed",
                    };
                    format!("[{}, {}, {}]", quote(a), quote(b), quote(status))
                })
                .collect()
        };
        write_document(&self.comment, &self.nodes, &edges(&self.directed), &edges(&self.bidirected))
    }
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn write_document(comment: &Option<String>, nodes: &[String], directed: &[String], bidirected: &[String]) -> String {
    let mut out = String::from("{\n");
    if let Some(c) = comment {
        let _ = writeln!(out, "  \"comment\": {},", quote(c));
    }
    let nodes: Vec<String> = nodes.iter().map(|n| quote(n)).collect();
    let _ = writeln!(out, "  \"nodes\": [{}],", nodes.join(", "));
    let list = |items: &[String]| {
        if items.is_empty() {
            "[]".to_owned()
        } else {
            format!("[\n    {}\n  ]", items.join(",\n    "))
        }
    };
    let _ = writeln!(out, "  \"directed\": {},", list(directed));
    let _ = writeln!(out, "  \"bidirected\": {}", list(bidirected));
    out.push_str("}\n");
    out
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn write_dot(g: &Dmg, dashed: &BTreeSet<Edge>) -> String {
    let mut out = String::from("digraph {\n");
    for l in g.labels() {
        let _ = writeln!(out, "  {};", dot_id(l));
    }
    for e in g.edges() {
        let (a, b) = e.endpoints();
        let mut attrs = Vec::new();
        if !e.is_directed() {
            attrs.push("dir=both");
        }
        if dashed.contains(&e) {
            attrs.push("style=dashed");
        }
        let attrs = if attrs.is_empty() { String::new() } else { format!(" [{}]", attrs.join(", ")) };
        let _ = writeln!(out, "  {} -> {}{};", dot_id(g.label(a)), dot_id(g.label(b)), attrs);
    }
    out.push_str("}\n");
    out
}

/// Graphviz DOT text. Bidirected edges are drawn with arrowheads at both
/// ends.
pub fn export_dot(g: &Dmg) -> String {
    write_dot(g, &BTreeSet::new())
}

/// Like [`export_dot`], with dashed edges styled as such.
pub fn export_dmeg_dot(d: &Dmeg) -> String {
    write_dot(&d.maximal, &d.dashed)
}
