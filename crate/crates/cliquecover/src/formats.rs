//! Text and JSON file formats for graphs, rooted orientations, layered
//! graphs and residue-class systems.
//!
//! Readers accept either form; a document whose first non-blank character
//! is `{` is parsed as JSON.

use std::str::FromStr;

use cliquecover_core::construct::{build_with_skeleton, LayeredGraph, VertexLabel};
use cliquecover_core::covers::{CoveringSystem, ResidueClass};
use cliquecover_core::orientation::RootedDag;
use cliquecover_core::{Graph, Limits};
use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Invalid(#[from] cliquecover_core::Error),
    #[error("{0}")]
    Mismatch(String),
}

type Result<T> = std::result::Result<T, FormatError>;

fn looks_like_json(s: &str) -> bool {
    s.trim_start().starts_with('{')
}

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_field<T: FromStr>(line: usize, token: Option<&str>, what: &str) -> Result<T> {
    let token = token.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| syntax(line, format!("bad {what} {token:?}")))
}

// Graphs

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

/// `graph <n>` followed by `e <u> <v>` lines, edges in ascending order.
pub fn graph_to_text(g: &Graph) -> String {
    let mut out = format!("graph {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

pub fn parse_graph(s: &str) -> Result<Graph> {
    if looks_like_json(s) {
        let j: GraphJson = serde_json::from_str(s)?;
        return Ok(Graph::from_edges(j.n, j.edges.iter().map(|e| (e[0], e[1])))?);
    }
    let mut lines = content_lines(s);
    let (first, header) = lines.next().ok_or_else(|| syntax(1, "empty graph file"))?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("graph") {
        return Err(syntax(first, "expected `graph <n>`"));
    }
    let n: usize = parse_field(first, tokens.next(), "vertex count")?;
    if tokens.next().is_some() {
        return Err(syntax(first, "trailing tokens"));
    }
    let mut edges = Vec::new();
    for (line, text) in lines {
        let mut tokens = text.split_whitespace();
        if tokens.next() != Some("e") {
            return Err(syntax(line, "expected `e <u> <v>`"));
        }
        let u: usize = parse_field(line, tokens.next(), "vertex")?;
        let v: usize = parse_field(line, tokens.next(), "vertex")?;
        if tokens.next().is_some() {
            return Err(syntax(line, "trailing tokens"));
        }
        edges.push((u, v));
    }
    Ok(Graph::from_edges(n, edges)?)
}

// Rooted orientations

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DagJson {
    pub n: usize,
    pub root: usize,
    pub arcs: Vec<[usize; 2]>,
    /// Longest-path level of every vertex.
    pub l: Vec<usize>,
}

impl From<&RootedDag> for DagJson {
    fn from(d: &RootedDag) -> Self {
        DagJson {
            n: d.n(),
            root: d.root(),
            arcs: d.arcs().map(|(u, v)| [u, v]).collect(),
            l: d.levels().to_vec(),
        }
    }
}

impl DagJson {
    /// Rebuilds the dag (the base graph is the underlying undirected graph
    /// of the arcs) and checks the stored levels against recomputed ones.
    pub fn into_dag(self) -> Result<RootedDag> {
        let arcs: Vec<(usize, usize)> = self.arcs.iter().map(|a| (a[0], a[1])).collect();
        let base = Graph::from_edges(self.n, arcs.iter().map(|&(u, v)| (u.min(v), u.max(v))))?;
        let dag = RootedDag::from_arcs(base, self.root, &arcs)?;
        if dag.levels() != self.l.as_slice() {
            return Err(FormatError::Mismatch(format!(
                "stored levels {:?} differ from recomputed {:?}",
                self.l,
                dag.levels()
            )));
        }
        Ok(dag)
    }
}

pub fn parse_dag(s: &str) -> Result<RootedDag> {
    serde_json::from_str::<DagJson>(s)?.into_dag()
}

// Layered graphs

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LayeredJson {
    pub m: usize,
    pub k: usize,
    pub skeleton: DagJson,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    /// `[host, copy, inner]` per vertex; `inner` is null for `x_0`.
    pub labels: Vec<(usize, usize, Option<usize>)>,
}

impl From<&LayeredGraph> for LayeredJson {
    fn from(lg: &LayeredGraph) -> Self {
        LayeredJson {
            m: lg.m(),
            k: lg.k(),
            skeleton: lg.skeleton().into(),
            n: lg.graph().n(),
            edges: lg.graph().edges().map(|(u, v)| [u, v]).collect(),
            labels: lg.labels().iter().map(|l| (l.host, l.copy, l.inner)).collect(),
        }
    }
}

/// Loads a layered graph by rebuilding it from `m`, `k` and the skeleton and
/// requiring the stored edges and labels to match the rebuild.
pub fn parse_layered(s: &str, limits: &Limits) -> Result<LayeredGraph> {
    let j: LayeredJson = serde_json::from_str(s)?;
    let lg = build_with_skeleton(j.m, j.k, j.skeleton.into_dag()?, limits)?;
    let stored = GraphJson {
        n: j.n,
        edges: j.edges,
    };
    let rebuilt = GraphJson::from(lg.graph());
    if stored.n != rebuilt.n || stored.edges != rebuilt.edges {
        return Err(FormatError::Mismatch("edge list differs from the rebuilt graph".into()));
    }
    let labels: Vec<VertexLabel> = j
        .labels
        .iter()
        .map(|&(host, copy, inner)| VertexLabel { host, copy, inner })
        .collect();
    if labels != lg.labels() {
        return Err(FormatError::Mismatch("label table differs from the rebuilt graph".into()));
    }
    Ok(lg)
}

// Residue-class systems

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassJson {
    pub a: String,
    pub n: String,
}

/// Extra top-level keys (such as a completion's `N` and `added`) are
/// ignored on read.
#[derive(Debug, Serialize, Deserialize)]
pub struct SystemJson {
    pub classes: Vec<ClassJson>,
}

impl From<&CoveringSystem> for SystemJson {
    fn from(sys: &CoveringSystem) -> Self {
        SystemJson {
            classes: sys
                .classes()
                .iter()
                .map(|c| ClassJson {
                    a: c.residue().to_string(),
                    n: c.modulus().to_string(),
                })
                .collect(),
        }
    }
}

/// One `<a> <n>` line per class.
pub fn system_to_text(sys: &CoveringSystem) -> String {
    sys.classes()
        .iter()
        .map(|c| format!("{} {}\n", c.residue(), c.modulus()))
        .collect()
}

fn class(line: usize, a: &str, n: &str) -> Result<ResidueClass> {
    let a: BigInt = a.parse().map_err(|_| syntax(line, format!("bad residue {a:?}")))?;
    let n: BigUint = n.parse().map_err(|_| syntax(line, format!("bad modulus {n:?}")))?;
    Ok(ResidueClass::new(a, n)?)
}

pub fn parse_system(s: &str) -> Result<CoveringSystem> {
    if looks_like_json(s) {
        let j: SystemJson = serde_json::from_str(s)?;
        let classes = j
            .classes
            .iter()
            .enumerate()
            .map(|(i, c)| class(i + 1, &c.a, &c.n))
            .collect::<Result<Vec<_>>>()?;
        return Ok(CoveringSystem::new(classes));
    }
    let mut classes = Vec::new();
    for (line, text) in content_lines(s) {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let [a, n] = tokens[..] else {
            return Err(syntax(line, "expected `<a> <n>`"));
        };
        classes.push(class(line, a, n)?);
    }
    Ok(CoveringSystem::new(classes))
}

/// Choi's exact 2-cover with period 30, in the text format.
pub const CHOI: &str = include_str!("../fixtures/choi.txt");

#[cfg(test)]
mod tests {
    use super::*;
    use cliquecover_core::construct::{build, default_skeleton};

    #[test]
    fn graph_text_round_trip() {
        let g = Graph::cycle(5);
        let text = graph_to_text(&g);
        assert_eq!(text, "graph 5\ne 0 1\ne 0 4\ne 1 2\ne 2 3\ne 3 4\n");
        assert_eq!(parse_graph(&text).unwrap(), g);
        let json = serde_json::to_string(&GraphJson::from(&g)).unwrap();
        assert_eq!(parse_graph(&json).unwrap(), g);
    }

    #[test]
    fn graph_text_errors() {
        assert!(parse_graph("").is_err());
        assert!(parse_graph("graph 2\ne 0 2\n").is_err());
        assert!(parse_graph("graph 2\nx 0 1\n").is_err());
        assert!(parse_graph("graph 2\ne 0\n").is_err());
        let g = parse_graph("# triangle\ngraph 3\n\ne 0 1\n# skip\ne 1 2\ne 0 2\n").unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn dag_round_trip_and_tamper() {
        let d = default_skeleton(2).unwrap();
        let j = serde_json::to_string(&DagJson::from(&d)).unwrap();
        assert_eq!(parse_dag(&j).unwrap(), d);
        let mut bad = DagJson::from(&d);
        bad.l[1] += 1;
        assert!(matches!(bad.into_dag(), Err(FormatError::Mismatch(_))));
    }

    #[test]
    fn layered_round_trip_and_tamper() {
        let l = Limits::default();
        let lg = build(2, 2, &l).unwrap();
        let j = serde_json::to_string(&LayeredJson::from(&lg)).unwrap();
        assert_eq!(parse_layered(&j, &l).unwrap(), lg);
        let mut bad = LayeredJson::from(&lg);
        bad.edges.pop();
        let j = serde_json::to_string(&bad).unwrap();
        assert!(matches!(parse_layered(&j, &l), Err(FormatError::Mismatch(_))));
    }

    #[test]
    fn system_formats() {
        let sys = parse_system(CHOI).unwrap();
        assert_eq!(sys.len(), 19);
        assert_eq!(parse_system(&system_to_text(&sys)).unwrap(), sys);
        let j = serde_json::to_string(&SystemJson::from(&sys)).unwrap();
        assert_eq!(parse_system(&j).unwrap(), sys);
        let big = parse_system("-1 100000000000000000000000000000\n").unwrap();
        assert_eq!(big.classes()[0].residue().to_string(), "99999999999999999999999999999");
        assert!(parse_system("1 0\n").is_err());
        assert!(parse_system("1\n").is_err());
        assert!(parse_system("{\"classes\":[{\"a\":\"x\",\"n\":\"2\"}]}").is_err());
    }
}
