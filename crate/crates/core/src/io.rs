//! Plain-text graph, diagram and vineyard files.
//!
//! ```text
//! # graph
//! v a 0
//! v b 1
//! e a b
//! ```
//!
//! Diagram lines are `<kind> <low> <high>` with kind one of `ext0`, `ord0`,
//! `rel1`, `ext1`. A vineyard is a list of diagram blocks separated by lines
//! reading exactly `---`. Blank lines and `#` comments are ignored everywhere.
//! Numbers are written in the shortest form that reads back to the same
//! `f64`.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{validate, ReebGraph};
use crate::persistence::{ExtendedDiagram, PairKind, PersistencePair};
use crate::vineyard::Vineyard;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-comment lines with their 1-based line numbers, split on whitespace.
fn tokens(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let content = line.split('#').next().unwrap_or("").trim();
        (!content.is_empty()).then(|| (i + 1, content.split_whitespace().collect()))
    })
}

fn parse_value(line: usize, s: &str) -> Result<f64> {
    let v: f64 = s
        .parse()
        .map_err(|_| parse_err(line, format!("invalid number `{s}`")))?;
    if !v.is_finite() {
        return Err(parse_err(line, format!("non-finite value `{s}`")));
    }
    Ok(v)
}

pub fn parse_graph(text: &str) -> Result<ReebGraph> {
    let mut vertices: BTreeMap<&str, (usize, f64)> = BTreeMap::new();
    let mut edges = Vec::new();
    for (line, tok) in tokens(text) {
        match tok.as_slice() {
            ["v", id, value] => {
                let value = parse_value(line, value)?;
                if let Some((first, _)) = vertices.insert(id, (line, value)) {
                    return Err(parse_err(
                        line,
                        format!("vertex `{id}` already defined on line {first}"),
                    ));
                }
            }
            ["e", a, b] => edges.push((line, *a, *b)),
            ["v", ..] => return Err(parse_err(line, "expected `v <id> <value>`")),
            ["e", ..] => return Err(parse_err(line, "expected `e <id> <id>`")),
            [tag, ..] => return Err(parse_err(line, format!("unknown line tag `{tag}`"))),
            [] => unreachable!(),
        }
    }
    let mut graph = ReebGraph::new();
    for (id, (_, value)) in &vertices {
        graph.add_vertex(*id, *value);
    }
    for (line, a, b) in edges {
        for id in [a, b] {
            if !vertices.contains_key(id) {
                return Err(parse_err(line, format!("unknown endpoint {id}")));
            }
        }
        graph.add_edge(a, b);
    }
    let report = validate(&graph);
    if !report.is_valid() {
        return Err(Error::InvalidGraph(report));
    }
    Ok(graph)
}

pub fn serialize_graph(graph: &ReebGraph) -> String {
    let mut out = String::new();
    for (id, value) in graph.vertices() {
        writeln!(out, "v {id} {value}").unwrap();
    }
    for (a, b, m) in graph.edges() {
        for _ in 0..m {
            writeln!(out, "e {a} {b}").unwrap();
        }
    }
    out
}

fn parse_pair(line: usize, tok: &[&str]) -> Result<PersistencePair> {
    let [kind, low, high] = tok else {
        return Err(parse_err(line, "expected `<kind> <low> <high>`"));
    };
    let kind: PairKind = kind.parse().map_err(|m: String| parse_err(line, m))?;
    let (low, high) = (parse_value(line, low)?, parse_value(line, high)?);
    if low >= high {
        return Err(parse_err(line, format!("low {low} is not below high {high}")));
    }
    Ok(PersistencePair::new(kind, low, high))
}

pub fn parse_diagram(text: &str) -> Result<ExtendedDiagram> {
    let mut d = ExtendedDiagram::new();
    for (line, tok) in tokens(text) {
        d.push(parse_pair(line, &tok)?);
    }
    Ok(d)
}

pub fn serialize_diagram(diagram: &ExtendedDiagram) -> String {
    let mut out = String::new();
    for p in diagram.sorted().pairs {
        writeln!(out, "{} {} {}", p.kind, p.low, p.high).unwrap();
    }
    out
}

pub fn parse_vineyard(text: &str) -> Result<Vineyard> {
    let mut diagrams = vec![ExtendedDiagram::new()];
    for (i, raw) in text.lines().enumerate() {
        if raw.trim() == "---" {
            diagrams.push(ExtendedDiagram::new());
            continue;
        }
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tok: Vec<&str> = content.split_whitespace().collect();
        diagrams
            .last_mut()
            .expect("at least one block")
            .push(parse_pair(i + 1, &tok)?);
    }
    Ok(Vineyard::new(diagrams))
}

pub fn serialize_vineyard(vineyard: &Vineyard) -> String {
    vineyard
        .diagrams
        .iter()
        .map(serialize_diagram)
        .collect::<Vec<_>>()
        .join("---\n")
}
