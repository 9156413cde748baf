//! Graph JSON (`{"n": 3, "edges": [[0, 1], [1, 2]], "labels": [...]}`) and
//! DOT output.

use std::collections::HashSet;
use std::fmt::Write;

use serde_json::{json, Value};

use super::Graph;
use crate::error::{Error, Result};

pub fn graph_to_json(g: &Graph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges().into_iter().map(|(u, v)| [u, v]).collect();
    let mut v = json!({"n": g.n(), "edges": edges});
    if let Some(labels) = g.labels() {
        v["labels"] = json!(labels);
    }
    v
}

pub fn graph_from_json(v: &Value) -> Result<Graph> {
    let n = v
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::parse("n", "expected a non-negative integer vertex count"))?
        as usize;
    let edges = v
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::parse("edges", "expected an array of [u, v] pairs"))?;
    let mut g = Graph::empty(n);
    let mut seen = HashSet::new();
    for e in edges {
        let pair = e
            .as_array()
            .filter(|a| a.len() == 2)
            .and_then(|a| Some((a[0].as_u64()? as usize, a[1].as_u64()? as usize)))
            .ok_or_else(|| Error::parse(e.to_string(), "expected [u, v] with integer endpoints"))?;
        let (a, b) = pair;
        if a == b {
            return Err(Error::parse(e.to_string(), "self-loop"));
        }
        if a >= n || b >= n {
            return Err(Error::parse(
                e.to_string(),
                format!("endpoint outside 0..{n}"),
            ));
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(Error::parse(e.to_string(), "duplicate edge"));
        }
        g.insert(a, b);
    }
    match v.get("labels") {
        None | Some(Value::Null) => Ok(g),
        Some(Value::Array(ls)) => {
            let labels = ls
                .iter()
                .map(|l| {
                    l.as_str()
                        .map(str::to_owned)
                        .ok_or_else(|| Error::parse(l.to_string(), "labels must be strings"))
                })
                .collect::<Result<Vec<_>>>()?;
            g.with_labels(labels)
                .map_err(|_| Error::parse("labels", "one label per vertex required"))
        }
        Some(other) => Err(Error::parse(other.to_string(), "labels must be an array")),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| Error::parse("graph JSON", e.to_string()))?;
    graph_from_json(&v)
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT text with vertices in index order. Each annotation becomes a graph
/// attribute line `key="value"`.
pub fn graph_to_dot(g: &Graph, annotations: &[(String, String)]) -> String {
    let mut out = String::from("graph G {\n");
    for (k, v) in annotations {
        let _ = writeln!(out, "  {k}={};", quote(v));
    }
    for v in 0..g.n() {
        match g.labels() {
            Some(l) => {
                let _ = writeln!(out, "  {v} [label={}];", quote(&l[v]));
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_emit_round_trip() {
        let k2 = parse_graph(r#"{"n":2,"edges":[[0,1]]}"#).unwrap();
        assert_eq!(k2, Graph::complete(2));
        let c4 = Graph::cycle(4);
        assert_eq!(graph_from_json(&graph_to_json(&c4)).unwrap(), c4);
    }

    #[test]
    fn errors_name_the_offending_token() {
        let e = parse_graph(r#"{"n":2,"edges":[[0,0]]}"#).unwrap_err();
        assert!(
            e.to_string().contains("[0,0]") && e.to_string().contains("self-loop"),
            "{e}"
        );
        let e = parse_graph(r#"{"n":3,"edges":[[0,1],[1,0]]}"#).unwrap_err();
        assert!(e.to_string().contains("duplicate"));
        assert!(parse_graph("{").is_err());
        assert!(parse_graph(r#"{"n":2,"edges":[[0,5]]}"#).is_err());
    }

    #[test]
    fn dot_is_stable() {
        let dot = graph_to_dot(&Graph::path(3), &[("chordal".into(), "true".into())]);
        assert_eq!(
            dot,
            "graph G {\n  chordal=\"true\";\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n"
        );
    }
}
