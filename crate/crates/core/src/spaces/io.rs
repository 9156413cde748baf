//! JSON forms of spaces and points. Rationals are `"num/den"` strings.
//!
//! ```json
//! {"kind": "interval", "length": "10/1"}          // "length": null is the real line
//! {"kind": "circle", "circumference": "4/1"}
//! {"kind": "metric_graph", "vertices": [0, 1], "edges": [[0, 1, "2/1"]]}
//! {"kind": "lp_plane", "p": 1 | 2 | "inf"}
//! ```
//!
//! Points are `{"t": r}`, `{"s": r}`, `{"vertex": id}`,
//! `{"edge": index, "offset": r}` or `{"x": r, "y": r}`.

use serde_json::{json, Map, Value};

use super::{LpNorm, MetricGraph, PointRef, SpaceModel};
use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, Rational};

pub fn rational_value(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn rational_from_value(v: &Value, field: &str) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => parse_rational(&n.to_string()),
        other => Err(Error::parse(
            format!("{field}: {other}"),
            "expected a rational string \"num/den\"",
        )),
    }
}

fn object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::parse(v.to_string(), format!("expected a {what} object")))
}

fn field<'a>(o: &'a Map<String, Value>, name: &str) -> Result<&'a Value> {
    o.get(name)
        .ok_or_else(|| Error::parse(name, "missing field"))
}

fn index(v: &Value, what: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| {
        Error::parse(
            v.to_string(),
            format!("expected a non-negative integer {what}"),
        )
    })
}

pub fn space_to_json(space: &SpaceModel) -> Value {
    match space {
        SpaceModel::Interval { length } => json!({
            "kind": "interval",
            "length": length.as_ref().map(rational_value),
        }),
        SpaceModel::Circle { circumference } => json!({
            "kind": "circle",
            "circumference": rational_value(circumference),
        }),
        SpaceModel::MetricGraph(g) => {
            let ids = g.ids();
            let edges: Vec<Value> = g
                .edges()
                .iter()
                .map(|e| json!([ids[e.u], ids[e.v], rational_value(&e.length)]))
                .collect();
            json!({"kind": "metric_graph", "vertices": ids, "edges": edges})
        }
        SpaceModel::LpPlane { norm } => {
            let p = match norm {
                LpNorm::L1 => json!(1),
                LpNorm::L2 => json!(2),
                LpNorm::LInf => json!("inf"),
            };
            json!({"kind": "lp_plane", "p": p})
        }
    }
}

pub fn space_from_json(v: &Value) -> Result<SpaceModel> {
    let o = object(v, "space")?;
    let kind = field(o, "kind")?;
    match kind.as_str() {
        Some("interval") => match o.get("length") {
            None | Some(Value::Null) => Ok(SpaceModel::real_line()),
            Some(l) => SpaceModel::interval(rational_from_value(l, "length")?),
        },
        Some("circle") => SpaceModel::circle(rational_from_value(
            field(o, "circumference")?,
            "circumference",
        )?),
        Some("metric_graph") => {
            let edges = field(o, "edges")?
                .as_array()
                .ok_or_else(|| Error::parse("edges", "expected an array"))?;
            let mut ids: Vec<u64> = match o.get("vertices") {
                Some(Value::Array(vs)) => vs
                    .iter()
                    .map(|x| index(x, "vertex id"))
                    .collect::<Result<_>>()?,
                Some(other) => {
                    return Err(Error::parse(
                        other.to_string(),
                        "expected an array of vertex ids",
                    ))
                }
                None => Vec::new(),
            };
            let mut triples = Vec::with_capacity(edges.len());
            for e in edges {
                let parts = e
                    .as_array()
                    .filter(|a| a.len() == 3)
                    .ok_or_else(|| Error::parse(e.to_string(), "expected [u, v, \"length\"]"))?;
                triples.push((
                    index(&parts[0], "vertex id")?,
                    index(&parts[1], "vertex id")?,
                    rational_from_value(&parts[2], "length")?,
                ));
            }
            if !o.contains_key("vertices") {
                for (u, v, _) in &triples {
                    for w in [u, v] {
                        if !ids.contains(w) {
                            ids.push(*w);
                        }
                    }
                }
                ids.sort_unstable();
            }
            let position = |id: u64| {
                ids.iter().position(|&x| x == id).ok_or_else(|| {
                    Error::parse(id.to_string(), "edge endpoint is not a listed vertex")
                })
            };
            let edges = triples
                .into_iter()
                .map(|(u, v, l)| Ok((position(u)?, position(v)?, l)))
                .collect::<Result<Vec<_>>>()?;
            Ok(SpaceModel::MetricGraph(MetricGraph::with_ids(ids, edges)?))
        }
        Some("lp_plane") => {
            let p = field(o, "p")?;
            let norm = match p {
                Value::Number(n) if n.as_u64() == Some(1) => LpNorm::L1,
                Value::Number(n) if n.as_u64() == Some(2) => LpNorm::L2,
                Value::String(s) if s == "inf" => LpNorm::LInf,
                other => return Err(Error::parse(other.to_string(), "p must be 1, 2 or \"inf\"")),
            };
            Ok(SpaceModel::plane(norm))
        }
        _ => Err(Error::parse(kind.to_string(), "unknown space kind")),
    }
}

pub fn parse_space(text: &str) -> Result<SpaceModel> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| Error::parse("space JSON", e.to_string()))?;
    space_from_json(&v)
}

pub fn point_to_json(space: &SpaceModel, p: &PointRef) -> Value {
    match p {
        PointRef::Line(t) => json!({"t": rational_value(t)}),
        PointRef::Arc(s) => json!({"s": rational_value(s)}),
        PointRef::Vertex(v) => {
            let id = space.as_metric_graph().map_or(*v as u64, |g| g.ids()[*v]);
            json!({"vertex": id})
        }
        PointRef::OnEdge { edge, offset } => {
            json!({"edge": edge, "offset": rational_value(offset)})
        }
        PointRef::Plane(x, y) => json!({"x": rational_value(x), "y": rational_value(y)}),
    }
}

/// Reads a point and checks that it belongs to `space`.
pub fn point_from_json(space: &SpaceModel, v: &Value) -> Result<PointRef> {
    let o = object(v, "point")?;
    let p = if let Some(t) = o.get("t") {
        PointRef::Line(rational_from_value(t, "t")?)
    } else if let Some(s) = o.get("s") {
        PointRef::Arc(rational_from_value(s, "s")?)
    } else if let Some(id) = o.get("vertex") {
        let id = index(id, "vertex id")?;
        let g = space
            .as_metric_graph()
            .ok_or_else(|| Error::Domain("vertex points need a metric graph".into()))?;
        let v = g
            .index_of_id(id)
            .ok_or_else(|| Error::parse(id.to_string(), "unknown vertex id"))?;
        PointRef::Vertex(v)
    } else if let Some(e) = o.get("edge") {
        let edge = index(e, "edge index")? as usize;
        let offset = rational_from_value(field(o, "offset")?, "offset")?;
        match space.as_metric_graph() {
            Some(g) if edge < g.edge_count() => g.point(edge, offset)?,
            _ => PointRef::OnEdge { edge, offset },
        }
    } else if let (Some(x), Some(y)) = (o.get("x"), o.get("y")) {
        PointRef::Plane(rational_from_value(x, "x")?, rational_from_value(y, "y")?)
    } else {
        return Err(Error::parse(v.to_string(), "unrecognised point"));
    };
    space.validate(&p)?;
    Ok(p)
}
