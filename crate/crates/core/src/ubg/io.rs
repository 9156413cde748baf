//! `{"space": {...}, "delta": "num/den", "points": [{"vertex": 0, "at": {...}}, ...]}`

use serde_json::{json, Value};

use super::Realization;
use crate::error::{Error, Result};
use crate::spaces::io::{
    point_from_json, point_to_json, rational_from_value, rational_value, space_from_json,
    space_to_json,
};
use crate::spaces::{PointRef, SpaceModel};

pub fn realization_to_json(r: &Realization) -> Value {
    let points: Vec<Value> = r
        .points()
        .iter()
        .enumerate()
        .map(|(i, p)| json!({"vertex": i, "at": point_to_json(r.space(), p)}))
        .collect();
    json!({
        "space": space_to_json(r.space()),
        "delta": rational_value(r.delta()),
        "points": points,
    })
}

/// Reads a point list: either bare points (vertex `i` is the `i`-th) or
/// `{"vertex": i, "at": point}` entries covering `0..n` exactly once.
pub fn points_from_json(space: &SpaceModel, v: &Value) -> Result<Vec<PointRef>> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::parse("points", "expected an array"))?;
    let mut slots: Vec<Option<PointRef>> = vec![None; items.len()];
    for (i, item) in items.iter().enumerate() {
        let (vertex, at) = match item.get("at") {
            Some(at) => {
                let id = item.get("vertex").and_then(Value::as_u64).ok_or_else(|| {
                    Error::parse(item.to_string(), "expected an integer \"vertex\"")
                })? as usize;
                (id, at)
            }
            None => (i, item),
        };
        if vertex >= slots.len() || slots[vertex].is_some() {
            return Err(Error::parse(
                item.to_string(),
                "vertex ids must be 0..n, each once",
            ));
        }
        slots[vertex] = Some(point_from_json(space, at)?);
    }
    Ok(slots
        .into_iter()
        .map(|p| p.expect("all slots filled"))
        .collect())
}

pub fn realization_from_json(v: &Value) -> Result<Realization> {
    let space = space_from_json(
        v.get("space")
            .ok_or_else(|| Error::parse("space", "missing field"))?,
    )?;
    let delta = rational_from_value(
        v.get("delta")
            .ok_or_else(|| Error::parse("delta", "missing field"))?,
        "delta",
    )?;
    let points = points_from_json(
        &space,
        v.get("points")
            .ok_or_else(|| Error::parse("points", "missing field"))?,
    )?;
    Realization::new(space, points, delta)
}

pub fn parse_realization(text: &str) -> Result<Realization> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| Error::parse("realization JSON", e.to_string()))?;
    realization_from_json(&v)
}
