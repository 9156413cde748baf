//! The membership table of the four model spaces against five small graphs.

use serde_json::{json, Value};

use crate::graphs::{find_induced, Graph, Pattern};
use crate::rational::{int, rat, Rational};
use crate::recognizers::{is_unit_interval, unit_circular_arc_realization};
use crate::spaces::{LpNorm, PointRef, SpaceModel};
use crate::ubg::{build_ubg, Mode, Realization};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Row {
    Line,
    Circle,
    EuclideanPlane,
    MaxNormPlane,
}

impl Row {
    pub const ALL: [Row; 4] = [
        Row::Line,
        Row::Circle,
        Row::EuclideanPlane,
        Row::MaxNormPlane,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Row::Line => "R",
            Row::Circle => "S1",
            Row::EuclideanPlane => "R2 (L2)",
            Row::MaxNormPlane => "R2 (Linf)",
        }
    }
}

pub const COLUMNS: [Pattern; 5] = [
    Pattern::ChordlessCycle(4),
    Pattern::Claw,
    Pattern::Net,
    Pattern::ThreeSun,
    Pattern::K15,
];

/// What was established for one cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    /// An explicit realization whose unit ball graph is exactly the pattern.
    Realized(Box<Realization>),
    /// The pattern is shown not to be a unit ball graph of the space; the
    /// string says how.
    Rejected(String),
    /// Not attempted.
    OutOfScope,
    /// A check that should have succeeded did not.
    Failed(String),
}

impl Cell {
    pub fn is_ok(&self) -> bool {
        !matches!(self, Cell::Failed(_))
    }

    pub fn to_json(&self) -> Value {
        match self {
            Cell::Realized(r) => {
                json!({"status": "realized", "realization": crate::ubg::io::realization_to_json(r)})
            }
            Cell::Rejected(how) => json!({"status": "rejected", "by": how}),
            Cell::OutOfScope => json!({"status": "out of scope"}),
            Cell::Failed(why) => json!({"status": "failed", "reason": why}),
        }
    }
}

fn p(x: (i64, i64), y: (i64, i64)) -> PointRef {
    PointRef::Plane(rat(x.0, x.1), rat(y.0, y.1))
}

fn plane_points(pattern: Pattern, norm: LpNorm) -> Option<(Vec<PointRef>, Rational)> {
    let z = (0, 1);
    let one = (1, 1);
    let neg = (-1, 1);
    Some(match (norm, pattern) {
        (LpNorm::L2, Pattern::ChordlessCycle(4)) => {
            (vec![p(z, z), p(one, z), p(one, one), p(z, one)], int(1))
        }
        (LpNorm::L2, Pattern::Claw) => (
            vec![p(z, z), p((2, 1), z), p(neg, (17, 10)), p(neg, (-17, 10))],
            int(2),
        ),
        (LpNorm::L2, Pattern::Net) => (
            vec![
                p(z, z),
                p(one, z),
                p((1, 2), (4, 5)),
                p(neg, z),
                p((3, 5), (-9, 10)),
                p((-2, 5), one),
            ],
            int(1),
        ),
        (LpNorm::L2, Pattern::ThreeSun) => (
            vec![
                p(z, z),
                p((1, 10), (-2, 5)),
                p(one, z),
                p((3, 5), (9, 10)),
                p((1, 2), (4, 5)),
                p((-1, 2), (4, 5)),
            ],
            int(1),
        ),
        (LpNorm::L2, Pattern::K15) => (
            vec![
                p(z, z),
                p((99, 100), z),
                p((3, 10), (19, 20)),
                p((-4, 5), (29, 50)),
                p((-4, 5), (-29, 50)),
                p((3, 10), (-19, 20)),
            ],
            int(1),
        ),
        (LpNorm::LInf, Pattern::ChordlessCycle(4)) => {
            (vec![p(one, z), p(z, one), p(neg, z), p(z, neg)], int(1))
        }
        (LpNorm::LInf, Pattern::Claw) => {
            (vec![p(z, z), p(one, one), p(neg, one), p(z, neg)], int(1))
        }
        (LpNorm::LInf, Pattern::Net) => (
            vec![
                p(z, z),
                p(one, z),
                p((1, 2), one),
                p(neg, neg),
                p((11, 10), neg),
                p((-1, 2), (11, 10)),
            ],
            int(1),
        ),
        (LpNorm::LInf, Pattern::ThreeSun) => (
            vec![
                p(z, z),
                p(z, neg),
                p(one, z),
                p((11, 10), z),
                p((1, 2), one),
                p((-1, 2), (1, 10)),
            ],
            int(1),
        ),
        _ => return None,
    })
}

fn verify(space: SpaceModel, points: Vec<PointRef>, delta: Rational, target: &Graph) -> Cell {
    match Realization::new(space, points, delta) {
        Ok(r) if build_ubg(&r, Mode::Closed) == *target => Cell::Realized(Box::new(r)),
        Ok(r) => Cell::Failed(format!(
            "realization gives {:?}",
            build_ubg(&r, Mode::Closed).edges()
        )),
        Err(e) => Cell::Failed(e.to_string()),
    }
}

fn line_cell(g: &Graph) -> Cell {
    let (ok, cert) = is_unit_interval(g);
    if ok {
        Cell::Failed("recognized as unit interval".into())
    } else {
        Cell::Rejected(format!("unit interval recognizer: {}", cert.kind.name()))
    }
}

fn circle_cell(pattern: Pattern, g: &Graph) -> Cell {
    if pattern == Pattern::ChordlessCycle(4) {
        let points = (0..4).map(|i| PointRef::Arc(int(i))).collect();
        return verify(
            SpaceModel::circle(int(4)).expect("positive"),
            points,
            int(1),
            g,
        );
    }
    for forbidden in [Pattern::Claw, Pattern::Net] {
        if find_induced(forbidden, g).is_some() {
            return Cell::Rejected(format!("contains an induced {forbidden}"));
        }
    }
    match unit_circular_arc_realization(g) {
        Ok(None) => Cell::Rejected("exhaustive circle realization search".into()),
        Ok(Some(_)) => Cell::Failed("circle realization found".into()),
        Err(e) => Cell::Failed(e.to_string()),
    }
}

pub fn cell(row: Row, pattern: Pattern) -> Cell {
    let g = pattern.graph();
    match row {
        Row::Line => line_cell(&g),
        Row::Circle => circle_cell(pattern, &g),
        Row::EuclideanPlane | Row::MaxNormPlane => {
            let norm = if row == Row::EuclideanPlane {
                LpNorm::L2
            } else {
                LpNorm::LInf
            };
            match plane_points(pattern, norm) {
                Some((points, delta)) => verify(SpaceModel::plane(norm), points, delta, &g),
                None => Cell::OutOfScope,
            }
        }
    }
}

/// Every cell, row by row.
pub fn table() -> Vec<(Row, Vec<(Pattern, Cell)>)> {
    Row::ALL
        .iter()
        .map(|&row| (row, COLUMNS.iter().map(|&p| (p, cell(row, p))).collect()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euclidean_claw_example() {
        assert!(matches!(
            cell(Row::EuclideanPlane, Pattern::Claw),
            Cell::Realized(_)
        ));
        assert!(matches!(
            cell(Row::Circle, Pattern::Claw),
            Cell::Rejected(_)
        ));
        assert_eq!(cell(Row::MaxNormPlane, Pattern::K15), Cell::OutOfScope);
    }
}
