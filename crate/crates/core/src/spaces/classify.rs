use super::{MetricGraph, Piece, PointRef, TreePath};
use crate::error::Result;
use crate::rational::rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpaceKind {
    IntervalLike,
    CircleLike,
    TreeWithTripod,
    CyclicWithTripod,
}

/// Three segments from leaves `x_i` to a common center, meeting pairwise
/// only at the center.
#[derive(Debug, Clone, PartialEq)]
pub struct Tripod {
    pub center: PointRef,
    pub legs: [TreePath; 3],
}

impl Tripod {
    pub fn leaves(&self) -> [&PointRef; 3] {
        [
            self.legs[0].start(),
            self.legs[1].start(),
            self.legs[2].start(),
        ]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpaceClass {
    pub kind: SpaceKind,
    pub tripod: Option<Tripod>,
}

/// Classifies a connected metric graph by its topology. For the tripod
/// kinds the legs run along the edges at the first vertex of degree at
/// least three: whole edges on a tree, half edges otherwise.
pub fn classify_space(g: &MetricGraph) -> Result<SpaceClass> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let max_degree = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
    let acyclic = g.is_acyclic();
    if acyclic && max_degree <= 2 {
        return Ok(SpaceClass {
            kind: SpaceKind::IntervalLike,
            tripod: None,
        });
    }
    if m == n && (0..n).all(|v| g.degree(v) == 2) {
        return Ok(SpaceClass {
            kind: SpaceKind::CircleLike,
            tripod: None,
        });
    }
    let hub = (0..n)
        .find(|&v| g.degree(v) >= 3)
        .expect("a connected graph that is neither a path nor a cycle has a branch vertex");
    let legs: Vec<TreePath> = g.incident(hub)[..3]
        .iter()
        .map(|&e| {
            let edge = g.edge(e);
            let at_hub = edge.offset_of(hub);
            let far = edge.offset_of(edge.other(hub));
            let from = if acyclic {
                far
            } else {
                (&far + &at_hub) * rat(1, 2)
            };
            TreePath::along(
                g,
                vec![Piece {
                    edge: e,
                    from,
                    to: at_hub,
                }],
            )
        })
        .collect::<Result<_>>()?;
    let legs: [TreePath; 3] = legs.try_into().expect("three legs");
    Ok(SpaceClass {
        kind: if acyclic {
            SpaceKind::TreeWithTripod
        } else {
            SpaceKind::CyclicWithTripod
        },
        tripod: Some(Tripod {
            center: PointRef::Vertex(hub),
            legs,
        }),
    })
}
