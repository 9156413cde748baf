use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::rational::{int, Rational};
use crate::recognizers::constraints::{solve, Constraint};
use crate::recognizers::is_unit_interval;
use crate::recognizers::lexbfs::lexbfs;
use crate::spaces::{PointRef, SpaceModel};
use crate::ubg::{build_ubg, Mode, Realization};

fn is_umbrella(g: &Graph, order: &[usize]) -> bool {
    let n = order.len();
    (0..n).all(|i| {
        ((i + 2)..n).all(|k| {
            !g.has_edge(order[i], order[k])
                || ((i + 1)..k)
                    .all(|j| g.has_edge(order[i], order[j]) && g.has_edge(order[j], order[k]))
        })
    })
}

/// A vertex order in which every edge spans only mutually adjacent vertices
/// (for `u < v < w`, `uw` an edge implies `uv` and `vw` are edges), built per
/// component by three LexBFS sweeps. `None` when the sweeps do not produce
/// one, which happens exactly for graphs that are not unit interval.
pub fn umbrella_ordering(g: &Graph) -> Option<Vec<usize>> {
    let mut out = Vec::with_capacity(g.n());
    for comp in g.components() {
        let h = g.induced(&comp);
        let first = lexbfs(&h, None);
        let second = lexbfs(&h, Some(&first));
        let third = lexbfs(&h, Some(&second));
        if !is_umbrella(&h, &third) {
            return None;
        }
        out.extend(third.into_iter().map(|v| comp[v]));
    }
    Some(out)
}

/// Coordinates on an interval with threshold 1 whose unit ball graph is `g`.
///
/// Components are laid out left to right with gaps of 2. Within a
/// component the coordinates solve the difference constraints of an
/// umbrella ordering exactly; the result is re-checked before returning.
pub fn realize_unit_interval(g: &Graph) -> Result<Realization> {
    let (ok, certificate) = is_unit_interval(g);
    if !ok {
        return Err(Error::NotUnitInterval(certificate));
    }
    let order = umbrella_ordering(g).ok_or_else(|| {
        Error::Internal("unit interval graph without an umbrella ordering".into())
    })?;
    let mut coords = vec![Rational::zero(); g.n()];
    let mut offset = Rational::zero();
    let mut start = 0;
    for comp in g.components() {
        let part = &order[start..start + comp.len()];
        start += comp.len();
        let xs = layout(g, part)?;
        let min = xs.iter().min().expect("components are non-empty").clone();
        for (&v, x) in part.iter().zip(&xs) {
            coords[v] = x - &min + &offset;
        }
        let max = part
            .iter()
            .map(|&v| &coords[v])
            .max()
            .expect("non-empty")
            .clone();
        offset = max + int(2);
    }
    let length = coords.iter().max().cloned().unwrap_or_else(Rational::zero);
    let space = SpaceModel::interval(length)?;
    let r = Realization::new(
        space,
        coords.into_iter().map(PointRef::Line).collect(),
        int(1),
    )?;
    if build_ubg(&r, Mode::Closed) != *g {
        return Err(Error::Internal(
            "unit interval layout does not reproduce the graph".into(),
        ));
    }
    Ok(r)
}

fn layout(g: &Graph, order: &[usize]) -> Result<Vec<Rational>> {
    let n = order.len();
    let mut cs = Vec::new();
    for i in 0..n.saturating_sub(1) {
        cs.push(Constraint::at_most(i + 1, i, Rational::zero()));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if g.has_edge(order[i], order[j]) {
                cs.push(Constraint::at_most(i, j, int(1)));
            } else {
                cs.push(Constraint::below(j, i, int(-1)));
            }
        }
    }
    solve(n, &cs, &Rational::zero())
        .map(|(_, x)| x)
        .ok_or_else(|| Error::Internal("umbrella ordering constraints are infeasible".into()))
}
