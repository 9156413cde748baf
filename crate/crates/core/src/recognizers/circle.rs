//! Exact decision procedure for unit ball graphs on a circle.
//!
//! With the threshold fixed at 1, a graph is realizable on some circle iff
//! for some circumference `c` and some cyclic order of the points the pair
//! conditions hold. For points `x_i <= x_j` in `[0, c)`, `d <= 1` iff
//! `x_j - x_i <= 1` (direct) or `x_j - x_i >= c - 1` (around). Fixing the
//! cyclic order and, for every point, how far its direct neighbours reach
//! turns each case into difference constraints in `x` and `c`.

use num_traits::Zero;

use super::constraints::{solve, Constraint};
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::rational::{int, Rational};

/// Largest graph the exhaustive search accepts.
pub const CIRCLE_MAX_N: usize = 8;

/// Positions on a circle realizing a graph at threshold 1.
#[derive(Debug, Clone, PartialEq)]
pub struct CircleRealization {
    pub circumference: Rational,
    /// Arc position of each vertex, in `[0, circumference)`.
    pub positions: Vec<Rational>,
}

/// A realization of `g` as a unit ball graph on a circle (threshold 1), or
/// `None` when no circle and placement produce exactly `g`.
pub fn unit_circular_arc_realization(g: &Graph) -> Result<Option<CircleRealization>> {
    let n = g.n();
    if n > CIRCLE_MAX_N {
        return Err(Error::Capacity {
            what: "circle realization search",
            n,
            cap: CIRCLE_MAX_N,
        });
    }
    if super::is_complete(g) {
        return Ok(Some(CircleRealization {
            circumference: int(4),
            positions: vec![Rational::zero(); n],
        }));
    }
    let mut order = vec![0];
    let mut rest: Vec<usize> = (1..n).collect();
    Ok(search_orders(g, &mut order, &mut rest))
}

fn search_orders(
    g: &Graph,
    order: &mut Vec<usize>,
    rest: &mut Vec<usize>,
) -> Option<CircleRealization> {
    if rest.is_empty() {
        return try_order(g, order);
    }
    for i in 0..rest.len() {
        let v = rest.remove(i);
        order.push(v);
        if let Some(r) = search_orders(g, order, rest) {
            return Some(r);
        }
        order.pop();
        rest.insert(i, v);
    }
    None
}

/// For each position, the admissible last positions reached directly.
/// Non-neighbours further along must be contiguous; when there are none the
/// reach is free.
fn reach_options(g: &Graph, order: &[usize]) -> Option<Vec<Vec<usize>>> {
    let n = order.len();
    let mut options = Vec::with_capacity(n);
    for i in 0..n {
        let far: Vec<usize> = ((i + 1)..n)
            .filter(|&j| !g.has_edge(order[i], order[j]))
            .collect();
        match (far.first(), far.last()) {
            (Some(&f), Some(&l)) => {
                if l - f + 1 != far.len() {
                    return None;
                }
                options.push(vec![f - 1]);
            }
            _ => options.push((i..n).collect()),
        }
    }
    Some(options)
}

fn try_order(g: &Graph, order: &[usize]) -> Option<CircleRealization> {
    let options = reach_options(g, order)?;
    let mut reach = Vec::with_capacity(order.len());
    try_reaches(g, order, &options, &mut reach)
}

/// Reaches are non-decreasing along the order: if `x_j - x_i <= 1` then
/// `x_j - x_k <= 1` for `i < k < j`.
fn try_reaches(
    g: &Graph,
    order: &[usize],
    options: &[Vec<usize>],
    reach: &mut Vec<usize>,
) -> Option<CircleRealization> {
    let i = reach.len();
    if i == order.len() {
        return solve_case(g, order, reach);
    }
    let floor = reach.last().copied().unwrap_or(0).max(i);
    for &t in &options[i] {
        if t < floor {
            continue;
        }
        reach.push(t);
        if let Some(r) = try_reaches(g, order, options, reach) {
            return Some(r);
        }
        reach.pop();
    }
    None
}

fn solve_case(g: &Graph, order: &[usize], reach: &[usize]) -> Option<CircleRealization> {
    let n = order.len();
    let one = int(1);
    let mut cs = Vec::new();
    for p in 0..n.saturating_sub(1) {
        cs.push(Constraint::at_most(p + 1, p, Rational::zero()));
    }
    // x_last - x_first < c
    cs.push(Constraint::below(0, n - 1, Rational::zero()).with_param(int(1)));
    for i in 0..n {
        for j in (i + 1)..n {
            if g.has_edge(order[i], order[j]) {
                if j <= reach[i] {
                    cs.push(Constraint::at_most(i, j, one.clone()));
                } else {
                    cs.push(Constraint::at_most(j, i, one.clone()).with_param(int(-1)));
                }
            } else {
                cs.push(Constraint::below(j, i, -one.clone()));
                cs.push(Constraint::below(i, j, -one.clone()).with_param(int(1)));
            }
        }
    }
    let (c, x) = solve(n, &cs, &Rational::zero())?;
    let base = x[0].clone();
    let mut positions = vec![Rational::zero(); n];
    for (p, &v) in order.iter().enumerate() {
        positions[v] = &x[p] - &base;
    }
    Some(CircleRealization {
        circumference: c,
        positions,
    })
}
