use fixedbitset::FixedBitSet;

use super::lexbfs::lexbfs;
use crate::caps::caps;
use crate::error::{Error, Result};
use crate::graphs::{find_induced, Certificate, CertificateKind, Graph, Pattern};

/// Chordality test. `(true, PEO)` or `(false, chordless cycle)`.
pub fn is_chordal(g: &Graph) -> (bool, Certificate) {
    let mut peo = lexbfs(g, None);
    peo.reverse();
    match first_non_simplicial(g, &peo) {
        None => (
            true,
            Certificate::new(CertificateKind::PerfectEliminationOrdering, peo),
        ),
        Some((v, x, y)) => {
            let cycle = chordless_cycle_through(g, v, x, y)
                .or_else(|| any_chordless_cycle(g))
                .expect("a graph without a perfect elimination ordering has a chordless cycle");
            (
                false,
                Certificate::new(CertificateKind::ChordlessCycle(cycle.len()), cycle),
            )
        }
    }
}

/// The first vertex in `order` whose later neighbours are not a clique,
/// with two non-adjacent later neighbours.
fn first_non_simplicial(g: &Graph, order: &[usize]) -> Option<(usize, usize, usize)> {
    let mut later = FixedBitSet::with_capacity(g.n());
    later.insert_range(..);
    for &v in order {
        later.set(v, false);
        let mut nb = g.row(v).clone();
        nb.intersect_with(&later);
        let nb: Vec<usize> = nb.ones().collect();
        for (i, &x) in nb.iter().enumerate() {
            if let Some(&y) = nb[i + 1..].iter().find(|&&y| !g.has_edge(x, y)) {
                return Some((v, x, y));
            }
        }
    }
    None
}

/// `v, x, ..., y` where the tail is a shortest `x`–`y` path avoiding `v` and
/// its other neighbours. Such a cycle is chordless and has length >= 4.
fn chordless_cycle_through(g: &Graph, v: usize, x: usize, y: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut blocked = g.row(v).clone();
    blocked.insert(v);
    blocked.set(x, false);
    blocked.set(y, false);
    let mut parent = vec![usize::MAX; n];
    parent[x] = x;
    let mut queue = std::collections::VecDeque::from([x]);
    while let Some(u) = queue.pop_front() {
        if u == y {
            break;
        }
        for w in g.neighbours(u) {
            if !blocked.contains(w) && parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    if parent[y] == usize::MAX {
        return None;
    }
    let mut tail = vec![y];
    while *tail.last().unwrap() != x {
        tail.push(parent[*tail.last().unwrap()]);
    }
    tail.reverse();
    let mut cycle = vec![v];
    cycle.extend(tail);
    Some(cycle)
}

fn any_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    for v in 0..g.n() {
        let nb: Vec<usize> = g.neighbours(v).collect();
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if !g.has_edge(x, y) {
                    if let Some(c) = chordless_cycle_through(g, v, x, y) {
                        return Some(c);
                    }
                }
            }
        }
    }
    None
}

/// Chordal and free of induced k-suns for `3 <= k <= min(8, n/2)`.
/// Negative certificates are a chordless cycle or a sun.
pub fn is_strongly_chordal(g: &Graph) -> Result<(bool, Certificate)> {
    let cap = caps().exponential;
    if g.n() > cap {
        return Err(Error::Capacity {
            what: "sun search",
            n: g.n(),
            cap,
        });
    }
    let (chordal, cert) = is_chordal(g);
    if !chordal {
        return Ok((false, cert));
    }
    for k in 3..=caps().sun_k.min(g.n() / 2) {
        if let Some(sun) = find_induced(Pattern::Sun(k), g) {
            return Ok((false, sun));
        }
    }
    Ok((true, cert))
}

/// Chordal and free of induced claw, net and 3-sun, checked in that order.
pub fn is_unit_interval(g: &Graph) -> (bool, Certificate) {
    let (chordal, cert) = is_chordal(g);
    if !chordal {
        return (false, cert);
    }
    for p in [Pattern::Claw, Pattern::Net, Pattern::ThreeSun] {
        if let Some(c) = find_induced(p, g) {
            return (false, c);
        }
    }
    (true, cert)
}

pub fn is_complete(g: &Graph) -> bool {
    let n = g.n();
    g.edge_count() == n * n.saturating_sub(1) / 2
}
