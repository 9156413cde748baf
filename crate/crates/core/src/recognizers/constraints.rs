//! Systems of difference constraints `x_to - x_from <= a + b*c` (or `<`)
//! with one free parameter `c`, solved exactly.

use num_traits::{Signed, Zero};

use crate::rational::{int, rat, Rational};

#[derive(Debug, Clone)]
pub(crate) struct Constraint {
    pub from: usize,
    pub to: usize,
    pub a: Rational,
    pub b: Rational,
    pub strict: bool,
}

impl Constraint {
    pub fn at_most(from: usize, to: usize, a: Rational) -> Self {
        Constraint {
            from,
            to,
            a,
            b: Rational::zero(),
            strict: false,
        }
    }

    pub fn below(from: usize, to: usize, a: Rational) -> Self {
        Constraint {
            from,
            to,
            a,
            b: Rational::zero(),
            strict: true,
        }
    }

    pub fn with_param(mut self, b: Rational) -> Self {
        self.b = b;
        self
    }

    fn weight(&self, c: &Rational) -> (Rational, i64) {
        (&self.a + &self.b * c, if self.strict { -1 } else { 0 })
    }

    fn holds(&self, x: &[Rational], c: &Rational) -> bool {
        let lhs = &x[self.to] - &x[self.from];
        let rhs = &self.a + &self.b * c;
        if self.strict {
            lhs < rhs
        } else {
            lhs <= rhs
        }
    }
}

type Lex = (Rational, i64);

fn add(x: &Lex, y: &Lex) -> Lex {
    (&x.0 + &y.0, x.1 + y.1)
}

enum Outcome {
    /// Potentials `value + count * eps` satisfying every constraint for all
    /// small enough `eps > 0`.
    Feasible(Vec<Lex>),
    /// Indices of the constraints along a negative cycle.
    NegativeCycle(Vec<usize>),
}

/// Bellman–Ford from a virtual source joined to every variable at weight 0,
/// with strict constraints worth an infinitesimal `-eps`.
fn bellman_ford(n: usize, cs: &[Constraint], c: &Rational) -> Outcome {
    let weights: Vec<Lex> = cs.iter().map(|k| k.weight(c)).collect();
    let mut dist: Vec<Lex> = vec![(Rational::zero(), 0); n];
    let mut pred: Vec<Option<usize>> = vec![None; n];
    let mut last = None;
    for _ in 0..=n {
        last = None;
        for (i, k) in cs.iter().enumerate() {
            let cand = add(&dist[k.from], &weights[i]);
            if cand < dist[k.to] {
                dist[k.to] = cand;
                pred[k.to] = Some(i);
                last = Some(k.to);
            }
        }
        if last.is_none() {
            return Outcome::Feasible(dist);
        }
    }
    let mut v = last.expect("still relaxing");
    for _ in 0..n {
        v = cs[pred[v].expect("relaxed vertices have predecessors")].from;
    }
    let start = v;
    let mut cycle = Vec::new();
    loop {
        let i = pred[v].expect("on cycle");
        cycle.push(i);
        v = cs[i].from;
        if v == start {
            break;
        }
    }
    Outcome::NegativeCycle(cycle)
}

#[derive(Debug, Clone)]
struct Bound {
    value: Rational,
    open: bool,
}

/// Finds some `c` in `(c_min, oo)` and a point `x` satisfying all the
/// constraints, or `None` when no such pair exists. Each negative cycle met
/// at a trial `c` is a linear condition on `c` that cuts the search
/// interval, and there are finitely many simple cycles.
pub(crate) fn solve(
    n: usize,
    cs: &[Constraint],
    c_min: &Rational,
) -> Option<(Rational, Vec<Rational>)> {
    let mut lo = Bound {
        value: c_min.clone(),
        open: true,
    };
    let mut hi: Option<Bound> = None;
    loop {
        let c = match &hi {
            None => &lo.value + int(1),
            Some(h) => {
                if h.value < lo.value || (h.value == lo.value && (h.open || lo.open)) {
                    return None;
                }
                (&lo.value + &h.value) * rat(1, 2)
            }
        };
        match bellman_ford(n, cs, &c) {
            Outcome::Feasible(pot) => return Some((c.clone(), realize(cs, &c, &pot)?)),
            Outcome::NegativeCycle(cycle) => {
                let a: Rational = cycle.iter().map(|&i| &cs[i].a).sum();
                let b: Rational = cycle.iter().map(|&i| &cs[i].b).sum();
                let strict = cycle.iter().any(|&i| cs[i].strict);
                // Feasibility needs a + b*c >= 0, strictly if any member is strict.
                if b.is_zero() {
                    return None;
                }
                let root = -a / &b;
                let bound = Bound {
                    value: root,
                    open: strict,
                };
                if b.is_positive() {
                    if bound.value > lo.value || (bound.value == lo.value && bound.open) {
                        lo = bound;
                    }
                } else {
                    let tighter = match &hi {
                        None => true,
                        Some(h) => bound.value < h.value || (bound.value == h.value && bound.open),
                    };
                    if tighter {
                        hi = Some(bound);
                    }
                }
            }
        }
    }
}

/// Turns infinitesimal potentials into rationals by halving `eps` until
/// every constraint holds exactly.
fn realize(cs: &[Constraint], c: &Rational, pot: &[Lex]) -> Option<Vec<Rational>> {
    let mut eps = rat(1, 2);
    for _ in 0..128 {
        let x: Vec<Rational> = pot.iter().map(|(v, k)| v + &eps * int(*k)).collect();
        if cs.iter().all(|k| k.holds(&x, c)) {
            return Some(x);
        }
        eps *= rat(1, 2);
    }
    None
}
