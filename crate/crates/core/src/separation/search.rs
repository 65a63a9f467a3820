//! Reachability over walk states.
//!
//! A state is a vertex together with the mark of the edge by which the walk
//! arrived there. Continuing from a state along an edge makes the vertex a
//! collider exactly when both the arrival and the departure mark are heads,
//! so the collider/noncollider gate can be applied locally.

use std::collections::VecDeque;

use crate::graph::{Dmg, Mark, Move, VertexId, Walk};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy)]
enum Pred {
    Start(VertexId, Move),
    From(usize, Move),
}

fn state(v: VertexId, arrive: Mark) -> usize {
    2 * v.index() + usize::from(arrive == Mark::Head)
}

fn state_vertex(s: usize) -> VertexId {
    VertexId::new(s / 2)
}

pub(crate) struct Search<'a> {
    g: &'a Dmg,
    /// Noncolliders must avoid this set.
    blocked: &'a VertexSet,
    /// Colliders must lie in this set.
    open: VertexSet,
    preds: Vec<Option<Pred>>,
}

impl<'a> Search<'a> {
    /// Walk search given `c`, with colliders restricted to `An(c)`, or to `c`
    /// itself when `strict` is set.
    pub(crate) fn new(g: &'a Dmg, c: &'a VertexSet, strict: bool) -> Self {
        let open = if strict { c.clone() } else { g.ancestors_unchecked(c) };
        Self::with_gates(g, c, open)
    }

    pub(crate) fn with_gates(g: &'a Dmg, blocked: &'a VertexSet, open: VertexSet) -> Self {
        Search { g, blocked, open, preds: vec![None; 2 * g.order()] }
    }

    /// Explores every nontrivial walk leaving `sources` that respects the
    /// gates. Sources inside the blocked set are skipped. Stops early once a
    /// vertex of `stop` is reached with a head.
    pub(crate) fn run(&mut self, sources: &VertexSet, stop: Option<&VertexSet>) -> Option<usize> {
        self.preds.iter_mut().for_each(|p| *p = None);
        let mut queue = VecDeque::new();
        for a in sources.difference(self.blocked).iter() {
            for &m in self.g.moves(a) {
                let s = state(m.next, m.arrive);
                if self.preds[s].is_none() {
                    self.preds[s] = Some(Pred::Start(a, m));
                    if m.arrive == Mark::Head && stop.is_some_and(|t| t.contains(m.next)) {
                        return Some(s);
                    }
                    queue.push_back(s);
                }
            }
        }
        while let Some(s) = queue.pop_front() {
            let v = state_vertex(s);
            let arrived_head = s % 2 == 1;
            for &m in self.g.moves(v) {
                let collider = arrived_head && m.depart == Mark::Head;
                let pass = if collider {
                    self.open.contains(v)
                } else {
                    !self.blocked.contains(v)
                };
                if !pass {
                    continue;
                }
                let t = state(m.next, m.arrive);
                if self.preds[t].is_none() {
                    self.preds[t] = Some(Pred::From(s, m));
                    if m.arrive == Mark::Head && stop.is_some_and(|b| b.contains(m.next)) {
                        return Some(t);
                    }
                    queue.push_back(t);
                }
            }
        }
        None
    }

    /// Vertices reached with a head by the last [`Search::run`].
    pub(crate) fn reached_with_head(&self) -> VertexSet {
        (0..self.g.order())
            .map(VertexId::new)
            .filter(|&v| self.preds[state(v, Mark::Head)].is_some())
            .collect()
    }

    /// Vertices reached under any mark by the last [`Search::run`].
    pub(crate) fn reached(&self) -> VertexSet {
        (0..self.g.order())
            .map(VertexId::new)
            .filter(|&v| {
                self.preds[state(v, Mark::Head)].is_some() || self.preds[state(v, Mark::Tail)].is_some()
            })
            .collect()
    }

    /// Rebuilds the walk that first reached state `s`.
    pub(crate) fn walk_to(&self, mut s: usize) -> Walk {
        let mut steps = Vec::new();
        loop {
            match self.preds[s].expect("state was reached") {
                Pred::From(prev, m) => {
                    steps.push(m);
                    s = prev;
                }
                Pred::Start(a, m) => {
                    steps.push(m);
                    steps.reverse();
                    return Walk::from_steps(a, steps);
                }
            }
        }
    }

}
