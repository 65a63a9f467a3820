use std::fmt;
use std::ops::Deref;

use super::{Dmg, Edge, Mark, Move, VertexId};

/// A walk step: the edge taken, its marks at both ends and the vertex reached.
pub type Step = Move;

/// Alternating sequence of vertices and edges, recorded as a start vertex and
/// the steps taken from it. Each step records its orientation, so a directed
/// loop can be traversed either way.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Walk {
    start: VertexId,
    steps: Vec<Step>,
}

impl Walk {
    pub fn trivial(start: VertexId) -> Self {
        Walk { start, steps: Vec::new() }
    }

    pub fn from_steps(start: VertexId, steps: Vec<Step>) -> Self {
        Walk { start, steps }
    }

    pub fn push(&mut self, step: Step) {
        self.steps.push(step);
    }

    pub fn start(&self) -> VertexId {
        self.start
    }

    pub fn end(&self) -> VertexId {
        self.steps.last().map_or(self.start, |s| s.next)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of edges. A walk always has a start vertex, so "empty" is
    /// spelled [`Walk::is_trivial`].
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.steps.is_empty()
    }

    /// The vertex sequence, `len() + 1` entries.
    pub fn vertices(&self) -> Vec<VertexId> {
        std::iter::once(self.start)
            .chain(self.steps.iter().map(|s| s.next))
            .collect()
    }

    /// Checks that every step uses an edge of `g` with marks matching the
    /// edge's orientation.
    pub fn is_valid_in(&self, g: &Dmg) -> bool {
        let mut at = self.start;
        for s in &self.steps {
            if g.check_vertex(at).is_err() || !g.has_edge(s.edge) {
                return false;
            }
            let ok = match s.edge.canonical() {
                Edge::Directed { from, to } => match s.depart {
                    Mark::Tail => at == from && s.next == to && s.arrive == Mark::Head,
                    Mark::Head => at == to && s.next == from && s.arrive == Mark::Tail,
                },
                Edge::Bidirected(a, b) => {
                    s.depart == Mark::Head
                        && s.arrive == Mark::Head
                        && ((at, s.next) == (a, b) || (at, s.next) == (b, a))
                }
            };
            if !ok {
                return false;
            }
            at = s.next;
        }
        true
    }

    /// Whether the vertex at position `i` (strictly inside the walk) has
    /// heads on both adjacent edges.
    pub fn is_collider_at(&self, i: usize) -> bool {
        assert!(i > 0 && i < self.steps.len(), "position {i} is not a non-endpoint");
        self.steps[i - 1].arrive == Mark::Head && self.steps[i].depart == Mark::Head
    }

    /// Non-endpoint positions with their vertices, flagged as colliders.
    pub fn interior(&self) -> impl Iterator<Item = (VertexId, bool)> + '_ {
        (1..self.steps.len()).map(|i| (self.steps[i - 1].next, self.is_collider_at(i)))
    }

    pub fn is_collider_free(&self) -> bool {
        self.interior().all(|(_, c)| !c)
    }

    /// No vertex except the last one repeats, and the last occurs at most
    /// twice.
    pub fn is_route(&self) -> bool {
        let vs = self.vertices();
        let (last, rest) = vs.split_last().expect("walks are nonempty");
        let mut seen = std::collections::HashSet::new();
        for v in rest {
            if v != last && !seen.insert(*v) {
                return false;
            }
        }
        rest.iter().filter(|v| *v == last).count() <= 1
    }

    pub fn display<'a>(&'a self, g: &'a Dmg) -> WalkDisplay<'a> {
        WalkDisplay { walk: self, g }
    }
}

pub struct WalkDisplay<'a> {
    walk: &'a Walk,
    g: &'a Dmg,
}

impl fmt::Display for WalkDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.g.label(self.walk.start))?;
        for s in &self.walk.steps {
            let arrow = match (s.depart, s.arrive) {
                (Mark::Tail, Mark::Head) => "->",
                (Mark::Head, Mark::Tail) => "<-",
                (Mark::Head, Mark::Head) => "<->",
                (Mark::Tail, Mark::Tail) => "--",
            };
            write!(f, " {arrow} {}", self.g.label(s.next))?;
        }
        Ok(())
    }
}

/// A walk known to satisfy [`Walk::is_route`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Route(Walk);

impl Route {
    pub fn new(walk: Walk) -> Option<Self> {
        walk.is_route().then_some(Route(walk))
    }

    pub fn into_walk(self) -> Walk {
        self.0
    }
}

impl Deref for Route {
    type Target = Walk;

    fn deref(&self) -> &Walk {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn step(g: &Dmg, at: &str, to: &str, edge: Edge) -> Step {
        let (a, b) = (g.require(at).unwrap(), g.require(to).unwrap());
        *g.moves(a)
            .iter()
            .find(|m| m.next == b && m.edge == edge.canonical())
            .expect("move exists")
    }

    #[test]
    fn directed_loop_orientations_are_distinct_steps() {
        let g = Dmg::from_edges(&["a"], &["a -> a"]).unwrap();
        let a = g.require("a").unwrap();
        let ms = g.moves(a);
        assert_eq!(ms.len(), 2);
        let fwd = Walk::from_steps(a, vec![ms[0]]);
        let back = Walk::from_steps(a, vec![ms[1]]);
        assert_ne!(fwd, back);
        assert!(fwd.is_valid_in(&g) && back.is_valid_in(&g));
    }

    #[test]
    fn collider_detection_and_display() {
        let g = Dmg::from_edges(&["a", "b", "c"], &["a -> b", "b <-> c"]).unwrap();
        let (a, b, c) = (
            g.require("a").unwrap(),
            g.require("b").unwrap(),
            g.require("c").unwrap(),
        );
        let w = Walk::from_steps(
            a,
            vec![
                step(&g, "a", "b", Edge::directed(a, b)),
                step(&g, "b", "c", Edge::bidirected(b, c)),
            ],
        );
        assert!(w.is_valid_in(&g));
        assert!(w.is_collider_at(1));
        assert!(!w.is_collider_free());
        assert_eq!(w.display(&g).to_string(), "a -> b <-> c");
        assert_eq!(w.vertices(), vec![a, b, c]);
    }

    #[test]
    fn route_condition() {
        let g = Dmg::from_edges(&["a", "b"], &["a -> b", "b -> a", "b -> b"]).unwrap();
        let (a, b) = (g.require("a").unwrap(), g.require("b").unwrap());
        let ab = step(&g, "a", "b", Edge::directed(a, b));
        let bb = step(&g, "b", "b", Edge::directed(b, b));
        let ba = step(&g, "b", "a", Edge::directed(b, a));
        // a → b → b: final vertex twice.
        assert!(Walk::from_steps(a, vec![ab, bb]).is_route());
        // a → b → b → b: final vertex three times.
        assert!(!Walk::from_steps(a, vec![ab, bb, bb]).is_route());
        // a → b → a → b: b repeats before the end and as the end.
        assert!(!Walk::from_steps(a, vec![ab, ba, ab]).is_route());
        // a → b → a: final vertex twice.
        assert!(Walk::from_steps(a, vec![ab, ba]).is_route());
        assert!(Route::new(Walk::trivial(a)).is_some());
    }

    #[test]
    fn invalid_steps_are_rejected() {
        let g = Dmg::from_edges(&["a", "b"], &["a -> b"]).unwrap();
        let (a, b) = (g.require("a").unwrap(), g.require("b").unwrap());
        let wrong = Step { edge: Edge::directed(a, b), depart: Mark::Head, arrive: Mark::Tail, next: b };
        assert!(!Walk::from_steps(a, vec![wrong]).is_valid_in(&g));
    }
}
