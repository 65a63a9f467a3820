use crate::error::{DmgError, Result};
use crate::graph::{Dmg, Route, Step, VertexId, Walk};

/// Default bound on the number of vertices for route enumeration.
pub const ROUTE_CAP: usize = 8;

struct Frame {
    vertex: VertexId,
    next_move: usize,
}

/// Depth-first enumeration of the nontrivial routes from one vertex to
/// another.
///
/// Every vertex except the target is visited at most once. The target may be
/// passed through once and then reached again, which ends the route. Both
/// orientations of a directed loop are separate steps.
pub struct RouteIterator<'g> {
    g: &'g Dmg,
    source: VertexId,
    target: VertexId,
    stack: Vec<Frame>,
    steps: Vec<Step>,
    on_walk: Vec<bool>,
}

impl<'g> RouteIterator<'g> {
    fn new(g: &'g Dmg, source: VertexId, target: VertexId) -> Self {
        let mut on_walk = vec![false; g.order()];
        on_walk[source.index()] = true;
        RouteIterator {
            g,
            source,
            target,
            stack: vec![Frame { vertex: source, next_move: 0 }],
            steps: Vec::new(),
            on_walk,
        }
    }

    fn current(&self) -> Walk {
        Walk::from_steps(self.source, self.steps.clone())
    }
}

impl Iterator for RouteIterator<'_> {
    type Item = Route;

    fn next(&mut self) -> Option<Route> {
        loop {
            let frame = self.stack.last_mut()?;
            let moves = self.g.moves(frame.vertex);
            if frame.next_move == moves.len() {
                let done = self.stack.pop().expect("frame exists");
                if !self.stack.is_empty() {
                    self.steps.pop();
                    self.on_walk[done.vertex.index()] = false;
                }
                continue;
            }
            let m = moves[frame.next_move];
            frame.next_move += 1;
            let w = m.next;
            if w == self.target {
                self.steps.push(m);
                let route = self.current();
                if self.on_walk[w.index()] {
                    // Second visit to the target ends the route.
                    self.steps.pop();
                } else {
                    self.on_walk[w.index()] = true;
                    self.stack.push(Frame { vertex: w, next_move: 0 });
                }
                return Some(Route::new(route).expect("enumeration yields routes"));
            }
            if !self.on_walk[w.index()] {
                self.on_walk[w.index()] = true;
                self.steps.push(m);
                self.stack.push(Frame { vertex: w, next_move: 0 });
            }
        }
    }
}

/// All nontrivial routes from `alpha` to `beta`. Fails for graphs with more
/// than `cap` vertices.
pub fn enumerate_routes(g: &Dmg, alpha: VertexId, beta: VertexId, cap: usize) -> Result<RouteIterator<'_>> {
    g.check_vertex(alpha)?;
    g.check_vertex(beta)?;
    if g.order() > cap {
        return Err(DmgError::CapExceeded { what: "route enumeration vertices", limit: cap, required: g.order() });
    }
    Ok(RouteIterator::new(g, alpha, beta))
}

/// Whether a route is a path (all vertices distinct) or a cycle (only the
/// two ends coincide).
pub(crate) fn is_path_or_cycle(r: &Walk) -> bool {
    let vs = r.vertices();
    let (last, init) = vs.split_last().expect("walks are nonempty");
    let interior_hits = init[1..].iter().filter(|v| *v == last).count();
    interior_hits == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn routes(g: &Dmg, a: &str, b: &str) -> Vec<String> {
        let (a, b) = (g.require(a).unwrap(), g.require(b).unwrap());
        let mut out: Vec<String> = enumerate_routes(g, a, b, ROUTE_CAP)
            .unwrap()
            .map(|r| r.display(g).to_string())
            .collect();
        out.sort();
        out
    }

    /// Counts routes by recursion over explicit vertex-visit counts.
    fn count_recursive(g: &Dmg, v: VertexId, target: VertexId, counts: &mut Vec<u8>) -> usize {
        let mut total = 0;
        for m in g.moves(v) {
            let w = m.next;
            if w == target {
                total += 1;
                if counts[w.index()] == 0 {
                    counts[w.index()] += 1;
                    total += count_recursive(g, w, target, counts);
                    counts[w.index()] -= 1;
                }
            } else if counts[w.index()] == 0 {
                counts[w.index()] += 1;
                total += count_recursive(g, w, target, counts);
                counts[w.index()] -= 1;
            }
        }
        total
    }

    #[test]
    fn single_edge() {
        let g = Dmg::from_edges(&["α", "β"], &["α -> β"]).unwrap();
        assert_eq!(routes(&g, "α", "β"), vec!["α -> β"]);
    }

    #[test]
    fn repeated_final_vertex() {
        let g = Dmg::from_edges(&["α", "β", "γ"], &["β -> α", "γ -> β"]).unwrap();
        assert_eq!(routes(&g, "α", "β"), vec!["α <- β", "α <- β <- γ -> β"]);
    }

    #[test]
    fn edgeless_graph_has_no_routes() {
        let g = Dmg::new(["α", "β"]).unwrap();
        assert!(routes(&g, "α", "β").is_empty());
        assert!(routes(&g, "α", "α").is_empty());
    }

    #[test]
    fn loops_give_two_orientations() {
        let g = Dmg::from_edges(&["a", "b"], &["a -> b", "b -> b"]).unwrap();
        assert_eq!(routes(&g, "a", "b"), vec!["a -> b", "a -> b -> b", "a -> b <- b"]);
    }

    #[test]
    fn counts_match_recursion_and_are_duplicate_free() {
        let g = Dmg::from_edges(
            &["a", "b", "c", "d"],
            &["a -> b", "b -> a", "b <-> c", "c -> c", "d -> c", "a <-> d", "d <-> d", "b -> d"],
        )
        .unwrap();
        for a in g.vertices() {
            for b in g.vertices() {
                let all: Vec<Route> = enumerate_routes(&g, a, b, ROUTE_CAP).unwrap().collect();
                let unique: std::collections::HashSet<_> = all.iter().cloned().collect();
                assert_eq!(unique.len(), all.len());
                assert!(all.iter().all(|r| r.is_valid_in(&g) && r.is_route()));
                let mut counts = vec![0u8; g.order()];
                counts[a.index()] = 1;
                assert_eq!(all.len(), count_recursive(&g, a, b, &mut counts));
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = Dmg::new(["a", "b", "c"]).unwrap();
        let a = g.require("a").unwrap();
        assert!(matches!(enumerate_routes(&g, a, a, 2), Err(DmgError::CapExceeded { .. })));
    }
}
