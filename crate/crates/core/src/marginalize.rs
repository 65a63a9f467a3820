//! Latent projection.
//!
//! The projection `m(G, O)` of a graph onto observed vertices `O` has an edge
//! between `α, β ∈ O` whenever `G` has a nontrivial, collider-free walk
//! between them whose non-endpoints all lie in `M = V \ O`, with the same
//! marks at its ends as the edge.
//!
//! It is computed by saturation: while some noncolliding walk `α ∼ m ∼ β`
//! with `m ∈ M` lacks the edge with its end marks, add that edge. At the
//! fixpoint every such walk is summarized by an edge, and restricting to `O`
//! gives the projection.

use std::collections::BTreeSet;

use crate::error::{DmgError, Result};
use crate::graph::{Dmg, Edge, Mark, VertexId};
use crate::separation::mu_connected_targets;
use crate::vertex_set::VertexSet;

/// A length-two walk `left ∼ mid ∼ right` with `mid` distinct from both ends.
/// The ends may coincide.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TriRoute {
    pub left: VertexId,
    pub mid: VertexId,
    pub right: VertexId,
    pub left_edge: Edge,
    pub right_edge: Edge,
    pub colliding: bool,
}

impl TriRoute {
    /// The edge between the ends with the same end marks, for a
    /// noncolliding triroute.
    pub fn shortcut(&self) -> Option<Edge> {
        if self.colliding {
            return None;
        }
        let at_left = mark_at(self.left_edge, self.left, self.mid);
        let at_right = mark_at(self.right_edge, self.right, self.mid);
        Some(edge_with_marks(self.left, at_left, self.right, at_right))
    }
}

/// Mark of `e` at `v`, where `e` joins `v` and `other != v`.
fn mark_at(e: Edge, v: VertexId, other: VertexId) -> Mark {
    debug_assert_ne!(v, other);
    match e {
        Edge::Directed { to, .. } if to == v => Mark::Head,
        Edge::Directed { .. } => Mark::Tail,
        Edge::Bidirected(..) => Mark::Head,
    }
}

fn edge_with_marks(a: VertexId, at_a: Mark, b: VertexId, at_b: Mark) -> Edge {
    match (at_a, at_b) {
        (Mark::Tail, Mark::Head) => Edge::directed(a, b),
        (Mark::Head, Mark::Tail) => Edge::directed(b, a),
        (Mark::Head, Mark::Head) => Edge::bidirected(a, b),
        (Mark::Tail, Mark::Tail) => unreachable!("mixed graphs have no tail-tail edges"),
    }
}

/// Order in which the saturation picks middle vertices and edge pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ChoiceOrder {
    #[default]
    Forward,
    Reverse,
}

struct Saturation {
    edges: BTreeSet<Edge>,
    /// Non-loop edges incident to each vertex.
    incident: Vec<Vec<Edge>>,
}

impl Saturation {
    fn new(g: &Dmg) -> Self {
        let mut s = Saturation { edges: BTreeSet::new(), incident: vec![Vec::new(); g.order()] };
        for e in g.edges() {
            s.insert(e);
        }
        s
    }

    fn insert(&mut self, e: Edge) -> bool {
        if !self.edges.insert(e) {
            return false;
        }
        let (a, b) = e.endpoints();
        if a != b {
            self.incident[a.index()].push(e);
            self.incident[b.index()].push(e);
        }
        true
    }

    fn triroutes(&self, mid: VertexId, order: ChoiceOrder) -> Vec<TriRoute> {
        let inc = &self.incident[mid.index()];
        let other = |e: Edge| {
            let (a, b) = e.endpoints();
            if a == mid { b } else { a }
        };
        let mut out = Vec::with_capacity(inc.len() * inc.len());
        for &l in inc {
            for &r in inc {
                let colliding =
                    mark_at(l, mid, other(l)) == Mark::Head && mark_at(r, mid, other(r)) == Mark::Head;
                out.push(TriRoute {
                    left: other(l),
                    mid,
                    right: other(r),
                    left_edge: l,
                    right_edge: r,
                    colliding,
                });
            }
        }
        if order == ChoiceOrder::Reverse {
            out.reverse();
        }
        out
    }
}

/// Runs the saturation and returns the edges it added, in order, together
/// with the triroute that triggered each one.
pub fn projection_fixpoint_trace_ordered(
    g: &Dmg,
    o: &VertexSet,
    order: ChoiceOrder,
) -> Result<(Dmg, Vec<(TriRoute, Edge)>)> {
    g.check_set(o)?;
    let latent = g.all_vertices().difference(o);
    let mut sat = Saturation::new(g);
    let mut trace = Vec::new();
    let mut pending: BTreeSet<VertexId> = latent.iter().collect();
    loop {
        let next = match order {
            ChoiceOrder::Forward => pending.pop_first(),
            ChoiceOrder::Reverse => pending.pop_last(),
        };
        let Some(mid) = next else { break };
        // Shortcuts join neighbours of `mid`, never `mid` itself, so one pass
        // suffices; latent endpoints gain triroutes and are queued again.
        for tr in sat.triroutes(mid, order) {
            let Some(e) = tr.shortcut() else { continue };
            if sat.insert(e) {
                trace.push((tr, e));
                let (a, b) = e.endpoints();
                for v in [a, b] {
                    if latent.contains(v) {
                        pending.insert(v);
                    }
                }
            }
        }
    }
    let full = g.with_edges(sat.edges.iter().copied())?;
    Ok((full.induced_subgraph(o)?, trace))
}

/// Shortcut edges added while computing `m(g, o)`, in the order added.
pub fn projection_fixpoint_trace(g: &Dmg, o: &VertexSet) -> Result<Vec<(TriRoute, Edge)>> {
    Ok(projection_fixpoint_trace_ordered(g, o, ChoiceOrder::Forward)?.1)
}

/// The latent projection `m(g, o)`.
///
/// ```
/// use dmg_core::{marginalize::latent_projection, Dmg};
///
/// // Marginalizing the common parent m of b and c leaves b ↔ c.
/// let g = Dmg::from_edges(&["m", "b", "c"], &["m -> b", "m -> c"]).unwrap();
/// let p = latent_projection(&g, &g.vertex_set(&["b", "c"]).unwrap()).unwrap();
/// let expected = Dmg::from_edges(&["b", "c"], &["b <-> c", "b <-> b", "c <-> c"]).unwrap();
/// assert_eq!(p, expected);
/// ```
pub fn latent_projection(g: &Dmg, o: &VertexSet) -> Result<Dmg> {
    Ok(projection_fixpoint_trace_ordered(g, o, ChoiceOrder::Forward)?.0)
}

/// A query on which a graph and its projection disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceViolation {
    pub alpha: VertexId,
    pub beta: VertexId,
    pub c: VertexSet,
    pub separated_in_graph: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InvarianceReport {
    pub checked: usize,
    /// Vertices are indices of the original graph.
    pub violations: Vec<InvarianceViolation>,
}

/// Compares `⟨{α}, {β} | C⟩` in `g` and in `m(g, o)` for all `α, β ∈ o` and
/// `C ⊆ o`.
pub fn verify_marginalization_invariance(g: &Dmg, o: &VertexSet, cap: usize) -> Result<InvarianceReport> {
    g.check_set(o)?;
    if o.len() > cap {
        return Err(DmgError::CapExceeded { what: "observed vertices", limit: cap, required: o.len() });
    }
    let m = latent_projection(g, o)?;
    let members: Vec<VertexId> = o.iter().collect();
    let to_m = |s: &VertexSet| -> VertexSet {
        members
            .iter()
            .enumerate()
            .filter(|(_, v)| s.contains(**v))
            .map(|(i, _)| VertexId::new(i))
            .collect()
    };
    let mut report = InvarianceReport::default();
    for c in o.subsets() {
        let cm = to_m(&c);
        for (i, &alpha) in members.iter().enumerate() {
            let in_g = mu_connected_targets(g, &VertexSet::singleton(alpha), &c)?;
            let in_m = mu_connected_targets(&m, &VertexSet::singleton(VertexId::new(i)), &cm)?;
            for (j, &beta) in members.iter().enumerate() {
                report.checked += 1;
                let sep_g = !in_g.contains(beta);
                let sep_m = !in_m.contains(VertexId::new(j));
                if sep_g != sep_m {
                    report.violations.push(InvarianceViolation {
                        alpha,
                        beta,
                        c: c.clone(),
                        separated_in_graph: sep_g,
                    });
                }
            }
        }
    }
    Ok(report)
}
