use std::collections::VecDeque;

use crate::error::Result;
use crate::graph::{Dmg, Mark, Move, VertexId, Walk};
use crate::vertex_set::VertexSet;

/// Kinds of inducing paths.
///
/// An inducing path from `α` to `β` is a nontrivial path or cycle with a head
/// at `β`, no noncolliders, and every vertex an ancestor of `α` or `β`. It is
/// bidirected when all its edges are, and unidirected when it is `α → β` or
/// `α → γ₁ ↔ … ↔ γₙ ↔ β`. A unidirected path is directed when every `γᵢ` is an
/// ancestor of `β`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InducingPathKind {
    Any,
    Bidirected,
    Unidirected,
    Directed,
}

impl InducingPathKind {
    fn first_marks(self) -> &'static [Mark] {
        match self {
            InducingPathKind::Any => &[Mark::Tail, Mark::Head],
            InducingPathKind::Bidirected => &[Mark::Head],
            InducingPathKind::Unidirected | InducingPathKind::Directed => &[Mark::Tail],
        }
    }
}

fn first_move(g: &Dmg, alpha: VertexId, to: VertexId, depart: Mark) -> Option<Move> {
    g.moves(alpha)
        .iter()
        .copied()
        .find(|m| m.next == to && m.depart == depart && m.arrive == Mark::Head)
}

fn search(g: &Dmg, alpha: VertexId, beta: VertexId, kind: InducingPathKind, single_edge: bool) -> Option<Walk> {
    if single_edge {
        for &mark in kind.first_marks() {
            if let Some(m) = first_move(g, alpha, beta, mark) {
                return Some(Walk::from_steps(alpha, vec![m]));
            }
        }
    }
    let ends = VertexSet::from_iter([alpha, beta]);
    let mut allowed = g.ancestors_unchecked(&ends).difference(&ends);
    if kind == InducingPathKind::Directed {
        allowed = allowed.intersection(&g.ancestors_unchecked(&VertexSet::singleton(beta)));
    }
    // Predecessor vertex (None for the first hop out of α) and the step taken.
    let mut pred: Vec<Option<(Option<VertexId>, Move)>> = vec![None; g.order()];
    let mut queue = VecDeque::new();
    for &m in g.moves(alpha) {
        if m.arrive == Mark::Head
            && kind.first_marks().contains(&m.depart)
            && allowed.contains(m.next)
            && pred[m.next.index()].is_none()
        {
            pred[m.next.index()] = Some((None, m));
            queue.push_back(m.next);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &m in g.moves(v).iter().filter(|m| !m.edge.is_directed()) {
            if m.next == beta {
                let mut steps = vec![m];
                let mut at = Some(v);
                while let Some(u) = at {
                    let (prev, step) = pred[u.index()].expect("visited");
                    steps.push(step);
                    at = prev;
                }
                steps.reverse();
                return Some(Walk::from_steps(alpha, steps));
            }
            if allowed.contains(m.next) && pred[m.next.index()].is_none() {
                pred[m.next.index()] = Some((Some(v), m));
                queue.push_back(m.next);
            }
        }
    }
    None
}

/// An inducing path of the given kind from `alpha` to `beta`, if one exists.
pub fn find_inducing_path(g: &Dmg, alpha: VertexId, beta: VertexId, kind: InducingPathKind) -> Result<Option<Walk>> {
    g.check_vertex(alpha)?;
    g.check_vertex(beta)?;
    Ok(search(g, alpha, beta, kind, true))
}

pub fn inducing_path_exists(g: &Dmg, alpha: VertexId, beta: VertexId, kind: InducingPathKind) -> Result<bool> {
    Ok(find_inducing_path(g, alpha, beta, kind)?.is_some())
}

/// Like [`find_inducing_path`], but only paths with at least one
/// intermediate vertex.
pub fn find_long_inducing_path(
    g: &Dmg,
    alpha: VertexId,
    beta: VertexId,
    kind: InducingPathKind,
) -> Result<Option<Walk>> {
    g.check_vertex(alpha)?;
    g.check_vertex(beta)?;
    Ok(search(g, alpha, beta, kind, false))
}

/// `D(α, β)`: ancestors of `{α, β}` that are directedly collider-connected to
/// `β`, without `α`.
///
/// A vertex is directedly collider-connected to `β` exactly when it has an
/// edge with a head at some vertex of `β`'s bidirected component.
pub fn d_set(g: &Dmg, alpha: VertexId, beta: VertexId) -> Result<VertexSet> {
    g.check_vertex(alpha)?;
    g.check_vertex(beta)?;
    let mut component = VertexSet::singleton(beta);
    let mut stack = vec![beta];
    while let Some(v) = stack.pop() {
        for m in g.moves(v).iter().filter(|m| !m.edge.is_directed()) {
            if component.insert(m.next) {
                stack.push(m.next);
            }
        }
    }
    let mut pointing = VertexSet::new();
    for v in g.vertices() {
        if g.moves(v).iter().any(|m| m.arrive == Mark::Head && component.contains(m.next)) {
            pointing.insert(v);
        }
    }
    let mut d = pointing.intersection(&g.ancestors_unchecked(&VertexSet::from_iter([alpha, beta])));
    d.remove(alpha);
    Ok(d)
}

/// A set `C ⊆ V \ {α}` that μ-separates `β` from `α`, or `None` when `β` is
/// inseparable from `α`.
///
/// `β` is inseparable from `α` exactly when there is an inducing path from
/// `α` to `β`; otherwise `D(α, β)` separates.
///
/// ```
/// use dmg_core::{equivalence::separable, Dmg, Edge};
///
/// let g = Dmg::from_edges(&["α", "γ"], &["γ -> α"]).unwrap();
/// let (a, c) = (g.require("α").unwrap(), g.require("γ").unwrap());
/// assert_eq!(separable(&g, a, a).unwrap(), Some(g.vertex_set(&["γ"]).unwrap()));
///
/// let h = g.add_edge(Edge::bidirected(a, c)).unwrap();
/// assert_eq!(separable(&h, a, a).unwrap(), None);
/// ```
pub fn separable(g: &Dmg, alpha: VertexId, beta: VertexId) -> Result<Option<VertexSet>> {
    if inducing_path_exists(g, alpha, beta, InducingPathKind::Any)? {
        Ok(None)
    } else {
        d_set(g, alpha, beta).map(Some)
    }
}
