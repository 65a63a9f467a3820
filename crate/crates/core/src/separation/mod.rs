//! μ-separation and the criteria equivalent to it.
//!
//! `B` is μ-separated from `A` given `C` when no walk from a vertex of
//! `A \ C` to a vertex of `B` is μ-connecting: it must be nontrivial, have
//! every collider in `An(C)`, no noncollider in `C`, and end with a head. The
//! relation is asymmetric and defined for arbitrary, possibly overlapping,
//! sets.

mod criteria;
mod search;

use crate::error::Result;
use crate::graph::{Dmg, Mark, Route, Walk};
use crate::vertex_set::VertexSet;

pub use criteria::{
    augmented_graph, bereaved_graph, delta_separated, history_version, m_separated,
    mu_separated_via_augmentation, HistoryVersion,
};
pub(crate) use search::Search;

/// The triple `⟨A, B | C⟩`: is `B` separated from `A` given `C`?
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeparationQuery {
    pub a: VertexSet,
    pub b: VertexSet,
    pub c: VertexSet,
}

impl SeparationQuery {
    pub fn new(a: VertexSet, b: VertexSet, c: VertexSet) -> Self {
        SeparationQuery { a, b, c }
    }

    /// Builds a query from label lists.
    pub fn from_labels<S: AsRef<str>>(g: &Dmg, a: &[S], b: &[S], c: &[S]) -> Result<Self> {
        Ok(SeparationQuery {
            a: g.vertex_set(a)?,
            b: g.vertex_set(b)?,
            c: g.vertex_set(c)?,
        })
    }

    fn check(&self, g: &Dmg) -> Result<()> {
        g.check_set(&self.a)?;
        g.check_set(&self.b)?;
        g.check_set(&self.c)
    }
}

/// Decides μ-separation by reachability over (vertex, arrival mark) states.
///
/// ```
/// use dmg_core::{separation::{mu_separated, SeparationQuery}, Dmg};
///
/// // β → α, γ → β: the walk α ← β ← γ → β connects α to β.
/// let g = Dmg::from_edges(&["α", "β", "γ"], &["β -> α", "γ -> β"]).unwrap();
/// let q = SeparationQuery::from_labels(&g, &["α"], &["β"], &[]).unwrap();
/// assert!(!mu_separated(&g, &q).unwrap());
/// ```
pub fn mu_separated(g: &Dmg, q: &SeparationQuery) -> Result<bool> {
    q.check(g)?;
    let mut search = Search::new(g, &q.c, false);
    Ok(search.run(&q.a, Some(&q.b)).is_none())
}

/// Every vertex `β` such that `{β}` is not μ-separated from `A` given `C`.
pub fn mu_connected_targets(g: &Dmg, a: &VertexSet, c: &VertexSet) -> Result<VertexSet> {
    g.check_set(a)?;
    g.check_set(c)?;
    let mut search = Search::new(g, c, false);
    search.run(a, None);
    Ok(search.reached_with_head())
}

/// Returns a μ-connecting route when one exists.
///
/// The search yields a μ-connecting walk, which is then shortened by cutting
/// out the closed sub-walk between two occurrences of a repeated vertex until
/// it is a route.
pub fn find_mu_connecting_route(g: &Dmg, q: &SeparationQuery) -> Result<Option<Route>> {
    q.check(g)?;
    let mut search = Search::new(g, &q.c, false);
    let Some(hit) = search.run(&q.a, Some(&q.b)) else {
        return Ok(None);
    };
    let route = reduce_to_route(search.walk_to(hit));
    debug_assert!(is_mu_connecting(g, &route, &q.c));
    Ok(Some(Route::new(route).expect("reduction yields a route")))
}

/// Returns a μ-connecting walk all of whose colliders lie in `C`, when any
/// μ-connecting walk exists. Such a walk need not be a route.
pub fn find_mu_connecting_walk_colliders_in_c(g: &Dmg, q: &SeparationQuery) -> Result<Option<Walk>> {
    q.check(g)?;
    let mut search = Search::new(g, &q.c, true);
    Ok(search.run(&q.a, Some(&q.b)).map(|hit| search.walk_to(hit)))
}

/// Conjunction of the singleton queries `⟨{α}, {β} | C⟩` over `α ∈ A`,
/// `β ∈ B`.
pub fn mu_separated_sets_decomposes(g: &Dmg, q: &SeparationQuery) -> Result<bool> {
    q.check(g)?;
    for alpha in &q.a {
        for beta in &q.b {
            let single = SeparationQuery::new(
                VertexSet::singleton(alpha),
                VertexSet::singleton(beta),
                q.c.clone(),
            );
            if !mu_separated(g, &single)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks the μ-connecting conditions for `walk` given `c`, including that
/// the walk uses edges of `g`.
pub fn is_mu_connecting(g: &Dmg, walk: &Walk, c: &VertexSet) -> bool {
    let Some(last) = walk.steps().last() else {
        return false;
    };
    if !walk.is_valid_in(g) || c.contains(walk.start()) || last.arrive != Mark::Head {
        return false;
    }
    let an_c = g.ancestors_unchecked(c);
    walk.interior()
        .all(|(v, collider)| if collider { an_c.contains(v) } else { !c.contains(v) })
}

/// Whether every collider of `walk` lies in `c`.
pub fn colliders_in(walk: &Walk, c: &VertexSet) -> bool {
    walk.interior().all(|(v, collider)| !collider || c.contains(v))
}

/// Cuts closed sub-walks out of a μ-connecting walk until it is a route.
///
/// Cutting between two occurrences of `v` keeps the arrival mark of the first
/// and the departure mark of the second. The result stays μ-connecting: if `v`
/// is in `C` both occurrences were colliders, and if the new occurrence is a
/// collider outside `C`, the removed part starts with a tail at `v` and so
/// leads along directed edges into a collider, which puts `v` in `An(C)`.
pub(crate) fn reduce_to_route(walk: Walk) -> Walk {
    let start = walk.start();
    let mut steps = walk.steps().to_vec();
    loop {
        let vertices: Vec<_> = std::iter::once(start).chain(steps.iter().map(|s| s.next)).collect();
        let last = vertices.len() - 1;
        // Pair the earliest repeated vertex with its latest occurrence before
        // the final position. This also leaves the end vertex at most one
        // earlier occurrence.
        let cut = (0..last).find_map(|i| {
            (i + 1..last).rev().find(|&j| vertices[i] == vertices[j]).map(|j| (i, j))
        });
        match cut {
            Some((i, j)) => {
                steps.drain(i..j);
            }
            None => return Walk::from_steps(start, steps),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId;

    fn q(g: &Dmg, a: &[&str], b: &[&str], c: &[&str]) -> SeparationQuery {
        SeparationQuery::from_labels(g, a, b, c).unwrap()
    }

    fn chain_with_fork() -> Dmg {
        Dmg::from_edges(&["α", "β", "γ"], &["β -> α", "γ -> β"]).unwrap()
    }

    #[test]
    fn connecting_walk_without_connecting_path() {
        let g = chain_with_fork();
        assert!(!mu_separated(&g, &q(&g, &["α"], &["β"], &[])).unwrap());
        let route = find_mu_connecting_route(&g, &q(&g, &["α"], &["β"], &[]))
            .unwrap()
            .unwrap();
        assert_eq!(route.display(&g).to_string(), "α <- β <- γ -> β");
    }

    #[test]
    fn sources_inside_c_are_separated() {
        let g = chain_with_fork();
        assert!(mu_separated(&g, &q(&g, &["α", "γ"], &["α", "β", "γ"], &["α", "γ"])).unwrap());
        assert!(mu_separated(&g, &q(&g, &[], &["β"], &[])).unwrap());
        assert!(mu_separated(&g, &q(&g, &["α"], &[], &[])).unwrap());
    }

    #[test]
    fn self_separation_given_parent() {
        let g = Dmg::from_edges(&["α", "γ"], &["γ -> α"]).unwrap();
        assert!(mu_separated(&g, &q(&g, &["α"], &["α"], &["γ"])).unwrap());
        assert!(!mu_separated(&g, &q(&g, &["α"], &["α"], &[])).unwrap());
    }

    #[test]
    fn single_edge_route() {
        let g = Dmg::from_edges(&["α", "β"], &["α -> β"]).unwrap();
        let r = find_mu_connecting_route(&g, &q(&g, &["α"], &["β"], &[])).unwrap().unwrap();
        assert_eq!(r.display(&g).to_string(), "α -> β");
        assert!(find_mu_connecting_route(&g, &q(&g, &["β"], &["α"], &[])).unwrap().is_none());
    }

    #[test]
    fn set_queries_decompose() {
        let g = crate::test_graphs::nonclosed_dg();
        let query = q(&g, &["α", "ε"], &["β"], &[]);
        assert!(!mu_separated(&g, &query).unwrap());
        assert!(!mu_separated_sets_decomposes(&g, &query).unwrap());
        assert!(mu_separated_sets_decomposes(&g, &q(&g, &[], &["β"], &[])).unwrap());
    }

    #[test]
    fn out_of_range_sets_are_errors() {
        let g = chain_with_fork();
        let bad = SeparationQuery::new(
            VertexSet::singleton(VertexId::new(5)),
            VertexSet::new(),
            VertexSet::new(),
        );
        assert!(mu_separated(&g, &bad).is_err());
    }

    #[test]
    fn strict_witness_has_colliders_in_c() {
        // β is an ancestor of C but not in it.
        let g = Dmg::from_edges(&["α", "β", "γ", "δ"], &["α -> β", "γ -> β", "β -> δ"]).unwrap();
        let query = q(&g, &["α"], &["γ"], &["δ"]);
        // Head at γ is required, so this is separated.
        assert!(mu_separated(&g, &query).unwrap());
        let g = g.add_edge(crate::Edge::bidirected(VertexId::new(2), VertexId::new(3))).unwrap();
        let query = q(&g, &["α"], &["γ"], &["δ"]);
        assert!(!mu_separated(&g, &query).unwrap());
        let w = find_mu_connecting_walk_colliders_in_c(&g, &query).unwrap().unwrap();
        assert!(is_mu_connecting(&g, &w, &query.c));
        assert!(colliders_in(&w, &query.c));
    }

    #[test]
    fn route_reduction_cuts_repeated_vertices() {
        // α → β → α → β → γ reduces to α → β → γ.
        let g = Dmg::from_edges(&["α", "β", "γ"], &["α -> β", "β -> α", "β -> γ"]).unwrap();
        let mv = |from: &str, to: &str| {
            let (x, y) = (g.require(from).unwrap(), g.require(to).unwrap());
            *g.moves(x).iter().find(|m| m.next == y && m.depart == Mark::Tail).unwrap()
        };
        let w = Walk::from_steps(
            g.require("α").unwrap(),
            vec![mv("α", "β"), mv("β", "α"), mv("α", "β"), mv("β", "γ")],
        );
        let r = reduce_to_route(w);
        assert_eq!(r.display(&g).to_string(), "α -> β -> γ");
    }
}
