use std::collections::{BTreeSet, HashSet};

use super::routes::{enumerate_routes, is_path_or_cycle};
use crate::equivalence::InducingPathKind;
use crate::error::{DmgError, Result};
use crate::graph::{Dmg, Edge, Mark, VertexId, Walk};
use crate::separation::{mu_separated, SeparationQuery};
use crate::vertex_set::VertexSet;

/// Separation requirements of one route: the conditioning sets under which
/// it is μ-connecting are those avoiding `forbid` whose ancestor closure
/// covers `need`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct RouteGate {
    forbid: u64,
    need: u64,
}

fn route_gate(r: &Walk) -> Option<RouteGate> {
    if r.steps().last()?.arrive != Mark::Head {
        return None;
    }
    let mut gate = RouteGate { forbid: 1 << r.start().index(), need: 0 };
    for (v, collider) in r.interior() {
        if collider {
            gate.need |= 1 << v.index();
        } else {
            gate.forbid |= 1 << v.index();
        }
    }
    Some(gate)
}

fn ancestor_masks(g: &Dmg) -> Vec<u64> {
    (0..1u64 << g.order())
        .map(|mask| g.ancestors_unchecked(&VertexSet::from_mask(mask)).to_mask())
        .collect()
}

/// μ-separation by scanning every route from `A \ C` to `B`.
pub fn mu_separated_bruteforce(g: &Dmg, q: &SeparationQuery, cap: usize) -> Result<bool> {
    g.check_set(&q.a)?;
    g.check_set(&q.b)?;
    g.check_set(&q.c)?;
    if g.order() > cap {
        return Err(DmgError::CapExceeded { what: "brute-force vertices", limit: cap, required: g.order() });
    }
    let c = q.c.to_mask();
    let an_c = g.ancestors_unchecked(&q.c).to_mask();
    for alpha in &q.a.difference(&q.c) {
        for beta in &q.b {
            for r in enumerate_routes(g, alpha, beta, cap)? {
                if let Some(gate) = route_gate(&r) {
                    if gate.forbid & c == 0 && gate.need & !an_c == 0 {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Separation table for all singleton queries, by route enumeration.
///
/// Bit `((α·n + β) << n) | C` is set iff `β` is μ-separated from `α` given
/// the set with mask `C`.
pub fn mu_separation_table_bruteforce(g: &Dmg, cap: usize) -> Result<Vec<bool>> {
    let n = g.order();
    if n > cap {
        return Err(DmgError::CapExceeded { what: "brute-force vertices", limit: cap, required: n });
    }
    let an = ancestor_masks(g);
    let mut table = vec![true; (n * n) << n];
    for alpha in g.vertices() {
        for beta in g.vertices() {
            let gates: HashSet<RouteGate> = enumerate_routes(g, alpha, beta, cap)?
                .filter_map(|r| route_gate(&r))
                .collect();
            let base = (alpha.index() * n + beta.index()) << n;
            for (mask, &an_c) in an.iter().enumerate() {
                let c = mask as u64;
                if gates.iter().any(|gt| gt.forbid & c == 0 && gt.need & !an_c == 0) {
                    table[base | mask] = false;
                }
            }
        }
    }
    Ok(table)
}

/// Latent projection straight from the definition: every collider-free walk
/// whose non-endpoints are latent contributes the edge with its end marks.
///
/// Walks with a repeated latent vertex are skipped; cutting the repetition
/// out keeps the walk collider-free and the end marks unchanged.
pub fn latent_projection_bruteforce(g: &Dmg, o: &VertexSet, cap: usize) -> Result<Dmg> {
    g.check_set(o)?;
    if g.order() > cap {
        return Err(DmgError::CapExceeded { what: "brute-force vertices", limit: cap, required: g.order() });
    }
    let position: Vec<Option<VertexId>> = {
        let mut p = vec![None; g.order()];
        for (i, v) in o.iter().enumerate() {
            p[v.index()] = Some(VertexId::new(i));
        }
        p
    };
    let mut found = BTreeSet::new();
    for alpha in o {
        let mut visited = vec![false; g.order()];
        for &first in g.moves(alpha) {
            extend(g, o, alpha, first.depart, first, &mut visited, &mut found);
        }
    }
    let labels = o.iter().map(|v| g.label(v).to_owned()).collect();
    let (mut d, mut b) = (Vec::new(), Vec::new());
    for e in found {
        match e {
            Edge::Directed { from, to } => d.push((position[from.index()].unwrap(), position[to.index()].unwrap())),
            Edge::Bidirected(x, y) => b.push((position[x.index()].unwrap(), position[y.index()].unwrap())),
        }
    }
    Dmg::from_ids(labels, d, b)
}

fn extend(
    g: &Dmg,
    o: &VertexSet,
    alpha: VertexId,
    mark_at_alpha: Mark,
    step: crate::graph::Move,
    visited: &mut Vec<bool>,
    found: &mut BTreeSet<Edge>,
) {
    let v = step.next;
    if o.contains(v) {
        let e = match (mark_at_alpha, step.arrive) {
            (Mark::Tail, Mark::Head) => Edge::directed(alpha, v),
            (Mark::Head, Mark::Tail) => Edge::directed(v, alpha),
            (Mark::Head, Mark::Head) => Edge::bidirected(alpha, v),
            (Mark::Tail, Mark::Tail) => unreachable!(),
        };
        found.insert(e);
        return;
    }
    if visited[v.index()] {
        return;
    }
    visited[v.index()] = true;
    for &m in g.moves(v) {
        if step.arrive == Mark::Head && m.depart == Mark::Head {
            continue;
        }
        extend(g, o, alpha, mark_at_alpha, m, visited, found);
    }
    visited[v.index()] = false;
}

/// Inducing paths by enumerating every path and cycle from `alpha` to `beta`.
pub fn inducing_path_exists_bruteforce(
    g: &Dmg,
    alpha: VertexId,
    beta: VertexId,
    kind: InducingPathKind,
    cap: usize,
) -> Result<bool> {
    let ends = VertexSet::from_iter([alpha, beta]);
    let an_ends = g.ancestors(&ends)?;
    let an_beta = g.ancestors(&VertexSet::singleton(beta))?;
    for r in enumerate_routes(g, alpha, beta, cap)? {
        if !is_path_or_cycle(&r) || r.steps().last().unwrap().arrive != Mark::Head {
            continue;
        }
        if r.interior().any(|(_, collider)| !collider) || !r.vertices().iter().all(|&v| an_ends.contains(v)) {
            continue;
        }
        let unidirected = r.steps()[0].depart == Mark::Tail;
        let directed = unidirected && r.interior().all(|(v, _)| an_beta.contains(v));
        let ok = match kind {
            InducingPathKind::Any => true,
            InducingPathKind::Bidirected => !unidirected,
            InducingPathKind::Unidirected => unidirected,
            InducingPathKind::Directed => directed,
        };
        if ok {
            return Ok(true);
        }
    }
    Ok(false)
}

/// m-separation by enumerating paths between `a` and `b`.
pub fn m_separated_bruteforce(g: &Dmg, a: &VertexSet, b: &VertexSet, c: &VertexSet, cap: usize) -> Result<bool> {
    let an_c = g.ancestors(c)?;
    for x in a {
        for y in b {
            if x == y {
                continue;
            }
            for r in enumerate_routes(g, x, y, cap)? {
                let vs = r.vertices();
                let distinct = vs.iter().collect::<HashSet<_>>().len() == vs.len();
                if distinct
                    && r.interior()
                        .all(|(v, collider)| if collider { an_c.contains(v) } else { !c.contains(v) })
                {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Whether a walk of at most `max_len` edges joins `u` to `v` with only
/// colliders as non-endpoints, optionally requiring a head at `v`.
pub fn collider_connected_bruteforce(g: &Dmg, u: VertexId, v: VertexId, head_at_v: bool, max_len: usize) -> bool {
    fn go(g: &Dmg, at: VertexId, arrived: Option<Mark>, v: VertexId, head_at_v: bool, left: usize) -> bool {
        if left == 0 {
            return false;
        }
        for m in g.moves(at) {
            // `at` becomes a non-endpoint of the walk and must be a collider.
            if let Some(arr) = arrived {
                if !(arr == Mark::Head && m.depart == Mark::Head) {
                    continue;
                }
            }
            if m.next == v && (!head_at_v || m.arrive == Mark::Head) {
                return true;
            }
            if go(g, m.next, Some(m.arrive), v, head_at_v, left - 1) {
                return true;
            }
        }
        false
    }
    go(g, u, None, v, head_at_v, max_len)
}

/// A conditioning set `C ⊆ V \ {α}` separating `β` from `α`, found by trying
/// every subset.
pub fn exhaustive_separator(g: &Dmg, alpha: VertexId, beta: VertexId) -> Result<Option<VertexSet>> {
    let mut rest = g.all_vertices();
    rest.remove(alpha);
    for c in rest.subsets() {
        let q = SeparationQuery::new(VertexSet::singleton(alpha), VertexSet::singleton(beta), c.clone());
        if mu_separated(g, &q)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}
