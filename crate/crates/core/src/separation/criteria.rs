use std::collections::BTreeSet;

use super::{Search, SeparationQuery};
use crate::error::{DmgError, Result};
use crate::graph::{Dmg, Mark, UndirectedGraph, VertexId};
use crate::vertex_set::VertexSet;

fn require_dg(g: &Dmg) -> Result<()> {
    if g.is_dg() {
        Ok(())
    } else {
        Err(DmgError::NotDirected)
    }
}

fn require_disjoint(a: &VertexSet, b: &VertexSet, c: &VertexSet) -> Result<()> {
    if !a.is_disjoint(b) {
        return Err(DmgError::NotDisjoint("A and B overlap"));
    }
    if !a.is_disjoint(c) {
        return Err(DmgError::NotDisjoint("A and C overlap"));
    }
    if !b.is_disjoint(c) {
        return Err(DmgError::NotDisjoint("B and C overlap"));
    }
    Ok(())
}

/// Removes every non-loop directed edge leaving `b`.
pub fn bereaved_graph(g: &Dmg, b: &VertexSet) -> Result<Dmg> {
    require_dg(g)?;
    g.check_set(b)?;
    let kept: Vec<_> = g
        .directed_edges()
        .filter(|&(from, to)| from == to || !b.contains(from))
        .collect();
    Dmg::from_ids(g.labels().to_vec(), kept, std::iter::empty())
}

/// δ-separation of `b` from `a` given `c` in a directed graph: no
/// μ-connecting walk from `a` to `b` given `c` in the graph bereaved of `b`.
///
/// Equals `mu_separated(g, ⟨a, b | c ∪ b⟩)`.
pub fn delta_separated(g: &Dmg, a: &VertexSet, b: &VertexSet, c: &VertexSet) -> Result<bool> {
    require_dg(g)?;
    g.check_set(a)?;
    g.check_set(b)?;
    g.check_set(c)?;
    require_disjoint(a, b, c)?;
    if a.is_empty() {
        return Err(DmgError::EmptySet("A"));
    }
    if b.is_empty() {
        return Err(DmgError::EmptySet("B"));
    }
    let bereaved = bereaved_graph(g, b)?;
    let mut search = Search::new(&bereaved, c, false);
    Ok(search.run(a, Some(b)).is_none())
}

/// m-separation of disjoint sets: no path between `a` and `b` on which every
/// collider is in `An(c)` and no noncollider is in `c`.
///
/// Paths never use loops, so loops are ignored. The search runs over walks,
/// which connect exactly when such a path exists.
pub fn m_separated(g: &Dmg, a: &VertexSet, b: &VertexSet, c: &VertexSet) -> Result<bool> {
    g.check_set(a)?;
    g.check_set(b)?;
    g.check_set(c)?;
    require_disjoint(a, b, c)?;
    let loopless;
    let h = if g.edges().any(|e| e.is_loop()) {
        loopless = g.with_edges(g.edges().filter(|e| !e.is_loop()))?;
        &loopless
    } else {
        g
    };
    let mut search = Search::new(h, c, false);
    search.run(a, None);
    Ok(search.reached().is_disjoint(b))
}

/// `G(B)`: `g` plus a past copy `β^p` of every `β ∈ B` that receives the
/// edges with a head at `β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HistoryVersion {
    pub graph: Dmg,
    /// `(β, β^p)` pairs, ascending in `β`.
    pub past: Vec<(VertexId, VertexId)>,
}

impl HistoryVersion {
    pub fn past_of(&self, beta: VertexId) -> Option<VertexId> {
        self.past.iter().find(|(b, _)| *b == beta).map(|&(_, p)| p)
    }

    /// `B^p` for the duplicated vertices.
    pub fn past_set(&self) -> VertexSet {
        self.past.iter().map(|&(_, p)| p).collect()
    }
}

/// Builds `G(B)`. Past copies are labelled `β^p`, with `'` appended if that
/// label is taken.
pub fn history_version(g: &Dmg, b: &VertexSet) -> Result<HistoryVersion> {
    g.check_set(b)?;
    let mut labels = g.labels().to_vec();
    let mut taken: BTreeSet<String> = labels.iter().cloned().collect();
    let mut past = Vec::new();
    for beta in b {
        let mut name = format!("{}^p", g.label(beta));
        while taken.contains(&name) {
            name.push('\'');
        }
        taken.insert(name.clone());
        past.push((beta, VertexId::new(labels.len())));
        labels.push(name);
    }
    let copy = |v: VertexId| past.iter().find(|(b, _)| *b == v).map(|&(_, p)| p);
    let mut directed: Vec<_> = g.directed_edges().collect();
    for (from, to) in g.directed_edges() {
        if let Some(p) = copy(to) {
            directed.push((from, p));
        }
    }
    let mut bidirected: Vec<_> = g.bidirected_edges().collect();
    for (x, y) in g.bidirected_edges() {
        if let Some(p) = copy(y) {
            bidirected.push((x, p));
        }
        if x != y {
            if let Some(p) = copy(x) {
                bidirected.push((y, p));
            }
        }
    }
    let graph = Dmg::from_ids(labels, directed, bidirected)?;
    Ok(HistoryVersion { graph, past })
}

/// Joins distinct `u`, `v` when a nontrivial walk between them has only
/// colliders as non-endpoints, i.e. `u *→ c ↔ … ↔ c' ←* v` or a single edge.
pub fn augmented_graph(g: &Dmg) -> UndirectedGraph {
    let n = g.order();
    let mut out = UndirectedGraph::new(g.labels().to_vec());
    for e in g.edges() {
        let (x, y) = e.endpoints();
        out.add_edge(x, y);
    }
    // Bidirected components; a vertex without bidirected edges is its own.
    let mut component = vec![usize::MAX; n];
    let mut members: Vec<Vec<VertexId>> = Vec::new();
    for v in g.vertices() {
        if component[v.index()] != usize::MAX {
            continue;
        }
        let id = members.len();
        let mut stack = vec![v];
        let mut list = Vec::new();
        component[v.index()] = id;
        while let Some(u) = stack.pop() {
            list.push(u);
            for m in g.moves(u).iter().filter(|m| !m.edge.is_directed()) {
                if component[m.next.index()] == usize::MAX {
                    component[m.next.index()] = id;
                    stack.push(m.next);
                }
            }
        }
        members.push(list);
    }
    // Vertices with an edge pointing into each component.
    let mut into = vec![VertexSet::new(); members.len()];
    for v in g.vertices() {
        for m in g.moves(v) {
            if m.arrive == Mark::Head {
                into[component[m.next.index()]].insert(v);
            }
        }
    }
    for set in &into {
        let list: Vec<_> = set.iter().collect();
        for (i, &u) in list.iter().enumerate() {
            for &v in &list[i + 1..] {
                out.add_edge(u, v);
            }
        }
    }
    out
}

/// μ-separation through the history version: `B^p` is separated from `A \ C`
/// by `C` in the augmented graph of `G(B)` restricted to `An(A ∪ B^p ∪ C)`.
pub fn mu_separated_via_augmentation(g: &Dmg, q: &SeparationQuery) -> Result<bool> {
    q.check(g)?;
    let a = q.a.difference(&q.c);
    if a.is_empty() || q.b.is_empty() {
        return Ok(true);
    }
    let hv = history_version(g, &q.b)?;
    let past = hv.past_set();
    let keep = hv.graph.ancestors(&a.union(&past).union(&q.c))?;
    let sub = hv.graph.induced_subgraph(&keep)?;
    // Positions in the induced subgraph follow ascending order of `keep`.
    let position: Vec<Option<VertexId>> = {
        let mut pos = vec![None; hv.graph.order()];
        for (i, v) in keep.iter().enumerate() {
            pos[v.index()] = Some(VertexId::new(i));
        }
        pos
    };
    let map = |s: &VertexSet| -> VertexSet { s.iter().filter_map(|v| position[v.index()]).collect() };
    let aug = augmented_graph(&sub);
    Ok(aug.separated(&map(&a), &map(&past), &map(&q.c)))
}
