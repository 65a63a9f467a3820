use std::collections::BTreeSet;

use rayon::prelude::*;

use super::inducing::{inducing_path_exists, InducingPathKind};
use super::model::IndependenceModel;
use crate::error::{DmgError, Result};
use crate::graph::{Dmg, Edge, VertexId};

/// Default bound on the number of non-loop edges for class enumeration.
pub const CLASS_EDGE_CAP: usize = 16;

/// Whether `α` and `β` are potential siblings in `model`.
pub fn potential_sibling(model: &IndependenceModel, alpha: VertexId, beta: VertexId) -> bool {
    if !model.inseparable(alpha, beta) || !model.inseparable(beta, alpha) {
        return false;
    }
    let n = model.order();
    let (a, b) = (1u64 << alpha.index(), 1u64 << beta.index());
    (0..1u64 << n).all(|c| {
        (0..n).map(VertexId::new).all(|gamma| {
            let s2 = c & b == 0 || !model.separated(gamma, alpha, c) || model.separated(gamma, beta, c);
            let s3 = c & a == 0 || !model.separated(gamma, beta, c) || model.separated(gamma, alpha, c);
            s2 && s3
        })
    })
}

/// Whether `α` is a potential parent of `β` in `model`.
pub fn potential_parent(model: &IndependenceModel, alpha: VertexId, beta: VertexId) -> bool {
    if !model.inseparable(alpha, beta) {
        return false;
    }
    let n = model.order();
    let (a, b) = (1u64 << alpha.index(), 1u64 << beta.index());
    let vertices = || (0..n).map(VertexId::new);
    (0..1u64 << n).filter(|c| c & a == 0).all(|c| {
        let p2 = vertices().all(|gamma| !model.separated(gamma, beta, c) || model.separated(gamma, alpha, c));
        let p4 = vertices().all(|gamma| !model.separated(beta, gamma, c) || model.separated(beta, gamma, c | a));
        let p3 = c & b == 0
            || vertices().all(|gamma| {
                model.separated(gamma, beta, c)
                    || vertices().all(|delta| !model.separated(gamma, delta, c) || model.separated(alpha, delta, c))
            });
        p2 && p3 && p4
    })
}

/// Whether the two graphs induce the same μ-separation model. The graphs
/// must have the same labels, in any order.
pub fn markov_equivalent(g1: &Dmg, g2: &Dmg, cap: usize) -> Result<bool> {
    let g2 = g1.align(g2)?;
    Ok(IndependenceModel::of(g1, cap)? == IndependenceModel::of(&g2, cap)?)
}

/// The graph with every potential parent edge and every potential sibling
/// edge of `model`, over the labels of `g`.
fn maximal_from_model(g: &Dmg, model: &IndependenceModel) -> Result<Dmg> {
    let mut directed = Vec::new();
    let mut bidirected = Vec::new();
    for alpha in g.vertices() {
        for beta in g.vertices() {
            if potential_parent(model, alpha, beta) {
                directed.push((alpha, beta));
            }
            if alpha <= beta && potential_sibling(model, alpha, beta) {
                bidirected.push((alpha, beta));
            }
        }
    }
    Dmg::from_ids(g.labels().to_vec(), directed, bidirected)
}

/// The maximal element of the Markov equivalence class of `g`: a supergraph
/// of every graph equivalent to `g`.
///
/// With debug assertions on, and for graphs of at most eight vertices, each
/// edge it adds is also checked to leave the model of `g` unchanged on its
/// own.
pub fn maximal_dmg(g: &Dmg, cap: usize) -> Result<Dmg> {
    let model = IndependenceModel::of(g, cap)?;
    let n = maximal_from_model(g, &model)?;
    if cfg!(debug_assertions) && g.order() <= 8 {
        for e in n.edges().filter(|&e| !g.has_edge(e)) {
            let plus = g.add_edge(e)?;
            debug_assert!(
                IndependenceModel::of(&plus, cap)? == model,
                "adding {} changes the model",
                e.display(g)
            );
        }
    }
    Ok(n)
}

/// Whether no edge can be added to `g` without changing its model.
pub fn is_maximal(g: &Dmg, cap: usize) -> Result<bool> {
    Ok(maximal_dmg(g, cap)? == *g)
}

/// A maximal graph with the edges that are missing from some equivalent
/// graph marked as dashed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dmeg {
    pub maximal: Dmg,
    pub dashed: BTreeSet<Edge>,
}

impl Dmeg {
    pub fn is_dashed(&self, e: Edge) -> bool {
        self.dashed.contains(&e.canonical())
    }

    /// Edges present in every equivalent graph; loops are always listed here.
    pub fn solid_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.maximal.edges().filter(|e| !self.dashed.contains(e))
    }
}

/// Marks the edges of a maximal graph `n` that some equivalent graph lacks.
///
/// A directed edge `α → β` is dashed iff `N − e` has an inducing path from
/// `α` to `β`; a bidirected edge iff `N − e` has inducing paths both ways.
/// Loops are never dashed.
pub fn dmeg(n: &Dmg, cap: usize) -> Result<Dmeg> {
    if !is_maximal(n, cap)? {
        return Err(DmgError::NotMaximal);
    }
    let mut dashed = BTreeSet::new();
    for e in n.edges().filter(|e| !e.is_loop()) {
        let without = n.remove_edge(e)?;
        let (a, b) = e.endpoints();
        let removable = match e {
            Edge::Directed { .. } => inducing_path_exists(&without, a, b, InducingPathKind::Any)?,
            Edge::Bidirected(..) => {
                inducing_path_exists(&without, a, b, InducingPathKind::Any)?
                    && inducing_path_exists(&without, b, a, InducingPathKind::Any)?
            }
        };
        if removable {
            dashed.insert(e);
        }
    }
    Ok(Dmeg { maximal: n.clone(), dashed })
}

/// All graphs Markov equivalent to the maximal graph `n` that keep its loops,
/// ordered by the bit mask of the non-loop edges they keep.
pub fn equivalence_class(n: &Dmg, cap: usize, edge_cap: usize) -> Result<Vec<Dmg>> {
    let model = IndependenceModel::of(n, cap)?;
    if maximal_from_model(n, &model)? != *n {
        return Err(DmgError::NotMaximal);
    }
    let loops: Vec<Edge> = n.edges().filter(|e| e.is_loop()).collect();
    let optional: Vec<Edge> = n.edges().filter(|e| !e.is_loop()).collect();
    if optional.len() > edge_cap {
        return Err(DmgError::CapExceeded { what: "class non-loop edges", limit: edge_cap, required: optional.len() });
    }
    let members: Vec<Option<Dmg>> = (0..1u64 << optional.len())
        .into_par_iter()
        .map(|mask| {
            let kept = optional.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            let g = n.with_edges(loops.iter().copied().chain(kept))?;
            Ok((IndependenceModel::of(&g, cap)? == model).then_some(g))
        })
        .collect::<Result<_>>()?;
    Ok(members.into_iter().flatten().collect())
}
