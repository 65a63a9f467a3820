//! Unrolling directed graphs over discrete time.
//!
//! A directed graph `D` over processes unrolls into a DAG with one copy
//! `v@t` of every vertex per time point `t ∈ 0..=T` and an edge `u@s → v@t`
//! whenever `u → v` is in `D` and `s < t`. μ-separation in `D` then matches
//! d-separation of the present from the past in the unrolled DAG, once `T` is
//! large enough.

use rayon::prelude::*;

use crate::error::{DmgError, Result};
use crate::graph::{Dmg, VertexId};
use crate::separation::{m_separated, mu_separated, SeparationQuery};
use crate::vertex_set::VertexSet;

/// A time-expanded copy of a directed graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnrolledDag {
    base: Dmg,
    horizon: usize,
    dag: Dmg,
}

/// Which time points of a [`SliceSet`] to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TimeSelector {
    /// Every `t ≤ T`.
    UpTo(usize),
    /// Only `t = T`.
    Exactly(usize),
}

/// Base vertices `D` at selected times: `D_{0:T}` or `D_T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceSet {
    pub vertices: VertexSet,
    pub time: TimeSelector,
}

impl SliceSet {
    pub fn up_to(vertices: VertexSet, t: usize) -> Self {
        SliceSet { vertices, time: TimeSelector::UpTo(t) }
    }

    pub fn exactly(vertices: VertexSet, t: usize) -> Self {
        SliceSet { vertices, time: TimeSelector::Exactly(t) }
    }
}

impl UnrolledDag {
    pub fn base(&self) -> &Dmg {
        &self.base
    }

    /// The last time point `T`; there are `T + 1` slices.
    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn dag(&self) -> &Dmg {
        &self.dag
    }

    /// The copy of `v` at time `t`.
    pub fn node(&self, v: VertexId, t: usize) -> VertexId {
        debug_assert!(t <= self.horizon && v.index() < self.base.order());
        VertexId::new(t * self.base.order() + v.index())
    }

    /// The base vertex and time of an unrolled vertex.
    pub fn slice_of(&self, x: VertexId) -> (VertexId, usize) {
        let n = self.base.order();
        (VertexId::new(x.index() % n), x.index() / n)
    }

    /// The unrolled vertices selected by `s`. Times beyond the horizon are
    /// ignored.
    pub fn select(&self, s: &SliceSet) -> Result<VertexSet> {
        self.base.check_set(&s.vertices)?;
        let times = match s.time {
            TimeSelector::UpTo(t) => 0..=t.min(self.horizon),
            TimeSelector::Exactly(t) if t <= self.horizon => t..=t,
            TimeSelector::Exactly(_) => return Ok(VertexSet::new()),
        };
        Ok(times.flat_map(|t| s.vertices.iter().map(move |v| (v, t))).map(|(v, t)| self.node(v, t)).collect())
    }
}

/// How many time points to unroll.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Horizon {
    Fixed(usize),
    /// [`proof_horizon`] of the graph.
    Auto,
}

impl Horizon {
    pub fn resolve(self, d: &Dmg) -> usize {
        match self {
            Horizon::Fixed(t) => t,
            Horizon::Auto => proof_horizon(d),
        }
    }
}

/// `3(|E| + 1) + 1`, a horizon at which rolled and unrolled separation are
/// known to agree. It is sufficient, not necessarily minimal.
pub fn proof_horizon(d: &Dmg) -> usize {
    3 * (d.edge_count() + 1) + 1
}

/// Unrolls the directed graph `d` over time points `0..=t`. A loop `u → u`
/// becomes the edges `u@s → u@t` for `s < t`.
pub fn unroll(d: &Dmg, t: usize) -> Result<UnrolledDag> {
    if !d.is_dg() {
        return Err(DmgError::NotDirected);
    }
    let n = d.order();
    let labels: Vec<String> =
        (0..=t).flat_map(|s| d.labels().iter().map(move |l| format!("{l}@{s}"))).collect();
    let node = |v: VertexId, s: usize| VertexId::new(s * n + v.index());
    let mut edges = Vec::new();
    for (u, v) in d.directed_edges() {
        for later in 1..=t {
            for earlier in 0..later {
                edges.push((node(u, earlier), node(v, later)));
            }
        }
    }
    let dag = Dmg::from_ids(labels, edges, std::iter::empty())?;
    Ok(UnrolledDag { base: d.clone(), horizon: t, dag })
}

/// Separation of `b` from `a` given `c` in the graph and in its unrolling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RollingCheck {
    /// μ-separation in the directed graph.
    pub rolled: bool,
    /// d-separation of `(A\C)_{0:T-1}` and `B_T` given `C_{0:T-1}` in the
    /// unrolled DAG.
    pub unrolled: bool,
}

fn unrolled_separated(u: &UnrolledDag, a: &VertexSet, b: &VertexSet, c: &VertexSet) -> Result<bool> {
    let t = u.horizon();
    let sources = u.select(&SliceSet::up_to(a.difference(c), t - 1))?;
    let targets = u.select(&SliceSet::exactly(b.clone(), t))?;
    let given = u.select(&SliceSet::up_to(c.clone(), t - 1))?;
    m_separated(u.dag(), &sources, &targets, &given)
}

/// Compares μ-separation in `d` with d-separation in its unrolling to `t`.
///
/// Rolled separation implies unrolled separation for every `t ≥ 1`; the
/// converse holds from [`proof_horizon`] on.
pub fn check_rolling_correspondence(
    d: &Dmg,
    a: &VertexSet,
    b: &VertexSet,
    c: &VertexSet,
    t: usize,
) -> Result<RollingCheck> {
    if t == 0 {
        return Err(DmgError::HorizonTooSmall { min: 1, given: 0 });
    }
    let u = unroll(d, t)?;
    let q = SeparationQuery::new(a.clone(), b.clone(), c.clone());
    Ok(RollingCheck { rolled: mu_separated(d, &q)?, unrolled: unrolled_separated(&u, a, b, c)? })
}

/// A singleton query `⟨{α}, {β} | C⟩` with its outcome at one horizon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RollingOutcome {
    pub alpha: VertexId,
    pub beta: VertexId,
    pub c: VertexSet,
    pub horizon: usize,
    pub check: RollingCheck,
}

/// Runs every singleton query over every conditioning set of `d` at each of
/// the given horizons, in parallel over queries.
pub fn rolling_sweep(d: &Dmg, horizons: &[usize], cap: usize) -> Result<Vec<RollingOutcome>> {
    let n = d.order();
    if n > cap {
        return Err(DmgError::CapExceeded { what: "rolling sweep vertices", limit: cap, required: n });
    }
    if let Some(&t) = horizons.iter().find(|&&t| t == 0) {
        return Err(DmgError::HorizonTooSmall { min: 1, given: t });
    }
    let unrolled = horizons.iter().map(|&t| unroll(d, t)).collect::<Result<Vec<_>>>()?;
    let queries: Vec<(VertexId, VertexId, u64)> = d
        .vertices()
        .flat_map(|a| d.vertices().map(move |b| (a, b)))
        .flat_map(|(a, b)| (0..1u64 << n).map(move |c| (a, b, c)))
        .collect();
    let rows = queries
        .par_iter()
        .map(|&(alpha, beta, mask)| {
            let (a, b, c) = (VertexSet::singleton(alpha), VertexSet::singleton(beta), VertexSet::from_mask(mask));
            let rolled = mu_separated(d, &SeparationQuery::new(a.clone(), b.clone(), c.clone()))?;
            unrolled
                .iter()
                .map(|u| {
                    Ok(RollingOutcome {
                        alpha,
                        beta,
                        c: c.clone(),
                        horizon: u.horizon(),
                        check: RollingCheck { rolled, unrolled: unrolled_separated(u, &a, &b, &c)? },
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(rows.into_iter().flatten().collect())
}
