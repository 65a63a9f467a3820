use rayon::prelude::*;

use crate::error::{DmgError, Result};
use crate::graph::{Dmg, VertexId};
use crate::separation::Search;
use crate::vertex_set::VertexSet;

/// Default bound on the number of vertices for model tables.
pub const MODEL_CAP: usize = 12;

/// Conditioning sets handled per parallel task.
const CHUNK: usize = 64;

/// The μ-separation model of a graph at singleton resolution.
///
/// Entry `(α, β, C)` records whether `β` is μ-separated from `α` given `C`.
/// Set-level statements follow: `B` is separated from `A` given `C` iff every
/// `β ∈ B` is separated from every `α ∈ A`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IndependenceModel {
    n: usize,
    bits: Vec<u64>,
}

impl IndependenceModel {
    fn index(&self, alpha: VertexId, beta: VertexId, mask: u64) -> usize {
        ((alpha.index() * self.n + beta.index()) << self.n) | mask as usize
    }

    fn empty(n: usize) -> Self {
        let len = (n * n) << n;
        IndependenceModel { n, bits: vec![0; len.div_ceil(64)] }
    }

    fn set(&mut self, i: usize) {
        self.bits[i / 64] |= 1 << (i % 64);
    }

    /// Builds the full table with one walk search per `(α, C)`. Fails for
    /// graphs with more than `cap` vertices.
    pub fn of(g: &Dmg, cap: usize) -> Result<Self> {
        let n = g.order();
        if n > cap {
            return Err(DmgError::CapExceeded { what: "model vertices", limit: cap, required: n });
        }
        let total = 1usize << n;
        // Each task walks its masks in Gray-code order so consecutive
        // conditioning sets differ in one vertex.
        let rows: Vec<Vec<(u64, Vec<VertexSet>)>> = (0..total.div_ceil(CHUNK))
            .into_par_iter()
            .map(|chunk| {
                let lo = chunk * CHUNK;
                let hi = (lo + CHUNK).min(total);
                let mut c = VertexSet::from_mask((lo ^ (lo >> 1)) as u64);
                let mut out = Vec::with_capacity(hi - lo);
                for i in lo..hi {
                    if i > lo {
                        let flip = VertexId::new(i.trailing_zeros() as usize);
                        if !c.remove(flip) {
                            c.insert(flip);
                        }
                    }
                    let open = g.ancestors_unchecked(&c);
                    let mut search = Search::with_gates(g, &c, open);
                    let reached = g
                        .vertices()
                        .map(|alpha| {
                            search.run(&VertexSet::singleton(alpha), None);
                            search.reached_with_head()
                        })
                        .collect();
                    out.push((c.to_mask(), reached));
                }
                out
            })
            .collect();
        let mut model = Self::empty(n);
        for (mask, reached) in rows.into_iter().flatten() {
            for alpha in g.vertices() {
                for beta in g.vertices() {
                    if !reached[alpha.index()].contains(beta) {
                        let i = model.index(alpha, beta, mask);
                        model.set(i);
                    }
                }
            }
        }
        Ok(model)
    }

    /// Model from a table laid out as `((α·n + β) << n) | C`.
    pub fn from_table(n: usize, table: &[bool]) -> Result<Self> {
        if table.len() != (n * n) << n {
            return Err(DmgError::VertexSetMismatch);
        }
        let mut model = Self::empty(n);
        for (i, &sep) in table.iter().enumerate() {
            if sep {
                model.set(i);
            }
        }
        Ok(model)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Whether `β` is separated from `α` given the set with bit mask `c`.
    pub fn separated(&self, alpha: VertexId, beta: VertexId, c: u64) -> bool {
        let i = self.index(alpha, beta, c);
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn separated_by(&self, alpha: VertexId, beta: VertexId, c: &VertexSet) -> bool {
        self.separated(alpha, beta, c.to_mask())
    }

    /// `⟨A, B | C⟩` by conjunction over singletons.
    pub fn separated_sets(&self, a: &VertexSet, b: &VertexSet, c: &VertexSet) -> bool {
        let mask = c.to_mask();
        a.iter().all(|x| b.iter().all(|y| self.separated(x, y, mask)))
    }

    /// Some `C ⊆ V \ {α}` separating `β` from `α`.
    pub fn separator(&self, alpha: VertexId, beta: VertexId) -> Option<VertexSet> {
        let without = !(1u64 << alpha.index());
        (0..1u64 << self.n)
            .filter(|m| m & without == *m)
            .find(|&m| self.separated(alpha, beta, m))
            .map(VertexSet::from_mask)
    }

    /// Whether `β` is inseparable from `α`, i.e. `α ∈ u(β)`.
    pub fn inseparable(&self, alpha: VertexId, beta: VertexId) -> bool {
        self.separator(alpha, beta).is_none()
    }

    /// The marginal model over `o`, with vertices renumbered in ascending
    /// order of `o`.
    pub fn restrict(&self, o: &VertexSet) -> Result<Self> {
        if o.last().is_some_and(|v| v.index() >= self.n) {
            return Err(DmgError::VertexOutOfRange { index: o.last().unwrap().index(), order: self.n });
        }
        let members: Vec<VertexId> = o.iter().collect();
        let k = members.len();
        let mut out = Self::empty(k);
        for sub in 0..1u64 << k {
            let mask = members
                .iter()
                .enumerate()
                .filter(|(i, _)| sub >> i & 1 == 1)
                .fold(0u64, |m, (_, v)| m | 1 << v.index());
            for (i, &a) in members.iter().enumerate() {
                for (j, &b) in members.iter().enumerate() {
                    if self.separated(a, b, mask) {
                        let idx = out.index(VertexId::new(i), VertexId::new(j), sub);
                        out.set(idx);
                    }
                }
            }
        }
        Ok(out)
    }
}

impl std::fmt::Debug for IndependenceModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let count: u32 = self.bits.iter().map(|w| w.count_ones()).sum();
        write!(f, "IndependenceModel {{ n: {}, separations: {} }}", self.n, count)
    }
}
