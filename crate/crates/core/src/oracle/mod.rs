//! Slow reference implementations.
//!
//! Everything here follows the definitions as literally as possible and is
//! meant for cross-checking the fast procedures on small graphs.

mod bruteforce;
mod random;
mod routes;
mod selfcheck;

pub use bruteforce::{
    collider_connected_bruteforce, exhaustive_separator, inducing_path_exists_bruteforce,
    latent_projection_bruteforce, m_separated_bruteforce, mu_separated_bruteforce,
    mu_separation_table_bruteforce,
};
pub use random::{Density, GraphSampler};
pub use routes::{enumerate_routes, RouteIterator, ROUTE_CAP};
pub use selfcheck::{cross_validate, selfcheck, CheckFailure, SelfCheckConfig, SelfCheckReport};

use crate::equivalence::IndependenceModel;
use crate::error::{DmgError, Result};
use crate::graph::VertexId;
use crate::vertex_set::VertexSet;

/// A singleton query `⟨{α}, {β} | C⟩` on which two models disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelDifference {
    pub alpha: VertexId,
    pub beta: VertexId,
    pub c: VertexSet,
    /// Whether the first model has the separation.
    pub in_first: bool,
}

/// Lists every query on which the two models disagree.
pub fn model_diff(m1: &IndependenceModel, m2: &IndependenceModel) -> Result<Vec<ModelDifference>> {
    if m1.order() != m2.order() {
        return Err(DmgError::VertexSetMismatch);
    }
    let n = m1.order();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let (alpha, beta) = (VertexId::new(a), VertexId::new(b));
            for mask in 0..1u64 << n {
                let s1 = m1.separated(alpha, beta, mask);
                if s1 != m2.separated(alpha, beta, mask) {
                    out.push(ModelDifference { alpha, beta, c: VertexSet::from_mask(mask), in_first: s1 });
                }
            }
        }
    }
    Ok(out)
}
