use rayon::prelude::*;

use super::bruteforce::{latent_projection_bruteforce, mu_separation_table_bruteforce};
use super::random::{Density, GraphSampler};
use super::routes::ROUTE_CAP;
use crate::equivalence::{
    inducing_path_exists, is_maximal, markov_equivalent, maximal_dmg, separable, IndependenceModel,
    InducingPathKind, MODEL_CAP,
};
use crate::error::Result;
use crate::graph::{Dmg, VertexId};
use crate::marginalize::{latent_projection, verify_marginalization_invariance};
use crate::separation::{mu_separated_via_augmentation, SeparationQuery};
use crate::vertex_set::VertexSet;

/// Random graphs to cross-check.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SelfCheckConfig {
    pub seed: u64,
    pub density: f64,
    pub count: usize,
    pub max_order: usize,
    /// Graphs up to this order also get the maximal-graph checks.
    pub max_order_for_maximal: usize,
}

impl Default for SelfCheckConfig {
    fn default() -> Self {
        SelfCheckConfig { seed: 0, density: 0.3, count: 100, max_order: 5, max_order_for_maximal: 4 }
    }
}

/// One disagreement between a fast procedure and its reference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckFailure {
    pub graph: String,
    pub check: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SelfCheckReport {
    pub graphs: usize,
    pub comparisons: usize,
    pub failures: Vec<CheckFailure>,
}

struct Collector<'g> {
    g: &'g Dmg,
    comparisons: usize,
    failures: Vec<CheckFailure>,
}

impl Collector<'_> {
    fn expect(&mut self, ok: bool, check: &'static str, detail: impl FnOnce() -> String) {
        self.comparisons += 1;
        if !ok {
            self.failures.push(CheckFailure { graph: self.g.to_string(), check, detail: detail() });
        }
    }
}

/// Compares every fast procedure on `g` with its reference and returns the
/// number of comparisons and the failures.
pub fn cross_validate(g: &Dmg, with_maximal: bool) -> Result<(usize, Vec<CheckFailure>)> {
    let mut out = Collector { g, comparisons: 0, failures: Vec::new() };
    let n = g.order();
    let model = IndependenceModel::of(g, MODEL_CAP)?;
    let brute = mu_separation_table_bruteforce(g, ROUTE_CAP)?;
    out.expect(IndependenceModel::from_table(n, &brute)? == model, "walk search vs routes", String::new);
    for alpha in g.vertices() {
        for beta in g.vertices() {
            for mask in 0..1u64 << n {
                let q = SeparationQuery::new(
                    VertexSet::singleton(alpha),
                    VertexSet::singleton(beta),
                    VertexSet::from_mask(mask),
                );
                let aug = mu_separated_via_augmentation(g, &q)?;
                let walk = model.separated(alpha, beta, mask);
                out.expect(aug == walk, "walk search vs augmentation", || format!("{q:?}"));
            }
            let sep = separable(g, alpha, beta)?;
            let ip = inducing_path_exists(g, alpha, beta, InducingPathKind::Any)?;
            out.expect(sep.is_none() == ip, "separability vs inducing path", || label_pair(g, alpha, beta));
            out.expect(sep.is_none() == model.inseparable(alpha, beta), "separability vs model", || {
                label_pair(g, alpha, beta)
            });
            if let Some(d) = sep {
                out.expect(model.separated_by(alpha, beta, &d), "D set separates", || label_pair(g, alpha, beta));
            }
        }
    }
    for o in g.all_vertices().subsets() {
        let fast = latent_projection(g, &o)?;
        let slow = latent_projection_bruteforce(g, &o, ROUTE_CAP)?;
        out.expect(fast == slow, "projection vs definition", || format!("O = {o:?}"));
        let report = verify_marginalization_invariance(g, &o, MODEL_CAP)?;
        out.expect(report.violations.is_empty(), "marginalization invariance", || format!("O = {o:?}"));
    }
    if with_maximal {
        let max = maximal_dmg(g, MODEL_CAP)?;
        out.expect(markov_equivalent(g, &max, MODEL_CAP)?, "maximal graph equivalent", String::new);
        out.expect(max.is_supergraph(g)?, "maximal graph supergraph", String::new);
        out.expect(is_maximal(&max, MODEL_CAP)?, "maximal graph idempotent", String::new);
    }
    Ok((out.comparisons, out.failures))
}

fn label_pair(g: &Dmg, a: VertexId, b: VertexId) -> String {
    format!("α = {}, β = {}", g.label(a), g.label(b))
}

/// Cross-validates `count` random graphs drawn from `seed`, in parallel.
/// Orders are uniform in `1..=max_order`.
pub fn selfcheck(config: &SelfCheckConfig) -> Result<SelfCheckReport> {
    let mut sampler = GraphSampler::new(config.seed);
    let graphs: Vec<Dmg> = (0..config.count)
        .map(|_| {
            let n = sampler.order(1, config.max_order);
            sampler.dmg(n, Density::uniform(config.density))
        })
        .collect();
    let results = graphs
        .par_iter()
        .map(|g| cross_validate(g, g.order() <= config.max_order_for_maximal))
        .collect::<Result<Vec<_>>>()?;
    let mut report = SelfCheckReport { graphs: graphs.len(), ..Default::default() };
    for (comparisons, failures) in results {
        report.comparisons += comparisons;
        report.failures.extend(failures);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_selfcheck_is_clean() {
        let config = SelfCheckConfig { seed: 3, count: 20, max_order: 4, ..Default::default() };
        let report = selfcheck(&config).unwrap();
        assert_eq!(report.graphs, 20);
        assert!(report.comparisons > 0);
        assert_eq!(report.failures, []);
    }
}
