use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Dmg, VertexId};

/// Edge probabilities for random graphs, per edge type.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Density {
    pub directed: f64,
    pub bidirected: f64,
    /// Probability of each directed loop.
    pub loops: f64,
    /// Probability of each bidirected loop.
    pub bidirected_loops: f64,
}

impl Density {
    pub fn uniform(p: f64) -> Self {
        Density { directed: p, bidirected: p, loops: p, bidirected_loops: p }
    }

    pub fn directed_only(p: f64) -> Self {
        Density { directed: p, bidirected: 0.0, loops: p, bidirected_loops: 0.0 }
    }
}

/// Seeded source of random graphs; the same seed gives the same sequence.
pub struct GraphSampler {
    rng: ChaCha8Rng,
}

fn labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match u8::try_from(i) {
            Ok(i) if i < 26 => char::from(b'a' + i).to_string(),
            _ => format!("v{i}"),
        })
        .collect()
}

impl GraphSampler {
    pub fn new(seed: u64) -> Self {
        GraphSampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Order drawn uniformly from `min..=max`.
    pub fn order(&mut self, min: usize, max: usize) -> usize {
        self.rng.gen_range(min..=max)
    }

    pub fn dmg(&mut self, n: usize, density: Density) -> Dmg {
        let mut directed = Vec::new();
        let mut bidirected = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let p = if i == j { density.loops } else { density.directed };
                if self.rng.gen_bool(p) {
                    directed.push((VertexId::new(i), VertexId::new(j)));
                }
            }
            for j in i..n {
                let p = if i == j { density.bidirected_loops } else { density.bidirected };
                if self.rng.gen_bool(p) {
                    bidirected.push((VertexId::new(i), VertexId::new(j)));
                }
            }
        }
        Dmg::from_ids(labels(n), directed, bidirected).expect("generated edges are valid")
    }

    pub fn dg(&mut self, n: usize, directed: f64, loops: f64) -> Dmg {
        self.dmg(n, Density { directed, bidirected: 0.0, loops, bidirected_loops: 0.0 })
    }

    /// Directed graph with at most `max_edges` edges, drawn by keeping a
    /// random subset of all ordered pairs.
    pub fn dg_with_edge_budget(&mut self, n: usize, density: f64, max_edges: usize) -> Dmg {
        let mut pairs: Vec<(VertexId, VertexId)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (VertexId::new(i), VertexId::new(j))))
            .filter(|_| self.rng.gen_bool(density))
            .collect();
        while pairs.len() > max_edges {
            let k = self.rng.gen_range(0..pairs.len());
            pairs.swap_remove(k);
        }
        Dmg::from_ids(labels(n), pairs, std::iter::empty()).expect("generated edges are valid")
    }

    /// Acyclic directed graph: edges only go from lower to higher index.
    pub fn dag(&mut self, n: usize, density: f64) -> Dmg {
        let mut directed = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.rng.gen_bool(density) {
                    directed.push((VertexId::new(i), VertexId::new(j)));
                }
            }
        }
        Dmg::from_ids(labels(n), directed, std::iter::empty()).expect("generated edges are valid")
    }
}
