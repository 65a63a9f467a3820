use std::collections::VecDeque;

use super::VertexId;
use crate::vertex_set::VertexSet;

/// Simple undirected graph used for moralization-style criteria.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGraph {
    labels: Vec<String>,
    adjacency: Vec<VertexSet>,
}

impl UndirectedGraph {
    pub fn new(labels: Vec<String>) -> Self {
        let adjacency = vec![VertexSet::new(); labels.len()];
        UndirectedGraph { labels, adjacency }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Adds `u - v`. Self-adjacency is ignored.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) {
        if u != v {
            self.adjacency[u.index()].insert(v);
            self.adjacency[v.index()].insert(u);
        }
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u.index()].contains(v)
    }

    pub fn neighbors(&self, v: VertexId) -> &VertexSet {
        &self.adjacency[v.index()]
    }

    /// Edges as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, adj)| {
            let u = VertexId::new(u);
            adj.iter().filter(move |&v| u < v).map(move |v| (u, v))
        })
    }

    /// Whether every path from `a \ c` to `b` passes through `c`.
    pub fn separated(&self, a: &VertexSet, b: &VertexSet, c: &VertexSet) -> bool {
        let mut seen = a.difference(c);
        let mut queue: VecDeque<VertexId> = seen.iter().collect();
        while let Some(u) = queue.pop_front() {
            if b.contains(u) {
                return false;
            }
            for w in self.neighbors(u) {
                if !c.contains(w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        true
    }
}
