//! Directed mixed graphs with μ-separation, latent projection and Markov
//! equivalence.

pub mod equivalence;
pub mod error;
pub mod format;
pub mod graph;
pub mod marginalize;
pub mod oracle;
pub mod separation;
pub mod timeseries;
pub mod vertex_set;

#[cfg(test)]
mod test_graphs;

pub use error::{DmgError, Result};
pub use graph::{Dmg, Edge, Mark, Move, Route, Step, UndirectedGraph, VertexId, Walk};
pub use vertex_set::VertexSet;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/separation.md")]
    mod separation {}
    #[doc = include_str!("../../../book/src/marginalization.md")]
    mod marginalization {}
    #[doc = include_str!("../../../book/src/inducing-paths.md")]
    mod inducing_paths {}
    #[doc = include_str!("../../../book/src/equivalence.md")]
    mod equivalence {}
    #[doc = include_str!("../../../book/src/time-series.md")]
    mod time_series {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/testing.md")]
    mod testing {}
}
