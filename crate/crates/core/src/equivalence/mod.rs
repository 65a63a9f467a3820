//! Inducing paths, separability and Markov equivalence.
//!
//! Two graphs are Markov equivalent when they induce the same μ-separation
//! model. Every equivalence class has a greatest element, the maximal graph,
//! built from the potential parents and potential siblings of the model.

mod inducing;
mod maximal;
mod model;

pub use inducing::{
    d_set, find_inducing_path, find_long_inducing_path, inducing_path_exists, separable,
    InducingPathKind,
};
pub use maximal::{
    dmeg, equivalence_class, is_maximal, markov_equivalent, maximal_dmg, potential_parent,
    potential_sibling, Dmeg, CLASS_EDGE_CAP,
};
pub use model::{IndependenceModel, MODEL_CAP};
