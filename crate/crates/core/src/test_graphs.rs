//! Small named graphs shared by unit tests.

use crate::graph::Dmg;

/// α → β, δ → δ, δ → γ, ε → β, ε → γ. Its projection onto {α, β, γ, δ} is
/// not a directed graph.
pub(crate) fn nonclosed_dg() -> Dmg {
    Dmg::from_edges(
        &["α", "β", "γ", "δ", "ε"],
        &["α -> β", "δ -> δ", "δ -> γ", "ε -> β", "ε -> γ"],
    )
    .unwrap()
}

/// Directed graph of six processes with loops at every vertex.
pub(crate) fn gateway_dg() -> Dmg {
    Dmg::from_edges(
        &["A", "T", "M", "H", "L", "I"],
        &[
            "A -> T", "T -> M", "L -> A", "A -> L", "A -> M", "M -> L", "M -> H", "L -> H",
            "H -> L", "I -> T", "M -> T", "A -> A", "T -> T", "M -> M", "H -> H", "L -> L",
            "I -> I",
        ],
    )
    .unwrap()
}

/// β ⇄ α, β ↔ γ, γ → β, γ ↔ δ, δ → γ.
pub(crate) fn inducing_path_graph() -> Dmg {
    Dmg::from_edges(
        &["α", "β", "γ", "δ"],
        &["β -> α", "α -> β", "β <-> γ", "γ -> β", "γ <-> δ", "δ -> γ"],
    )
    .unwrap()
}

/// Maximal graph in which β and δ are inseparable but not adjacent.
pub(crate) fn nonadjacent_inseparable() -> Dmg {
    Dmg::from_edges(
        &["α", "β", "γ", "δ"],
        &[
            "α -> β", "β -> γ", "γ -> β", "γ <-> δ", "δ -> γ", "γ -> γ", "δ -> δ", "γ <-> γ",
            "δ <-> δ",
        ],
    )
    .unwrap()
}

const CLASS_LABELS: [&str; 4] = ["α", "β", "γ", "δ"];
const CLASS_LOOPS: [&str; 6] = ["α -> α", "β -> β", "δ -> δ", "α <-> α", "β <-> β", "δ <-> δ"];

/// Maximal element of a six-member equivalence class.
pub(crate) fn class_maximal() -> Dmg {
    class_member(&[])
}

/// Members of that class: the maximal graph minus some non-loop edges.
pub(crate) fn class_member(drop: &[&str]) -> Dmg {
    let all = ["α -> β", "α <-> β", "γ -> β", "γ -> δ", "δ -> β", "δ <-> β"];
    let edges: Vec<&str> = all
        .iter()
        .copied()
        .filter(|e| !drop.contains(e))
        .chain(CLASS_LOOPS)
        .collect();
    Dmg::from_edges(&CLASS_LABELS, &edges).unwrap()
}
