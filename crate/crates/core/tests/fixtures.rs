mod common;

use common::{fixture, fixture_text, graph_fixtures};
use dmg_core::equivalence::{dmeg, is_maximal, markov_equivalent, separable, MODEL_CAP};
use dmg_core::format::{DmegDocument, GraphDocument};
use dmg_core::separation::{mu_separated, SeparationQuery};
use dmg_core::Edge;

#[test]
fn fixtures_round_trip() {
    for (name, _) in graph_fixtures() {
        let doc = GraphDocument::parse(&fixture_text(&name)).unwrap();
        let once = doc.canonicalize().unwrap();
        assert_eq!(once.canonicalize().unwrap(), once, "{name}");
        let text = once.to_json();
        assert_eq!(GraphDocument::parse(&text).unwrap().to_json(), text, "{name}");
        assert_eq!(once.to_graph().unwrap(), doc.to_graph().unwrap(), "{name}");
    }
}

#[test]
fn fixture_files_are_canonical() {
    for (name, _) in graph_fixtures() {
        let text = fixture_text(&name);
        assert_eq!(GraphDocument::parse(&text).unwrap().canonicalize().unwrap().to_json(), text, "{name}");
    }
    let text = fixture_text("class_dmeg.json");
    assert_eq!(DmegDocument::parse(&text).unwrap().to_json(), text);
}

#[test]
fn class_fixtures() {
    let top = fixture("class_member_1.json");
    assert_eq!(top.edge_count(), 12);
    assert!(is_maximal(&top, MODEL_CAP).unwrap());
    for i in 2..=6 {
        let member = fixture(&format!("class_member_{i}.json"));
        assert!(markov_equivalent(&top, &member, MODEL_CAP).unwrap(), "member {i}");
        assert!(!is_maximal(&member, MODEL_CAP).unwrap());
    }
    let expected = DmegDocument::parse(&fixture_text("class_dmeg.json")).unwrap().to_dmeg(MODEL_CAP).unwrap();
    assert_eq!(dmeg(&top, MODEL_CAP).unwrap(), expected);
}

#[test]
fn self_separation_fixture() {
    let g = fixture("self_separation.json");
    let (a, c) = (g.require("α").unwrap(), g.require("γ").unwrap());
    let q = SeparationQuery::from_labels(&g, &["α"], &["α"], &["γ"]).unwrap();
    assert!(mu_separated(&g, &q).unwrap());
    let h = g.add_edge(Edge::bidirected(a, c)).unwrap();
    assert_eq!(separable(&h, a, a).unwrap(), None);
}

#[test]
fn walk_with_loop_fixture() {
    let g = fixture("walk_with_loop.json");
    let q = SeparationQuery::from_labels(&g, &["α"], &["β"], &[] as &[&str]).unwrap();
    assert!(!mu_separated(&g, &q).unwrap());
    let q = SeparationQuery::from_labels(&g, &["α"], &["β"], &["γ"]).unwrap();
    assert!(mu_separated(&g, &q).unwrap());
}
