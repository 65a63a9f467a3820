use std::path::PathBuf;

use dmg_core::format::GraphDocument;
use dmg_core::Dmg;

pub fn fixture_dir() -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures"].iter().collect()
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture_dir().join(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn fixture(name: &str) -> Dmg {
    GraphDocument::parse(&fixture_text(name)).and_then(|d| d.to_graph()).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// All graph fixtures, by file name.
#[allow(dead_code)]
pub fn graph_fixtures() -> Vec<(String, Dmg)> {
    let mut names: Vec<String> = std::fs::read_dir(fixture_dir())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n.ends_with(".json") && n != "class_dmeg.json")
        .collect();
    names.sort();
    names.into_iter().map(|n| (n.clone(), fixture(&n))).collect()
}
