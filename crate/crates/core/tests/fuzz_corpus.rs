use std::fs;
use std::path::PathBuf;

use gasket_core::io::{export_to_string, from_json, ExportFormat};
use gasket_core::pebbling::{ConfigSpec, VertexRef};
use gasket_core::{generate, Corner};

fn seeds(target: &str) -> Vec<(PathBuf, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .map(|p| {
            let text = fs::read_to_string(&p).unwrap();
            (p, text)
        })
        .collect();
    out.sort();
    assert!(!out.is_empty());
    out
}

#[test]
fn graph_seeds() {
    let mut accepted = 0;
    for (path, text) in seeds("parse_graph_json") {
        if let Ok(g) = from_json(&text) {
            let again = from_json(&export_to_string(&g, ExportFormat::Json)).unwrap();
            assert_eq!(g, again, "{}", path.display());
            accepted += 1;
        }
    }
    assert!(accepted >= 3);
}

#[test]
fn config_seeds() {
    let g = generate(2).unwrap();
    let resolved = seeds("parse_pebble_config")
        .iter()
        .filter_map(|(_, text)| text.parse::<ConfigSpec>().ok())
        .filter(|spec| spec.resolve(&g).is_ok())
        .count();
    assert!(resolved >= 4);
}

#[test]
fn name_seeds() {
    for (_, text) in seeds("parse_names") {
        if let Ok(c) = text.parse::<Corner>() {
            assert_eq!(c.as_str().parse::<Corner>().unwrap(), c);
        }
        let _ = text.parse::<VertexRef>();
        let _ = text.parse::<ExportFormat>();
    }
}
