use std::collections::HashSet;

use gasket_core::coloring::{three_coloring, validate_coloring};
use gasket_core::graph::{edge_count, side_length, vertex_count};
use gasket_core::io::{export_to_string, from_json, ExportFormat};
use gasket_core::{generate, Adjacency, Coord, Corner, GasketError};
use proptest::prelude::*;

mod common;

fn pow3(k: u32) -> u128 {
    3u128.pow(k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn counts_and_degrees(n in 1u32..=8) {
        let g = generate(n).unwrap();
        prop_assert_eq!(g.vertex_count() as u128 * 2, 3 * (pow3(n - 1) + 1));
        prop_assert_eq!(g.edge_count() as u128, pow3(n));
        prop_assert_eq!(g.vertex_count() as u128, vertex_count(n));
        prop_assert_eq!(g.edge_count() as u128, edge_count(n));
        let degree_sum: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * g.edge_count());
        for v in 0..g.vertex_count() {
            let want = if g.corners().contains(&v) { 2 } else { 4 };
            prop_assert_eq!(g.degree(v), want);
        }
    }

    #[test]
    fn coloring_is_proper(n in 1u32..=8) {
        let g = generate(n).unwrap();
        let c = three_coloring(&g);
        prop_assert!(validate_coloring(&g, &c).is_ok());
        for &(u, v) in g.edges() {
            prop_assert_ne!(c.color(u), c.color(v));
        }
        let used: HashSet<u8> = c.assignment().iter().copied().collect();
        prop_assert_eq!(used.len(), 3);
    }

    #[test]
    fn coordinates_stay_in_the_triangle(n in 1u32..=8) {
        let g = generate(n).unwrap();
        let s = side_length(n);
        for (i, p) in g.coords().iter().enumerate() {
            prop_assert!(p.a + p.b <= s);
            prop_assert_eq!(g.index_of(*p), Some(i));
        }
        for w in g.coords().windows(2) {
            prop_assert!(w[0].b > w[1].b || (w[0].b == w[1].b && w[0].a < w[1].a));
        }
    }

    #[test]
    fn json_round_trip(n in 1u32..=6) {
        let g = generate(n).unwrap();
        let text = export_to_string(&g, ExportFormat::Json);
        prop_assert_eq!(from_json(&text).unwrap(), g);
    }
}

#[test]
fn subcopies_partition_edges() {
    for n in 2..=8 {
        let g = generate(n).unwrap();
        let smaller = generate(n - 1).unwrap();
        let mut seen: HashSet<(Coord, Coord)> = HashSet::new();
        let mut vertices: HashSet<Coord> = HashSet::new();
        for c in Corner::ALL {
            let (copy, off) = g.subcopy(c).unwrap();
            assert_eq!(copy, smaller, "level {n} copy {c}");
            for &(u, v) in copy.edges() {
                let lift = |x: usize| {
                    let p = copy.coord(x);
                    Coord::new(p.a + off.a, p.b + off.b)
                };
                assert!(seen.insert((lift(u), lift(v))), "edge in two copies");
            }
            vertices.extend(
                copy.coords()
                    .iter()
                    .map(|p| Coord::new(p.a + off.a, p.b + off.b)),
            );
        }
        assert_eq!(seen.len(), g.edge_count());
        assert_eq!(vertices.len(), g.vertex_count());
    }
}

#[test]
fn middles_are_shared_by_two_copies() {
    let g = generate(4).unwrap();
    let m = g.middles().unwrap();
    assert_eq!(
        m.map(|v| g.coord(v)),
        [Coord::new(4, 0), Coord::new(0, 4), Coord::new(4, 4)]
    );
}

#[test]
fn level_four_matches_the_figure() {
    let g = generate(4).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (42, 81));
    assert_eq!(g.coord(0), Coord::new(0, 8));
    assert_eq!(g.corner(Corner::T), 0);
    assert_eq!(g.corner(Corner::L), 33);
    assert_eq!(g.corner(Corner::R), 41);
}

#[test]
fn is_connected_with_unit_steps() {
    for n in 1..=7 {
        let g = generate(n).unwrap();
        let adj = common::adjacency_lists(&g);
        assert!(common::bfs(&adj, 0).iter().all(Option::is_some));
        for &(u, v) in g.edges() {
            let (p, q) = (g.coord(u), g.coord(v));
            let step = (q.a as i64 - p.a as i64, q.b as i64 - p.b as i64);
            assert!(matches!(
                step,
                (1, 0) | (-1, 0) | (0, 1) | (0, -1) | (1, -1) | (-1, 1)
            ));
        }
    }
}

#[test]
fn exports_are_deterministic() {
    for format in [
        ExportFormat::Dot,
        ExportFormat::Json,
        ExportFormat::EdgeList,
    ] {
        let a = export_to_string(&generate(5).unwrap(), format);
        let b = export_to_string(&generate(5).unwrap(), format);
        assert_eq!(a, b);
    }
    let dot = export_to_string(&generate(2).unwrap(), ExportFormat::Dot);
    assert!(dot.starts_with("graph S2 {"));
    assert_eq!(dot.matches(" -- ").count(), 9);
    let edges = export_to_string(&generate(3).unwrap(), ExportFormat::EdgeList);
    assert_eq!(edges.lines().count(), 27);
}

#[test]
fn levels_outside_range_are_rejected() {
    assert!(matches!(
        generate(0),
        Err(GasketError::LevelOutOfRange { .. })
    ));
    assert!(matches!(
        generate(13),
        Err(GasketError::LevelOutOfRange { .. })
    ));
    assert!(generate(1).unwrap().subcopy(Corner::T).is_err());
}

#[test]
fn malformed_documents_are_rejected() {
    let good = export_to_string(&generate(2).unwrap(), ExportFormat::Json);
    assert!(from_json("").is_err());
    assert!(from_json("{}").is_err());
    assert!(from_json(&good.replace("\"level\":2", "\"level\":3")).is_err());
    assert!(from_json(&good.replace("\"side\":2", "\"side\":4")).is_err());
    assert!(from_json(&good.replacen('{', "{\"extra\":1,", 1)).is_err());
}
