use std::collections::BTreeSet;

use gasket_core::certificate::{validate_cycle, validate_path};
use gasket_core::hamilton::{
    avoiding_path_length_range, avoiding_path_of_length, cycle_length_range, cycle_of_length,
    ham_cycle, ham_path, ham_path_avoid, path_length_range, path_of_length,
};
use gasket_core::{generate, Adjacency, Corner, GasketError};

mod common;

const PAIRS: [(Corner, Corner); 6] = [
    (Corner::T, Corner::L),
    (Corner::T, Corner::R),
    (Corner::L, Corner::T),
    (Corner::L, Corner::R),
    (Corner::R, Corner::T),
    (Corner::R, Corner::L),
];

#[test]
fn hamiltonian_paths_and_cycles_up_to_level_eight() {
    for n in 1..=8 {
        let g = generate(n).unwrap();
        let nv = g.vertex_count();
        for (from, to) in PAIRS {
            let p = ham_path(&g, from, to).unwrap();
            assert!(common::is_simple_walk(&g, &p.vertices, false));
            assert_eq!(p.vertices.len(), nv);
            assert_eq!(p.start(), Some(g.corner(from)));
            assert_eq!(p.end(), Some(g.corner(to)));

            let q = ham_path_avoid(&g, from, to).unwrap();
            let third = g.corner(Corner::third(from, to));
            assert!(common::is_simple_walk(&g, &q.vertices, false));
            assert_eq!(q.vertices.len(), nv - 1);
            assert!(!q.vertices.contains(&third));
        }
        let c = ham_cycle(&g).unwrap();
        assert!(common::is_simple_walk(&g, &c.vertices, true));
        assert_eq!(c.len(), nv);
    }
}

#[test]
fn equal_corners_are_rejected() {
    let g = generate(3).unwrap();
    assert!(matches!(
        ham_path(&g, Corner::T, Corner::T),
        Err(GasketError::InvalidCorners { .. })
    ));
    assert!(ham_path_avoid(&g, Corner::L, Corner::L).is_err());
}

#[test]
fn every_admissible_path_length_up_to_level_four() {
    for n in 1..=4 {
        let g = generate(n).unwrap();
        let (lo, hi) = path_length_range(n);
        let (alo, ahi) = avoiding_path_length_range(n);
        for (from, to) in PAIRS {
            for len in lo..=hi {
                let p = path_of_length(&g, from, to, len).unwrap();
                assert_eq!(p.len(), len);
                validate_path(&g, &p, g.corner(from), g.corner(to)).unwrap();
            }
            for len in alo..=ahi {
                let p = avoiding_path_of_length(&g, from, to, len).unwrap();
                assert_eq!(p.len(), len);
                assert!(!p.vertices.contains(&g.corner(Corner::third(from, to))));
            }
            assert!(matches!(
                path_of_length(&g, from, to, hi + 1),
                Err(GasketError::LengthOutOfRange { .. })
            ));
            if lo > 0 {
                assert!(path_of_length(&g, from, to, lo - 1).is_err());
            }
        }
    }
}

#[test]
fn every_cycle_length_up_to_level_five() {
    for n in 1..=5 {
        let g = generate(n).unwrap();
        let (lo, hi) = cycle_length_range(n);
        assert_eq!((lo, hi), (3, g.vertex_count()));
        for len in lo..=hi {
            let c = cycle_of_length(&g, len).unwrap();
            assert_eq!(c.len(), len);
            validate_cycle(&g, &c).unwrap();
        }
        assert!(cycle_of_length(&g, 2).is_err());
        assert!(cycle_of_length(&g, hi + 1).is_err());
    }
}

#[test]
fn sampled_lengths_at_higher_levels() {
    for n in 6..=8 {
        let g = generate(n).unwrap();
        let (lo, hi) = path_length_range(n);
        for len in (lo..=hi).step_by(97).chain([hi]) {
            let p = path_of_length(&g, Corner::L, Corner::R, len).unwrap();
            validate_path(&g, &p, g.corner(Corner::L), g.corner(Corner::R)).unwrap();
        }
        let (lo, hi) = cycle_length_range(n);
        for len in (lo..=hi).step_by(89).chain([hi - 1, hi]) {
            let c = cycle_of_length(&g, len).unwrap();
            assert_eq!(c.len(), len);
            validate_cycle(&g, &c).unwrap();
        }
    }
}

#[test]
fn length_sets_match_exhaustive_enumeration() {
    for n in 2..=3 {
        let g = generate(n).unwrap();
        let adj = common::adjacency_lists(&g);
        for (from, to) in PAIRS {
            let (u, v) = (g.corner(from), g.corner(to));
            let enumerated = common::simple_path_lengths(&adj, u, v);
            let built: BTreeSet<usize> = (0..=g.vertex_count())
                .filter(|&len| path_of_length(&g, from, to, len).is_ok())
                .collect();
            assert_eq!(built, enumerated, "level {n} {from}->{to}");

            let third = g.corner(Corner::third(from, to));
            let mut cut = adj.clone();
            cut[third].clear();
            for list in cut.iter_mut() {
                list.retain(|&w| w != third);
            }
            let enumerated = common::simple_path_lengths(&cut, u, v);
            let built: BTreeSet<usize> = (0..=g.vertex_count())
                .filter(|&len| avoiding_path_of_length(&g, from, to, len).is_ok())
                .collect();
            assert_eq!(built, enumerated, "level {n} avoiding {from}->{to}");
        }
        let enumerated = common::simple_cycle_lengths(&adj);
        let built: BTreeSet<usize> = (0..=g.vertex_count() + 1)
            .filter(|&len| cycle_of_length(&g, len).is_ok())
            .collect();
        assert_eq!(built, enumerated, "level {n} cycles");
    }
}

#[test]
fn level_two_is_hamiltonian_by_brute_force() {
    let g = generate(2).unwrap();
    let adj = common::adjacency_lists(&g);
    let lengths = common::simple_cycle_lengths(&adj);
    assert!(lengths.contains(&g.vertex_count()));
    let l = g.corner(Corner::L);
    let r = g.corner(Corner::R);
    assert!(common::simple_path_lengths(&adj, l, r).contains(&(g.vertex_count() - 1)));
}

#[test]
fn constructions_are_deterministic() {
    let g = generate(5).unwrap();
    assert_eq!(ham_cycle(&g).unwrap(), ham_cycle(&g).unwrap());
    assert_eq!(
        path_of_length(&g, Corner::T, Corner::R, 50).unwrap(),
        path_of_length(&g, Corner::T, Corner::R, 50).unwrap()
    );
}
