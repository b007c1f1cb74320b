//! Constructive Hamiltonian paths, Hamiltonian cycles, and paths and cycles of
//! every admissible length in `S_n`.
//!
//! Everything is built recursively on sub-triangles in coordinate space and
//! only mapped to vertex indices at the end. Let `X -> Y` be the requested
//! corner pair, `Z` the third corner, and `m(P, Q)` the vertex shared by the
//! sub-copies at corners `P` and `Q`. Two shapes are used:
//!
//! * three legs `X -> m(X,Z)` in copy X, `m(X,Z) -> m(Z,Y)` in copy Z and
//!   `m(Z,Y) -> Y` in copy Y. Copies X and Y overlap in `m(X,Y)`, so the third
//!   leg always avoids its own third corner.
//! * two legs `X -> m(X,Y) -> Y` through copies X and Y only.
//!
//! Each leg is itself one of two families on `S_{n-1}`: *full* paths, which may
//! pass through the third corner, and *avoiding* paths, which never do.
//! On `S_k` with side `s = 2^(k-1)` and `|V_k|` vertices, full paths exist for
//! every length in `[s, |V_k| - 1]` and avoiding paths for `[s, |V_k| - 2]`.

use crate::certificate::{validate_coverage, validate_cycle, validate_path, Cycle, Path};
use crate::error::{GasketError, Result};
use crate::graph::{side_length, vertex_count, Coord, Corner, GasketGraph, Triangle};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    Full,
    Avoiding,
}

fn vertices(level: u32) -> usize {
    vertex_count(level) as usize
}

fn max_len(level: u32, family: Family) -> usize {
    match family {
        Family::Full => vertices(level) - 1,
        Family::Avoiding => vertices(level) - 2,
    }
}

/// Inclusive range of corner-to-corner path lengths available in `S_level`.
pub fn path_length_range(level: u32) -> (usize, usize) {
    (side_length(level) as usize, max_len(level, Family::Full))
}

/// Inclusive range of lengths for paths that avoid the third corner.
pub fn avoiding_path_length_range(level: u32) -> (usize, usize) {
    (
        side_length(level) as usize,
        max_len(level, Family::Avoiding),
    )
}

/// Inclusive range of cycle lengths in `S_level`.
pub fn cycle_length_range(level: u32) -> (usize, usize) {
    (3, vertices(level))
}

/// Split `len` over legs with the given `(min, max)` bounds, filling earlier
/// legs first. Requires `sum(min) <= len <= sum(max)`.
fn allocate(len: usize, bounds: &[(usize, usize)]) -> Vec<usize> {
    let mut surplus = len - bounds.iter().map(|b| b.0).sum::<usize>();
    bounds
        .iter()
        .map(|&(lo, hi)| {
            let take = surplus.min(hi - lo);
            surplus -= take;
            lo + take
        })
        .collect()
}

/// Append the path `from -> to` of exactly `len` edges inside `tri`, excluding
/// its first vertex (the caller has already emitted it).
fn extend_path(
    tri: Triangle,
    family: Family,
    from: Corner,
    to: Corner,
    len: usize,
    out: &mut Vec<Coord>,
) {
    let third = Corner::third(from, to);
    if tri.level == 1 {
        match (family, len) {
            (_, 1) => {}
            (Family::Full, 2) => out.push(tri.corner(third)),
            _ => unreachable!("length {len} infeasible on a single triangle"),
        }
        out.push(tri.corner(to));
        return;
    }

    let sub = tri.level - 1;
    let side = side_length(sub) as usize;
    if len >= 3 * side {
        // Three legs. Starting from the Hamiltonian lengths, the required
        // reduction is taken from the first leg, then the second, then the
        // third, each never dropping below the sub-copy side.
        let families = match family {
            Family::Full => [Family::Full, Family::Full, Family::Avoiding],
            // The middle leg runs through the copy holding Z, so it must skip Z.
            Family::Avoiding => [Family::Full, Family::Avoiding, Family::Avoiding],
        };
        let bounds: Vec<_> = families.iter().map(|&f| (side, max_len(sub, f))).collect();
        let legs = allocate(len, &bounds);
        extend_path(tri.child(from), families[0], from, third, legs[0], out);
        extend_path(tri.child(third), families[1], from, to, legs[1], out);
        extend_path(tri.child(to), families[2], third, to, legs[2], out);
    } else {
        // 2s' <= len < 3s': two legs X -> m(X,Y) -> Y, the second one a side.
        // Neither leg enters the copy holding Z.
        extend_path(tri.child(from), Family::Full, from, to, len - side, out);
        extend_path(tri.child(to), Family::Full, from, to, side, out);
    }
}

fn path_coords(level: u32, family: Family, from: Corner, to: Corner, len: usize) -> Vec<Coord> {
    let tri = Triangle::root(level);
    let mut out = Vec::with_capacity(len + 1);
    out.push(tri.corner(from));
    extend_path(tri, family, from, to, len, &mut out);
    out
}

fn cycle_coords(tri: Triangle, len: usize) -> Vec<Coord> {
    if tri.level == 1 {
        debug_assert_eq!(len, 3);
        return vec![
            tri.corner(Corner::T),
            tri.corner(Corner::L),
            tri.corner(Corner::R),
        ];
    }
    let sub = tri.level - 1;
    let side = side_length(sub) as usize;
    if len < 3 * side {
        // Small cycles live inside one sub-copy.
        return cycle_coords(tri.child(Corner::L), len);
    }
    // Legs between shared corners: copy T from m(T,L) to m(T,R), copy R on to
    // m(R,L), copy L back to m(L,T). No two legs share a non-seam vertex.
    let bound = (side, max_len(sub, Family::Full));
    let legs = allocate(len, &[bound; 3]);
    let start = tri.child(Corner::T).corner(Corner::L);
    let mut out = Vec::with_capacity(len + 1);
    out.push(start);
    extend_path(
        tri.child(Corner::T),
        Family::Full,
        Corner::L,
        Corner::R,
        legs[0],
        &mut out,
    );
    extend_path(
        tri.child(Corner::R),
        Family::Full,
        Corner::T,
        Corner::L,
        legs[1],
        &mut out,
    );
    extend_path(
        tri.child(Corner::L),
        Family::Full,
        Corner::R,
        Corner::T,
        legs[2],
        &mut out,
    );
    let closing = out.pop();
    debug_assert_eq!(closing, Some(start));
    out
}

fn to_indices(g: &GasketGraph, coords: &[Coord]) -> Result<Vec<usize>> {
    coords.iter().map(|&c| g.require_index(c)).collect()
}

fn check_corners(from: Corner, to: Corner) -> Result<()> {
    if from == to {
        return Err(GasketError::InvalidCorners { from, to });
    }
    Ok(())
}

fn check_len(len: usize, (min, max): (usize, usize)) -> Result<()> {
    if len < min || len > max {
        return Err(GasketError::LengthOutOfRange { len, min, max });
    }
    Ok(())
}

fn certified_path(
    g: &GasketGraph,
    family: Family,
    from: Corner,
    to: Corner,
    len: usize,
) -> Result<Path> {
    let vertices = to_indices(g, &path_coords(g.level(), family, from, to, len))?;
    let path = Path { vertices };
    validate_path(g, &path, g.corner(from), g.corner(to))?;
    if path.len() != len {
        return Err(GasketError::InvalidCertificate(format!(
            "built a path of length {}, wanted {len}",
            path.len()
        )));
    }
    if family == Family::Avoiding && path.vertices.contains(&g.corner(Corner::third(from, to))) {
        return Err(GasketError::InvalidCertificate(
            "path touches the avoided corner".into(),
        ));
    }
    Ok(path)
}

/// Hamiltonian path between two corners.
pub fn ham_path(g: &GasketGraph, from: Corner, to: Corner) -> Result<Path> {
    check_corners(from, to)?;
    let path = certified_path(g, Family::Full, from, to, max_len(g.level(), Family::Full))?;
    validate_coverage(g, &path.vertices, &[])?;
    Ok(path)
}

/// Path between two corners through every vertex except the third corner.
pub fn ham_path_avoid(g: &GasketGraph, from: Corner, to: Corner) -> Result<Path> {
    check_corners(from, to)?;
    let path = certified_path(
        g,
        Family::Avoiding,
        from,
        to,
        max_len(g.level(), Family::Avoiding),
    )?;
    validate_coverage(g, &path.vertices, &[g.corner(Corner::third(from, to))])?;
    Ok(path)
}

/// Hamiltonian cycle.
pub fn ham_cycle(g: &GasketGraph) -> Result<Cycle> {
    let cycle = cycle_of_length(g, vertices(g.level()))?;
    validate_coverage(g, &cycle.vertices, &[])?;
    Ok(cycle)
}

/// Corner-to-corner path with exactly `len` edges, `2^(n-1) <= len <= |V_n| - 1`.
pub fn path_of_length(g: &GasketGraph, from: Corner, to: Corner, len: usize) -> Result<Path> {
    check_corners(from, to)?;
    check_len(len, path_length_range(g.level()))?;
    certified_path(g, Family::Full, from, to, len)
}

/// Like [`path_of_length`], but never visiting the third corner;
/// `2^(n-1) <= len <= |V_n| - 2`.
pub fn avoiding_path_of_length(
    g: &GasketGraph,
    from: Corner,
    to: Corner,
    len: usize,
) -> Result<Path> {
    check_corners(from, to)?;
    check_len(len, avoiding_path_length_range(g.level()))?;
    certified_path(g, Family::Avoiding, from, to, len)
}

/// Cycle with exactly `len` edges, `3 <= len <= |V_n|`.
pub fn cycle_of_length(g: &GasketGraph, len: usize) -> Result<Cycle> {
    check_len(len, cycle_length_range(g.level()))?;
    let coords = cycle_coords(Triangle::root(g.level()), len);
    let cycle = Cycle {
        vertices: to_indices(g, &coords)?,
    };
    validate_cycle(g, &cycle)?;
    if cycle.len() != len {
        return Err(GasketError::InvalidCertificate(format!(
            "built a cycle of length {}, wanted {len}",
            cycle.len()
        )));
    }
    Ok(cycle)
}

/// Vertex indices of a certificate written as coordinates.
pub fn as_coords(g: &GasketGraph, vertices: &[usize]) -> Vec<Coord> {
    vertices.iter().map(|&v| g.coord(v)).collect()
}
