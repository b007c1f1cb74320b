//! Construction of the gasket graph `S_n` on integer lattice coordinates.
//!
//! A vertex `(a, b)` of `S_n` lives in the triangle `a >= 0, b >= 0, a + b <= s`
//! with `s = 2^(n-1)`. The corners are `L = (0, 0)`, `R = (s, 0)` and
//! `T = (0, s)`. `S_{n+1}` is three copies of `S_n` translated by `(0, 0)`,
//! `(2^(n-1), 0)` and `(0, 2^(n-1))`, glued at shared corners.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{GasketError, Result};

/// Largest level [`generate`] accepts unless a different ceiling is supplied.
pub const DEFAULT_MAX_LEVEL: u32 = 12;

/// Lattice position of a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coord {
    pub a: u32,
    pub b: u32,
}

impl Coord {
    pub const fn new(a: u32, b: u32) -> Self {
        Coord { a, b }
    }

    fn offset(self, by: Coord) -> Coord {
        Coord::new(self.a + by.a, self.b + by.b)
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// One of the three degree-2 vertices, also used to name sub-copies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Corner {
    T,
    L,
    R,
}

impl Corner {
    pub const ALL: [Corner; 3] = [Corner::T, Corner::L, Corner::R];

    /// The corner different from both arguments. Requires `x != y`.
    pub fn third(x: Corner, y: Corner) -> Corner {
        debug_assert_ne!(x, y);
        match (x, y) {
            (Corner::T, Corner::L) | (Corner::L, Corner::T) => Corner::R,
            (Corner::T, Corner::R) | (Corner::R, Corner::T) => Corner::L,
            _ => Corner::T,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Corner::T => "T",
            Corner::L => "L",
            Corner::R => "R",
        }
    }
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Corner {
    type Err = GasketError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "t" | "top" => Ok(Corner::T),
            "l" | "left" => Ok(Corner::L),
            "r" | "right" => Ok(Corner::R),
            other => Err(GasketError::Parse(format!("unknown corner {other:?}"))),
        }
    }
}

/// Axis-aligned placement of an upward sub-triangle isomorphic to `S_level`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Triangle {
    pub origin: Coord,
    pub level: u32,
}

impl Triangle {
    pub fn root(level: u32) -> Self {
        Triangle {
            origin: Coord::new(0, 0),
            level,
        }
    }

    pub fn side(self) -> u32 {
        side_length(self.level)
    }

    pub fn corner(self, c: Corner) -> Coord {
        let s = self.side();
        let Coord { a, b } = self.origin;
        match c {
            Corner::L => Coord::new(a, b),
            Corner::R => Coord::new(a + s, b),
            Corner::T => Coord::new(a, b + s),
        }
    }

    /// Sub-copy containing corner `c`. Requires `level >= 2`.
    pub fn child(self, c: Corner) -> Triangle {
        debug_assert!(self.level >= 2);
        let h = self.side() / 2;
        let Coord { a, b } = self.origin;
        let origin = match c {
            Corner::L => Coord::new(a, b),
            Corner::R => Coord::new(a + h, b),
            Corner::T => Coord::new(a, b + h),
        };
        Triangle {
            origin,
            level: self.level - 1,
        }
    }

    pub fn contains(self, p: Coord) -> bool {
        p.a >= self.origin.a
            && p.b >= self.origin.b
            && (p.a - self.origin.a) + (p.b - self.origin.b) <= self.side()
    }
}

/// Side length `2^(n-1)` of `S_n`.
pub fn side_length(level: u32) -> u32 {
    1u32 << (level - 1)
}

/// `|V(S_n)| = (3/2)(3^(n-1) + 1)`. Panics if `n == 0` or the value overflows `u128`.
pub fn vertex_count(n: u32) -> u128 {
    assert!(n >= 1, "levels start at 1");
    let p = 3u128
        .checked_pow(n - 1)
        .expect("vertex count overflows u128");
    3 * (p + 1) / 2
}

/// `|E(S_n)| = 3^n`. Panics if `n == 0` or the value overflows `u128`.
pub fn edge_count(n: u32) -> u128 {
    assert!(n >= 1, "levels start at 1");
    3u128.checked_pow(n).expect("edge count overflows u128")
}

/// Read access to an undirected simple graph with sorted neighbor lists.
pub trait Adjacency {
    fn vertex_count(&self) -> usize;

    fn neighbors(&self, v: usize) -> &[usize];

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.neighbors(u).binary_search(&v).is_ok()
    }
}

fn adjacency_from_edges(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adjacency = vec![Vec::new(); n];
    for &(u, v) in edges {
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    adjacency
}

/// A small arbitrary graph, used as an oracle input for the pebbling simulator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallGraph {
    adjacency: Vec<Vec<usize>>,
}

impl SmallGraph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GasketError::VertexOutOfRange {
                    index: u.max(v),
                    count: n,
                });
            }
            if u == v {
                return Err(GasketError::Parse(format!("self-loop at {u}")));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        normalized.dedup();
        Ok(SmallGraph {
            adjacency: adjacency_from_edges(n, &normalized),
        })
    }

    /// The path `P_n` on `n` vertices.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        SmallGraph::from_edges(n, &edges).expect("path edges are valid")
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        SmallGraph::from_edges(n, &edges).expect("complete-graph edges are valid")
    }
}

impl Adjacency for SmallGraph {
    fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }
}

/// The gasket graph `S_n`. Immutable after construction.
#[derive(Clone, Debug)]
pub struct GasketGraph {
    level: u32,
    side: u32,
    coords: Vec<Coord>,
    index: HashMap<Coord, usize>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    corners: [usize; 3],
    middles: Option<[usize; 3]>,
}

impl PartialEq for GasketGraph {
    fn eq(&self, other: &Self) -> bool {
        self.level == other.level
            && self.side == other.side
            && self.coords == other.coords
            && self.edges == other.edges
            && self.corners == other.corners
            && self.middles == other.middles
    }
}

impl Eq for GasketGraph {}

/// Generate `S_n` with the default level ceiling.
pub fn generate(n: u32) -> Result<GasketGraph> {
    generate_with_max(n, DEFAULT_MAX_LEVEL)
}

/// Generate `S_n`, rejecting levels above `max_level`.
pub fn generate_with_max(n: u32, max_level: u32) -> Result<GasketGraph> {
    // Coordinates are u32 and the side is 2^(n-1).
    let hard_cap = max_level.min(31);
    if n == 0 || n > hard_cap {
        return Err(GasketError::LevelOutOfRange {
            level: n,
            max: hard_cap,
        });
    }
    let edges = copy_edges(n);
    GasketGraph::from_coordinate_edges(n, &edges)
}

/// Edge list of `S_n` in coordinates, built as the union of three translated
/// copies of `S_{n-1}`.
fn copy_edges(n: u32) -> Vec<(Coord, Coord)> {
    if n == 1 {
        let (l, r, t) = (Coord::new(0, 0), Coord::new(1, 0), Coord::new(0, 1));
        return vec![(l, r), (l, t), (r, t)];
    }
    let smaller = copy_edges(n - 1);
    let shift = side_length(n - 1);
    let mut edges = Vec::with_capacity(smaller.len() * 3);
    for offset in [Coord::new(0, 0), Coord::new(shift, 0), Coord::new(0, shift)] {
        edges.extend(
            smaller
                .iter()
                .map(|&(u, v)| (u.offset(offset), v.offset(offset))),
        );
    }
    edges
}

/// Top-to-bottom, left-to-right.
fn canonical_order(p: &Coord, q: &Coord) -> std::cmp::Ordering {
    q.b.cmp(&p.b).then(p.a.cmp(&q.a))
}

impl GasketGraph {
    fn from_coordinate_edges(level: u32, coord_edges: &[(Coord, Coord)]) -> Result<Self> {
        let mut coords: Vec<Coord> = coord_edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        coords.sort_unstable_by(canonical_order);
        coords.dedup();
        let index: HashMap<Coord, usize> =
            coords.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let edges: Vec<(usize, usize)> = coord_edges
            .iter()
            .map(|(u, v)| (index[u], index[v]))
            .collect();
        GasketGraph::from_parts(level, coords, edges)
    }

    /// Assemble a graph from explicit parts. Vertices must be distinct and in
    /// canonical order; edges must be in range and free of loops and repeats.
    /// Gasket-specific invariants (counts, degrees) are not checked here.
    pub fn from_parts(level: u32, coords: Vec<Coord>, edges: Vec<(usize, usize)>) -> Result<Self> {
        if level == 0 || level > 31 {
            return Err(GasketError::LevelOutOfRange { level, max: 31 });
        }
        let side = side_length(level);
        if coords
            .windows(2)
            .any(|w| canonical_order(&w[0], &w[1]) != std::cmp::Ordering::Less)
        {
            return Err(GasketError::Parse(
                "vertices must be distinct and sorted top-to-bottom, left-to-right".into(),
            ));
        }
        if let Some(p) = coords
            .iter()
            .find(|p| p.a as u64 + p.b as u64 > side as u64)
        {
            return Err(GasketError::Parse(format!(
                "vertex {p} lies outside the triangle of side {side}"
            )));
        }
        let n = coords.len();
        let mut normalized = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GasketError::VertexOutOfRange {
                    index: u.max(v),
                    count: n,
                });
            }
            if u == v {
                return Err(GasketError::Parse(format!("self-loop at vertex {u}")));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if normalized.windows(2).any(|w| w[0] == w[1]) {
            return Err(GasketError::Parse("duplicate edge".into()));
        }
        let index: HashMap<Coord, usize> =
            coords.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let lookup = |c: Coord| {
            index
                .get(&c)
                .copied()
                .ok_or(GasketError::MissingVertex { a: c.a, b: c.b })
        };
        let root = Triangle::root(level);
        let corners = [
            lookup(root.corner(Corner::T))?,
            lookup(root.corner(Corner::L))?,
            lookup(root.corner(Corner::R))?,
        ];
        let middles = if level >= 2 {
            let h = side / 2;
            Some([
                lookup(Coord::new(h, 0))?,
                lookup(Coord::new(0, h))?,
                lookup(Coord::new(h, h))?,
            ])
        } else {
            None
        };
        let adjacency = adjacency_from_edges(n, &normalized);
        Ok(GasketGraph {
            level,
            side,
            coords,
            index,
            adjacency,
            edges: normalized,
            corners,
            middles,
        })
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn side(&self) -> u32 {
        self.side
    }

    pub fn coords(&self) -> &[Coord] {
        &self.coords
    }

    pub fn coord(&self, v: usize) -> Coord {
        self.coords[v]
    }

    pub fn index_of(&self, c: Coord) -> Option<usize> {
        self.index.get(&c).copied()
    }

    pub(crate) fn require_index(&self, c: Coord) -> Result<usize> {
        self.index_of(c)
            .ok_or(GasketError::MissingVertex { a: c.a, b: c.b })
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Corner indices in `[T, L, R]` order.
    pub fn corners(&self) -> [usize; 3] {
        self.corners
    }

    pub fn corner(&self, c: Corner) -> usize {
        match c {
            Corner::T => self.corners[0],
            Corner::L => self.corners[1],
            Corner::R => self.corners[2],
        }
    }

    /// Corner label of vertex `v`, if it is one.
    pub fn corner_label(&self, v: usize) -> Option<Corner> {
        Corner::ALL.into_iter().find(|&c| self.corner(c) == v)
    }

    /// Middle vertices `(s/2, 0)`, `(0, s/2)`, `(s/2, s/2)`; absent at level 1.
    pub fn middles(&self) -> Option<[usize; 3]> {
        self.middles
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Map from degree to number of vertices with that degree.
    pub fn degree_census(&self) -> std::collections::BTreeMap<usize, usize> {
        let mut census = std::collections::BTreeMap::new();
        for list in &self.adjacency {
            *census.entry(list.len()).or_insert(0) += 1;
        }
        census
    }

    pub fn is_connected(&self) -> bool {
        let n = self.coords.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == n
    }

    /// Extract the sub-copy containing corner `which`, translated back to the
    /// origin, together with the offset that embeds it in `self`.
    pub fn subcopy(&self, which: Corner) -> Result<(GasketGraph, Coord)> {
        if self.level < 2 {
            return Err(GasketError::NoSubcopy);
        }
        let tri = Triangle::root(self.level).child(which);
        let offset = tri.origin;
        let members: Vec<usize> = (0..self.coords.len())
            .filter(|&v| tri.contains(self.coords[v]))
            .collect();
        let mut relabel = HashMap::with_capacity(members.len());
        let mut coords = Vec::with_capacity(members.len());
        for (i, &v) in members.iter().enumerate() {
            relabel.insert(v, i);
            let p = self.coords[v];
            coords.push(Coord::new(p.a - offset.a, p.b - offset.b));
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((*relabel.get(&u)?, *relabel.get(&v)?)))
            .collect();
        Ok((
            GasketGraph::from_parts(self.level - 1, coords, edges)?,
            offset,
        ))
    }
}

impl Adjacency for GasketGraph {
    fn vertex_count(&self) -> usize {
        self.coords.len()
    }

    fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_triangle() {
        let g = generate(1).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.middles(), None);
        assert_eq!(
            g.coords(),
            &[Coord::new(0, 1), Coord::new(0, 0), Coord::new(1, 0)]
        );
    }

    #[test]
    fn small_counts() {
        let g2 = generate(2).unwrap();
        assert_eq!((g2.vertex_count(), g2.edge_count()), (6, 9));
        let g4 = generate(4).unwrap();
        assert_eq!((g4.vertex_count(), g4.edge_count()), (42, 81));
        assert_eq!(vertex_count(8), 3282);
        assert_eq!(generate(8).unwrap().vertex_count(), 3282);
    }

    #[test]
    fn figure_labels_run_top_down() {
        let g = generate(4).unwrap();
        // 1-based labels 1..10 of the level-4 drawing
        let expected = [
            (0, 8),
            (0, 7),
            (1, 7),
            (0, 6),
            (1, 6),
            (2, 6),
            (0, 5),
            (1, 5),
            (2, 5),
            (3, 5),
        ];
        for (i, &(a, b)) in expected.iter().enumerate() {
            assert_eq!(g.coord(i), Coord::new(a, b));
        }
        assert_eq!(g.coord(41), Coord::new(8, 0));
    }

    #[test]
    fn lattice_neighbors_across_hole_are_not_edges() {
        let g = generate(3).unwrap();
        let u = g.index_of(Coord::new(2, 1)).unwrap();
        let v = g.index_of(Coord::new(1, 2)).unwrap();
        assert!(!g.has_edge(u, v));
    }

    #[test]
    fn level_limits() {
        assert!(matches!(
            generate(0),
            Err(GasketError::LevelOutOfRange { .. })
        ));
        assert!(matches!(
            generate(13),
            Err(GasketError::LevelOutOfRange { level: 13, max: 12 })
        ));
        assert!(generate_with_max(5, 4).is_err());
    }

    #[test]
    fn subcopy_offsets() {
        let g2 = generate(2).unwrap();
        let (copy, offset) = g2.subcopy(Corner::L).unwrap();
        assert_eq!(offset, Coord::new(0, 0));
        assert_eq!(copy, generate(1).unwrap());

        let g3 = generate(3).unwrap();
        let (copy, offset) = g3.subcopy(Corner::T).unwrap();
        assert_eq!(offset, Coord::new(0, 2));
        let mut mapped: Vec<Coord> = copy
            .corners()
            .iter()
            .map(|&c| copy.coord(c).offset(offset))
            .collect();
        mapped.sort();
        assert_eq!(
            mapped,
            vec![Coord::new(0, 2), Coord::new(0, 4), Coord::new(2, 2)]
        );

        assert!(matches!(
            generate(1).unwrap().subcopy(Corner::R),
            Err(GasketError::NoSubcopy)
        ));
    }

    #[test]
    fn corner_parsing() {
        assert_eq!("t".parse::<Corner>().unwrap(), Corner::T);
        assert_eq!("Left".parse::<Corner>().unwrap(), Corner::L);
        assert!("x".parse::<Corner>().is_err());
        assert_eq!(Corner::third(Corner::T, Corner::R), Corner::L);
    }

    #[test]
    fn repeated_generation_is_identical() {
        assert_eq!(generate(5).unwrap(), generate(5).unwrap());
    }
}
