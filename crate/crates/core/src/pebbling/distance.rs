//! Breadth-first distances, distance censuses, diameter, stacking values and
//! the cover pebbling number.

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{GasketError, Result};
use crate::graph::{Adjacency, Coord, Corner, GasketGraph};

/// Distances from one source, the census `beta[i] = #{u : d(u, source) = i}`,
/// and the stacking value `ST(source) = sum_u 2^d(u, source)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceProfile {
    pub source: usize,
    pub dist: Vec<u32>,
    pub beta: Vec<u64>,
    pub st_value: BigUint,
}

impl DistanceProfile {
    pub fn eccentricity(&self) -> u32 {
        self.beta.len() as u32 - 1
    }
}

/// Reusable BFS buffers.
pub(crate) struct Bfs {
    dist: Vec<u32>,
    queue: VecDeque<usize>,
}

impl Bfs {
    pub fn new(n: usize) -> Self {
        Bfs {
            dist: vec![u32::MAX; n],
            queue: VecDeque::with_capacity(n),
        }
    }

    /// Census from `source`, or `None` if some vertex is unreachable.
    pub fn census<G: Adjacency>(&mut self, g: &G, source: usize) -> Option<Vec<u64>> {
        self.dist.fill(u32::MAX);
        self.queue.clear();
        self.dist[source] = 0;
        self.queue.push_back(source);
        let mut beta: Vec<u64> = vec![0];
        let mut reached = 0;
        while let Some(u) = self.queue.pop_front() {
            let d = self.dist[u];
            if d as usize == beta.len() {
                beta.push(0);
            }
            beta[d as usize] += 1;
            reached += 1;
            for &w in g.neighbors(u) {
                if self.dist[w] == u32::MAX {
                    self.dist[w] = d + 1;
                    self.queue.push_back(w);
                }
            }
        }
        (reached == g.vertex_count()).then_some(beta)
    }

    pub fn distances(&self) -> &[u32] {
        &self.dist
    }
}

/// `sum_i beta[i] * 2^i`.
pub fn stacking_value_from_census(beta: &[u64]) -> BigUint {
    beta.iter()
        .rev()
        .fold(BigUint::zero(), |acc, &b| (acc << 1u32) + BigUint::from(b))
}

fn disconnected() -> GasketError {
    GasketError::Domain("graph is disconnected; distances are unbounded".into())
}

fn check_vertex<G: Adjacency>(g: &G, v: usize) -> Result<()> {
    if v >= g.vertex_count() {
        return Err(GasketError::VertexOutOfRange {
            index: v,
            count: g.vertex_count(),
        });
    }
    Ok(())
}

pub fn distances<G: Adjacency>(g: &G, source: usize) -> Result<DistanceProfile> {
    check_vertex(g, source)?;
    let mut bfs = Bfs::new(g.vertex_count());
    let beta = bfs.census(g, source).ok_or_else(disconnected)?;
    Ok(DistanceProfile {
        source,
        dist: bfs.distances().to_vec(),
        st_value: stacking_value_from_census(&beta),
        beta,
    })
}

/// `ST(v)` for every vertex, in index order.
pub fn stacking_values<G: Adjacency>(g: &G) -> Result<Vec<BigUint>> {
    let mut bfs = Bfs::new(g.vertex_count());
    (0..g.vertex_count())
        .map(|v| {
            bfs.census(g, v)
                .map(|beta| stacking_value_from_census(&beta))
                .ok_or_else(disconnected)
        })
        .collect()
}

/// Exact diameter from a BFS out of every vertex.
pub fn diameter<G: Adjacency>(g: &G) -> Result<u32> {
    let mut bfs = Bfs::new(g.vertex_count());
    let mut best = 0;
    for v in 0..g.vertex_count() {
        let beta = bfs.census(g, v).ok_or_else(disconnected)?;
        best = best.max(beta.len() as u32 - 1);
    }
    Ok(best)
}

/// Diameter of a gasket graph, evaluating one source per symmetry orbit when
/// the graph has the triangle's symmetry.
pub fn gasket_diameter(g: &GasketGraph) -> Result<u32> {
    if !has_triangle_symmetry(g) {
        return diameter(g);
    }
    let mut bfs = Bfs::new(g.vertex_count());
    let mut best = 0;
    for v in orbit_representatives(g) {
        let beta = bfs.census(g, v).ok_or_else(disconnected)?;
        best = best.max(beta.len() as u32 - 1);
    }
    Ok(best)
}

/// The two maps generating the six symmetries of the triangle, written on
/// `(a, b)` with `c = s - a - b`: swap `a` and `b`, and swap `a` and `c`.
fn symmetry_images(p: Coord, side: u32) -> [Coord; 2] {
    [Coord::new(p.b, p.a), Coord::new(side - p.a - p.b, p.b)]
}

/// True if both generating symmetries map vertices to vertices and edges to
/// edges. Holds for every generated `S_n`.
pub fn has_triangle_symmetry(g: &GasketGraph) -> bool {
    let side = g.side();
    let images = |v: usize| -> Option<[usize; 2]> {
        let [x, y] = symmetry_images(g.coord(v), side);
        Some([g.index_of(x)?, g.index_of(y)?])
    };
    let mapped: Option<Vec<[usize; 2]>> = (0..g.vertex_count()).map(images).collect();
    let Some(mapped) = mapped else {
        return false;
    };
    g.edges()
        .iter()
        .all(|&(u, v)| (0..2).all(|k| g.has_edge(mapped[u][k], mapped[v][k])))
}

/// One vertex per orbit of the triangle's symmetry group: those with
/// `a <= b <= c`.
fn orbit_representatives(g: &GasketGraph) -> Vec<usize> {
    let side = g.side();
    (0..g.vertex_count())
        .filter(|&v| {
            let p = g.coord(v);
            let c = side - p.a - p.b;
            p.a <= p.b && p.b <= c
        })
        .collect()
}

/// Cover pebbling number `λ = max_v ST(v)`, with a check that a corner attains
/// the maximum. For graphs with the triangle's symmetry only one vertex per
/// orbit is evaluated.
pub fn cover_pebbling_number(g: &GasketGraph) -> Result<BigUint> {
    let candidates = if has_triangle_symmetry(g) {
        orbit_representatives(g)
    } else {
        (0..g.vertex_count()).collect()
    };
    let mut bfs = Bfs::new(g.vertex_count());
    let mut best = BigUint::zero();
    for v in candidates {
        let beta = bfs.census(g, v).ok_or_else(disconnected)?;
        let st = stacking_value_from_census(&beta);
        if st > best {
            best = st;
        }
    }
    let corner_st = distances(g, g.corner(Corner::L))?.st_value;
    if corner_st != best {
        return Err(GasketError::Invariant(format!(
            "corner stacking value {corner_st} is below the maximum {best}"
        )));
    }
    Ok(best)
}

/// `λ(S_1) = 5`, `λ(S_(k+1)) = (1 + 2^(2^(k-1)+1)) λ(S_k) - (2^(2^k) + 2^(2^(k-1)+1))`.
pub fn lambda_recursive(n: u32) -> BigUint {
    assert!(n >= 1, "levels start at 1");
    let mut lambda = BigUint::from(5u32);
    for k in 1..n {
        // Exponents use the current level k: 2^(k-1) is the side of S_k.
        let half = 1usize << (k - 1);
        let boost = BigUint::one() << (half + 1);
        let full = BigUint::one() << (2 * half);
        lambda = (BigUint::one() + &boost) * lambda - (full + boost);
    }
    lambda
}

/// Outcome of checking the two census identities of the corner distance
/// distribution of `S_m` (with `h = 2^(m-2)`):
/// `beta(j + h) = 2 beta(j)` for `1 <= j <= h - 1`, and
/// `beta(2h) = 2 beta(h) - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub level: u32,
    pub corner: Corner,
    pub beta: Vec<u64>,
    pub checked: usize,
    pub violations: Vec<String>,
}

impl CensusReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn beta_census_checks(g: &GasketGraph, corner: Corner) -> Result<CensusReport> {
    if g.level() < 2 {
        return Err(GasketError::NoSubcopy);
    }
    let beta = distances(g, g.corner(corner))?.beta;
    let h = 1usize << (g.level() - 2);
    let at = |i: usize| beta.get(i).copied();
    let mut violations = Vec::new();
    let mut checked = 0;
    for j in 1..h {
        checked += 1;
        match (at(j + h), at(j)) {
            (Some(hi), Some(lo)) if hi == 2 * lo => {}
            (hi, lo) => {
                violations.push(format!("beta({}) = {hi:?}, 2 beta({j}) from {lo:?}", j + h))
            }
        }
    }
    checked += 1;
    match (at(2 * h), at(h)) {
        (Some(top), Some(mid)) if top + 1 == 2 * mid => {}
        (top, mid) => violations.push(format!(
            "beta({}) = {top:?}, 2 beta({h}) - 1 from {mid:?}",
            2 * h
        )),
    }
    if beta.len() != 2 * h + 1 {
        violations.push(format!(
            "eccentricity {} differs from {}",
            beta.len() - 1,
            2 * h
        ));
    }
    Ok(CensusReport {
        level: g.level(),
        corner,
        beta,
        checked,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, SmallGraph};

    #[test]
    fn base_triangle_profile() {
        let g = generate(1).unwrap();
        let p = distances(&g, g.corner(Corner::T)).unwrap();
        assert_eq!(p.beta, vec![1, 2]);
        assert_eq!(p.st_value, BigUint::from(5u32));
    }

    #[test]
    fn level_two_profiles() {
        let g = generate(2).unwrap();
        let corner = distances(&g, g.corner(Corner::L)).unwrap();
        assert_eq!(corner.beta, vec![1, 2, 3]);
        assert_eq!(corner.st_value, BigUint::from(17u32));
        let middle = distances(&g, g.middles().unwrap()[0]).unwrap();
        assert_eq!(middle.beta, vec![1, 4, 1]);
        assert_eq!(middle.st_value, BigUint::from(13u32));
    }

    #[test]
    fn small_diameters() {
        assert_eq!(diameter(&generate(1).unwrap()).unwrap(), 1);
        assert_eq!(diameter(&generate(4).unwrap()).unwrap(), 8);
        for n in 1..=6 {
            let g = generate(n).unwrap();
            assert_eq!(gasket_diameter(&g).unwrap(), diameter(&g).unwrap());
        }
        assert_eq!(diameter(&SmallGraph::path(5)).unwrap(), 4);
        let split = SmallGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(diameter(&split).is_err());
    }

    #[test]
    fn recursion_indexing() {
        assert_eq!(lambda_recursive(1), BigUint::from(5u32));
        assert_eq!(lambda_recursive(2), BigUint::from(17u32));
        assert_eq!(lambda_recursive(3), BigUint::from(129u32));
        // (1 + 2^5) * 129 - (2^8 + 2^5), matching BFS on the generated graph
        assert_eq!(lambda_recursive(4), BigUint::from(3969u32));
    }

    #[test]
    fn cover_numbers_small() {
        for (n, want) in [(1, 5u32), (2, 17), (3, 129)] {
            assert_eq!(
                cover_pebbling_number(&generate(n).unwrap()).unwrap(),
                BigUint::from(want)
            );
        }
    }

    #[test]
    fn symmetry_detected() {
        for n in 1..=5 {
            assert!(has_triangle_symmetry(&generate(n).unwrap()));
        }
    }

    #[test]
    fn census_small() {
        let g2 = generate(2).unwrap();
        let r = beta_census_checks(&g2, Corner::T).unwrap();
        assert_eq!(r.beta, vec![1, 2, 3]);
        assert!(r.passed());
        let g3 = generate(3).unwrap();
        let r = beta_census_checks(&g3, Corner::L).unwrap();
        assert_eq!(r.beta[3], 2 * r.beta[1]);
        assert!(r.passed());
        assert!(beta_census_checks(&generate(1).unwrap(), Corner::L).is_err());
    }
}
