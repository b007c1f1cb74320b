//! Path and cycle certificates and the validators that check them.
//!
//! Validators only consult the graph's edge set; they share no code with the
//! constructors in [`crate::hamilton`].

use serde::Serialize;

use crate::error::{GasketError, Result};
use crate::graph::Adjacency;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Path {
    pub vertices: Vec<usize>,
}

impl Path {
    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn start(&self) -> Option<usize> {
        self.vertices.first().copied()
    }

    pub fn end(&self) -> Option<usize> {
        self.vertices.last().copied()
    }
}

/// A closed walk; the edge from the last vertex back to the first is implicit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cycle {
    pub vertices: Vec<usize>,
}

impl Cycle {
    /// Number of edges, equal to the number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

fn reject<T>(msg: String) -> Result<T> {
    Err(GasketError::InvalidCertificate(msg))
}

fn check_simple_walk<G: Adjacency>(g: &G, vertices: &[usize]) -> Result<()> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    for &v in vertices {
        if v >= n {
            return reject(format!("vertex {v} out of range"));
        }
        if seen[v] {
            return reject(format!("vertex {v} repeated"));
        }
        seen[v] = true;
    }
    if let Some(w) = vertices.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
        return reject(format!("{} and {} are not adjacent", w[0], w[1]));
    }
    Ok(())
}

/// Simple path with the given endpoints.
pub fn validate_path<G: Adjacency>(g: &G, path: &Path, from: usize, to: usize) -> Result<()> {
    if path.vertices.is_empty() {
        return reject("empty path".into());
    }
    check_simple_walk(g, &path.vertices)?;
    if path.start() != Some(from) || path.end() != Some(to) {
        return reject(format!(
            "endpoints {:?} -> {:?}, expected {from} -> {to}",
            path.start(),
            path.end()
        ));
    }
    Ok(())
}

/// Simple cycle of length at least 3.
pub fn validate_cycle<G: Adjacency>(g: &G, cycle: &Cycle) -> Result<()> {
    if cycle.vertices.len() < 3 {
        return reject(format!(
            "cycle of length {} is too short",
            cycle.vertices.len()
        ));
    }
    check_simple_walk(g, &cycle.vertices)?;
    let (first, last) = (cycle.vertices[0], *cycle.vertices.last().unwrap());
    if !g.has_edge(last, first) {
        return reject(format!("closing pair {last}-{first} is not an edge"));
    }
    Ok(())
}

/// `vertices` covers exactly the vertex set minus `excluded`.
pub fn validate_coverage<G: Adjacency>(
    g: &G,
    vertices: &[usize],
    excluded: &[usize],
) -> Result<()> {
    let n = g.vertex_count();
    let mut hit = vec![false; n];
    for &v in vertices {
        if v < n {
            hit[v] = true;
        }
    }
    for (v, &seen) in hit.iter().enumerate() {
        let want = !excluded.contains(&v);
        if seen != want {
            return reject(if want {
                format!("vertex {v} not visited")
            } else {
                format!("vertex {v} should have been avoided")
            });
        }
    }
    Ok(())
}
