use crate::error::{GasketError, Result};
use crate::graph::{Adjacency, GasketGraph};

/// A vertex coloring with colors in `{0, 1, 2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    assignment: Vec<u8>,
}

impl Coloring {
    pub fn color(&self, v: usize) -> u8 {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[u8] {
        &self.assignment
    }

    /// Number of vertices of each color.
    pub fn class_sizes(&self) -> [usize; 3] {
        let mut sizes = [0; 3];
        for &c in &self.assignment {
            sizes[c as usize] += 1;
        }
        sizes
    }
}

/// `c(a, b) = (a + 2b) mod 3`. The three edge directions `(1, 0)`, `(0, 1)`
/// and `(1, -1)` change the color by 1, 2 and 2 (mod 3), so no edge is
/// monochromatic.
pub fn three_coloring(g: &GasketGraph) -> Coloring {
    let assignment = g
        .coords()
        .iter()
        .map(|p| ((p.a as u64 + 2 * p.b as u64) % 3) as u8)
        .collect();
    Coloring { assignment }
}

/// Reject any monochromatic edge, out-of-range color, or unused color.
pub fn validate_coloring<G: Adjacency>(g: &G, coloring: &Coloring) -> Result<()> {
    if coloring.assignment.len() != g.vertex_count() {
        return Err(GasketError::InvalidCertificate(format!(
            "coloring covers {} vertices, graph has {}",
            coloring.assignment.len(),
            g.vertex_count()
        )));
    }
    let mut used = [false; 3];
    for (u, &cu) in coloring.assignment.iter().enumerate() {
        if cu > 2 {
            return Err(GasketError::InvalidCertificate(format!(
                "vertex {u} has color {cu}"
            )));
        }
        used[cu as usize] = true;
        if let Some(&w) = g
            .neighbors(u)
            .iter()
            .find(|&&w| coloring.assignment[w] == cu)
        {
            return Err(GasketError::InvalidCertificate(format!(
                "edge {u}-{w} is monochromatic"
            )));
        }
    }
    if used.iter().any(|&x| !x) {
        return Err(GasketError::InvalidCertificate(
            "fewer than three colors used".into(),
        ));
    }
    Ok(())
}
