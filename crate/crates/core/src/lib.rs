//! Sierpinski gasket graphs `S_n`: generation, coloring, Hamiltonian and
//! pancyclicity certificates, domination numbers, distances, and pebbling.

pub mod certificate;
pub mod coloring;
pub mod domination;
pub mod error;
pub mod graph;
pub mod hamilton;
pub mod io;
pub mod pebbling;
pub mod verify;

pub use error::{GasketError, Result};
pub use graph::{generate, generate_with_max, Adjacency, Coord, Corner, GasketGraph, SmallGraph};
