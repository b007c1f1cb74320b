//! Distances, stacking values and cover pebbling numbers of `S_n`, plus a
//! small-instance pebbling simulator.

pub mod config;
pub mod distance;
pub mod simulator;

pub use config::{parse_configuration, ConfigSpec, VertexRef};
pub use distance::{
    beta_census_checks, cover_pebbling_number, diameter, distances, gasket_diameter,
    has_triangle_symmetry, lambda_recursive, stacking_value_from_census, stacking_values,
    CensusReport, DistanceProfile,
};
pub use simulator::{
    apply_move, configurations, cover_moves, is_cover_solvable, is_reachable,
    pebbling_number_search, reach_moves, replay, Goal, Move, PebbleConfiguration, PebbleSolver,
    SearchBudget,
};

use num_bigint::BigUint;

/// `λ` and, when it was computed, `π`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PebblingNumbers {
    pub lambda: BigUint,
    pub pi: Option<u32>,
}
