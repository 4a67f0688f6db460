//! The six-vertex model with domain-wall boundary.

mod partition;
mod state;
mod transfer;
mod weights;
mod ybe;

pub use partition::{
    contributing_states, dwbc_states, dwbc_states_with_bound, lemma_degree_check, lemma_recursion_check,
    state_sum_numerator, z_brute, z_brute_with_bound, z_by_states, z_from_line_monomials, DegreeReport,
};
pub use state::{parse_ice, write_ice, IceState, VertexState};
pub use transfer::{transfer_count, transfer_count_with_bound, DEFAULT_TRANSFER_BOUND};
pub use weights::{delta, vertex_weights, weight_numerators, Poly, SpectralParams, WeightScheme, Q};
pub use ybe::{ybe_check, YbeCase, YbeReport};
