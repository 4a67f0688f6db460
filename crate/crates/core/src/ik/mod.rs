//! Determinant evaluations of the DWBC state sum and the auxiliary
//! determinants used to evaluate it.

pub mod cauchy;
pub mod epsilon;
pub mod korepin;
pub mod sdet;

pub use cauchy::{cauchy_det_closed, cauchy_matrix};
pub use epsilon::{
    antidiagonal_block_det, chain_rho, ean_normalize, epsilon_chain, general_x_matrix, weight_of_rho, z_eps_determinant,
    z_half_eps_product, ChainResult, EpsilonGrid, XSpec,
};
pub use korepin::{ik_matrix, ik_z, IkInstance};
pub use sdet::{
    s_det_closed, s_det_closed_bivariate, s_matrix, s_matrix_bivariate, s_vanishing_check, s_vanishing_check_bivariate,
    sprime_det, sprime_matrix, sprime_vanishing_check, VanishingFactor, VanishingReport,
};
