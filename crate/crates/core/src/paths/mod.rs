//! Lattice-path models for generalized moments, their dynamic programs, the
//! bijections between them, and the positivity certificate.

mod bijection;
mod dp;
mod lattice;
mod positivity;

pub use bijection::{group_weights_match, pi, pi_inverse, schroder_grouping, schroder_to_lukasiewicz, SchroderGroup};
pub use dp::{
    lukasiewicz_row, lukasiewicz_step, moment_gmotzkin, moment_lukasiewicz, moment_negative, moment_schroder,
    reciprocity_sides, schroder_sum, SchroderEnds,
};
pub use lattice::{
    enumerate, gmotzkin_weight, lukasiewicz_down_weight, path_weight, path_weight_in, schroder_level_weight,
    schroder_vertical_weight, LatticePath, Model, Step,
};
pub use positivity::{certify, positivity_certificate};
