//! Generalized moments of orthogonal polynomials on the unit circle.
//!
//! The moment `mu(n, r, s) = <Phi_s, z^n Phi_r> / <Phi_s, Phi_s>` is computed by
//! several independent routes: weighted lattice paths (Łukasiewicz, gentle
//! Motzkin, Schröder), powers of a banded matrix, products of CMV factors, and
//! directly from the moment functional.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod families;
pub mod linearization;
pub mod matrices;
pub mod opuc;
pub mod paths;

pub use error::{Error, Result};
