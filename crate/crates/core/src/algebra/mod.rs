//! Exact and numeric scalars, Laurent polynomials in `z`, and the positivity rewrite.

mod gaussian;
mod laurent;
mod poly;
mod scalar;

pub use gaussian::GaussianRational;
pub use laurent::LaurentPoly;
pub use poly::{Assignment, BetaExpansion, Monomial, ParamSym, Poly, Symbol, Var};
pub use scalar::{approx_eq_complex, render_complex, ExactScalar, Mode, Scalar};
