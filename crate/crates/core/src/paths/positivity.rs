use crate::algebra::{BetaExpansion, Poly};
use crate::error::{Error, Result};
use crate::opuc::VerblunskySequence;

use super::dp::moment_lukasiewicz;

/// Expands `mu(n, r, s)` with `ab_j = -b_j` and checks every coefficient is a
/// nonnegative integer.
pub fn positivity_certificate(n: usize, r: usize, s: usize) -> Result<BetaExpansion> {
    let mu = moment_lukasiewicz(&VerblunskySequence::<Poly>::generic(), n, r, s)?;
    certify(&mu, &format!("mu({n},{r},{s})"))
}

/// Beta-basis expansion of `p`, or the offending label when a coefficient is negative.
pub fn certify(p: &Poly, label: &str) -> Result<BetaExpansion> {
    let beta = p.to_beta_basis();
    if beta.is_positive() {
        Ok(beta)
    } else {
        Err(Error::PositivityViolation(label.to_string()))
    }
}
