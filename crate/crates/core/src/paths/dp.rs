//! Weighted path counts by dynamic programming over heights.

use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::opuc::{Coeffs, VerblunskySequence};

use super::lattice::{gmotzkin_weight, schroder_level_weight, schroder_vertical_weight, Step};

/// One Łukasiewicz step applied to a height vector, using the last-step
/// recurrence `v'_s = v_{s-1} - conj(alpha_{s-1}) T_s` with
/// `T_s = alpha_s v_s + rho_s T_{s+1}`.
pub fn lukasiewicz_step<S: Scalar>(c: &Coeffs<S>, v: &[S], allow_up: bool) -> Vec<S> {
    let h = v.len();
    let mut out = vec![S::zero(); h];
    let mut tail = S::zero();
    for s in (0..h).rev() {
        tail = c.alpha(s as i64).clone() * &v[s] + tail * c.rho(s);
        let mut x = -(c.alpha_bar(s as i64 - 1).clone() * &tail);
        if allow_up && s > 0 {
            x += v[s - 1].clone();
        }
        out[s] = x;
    }
    out
}

/// Row `(mu(n, r, s))_{0 <= s <= n + r}`.
pub fn lukasiewicz_row<S: Scalar>(vs: &VerblunskySequence<S>, n: usize, r: usize) -> Result<Vec<S>> {
    let height = n + r + 1;
    let c = vs.window(height)?;
    let mut v = vec![S::zero(); height];
    v[r] = S::one();
    for _ in 0..n {
        v = lukasiewicz_step(&c, &v, true);
    }
    Ok(v)
}

/// `mu(n, r, s)` as the weighted count of Łukasiewicz paths `(0,r) -> (n,s)`.
pub fn moment_lukasiewicz<S: Scalar>(vs: &VerblunskySequence<S>, n: usize, r: usize, s: usize) -> Result<S> {
    if s > n + r {
        return Ok(S::zero());
    }
    Ok(lukasiewicz_row(vs, n, r)?.swap_remove(s))
}

/// `mu(n, r, s)` as the weighted count of gentle Motzkin paths `(-r,r) -> (2n-s,s)`.
pub fn moment_gmotzkin<S: Scalar>(vs: &VerblunskySequence<S>, n: usize, r: usize, s: usize) -> Result<S> {
    let (ni, ri, si) = (n as i64, r as i64, s as i64);
    let len = 2 * ni - si + ri;
    if len < 0 || s > n + r {
        return Ok(S::zero());
    }
    let height = n + r + 1;
    let c = vs.window(height + 1)?;
    let mut v = vec![S::zero(); height];
    v[r] = S::one();
    for x in -ri..(2 * ni - si) {
        let mut next = vec![S::zero(); height];
        for b in 0..height {
            if v[b].is_zero() {
                continue;
            }
            let even = (x + b as i64).rem_euclid(2) == 0;
            next[b] += v[b].clone() * &gmotzkin_weight(&c, x, b, Step::Level);
            if even && b + 1 < height {
                next[b + 1] += v[b].clone();
            }
            if !even && b > 0 {
                next[b - 1] += v[b].clone() * &gmotzkin_weight(&c, x, b, Step::Down(1));
            }
        }
        v = next;
    }
    Ok(v.swap_remove(s))
}

/// Boundary rules for Schröder path sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SchroderEnds {
    pub initial_vertical: bool,
    pub terminal_vertical: bool,
}

impl SchroderEnds {
    /// The moment paths: no initial vertical step, any ending.
    pub const MOMENT: SchroderEnds = SchroderEnds { initial_vertical: false, terminal_vertical: true };
    /// Neither an initial nor a terminal vertical step.
    pub const OPEN: SchroderEnds = SchroderEnds { initial_vertical: false, terminal_vertical: false };
    pub const ALL: SchroderEnds = SchroderEnds { initial_vertical: true, terminal_vertical: true };
}

/// Weighted count of Schröder paths `(0,r) -> (n,s)`. Vertical steps are
/// zero-width, so each column is closed under a downward cascade before the
/// next column is entered.
pub fn schroder_sum<S: Scalar>(
    vs: &VerblunskySequence<S>,
    n: usize,
    r: usize,
    s: usize,
    ends: SchroderEnds,
) -> Result<S> {
    if s > n + r {
        return Ok(S::zero());
    }
    let height = n + r + 1;
    let c = vs.window(height)?;
    if n > 0 || ends.initial_vertical {
        let needed = if n > 0 { n + r } else { r };
        if let Some(j) = c.first_zero(needed) {
            return Err(Error::ZeroVerblunsky(j));
        }
    }
    let mut level = Vec::with_capacity(height);
    let mut vertical = vec![S::zero()];
    for b in 0..height {
        level.push(if b + 1 < height { schroder_level_weight(&c, b)? } else { S::zero() });
        if b > 0 {
            vertical.push(schroder_vertical_weight(&c, b)?);
        }
    }
    let cascade = |v: &mut Vec<S>| {
        for b in (1..height).rev() {
            let carry = v[b].clone() * &vertical[b];
            v[b - 1] += carry;
        }
    };
    let mut v = vec![S::zero(); height];
    v[r] = S::one();
    if ends.initial_vertical {
        cascade(&mut v);
        if n == 0 && !ends.terminal_vertical {
            v = vec![S::zero(); height];
            v[r] = S::one();
        }
    }
    for col in 1..=n {
        let mut next = vec![S::zero(); height];
        for b in 0..height {
            if v[b].is_zero() {
                continue;
            }
            next[b] += v[b].clone() * &level[b];
            if b + 1 < height {
                next[b + 1] += v[b].clone();
            }
        }
        if col < n || ends.terminal_vertical {
            cascade(&mut next);
        }
        v = next;
    }
    Ok(v.swap_remove(s))
}

/// `mu(n, r, s)` as the weighted count of Schröder paths; needs
/// `alpha_j != 0` for `j < n + r`.
pub fn moment_schroder<S: Scalar>(vs: &VerblunskySequence<S>, n: usize, r: usize, s: usize) -> Result<S> {
    schroder_sum(vs, n, r, s, SchroderEnds::MOMENT)
}

/// `mu(-n, r, s)` from mirrored Łukasiewicz paths `(0,s) -> (-n,r)`: up-steps
/// from height `b` weigh `rho_b`, `k`-down-steps weigh
/// `-conj(alpha_b) alpha_{b-k-1}`.
pub fn moment_negative<S: Scalar>(vs: &VerblunskySequence<S>, n: usize, r: usize, s: usize) -> Result<S> {
    if r > n + s {
        return Ok(S::zero());
    }
    let height = n + s + 1;
    let c = vs.window(height)?;
    let mut v = vec![S::zero(); height];
    v[s] = S::one();
    for _ in 0..n {
        let mut next = vec![S::zero(); height];
        let mut tail = S::zero();
        for t in (0..height).rev() {
            tail = tail + c.alpha_bar(t as i64).clone() * &v[t];
            let mut x = -(c.alpha(t as i64 - 1).clone() * &tail);
            if t > 0 {
                x += v[t - 1].clone() * c.rho(t - 1);
            }
            next[t] = x;
        }
        v = next;
    }
    Ok(v.swap_remove(r))
}

/// Both sides of `mu(-n, r, s) kappa_s = conj(mu(n, s, r)) kappa_r`.
pub fn reciprocity_sides<S: Scalar>(vs: &VerblunskySequence<S>, n: usize, r: usize, s: usize) -> Result<(S, S)> {
    let c = vs.window(r.max(s))?;
    let lhs = moment_negative(vs, n, r, s)? * &c.rho_product(0, s);
    let rhs = moment_lukasiewicz(vs, n, s, r)?.conj() * &c.rho_product(0, r);
    Ok((lhs, rhs))
}
