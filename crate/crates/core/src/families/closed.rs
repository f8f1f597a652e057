use num_traits::{One, Zero};

use crate::algebra::{GaussianRational, ParamSym};
use crate::error::{Error, Result};

use super::geronimus::{geronimus_gf_moment, geronimus_phi_coeff, nrs_from_nm};
use super::special::{binomial_q, q_binomial, rising};
use super::{single_nontrivial_u, FamilyScalar, FamilySpec, Param};

fn delta<S: FamilyScalar>(a: usize, b: usize) -> S {
    if a == b {
        S::one()
    } else {
        S::zero()
    }
}

fn sign(k: usize) -> GaussianRational {
    if k % 2 == 0 {
        GaussianRational::one()
    } else {
        -GaussianRational::one()
    }
}

fn int(v: usize) -> GaussianRational {
    GaussianRational::from_integer(v as i64)
}

fn unsupported(spec: &FamilySpec) -> Error {
    Error::UnsupportedFamily(format!("{} has no closed form here", spec.name()))
}

fn real(p: &Param) -> Result<GaussianRational> {
    p.value()
        .cloned()
        .ok_or_else(|| Error::UnsupportedFamily("symbolic parameter has no rational closed form".into()))
}

/// `sinh`-like difference `u^k - u^{-k}`.
fn diff(u: f64, k: i32) -> f64 {
    u.powi(k) - u.powi(-k)
}

/// `mu(n, m) = mu(n, 0, m)` from the family's closed form.
pub fn closed_moment_nm<S: FamilyScalar>(spec: &FamilySpec, n: usize, m: usize) -> Result<S> {
    spec.validate()?;
    match spec {
        FamilySpec::BernsteinSzego { zeta } => {
            if n < m {
                return Ok(S::zero());
            }
            Ok(S::parameter(zeta, ParamSym::Zeta)?.pow((n - m) as u32))
        }
        FamilySpec::MassPoint { gamma } => {
            if n <= m {
                return Ok(delta(n, m));
            }
            let g = real(gamma)?;
            Ok(S::from_gaussian(&g.checked_div(&(GaussianRational::one() + int(m) * g.clone()))?))
        }
        FamilySpec::CircularJacobi { a } => {
            if n < m {
                return Ok(S::zero());
            }
            let a = real(a)?;
            let k = n - m;
            let num = sign(k) * binomial_q(n as i64, m as i64) * rising(&-a.clone(), k);
            let den = rising(&(-a - int(n)), k);
            Ok(S::from_gaussian(&num.checked_div(&den)?))
        }
        FamilySpec::SingleNontrivial { .. } => closed_moment_nrs(spec, n, 0, m),
        FamilySpec::RogersSzego { q } => {
            let t = S::sqrt_q(q)?;
            let q = t.pow(2);
            if n < m {
                return Ok(S::zero());
            }
            let k = (n - m) as u32;
            Ok(q_binomial(n, m, &q)? * &t.pow(k * k))
        }
        FamilySpec::Geronimus { .. } | FamilySpec::AlSalamCarlitz { .. } => Err(unsupported(spec)),
    }
}

/// `mu(n, r, s)` from the family's closed form.
pub fn closed_moment_nrs<S: FamilyScalar>(spec: &FamilySpec, n: usize, r: usize, s: usize) -> Result<S> {
    spec.validate()?;
    match spec {
        FamilySpec::BernsteinSzego { .. } => {
            if r == 0 {
                closed_moment_nm(spec, n, s)
            } else {
                Ok(delta(s, n + r))
            }
        }
        FamilySpec::MassPoint { gamma } => {
            if r == 0 {
                return closed_moment_nm(spec, n, s);
            }
            if s >= n + r {
                return Ok(delta(s, n + r));
            }
            let g = real(gamma)?;
            let one = GaussianRational::one();
            let den = (one.clone() + int(r - 1) * g.clone()) * (one.clone() + int(s) * g.clone());
            let num = if s + 1 > n { -(int(n) * g.clone() * g) } else { (one - g.clone()) * g };
            Ok(S::from_gaussian(&num.checked_div(&den)?))
        }
        FamilySpec::CircularJacobi { a } => {
            let a = real(a)?;
            if a.is_zero() {
                return Ok(delta(s, n + r));
            }
            let mut total = GaussianRational::zero();
            for i in 0..=r {
                if n + i < s {
                    continue;
                }
                let k = n + i - s;
                let num = sign(k)
                    * binomial_q((n + i) as i64, s as i64)
                    * binomial_q(r as i64, i as i64)
                    * rising(&a, i + 1)
                    * rising(&-a.clone(), k);
                let den = rising(&(a.clone() + int(r - i)), i + 1) * rising(&(-a.clone() - int(n + i)), k);
                total += &num.checked_div(&den)?;
            }
            Ok(S::from_gaussian(&total))
        }
        FamilySpec::SingleNontrivial { a } => {
            let a = real(a)?;
            if s == n + r {
                return Ok(S::one());
            }
            if s > n + r || s + 1 < n {
                return Ok(S::zero());
            }
            if a.is_one() {
                let v = -int(n).checked_div(&(int(r + 1) * int(s + 2)))?;
                return Ok(S::from_gaussian(&v));
            }
            let u = single_nontrivial_u(&a);
            let v = -diff(u, n as i32) * diff(u, 1) / (diff(u, s as i32 + 2) * diff(u, r as i32 + 1));
            S::from_real(v)
        }
        FamilySpec::RogersSzego { q } => {
            let t = S::sqrt_q(q)?;
            let q = t.pow(2);
            let mut total = S::zero();
            for j in 0..=r {
                if n + j < s {
                    continue;
                }
                let k = (n + j - s) as u32;
                let term = q_binomial(r, j, &q)? * &q_binomial(n + j, s, &q)? * &t.pow((r - j) as u32 + k * k);
                if (r - j) % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            Ok(total)
        }
        FamilySpec::Geronimus { .. } | FamilySpec::AlSalamCarlitz { .. } => Err(unsupported(spec)),
    }
}

/// Closed-form `mu(n, r, s)` for every family that has one, including
/// Geronimus through its generating functions.
pub fn family_moment<S: FamilyScalar>(spec: &FamilySpec, n: usize, r: usize, s: usize) -> Result<S> {
    match spec {
        FamilySpec::Geronimus { alpha } => {
            spec.validate()?;
            let a = S::parameter(alpha, ParamSym::Geronimus)?;
            if a.is_zero() {
                return Ok(delta(s, n + r));
            }
            let phi: Vec<S> = (0..=r).map(|i| geronimus_phi_coeff(&a, r, i)).collect();
            nrs_from_nm(&phi, n, s, |k, m| geronimus_gf_moment(&a, k, m))
        }
        _ => closed_moment_nrs(spec, n, r, s),
    }
}
