//! Linearization coefficients of `z^n Phi_r` and `z^n Phi_r^*` in the `Phi`
//! and `Phi^*` bases, and their conjugates `mu`, `nu`, `eta`, `theta`.

use crate::algebra::{LaurentPoly, Poly, Scalar};
use crate::error::{Error, Result};
use crate::matrices::Matrix;
use crate::opuc::{Opuc, VerblunskySequence};
use crate::paths::{lukasiewicz_row, lukasiewicz_step, moment_negative, schroder_sum, SchroderEnds};

/// Coefficients of a polynomial `f` against the monic family `Phi_0..Phi_deg`.
pub fn expand_in_phi_basis<S: Scalar>(opuc: &Opuc<S>, f: &LaurentPoly<S>) -> Result<Vec<S>> {
    if let Some(v) = f.valuation().filter(|&v| v < 0) {
        return Err(Error::NegativeValuation(v));
    }
    let Some(deg) = f.degree() else {
        return Ok(Vec::new());
    };
    let deg = deg as usize;
    let mut rem = f.clone();
    let mut out = vec![S::zero(); deg + 1];
    for k in (0..=deg).rev() {
        let c = rem.coeff(k as i64);
        if !c.is_zero() {
            rem = &rem - &opuc.phi(k)?.phi.scale(&c);
        }
        out[k] = c;
    }
    debug_assert!(rem.is_zero());
    Ok(out)
}

/// Coefficients of `f` against `Phi_0^*..Phi_top^*`. The top coefficient of
/// `Phi_s^*` is `-alpha_{s-1}`, so every `alpha_j` with `j < top` must be nonzero.
pub fn expand_in_phistar_basis<S: Scalar>(opuc: &Opuc<S>, f: &LaurentPoly<S>, top: usize) -> Result<Vec<S>> {
    if let Some(v) = f.valuation().filter(|&v| v < 0) {
        return Err(Error::NegativeValuation(v));
    }
    if let Some(d) = f.degree().filter(|&d| d as usize > top) {
        return Err(Error::DegreeExceeded { degree: d, declared: top as i64 });
    }
    let c = opuc.sequence().window(top)?;
    if let Some(j) = c.first_zero(top) {
        return Err(Error::ZeroVerblunsky(j));
    }
    let mut rem = f.clone();
    let mut out = vec![S::zero(); top + 1];
    for s in (0..=top).rev() {
        let x = rem.coeff(s as i64);
        if x.is_zero() {
            continue;
        }
        let lead = -c.alpha(s as i64 - 1).clone();
        let coef = x.try_div(&lead)?;
        rem = &rem - &opuc.phi(s)?.phi_star.scale(&coef);
        out[s] = coef;
    }
    if !rem.is_zero() {
        return Err(Error::Invariant("Phi* expansion left a remainder".into()));
    }
    Ok(out)
}

/// `(nu(n, r, s))_{0 <= s <= n + r}` by `nu(n, r+1, s) = nu(n, r, s) - conj(alpha_r) mu(n+1, r, s)`
/// from `nu(n, 0, s) = mu(n, 0, s)`.
pub fn nu_row<S: Scalar>(vs: &VerblunskySequence<S>, n: usize, r: usize) -> Result<Vec<S>> {
    let mut row = lukasiewicz_row(vs, n, 0)?;
    row.resize(n + r + 1, S::zero());
    for j in 0..r {
        let ab = vs.alpha(j as i64)?.conj();
        for (s, m) in lukasiewicz_row(vs, n + 1, j)?.into_iter().enumerate() {
            row[s] -= ab.clone() * &m;
        }
    }
    Ok(row)
}

/// `nu(n, r, s)`, the conjugate of the coefficient of `Phi_s` in `z^n Phi_r^*`.
pub fn nu<S: Scalar>(vs: &VerblunskySequence<S>, n: usize, r: usize, s: usize) -> Result<S> {
    if s > n + r {
        return Ok(S::zero());
    }
    Ok(nu_row(vs, n, r)?.swap_remove(s))
}

/// `nu(n, r, s)` as `alpha_r^{-1}` times the Łukasiewicz paths `(-1,r) -> (n,s)`
/// that do not start with an up-step.
pub fn nu_path<S: Scalar>(vs: &VerblunskySequence<S>, n: usize, r: usize, s: usize) -> Result<S> {
    let height = n + r + 2;
    let c = vs.window(height)?;
    let ar = c.alpha(r as i64).clone();
    if ar.is_zero() {
        return Err(Error::ZeroVerblunsky(r));
    }
    if s > n + r {
        return Ok(S::zero());
    }
    let mut v = vec![S::zero(); height];
    v[r] = S::one();
    v = lukasiewicz_step(&c, &v, false);
    for _ in 0..n {
        v = lukasiewicz_step(&c, &v, true);
    }
    v.swap_remove(s).try_div(&ar)
}

/// `nu(-n, r, s) = sum_k nu(0, r, k) mu(-n, k, s)`, expanding `Phi_r^*` in the
/// `Phi` basis and reading each `mu(-n, k, s)` from mirrored paths.
pub fn nu_negative<S: Scalar>(vs: &VerblunskySequence<S>, n: usize, r: usize, s: usize) -> Result<S> {
    let mut total = S::zero();
    for (k, c) in nu_row(vs, 0, r)?.into_iter().enumerate() {
        if !c.is_zero() {
            total += c * &moment_negative(vs, n, k, s)?;
        }
    }
    Ok(total)
}

/// `<Phi_s, z^n Phi_r^*> / <Phi_s, Phi_s>` from the moment functional.
pub fn nu_oracle<S: Scalar>(opuc: &Opuc<S>, n: i64, r: usize, s: usize) -> Result<S> {
    let phi_s = opuc.phi(s)?.phi;
    let star = opuc.phi(r)?.phi_star.shift(n);
    opuc.inner_product(&phi_s, &star)?.try_div(&opuc.inner_product(&phi_s, &phi_s)?)
}

fn require_nonzero<S: Scalar>(vs: &VerblunskySequence<S>, upto: usize) -> Result<()> {
    match vs.window(upto + 1)?.first_zero(upto + 1) {
        Some(j) => Err(Error::ZeroVerblunsky(j)),
        None => Ok(()),
    }
}

/// `-(x_s - (conj(alpha_{s-1}) / conj(alpha_s)) rho_s x_{s+1}) / conj(alpha_{s-1})`,
/// the product of a row with the inverse of `(nu(0, i, j))`.
fn times_tau<S: Scalar>(vs: &VerblunskySequence<S>, row: &[S], s: usize) -> Result<S> {
    let get = |k: usize| row.get(k).cloned().unwrap_or_else(S::zero);
    let a_s = vs.alpha(s as i64)?;
    let ab_prev = vs.alpha(s as i64 - 1)?.conj();
    let mut total = -get(s).try_div(&ab_prev)?;
    let next = get(s + 1);
    if !next.is_zero() {
        let rho = S::one() - a_s.clone() * &a_s.conj();
        total += (next * &rho).try_div(&a_s.conj())?;
    }
    Ok(total)
}

/// `eta(n, r, s)`, the conjugate of the coefficient of `Phi_s^*` in `z^n Phi_r`;
/// needs `alpha_i != 0` for `i <= n + r`.
pub fn eta<S: Scalar>(vs: &VerblunskySequence<S>, n: usize, r: usize, s: usize) -> Result<S> {
    require_nonzero(vs, n + r)?;
    if s > n + r {
        return Ok(S::zero());
    }
    times_tau(vs, &lukasiewicz_row(vs, n, r)?, s)
}

/// `eta(n, r, s)` for `n >= 1` as `-1/conj(alpha_{s-1})` times the Schröder
/// paths `(0,r) -> (n,s)` with neither an initial nor a terminal vertical step.
pub fn eta_path<S: Scalar>(vs: &VerblunskySequence<S>, n: usize, r: usize, s: usize) -> Result<S> {
    let sum = schroder_sum(vs, n, r, s, SchroderEnds::OPEN)?;
    (-sum).try_div(&vs.alpha(s as i64 - 1)?.conj())
}

/// `theta(n, r, s)`, the conjugate of the coefficient of `Phi_s^*` in `z^n Phi_r^*`;
/// needs `alpha_i != 0` for `i <= n + r`.
pub fn theta<S: Scalar>(vs: &VerblunskySequence<S>, n: usize, r: usize, s: usize) -> Result<S> {
    require_nonzero(vs, n + r)?;
    if s > n + r {
        return Ok(S::zero());
    }
    times_tau(vs, &nu_row(vs, n, r)?, s)
}

/// `theta(n, r, s)` for `n >= 1` as `conj(alpha_{r-1}) / conj(alpha_{s-1})` times
/// the Schröder paths `(0,r) -> (n,s)` that may start, but not end, with a vertical step.
pub fn theta_path<S: Scalar>(vs: &VerblunskySequence<S>, n: usize, r: usize, s: usize) -> Result<S> {
    let ends = SchroderEnds { initial_vertical: true, terminal_vertical: false };
    let sum = schroder_sum(vs, n, r, s, ends)?;
    (vs.alpha(r as i64 - 1)?.conj() * &sum).try_div(&vs.alpha(s as i64 - 1)?.conj())
}

/// `nu(n, r, s)` as `-conj(alpha_{r-1})` times the Schröder paths `(0,r) -> (n,s)`
/// that may start with a vertical step.
pub fn nu_schroder<S: Scalar>(vs: &VerblunskySequence<S>, n: usize, r: usize, s: usize) -> Result<S> {
    let sum = schroder_sum(vs, n, r, s, SchroderEnds::ALL)?;
    Ok(-(vs.alpha(r as i64 - 1)?.conj() * &sum))
}

/// `(nu(0, i, j))_{i,j < dim}`.
pub fn nu0_matrix<S: Scalar>(vs: &VerblunskySequence<S>, dim: usize) -> Result<Matrix<S>> {
    let rows = (0..dim).map(|i| nu_row(vs, 0, i)).collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_fn(dim, |i, j| rows[i].get(j).cloned().unwrap_or_else(S::zero)))
}

/// Lower bidiagonal inverse of `(nu(0, i, j))`: `tau(j,j) = -1/conj(alpha_{j-1})`,
/// `tau(j+1,j) = rho_j / conj(alpha_j)`.
pub fn tau_matrix<S: Scalar>(vs: &VerblunskySequence<S>, dim: usize) -> Result<Matrix<S>> {
    let c = vs.window(dim)?;
    if let Some(j) = c.first_zero(dim) {
        return Err(Error::ZeroVerblunsky(j));
    }
    let mut m = Matrix::zeros(dim);
    for j in 0..dim {
        m.set(j, j, -S::one().try_div(c.alpha_bar(j as i64 - 1))?);
        if j + 1 < dim {
            m.set(j + 1, j, c.rho(j).try_div(c.alpha_bar(j as i64))?);
        }
    }
    Ok(m)
}

/// `conj(alpha_s) conj(alpha_{s-1}) eta(n, r, s)` in the generic symbols.
pub fn scaled_eta(n: usize, r: usize, s: usize) -> Result<Poly> {
    let vs = VerblunskySequence::<Poly>::generic();
    let scale = vs.alpha(s as i64)?.conj() * &vs.alpha(s as i64 - 1)?.conj();
    Ok(scale * &eta(&vs, n, r, s)?)
}

/// `conj(alpha_{s-1}) |alpha_r|^2 theta(n, r, s)` in the generic symbols.
pub fn scaled_theta(n: usize, r: usize, s: usize) -> Result<Poly> {
    let vs = VerblunskySequence::<Poly>::generic();
    let a_r = vs.alpha(r as i64)?;
    let scale = vs.alpha(s as i64 - 1)?.conj() * &a_r * &a_r.conj();
    Ok(scale * &theta(&vs, n, r, s)?)
}

/// `conj(alpha_s) conj(alpha_{s-1}) theta(n, r, s)` in the generic symbols.
pub fn scaled_theta_neighbours(n: usize, r: usize, s: usize) -> Result<Poly> {
    let vs = VerblunskySequence::<Poly>::generic();
    let scale = vs.alpha(s as i64)?.conj() * &vs.alpha(s as i64 - 1)?.conj();
    Ok(scale * &theta(&vs, n, r, s)?)
}

/// The four expansions of `z^n Phi_r` and `z^n Phi_r^*`, each paired with
/// its target: `mu` and `eta` rebuild `z^n Phi_r` from `Phi` and `Phi^*`,
/// `nu` and `theta` rebuild `z^n Phi_r^*`.
pub fn reconstructions<S: Scalar>(opuc: &Opuc<S>, n: usize, r: usize) -> Result<[(LaurentPoly<S>, LaurentPoly<S>); 4]> {
    let vs = opuc.sequence();
    let phi = opuc.phi(r)?;
    let zp = phi.phi.shift(n as i64);
    let zs = phi.phi_star.shift(n as i64);
    let mu_row = lukasiewicz_row(vs, n, r)?;
    let mut sums: [LaurentPoly<S>; 4] = std::array::from_fn(|_| LaurentPoly::zero());
    for s in 0..=n + r {
        let p = opuc.phi(s)?;
        let terms = [
            (mu_row[s].conj(), &p.phi),
            (nu(vs, n, r, s)?.conj(), &p.phi),
            (eta(vs, n, r, s)?.conj(), &p.phi_star),
            (theta(vs, n, r, s)?.conj(), &p.phi_star),
        ];
        for (acc, (c, basis)) in sums.iter_mut().zip(terms) {
            *acc = &*acc + &basis.scale(&c);
        }
    }
    let [a, b, c, d] = sums;
    Ok([(zp.clone(), a), (zs.clone(), b), (zp, c), (zs, d)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::moment_lukasiewicz;
    use num_complex::Complex64;

    fn generic() -> VerblunskySequence<Poly> {
        VerblunskySequence::generic()
    }

    fn ab(j: u32) -> Poly {
        Poly::alpha_bar(j)
    }

    fn z_pow(n: usize) -> LaurentPoly<Poly> {
        LaurentPoly::monomial(n as i64, Poly::one())
    }

    #[test]
    fn phi_basis_expansion_of_z() {
        let opuc = Opuc::new(generic());
        let c = expand_in_phi_basis(&opuc, &z_pow(1)).unwrap();
        assert_eq!(c, vec![ab(0), Poly::one()]);
        let phi2 = opuc.phi(2).unwrap().phi;
        assert_eq!(expand_in_phi_basis(&opuc, &phi2).unwrap(), vec![Poly::zero(), Poly::zero(), Poly::one()]);
    }

    #[test]
    fn phistar_basis_of_small_targets() {
        let opuc = Opuc::new(generic());
        assert_eq!(expand_in_phistar_basis(&opuc, &LaurentPoly::one(), 0).unwrap(), vec![Poly::one()]);
        let star1 = opuc.phi(1).unwrap().phi_star;
        assert_eq!(expand_in_phistar_basis(&opuc, &star1, 1).unwrap(), vec![Poly::zero(), Poly::one()]);
        let c = expand_in_phistar_basis(&opuc, &z_pow(1), 1).unwrap();
        assert_eq!(c[0], eta(&generic(), 1, 0, 0).unwrap().conj());
        assert_eq!(c[1], eta(&generic(), 1, 0, 1).unwrap().conj());
    }

    #[test]
    fn phistar_basis_needs_nonzero_coefficients() {
        let vs = VerblunskySequence::table(vec![Complex64::new(0.0, 0.0), Complex64::new(0.5, 0.0)]).unwrap();
        let opuc = Opuc::new(vs);
        let f = LaurentPoly::monomial(1, Complex64::new(1.0, 0.0));
        assert_eq!(expand_in_phistar_basis(&opuc, &f, 1), Err(Error::ZeroVerblunsky(0)));
    }

    #[test]
    fn nu_small_values() {
        let vs = generic();
        assert_eq!(nu(&vs, 0, 1, 0).unwrap(), Poly::rho(0));
        assert_eq!(nu(&vs, 0, 1, 1).unwrap(), -ab(0));
        for n in 0..4 {
            for s in 0..=n {
                assert_eq!(nu(&vs, n, 0, s).unwrap(), moment_lukasiewicz(&vs, n, 0, s).unwrap());
            }
        }
    }

    #[test]
    fn nu_recurrence_path_and_oracle_agree() {
        let vs = generic();
        let opuc = Opuc::new(vs.clone());
        for n in 0..=3 {
            for r in 0..=3 {
                for s in 0..=n + r + 1 {
                    let v = nu(&vs, n, r, s).unwrap();
                    assert_eq!(v, nu_path(&vs, n, r, s).unwrap(), "path ({n},{r},{s})");
                    assert_eq!(v, nu_schroder(&vs, n, r, s).unwrap(), "schroder ({n},{r},{s})");
                    assert_eq!(v, nu_oracle(&opuc, n as i64, r, s).unwrap(), "oracle ({n},{r},{s})");
                }
            }
        }
    }

    #[test]
    fn negative_nu_matches_oracle() {
        let vs = generic();
        let opuc = Opuc::new(vs.clone());
        for n in 0..=3 {
            for r in 0..=3 {
                for s in 0..=3 {
                    assert_eq!(
                        nu_negative(&vs, n, r, s).unwrap(),
                        nu_oracle(&opuc, -(n as i64), r, s).unwrap(),
                        "({n},{r},{s})"
                    );
                }
            }
        }
        assert_eq!(nu_negative(&vs, 1, 0, 0).unwrap(), ab(0));
        assert_eq!(nu_negative(&vs, 1, 0, 1).unwrap(), ab(1));
    }

    #[test]
    fn single_schroder_sum_does_not_give_negative_nu() {
        // conj(alpha_r) (kappa_r / kappa_s) times Schröder paths (0,s) -> (n-1,r), at (1,0,1)
        let vs = generic();
        let c = vs.window(2).unwrap();
        for ends in [SchroderEnds::MOMENT, SchroderEnds::ALL] {
            let sum = schroder_sum(&vs, 0, 1, 0, ends).unwrap();
            let reading = (ab(0) * &sum).try_div(c.rho(0)).unwrap();
            assert_ne!(reading, nu_negative(&vs, 1, 0, 1).unwrap());
        }
    }

    #[test]
    fn eta_and_theta_at_n_zero() {
        let vs = generic();
        for r in 0..=4u32 {
            for s in 0..=5u32 {
                let e = eta(&vs, 0, r as usize, s as usize).unwrap();
                let expected = if s == r {
                    -Poly::one().try_div(&vs.alpha(r as i64 - 1).unwrap().conj()).unwrap()
                } else if s + 1 == r {
                    Poly::rho(s).try_div(&ab(s)).unwrap()
                } else {
                    Poly::zero()
                };
                assert_eq!(e, expected, "eta(0,{r},{s})");
                let t = theta(&vs, 0, r as usize, s as usize).unwrap();
                assert_eq!(t, if r == s { Poly::one() } else { Poly::zero() }, "theta(0,{r},{s})");
            }
        }
    }

    #[test]
    fn eta_and_theta_path_readings() {
        let vs = generic();
        for n in 1..=3 {
            for r in 0..=2 {
                for s in 0..=n + r {
                    assert_eq!(eta(&vs, n, r, s).unwrap(), eta_path(&vs, n, r, s).unwrap(), "eta ({n},{r},{s})");
                    assert_eq!(theta(&vs, n, r, s).unwrap(), theta_path(&vs, n, r, s).unwrap(), "theta ({n},{r},{s})");
                }
            }
        }
    }

    #[test]
    fn tau_inverts_nu0() {
        let vs = generic();
        let dim = 5;
        let prod = nu0_matrix(&vs, dim).unwrap().mul(&tau_matrix(&vs, dim).unwrap());
        assert!(prod == Matrix::identity(dim));
        assert_eq!(*tau_matrix(&vs, 1).unwrap().get(0, 0), Poly::one());
    }

    #[test]
    fn scaled_eta_is_polynomial_but_not_beta_positive() {
        let mut negatives = 0;
        for n in 0..=3 {
            for r in 0..=4 - n {
                for s in 0..=n + r {
                    let e = scaled_eta(n, r, s).unwrap();
                    assert!(e.is_polynomial(), "({n},{r},{s}) {e}");
                    negatives += e.to_beta_basis().negative_terms().len();
                }
            }
        }
        assert!(negatives > 0);
        assert!(nu(&generic(), 2, 2, 1).unwrap().to_beta_basis().is_positive());
    }

    #[test]
    fn theta_needs_both_neighbouring_conjugates_to_clear_denominators() {
        for n in 0..=3 {
            for r in 0..=4 - n {
                for s in 0..=n + r {
                    let t = scaled_theta_neighbours(n, r, s).unwrap();
                    assert!(t.is_polynomial(), "({n},{r},{s}) {t}");
                }
            }
        }
        assert!(!scaled_theta(2, 0, 1).unwrap().is_polynomial());
    }

    #[test]
    fn four_expansions_reconstruct_their_targets() {
        let opuc = Opuc::new(generic());
        for n in 0..=2 {
            for r in 0..=3 - n {
                for (k, (target, rebuilt)) in reconstructions(&opuc, n, r).unwrap().into_iter().enumerate() {
                    assert_eq!(rebuilt, target, "expansion {k} at ({n},{r})");
                }
            }
        }
    }
}
