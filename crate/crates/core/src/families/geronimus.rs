use crate::algebra::{GaussianRational, Scalar};
use crate::error::Result;

use super::special::binomial;

/// Power-series coefficients `f_0..f_order` and `g_0..g_order` defined by
/// `f = 1 - z f + rho z f^2` and `g = 1 + c z g - c rho z f g` with
/// `c = 1/conj(alpha)`, each coefficient recursively from lower ones.
pub fn geronimus_series<S: Scalar>(alpha: &S, order: usize) -> Result<(Vec<S>, Vec<S>)> {
    let rho = S::one() - alpha.clone() * &alpha.conj();
    let c = S::one().try_div(&alpha.conj())?;
    let mut f = vec![S::one()];
    let mut g = vec![S::one()];
    for k in 1..=order {
        let mut ff = S::zero();
        let mut fg = S::zero();
        for i in 0..k {
            ff += f[i].clone() * &f[k - 1 - i];
            fg += f[i].clone() * &g[k - 1 - i];
        }
        f.push(rho.clone() * &ff - f[k - 1].clone());
        g.push(c.clone() * &(g[k - 1].clone() - rho.clone() * &fg));
    }
    Ok((f, g))
}

/// `mu(n, m) = [z^n] g(z) (z f(z))^m`; for `alpha = 0` this is `delta(n, m)`.
pub fn geronimus_gf_moment<S: Scalar>(alpha: &S, n: usize, m: usize) -> Result<S> {
    if alpha.is_zero() {
        return Ok(if n == m { S::one() } else { S::zero() });
    }
    if m > n {
        return Ok(S::zero());
    }
    let k = n - m;
    let (f, g) = geronimus_series(alpha, k)?;
    let mut acc = g;
    for _ in 0..m {
        let mut next = vec![S::zero(); k + 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, b) in f.iter().enumerate().take(k + 1 - i) {
                next[i + j] += a.clone() * b;
            }
        }
        acc = next;
    }
    Ok(acc.swap_remove(k))
}

/// Coefficient of `z^i` in `Phi_n` for the constant sequence `alpha`, by the
/// recurrence `p(n,i) = p(n-1,i-1) + p(n-1,i) - rho p(n-2,i-1)` with
/// `p(k,k) = 1` and `p(k,0) = -conj(alpha)` for `k >= 1`.
pub fn geronimus_phi_coeff<S: Scalar>(alpha: &S, n: usize, i: usize) -> S {
    if i > n {
        return S::zero();
    }
    let rho = S::one() - alpha.clone() * &alpha.conj();
    let mut rows: Vec<Vec<S>> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut row = vec![S::zero(); k + 1];
        row[k] = S::one();
        if k >= 1 {
            row[0] = -alpha.conj();
        }
        for j in 1..k {
            row[j] = rows[k - 1][j - 1].clone() + &rows[k - 1][j] - rho.clone() * &rows[k - 2][j - 1];
        }
        rows.push(row);
    }
    rows[n][i].clone()
}

/// The same coefficient from the explicit sum
/// `sum_j (C(i,j) - C(i,j-1)/alpha) C(n-i-1, j-1) |alpha|^{2j}` with `C(-1,-1) = 1`.
pub fn geronimus_phi_coeff_closed<S: Scalar>(alpha: &S, n: usize, i: usize) -> Result<S> {
    if i > n {
        return Ok(S::zero());
    }
    let binom = |a: i64, b: i64| -> S {
        if a == -1 && b == -1 {
            S::one()
        } else {
            S::from_gaussian(&GaussianRational::real(binomial(a, b).into()))
        }
    };
    let inv = S::one().try_div(alpha)?;
    let norm = alpha.clone() * &alpha.conj();
    let (n, i) = (n as i64, i as i64);
    let mut total = S::zero();
    for j in 0..=i + 1 {
        let lead = binom(i, j) - inv.clone() * &binom(i, j - 1);
        let tail = binom(n - i - 1, j - 1);
        total += lead * &tail * &norm.pow(j as u32);
    }
    Ok(total)
}

/// `mu(n, r, s) = sum_i conj(p(r,i)) mu(n+i, s)` where `p(r, i)` are the
/// coefficients of `Phi_r`.
pub fn nrs_from_nm<S: Scalar>(
    phi_r: &[S],
    n: usize,
    s: usize,
    mut nm: impl FnMut(usize, usize) -> Result<S>,
) -> Result<S> {
    let mut total = S::zero();
    for (i, p) in phi_r.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        total += p.conj() * &nm(n + i, s)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ParamSym, Poly, Symbol};
    use crate::families::special::factorial;
    use crate::opuc::{Opuc, SequenceSource, VerblunskySequence};
    use crate::paths::moment_lukasiewicz;
    use num_complex::Complex64;
    use num_traits::One;

    fn constant<S: Scalar>(a: S) -> VerblunskySequence<S> {
        VerblunskySequence::from_fn(SequenceSource::Family("geronimus".into()), move |_| Ok(a.clone()))
    }

    fn alphas() -> Vec<Poly> {
        vec![
            Poly::constant(GaussianRational::ratio(1, 2)),
            Poly::constant(GaussianRational::one()),
            Poly::constant(GaussianRational::complex((3, 10), (2, 5))),
            Poly::symbol(Symbol::param(ParamSym::Geronimus)),
        ]
    }

    #[test]
    fn series_starts_with_one() {
        let (f, g) = geronimus_series(&Poly::constant(GaussianRational::ratio(1, 2)), 3).unwrap();
        assert!(f[0].is_one() && g[0].is_one());
    }

    #[test]
    fn gf_moments_match_lukasiewicz() {
        for a in alphas() {
            let vs = constant(a.clone());
            for n in 0..=6 {
                for m in 0..=n + 1 {
                    assert_eq!(
                        geronimus_gf_moment(&a, n, m).unwrap(),
                        moment_lukasiewicz(&vs, n, 0, m).unwrap(),
                        "alpha={a} n={n} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn alpha_one_alternating_sum() {
        let a = Poly::one();
        for n in 0..=7i64 {
            for m in 0..=n {
                let expected: i64 = (0..=n - m)
                    .map(|k| {
                        let c: i64 = if m == 0 && k == 0 {
                            1
                        } else {
                            binomial(m + k - 1, k).try_into().unwrap()
                        };
                        if k % 2 == 0 { c } else { -c }
                    })
                    .sum();
                assert_eq!(geronimus_gf_moment(&a, n as usize, m as usize).unwrap(), Poly::from_i64(expected));
            }
        }
        assert!(geronimus_gf_moment(&a, 2, 1).unwrap().is_zero());
    }

    #[test]
    fn phi_coefficients_agree_three_ways() {
        for a in alphas() {
            let opuc = Opuc::new(constant(a.clone()));
            for n in 0..=8 {
                let phi = opuc.phi(n).unwrap().phi;
                for i in 0..=n {
                    let rec = geronimus_phi_coeff(&a, n, i);
                    assert_eq!(rec, phi.coeff(i as i64), "alpha={a} n={n} i={i}");
                    assert_eq!(geronimus_phi_coeff_closed(&a, n, i).unwrap(), rec, "closed n={n} i={i}");
                }
            }
        }
    }

    #[test]
    fn nrs_from_nm_matches_paths() {
        let a = Poly::symbol(Symbol::param(ParamSym::Geronimus));
        let vs = constant(a.clone());
        for r in 0..=3 {
            let phi: Vec<Poly> = (0..=r).map(|i| geronimus_phi_coeff(&a, r, i)).collect();
            for n in 0..=3 {
                for s in 0..=n + r {
                    let got = nrs_from_nm(&phi, n, s, |k, m| geronimus_gf_moment(&a, k, m)).unwrap();
                    assert_eq!(got, moment_lukasiewicz(&vs, n, r, s).unwrap());
                }
            }
        }
    }

    fn multinomial(total: i64, parts: [i64; 3]) -> Option<GaussianRational> {
        if parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != total {
            return None;
        }
        let den = parts.iter().fold(num_bigint::BigInt::one(), |acc, &p| acc * factorial(p));
        Some(GaussianRational::real(num_rational::BigRational::new(factorial(total), den)))
    }

    #[test]
    fn printed_double_sums_agree_with_series() {
        let alpha = Complex64::new(0.3, 0.4);
        let norm = alpha.norm_sqr();
        let rho = 1.0 - norm;
        let (f, g) = geronimus_series(&alpha, 6).unwrap();
        for n in 1..=6i64 {
            let mut gn = Complex64::new(0.0, 0.0);
            for l in 1..=n {
                for k in 0..=n - l {
                    if let Some(c) = multinomial(n + k - 1, [k, k + l - 1, n - k - l]) {
                        let w = c.to_complex() * (l as f64 / (k + l) as f64);
                        gn += w * (-norm).powi(k as i32) * alpha.powi(l as i32);
                    }
                }
            }
            assert!((gn - g[n as usize]).norm() < 1e-12, "g_{n}: {gn} vs {}", g[n as usize]);
        }
        for m in 1..=4i64 {
            for n in m..=6i64 {
                let mut coef = Complex64::new(0.0, 0.0);
                for k in 0..=n - m {
                    if let Some(c) = multinomial(n + k - 1, [k, k + m - 1, n - k - m]) {
                        let sign = if (n - k - m) % 2 == 0 { 1.0 } else { -1.0 };
                        coef += c.to_complex() * (m as f64 / (k + m) as f64) * sign * rho.powi(k as i32);
                    }
                }
                let mut acc = vec![Complex64::new(0.0, 0.0); 7];
                acc[0] = Complex64::new(1.0, 0.0);
                for _ in 0..m {
                    let mut next = vec![Complex64::new(0.0, 0.0); 7];
                    for i in 0..7 {
                        for j in 0..7 - i {
                            next[i + j] += acc[i] * f[j];
                        }
                    }
                    acc = next;
                }
                let series = acc[(n - m) as usize];
                assert!((coef - series).norm() < 1e-12, "(zf)^{m} at {n}: {coef} vs {series}");
            }
        }
    }
}
