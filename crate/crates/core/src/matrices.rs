//! Dense matrices over a [`Scalar`]: the banded transfer matrix `U`, the CMV
//! factors, and Toeplitz determinants.

use std::fmt;

use num_complex::Complex64;

use crate::algebra::{Poly, Scalar};
use crate::error::Result;
use crate::opuc::{Coeffs, Opuc, VerblunskySequence};
use crate::paths::{moment_lukasiewicz, moment_negative};

#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    dim: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, data: vec![S::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.dim + j] = v;
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let d = self.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * d + j] += a.clone() * b;
                    }
                }
            }
        }
        out
    }

    /// `self^k` by repeated squaring.
    /// Row vector times matrix.
    pub fn left_mul(&self, v: &[S]) -> Vec<S> {
        let d = self.dim;
        let mut out = vec![S::zero(); d];
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let a = &self.data[i * d + j];
                if !a.is_zero() {
                    *o += x.clone() * a;
                }
            }
        }
        out
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.dim);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Determinant: fraction-free Bareiss elimination in symbolic mode,
    /// partial-pivoting LU in numeric mode.
    pub fn determinant(&self) -> Result<S>
    where
        S: Determinant,
    {
        S::determinant(self)
    }

    /// Fraction-free Gaussian elimination; every division is exact.
    pub fn bareiss(&self) -> Result<S> {
        let n = self.dim;
        if n == 0 {
            return Ok(S::one());
        }
        let mut a = self.data.clone();
        let mut sign = S::one();
        let mut prev = S::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                match (k + 1..n).find(|&i| !a[i * n + k].is_zero()) {
                    Some(p) => {
                        for j in 0..n {
                            a.swap(k * n + j, p * n + j);
                        }
                        sign = -sign;
                    }
                    None => return Ok(S::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[i * n + j].clone() * &a[k * n + k] - a[i * n + k].clone() * &a[k * n + j];
                    a[i * n + j] = v.try_div(&prev)?;
                }
                a[i * n + k] = S::zero();
            }
            prev = a[k * n + k].clone();
        }
        Ok(sign * &a[n * n - 1])
    }
}

/// Mode-appropriate determinant algorithm.
pub trait Determinant: Scalar {
    fn determinant(m: &Matrix<Self>) -> Result<Self>;
}

impl Determinant for Poly {
    fn determinant(m: &Matrix<Self>) -> Result<Self> {
        m.bareiss()
    }
}

impl Determinant for Complex64 {
    fn determinant(m: &Matrix<Self>) -> Result<Self> {
        let n = m.dim;
        let mut a = m.data.clone();
        let mut det = Complex64::new(1.0, 0.0);
        for k in 0..n {
            let p = (k..n)
                .max_by(|&x, &y| a[x * n + k].norm().total_cmp(&a[y * n + k].norm()))
                .unwrap_or(k);
            if a[p * n + k].norm() == 0.0 {
                return Ok(Complex64::new(0.0, 0.0));
            }
            if p != k {
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                det = -det;
            }
            let pivot = a[k * n + k];
            det *= pivot;
            for i in k + 1..n {
                let f = a[i * n + k] / pivot;
                for j in k + 1..n {
                    let t = a[k * n + j];
                    a[i * n + j] -= f * t;
                }
            }
        }
        Ok(det)
    }
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| self.get(i, j).render()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Truncation of the banded matrix with `u_{i,i+1} = 1` and
/// `u_{i,j} = -alpha_i conj(alpha_{j-1}) prod_{j <= k < i} rho_k` for `j <= i`.
pub fn build_u<S: Scalar>(c: &Coeffs<S>, dim: usize) -> Matrix<S> {
    Matrix::from_fn(dim, |i, j| {
        if j == i + 1 {
            S::one()
        } else if j <= i {
            -(c.alpha(i as i64).clone() * c.alpha_bar(j as i64 - 1)) * c.rho_product(j, i)
        } else {
            S::zero()
        }
    })
}

/// `(U^n)_{r,s}` on the truncation of dimension `r + n + 1`.
pub fn u_power_entry<S: Scalar>(vs: &VerblunskySequence<S>, n: usize, r: usize, s: usize) -> Result<S> {
    if s > n + r {
        return Ok(S::zero());
    }
    Ok(u_power_row(vs, n, r)?.swap_remove(s))
}

/// Row `r` of `U^n` for all `s <= n + r`, as `e_r U U ... U`.
pub fn u_power_row<S: Scalar>(vs: &VerblunskySequence<S>, n: usize, r: usize) -> Result<Vec<S>> {
    let dim = r + n + 1;
    let u = build_u(&vs.window(dim)?, dim);
    let mut row = vec![S::zero(); dim];
    row[r] = S::one();
    for _ in 0..n {
        row = u.left_mul(&row);
    }
    Ok(row)
}

/// `Theta_j = [[alpha_j, 1], [rho_j, -conj(alpha_j)]]`.
fn theta_block<S: Scalar>(m: &mut Matrix<S>, c: &Coeffs<S>, j: usize) {
    let d = m.dim();
    m.set(j, j, c.alpha(j as i64).clone());
    if j + 1 < d {
        m.set(j, j + 1, S::one());
        m.set(j + 1, j, c.rho(j).clone());
        m.set(j + 1, j + 1, -c.alpha_bar(j as i64).clone());
    }
}

/// `L = Theta_0 + Theta_2 + ...` truncated to `dim`.
pub fn cmv_l<S: Scalar>(c: &Coeffs<S>, dim: usize) -> Matrix<S> {
    let mut m = Matrix::zeros(dim);
    for j in (0..dim).step_by(2) {
        theta_block(&mut m, c, j);
    }
    m
}

/// `M = 1 + Theta_1 + Theta_3 + ...` truncated to `dim`.
pub fn cmv_m<S: Scalar>(c: &Coeffs<S>, dim: usize) -> Matrix<S> {
    let mut m = Matrix::zeros(dim);
    if dim > 0 {
        m.set(0, 0, S::one());
    }
    for j in (1..dim).step_by(2) {
        theta_block(&mut m, c, j);
    }
    m
}

/// `(A_{-r} A_{-r+1} ... A_{2n-s-1})_{r,s}` with `A_k = L` for even `k` and
/// `M` for odd `k`; entry `(i,j)` of `A_k` is the gentle-Motzkin weight of
/// the step `(k,i) -> (k+1,j)`. Truncated to dimension `r + n + 2`.
pub fn cmv_walk_entry<S: Scalar>(vs: &VerblunskySequence<S>, n: usize, r: usize, s: usize) -> Result<S> {
    let (ni, ri, si) = (n as i64, r as i64, s as i64);
    if s > n + r || 2 * ni - si < -ri {
        return Ok(S::zero());
    }
    let dim = r + n + 2;
    let c = vs.window(dim)?;
    let (l, m) = (cmv_l(&c, dim), cmv_m(&c, dim));
    let mut row: Vec<S> = (0..dim).map(|j| if j == r { S::one() } else { S::zero() }).collect();
    for k in -ri..(2 * ni - si) {
        let a = if k.rem_euclid(2) == 0 { &l } else { &m };
        let mut next = vec![S::zero(); dim];
        for (i, x) in row.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, slot) in next.iter_mut().enumerate() {
                let w = a.get(i, j);
                if !w.is_zero() {
                    *slot += x.clone() * w;
                }
            }
        }
        row = next;
    }
    Ok(row.swap_remove(s))
}

/// `det(mu_{i-j})_{0 <= i,j <= n}` from the moment functional.
pub fn toeplitz_det<S: Determinant>(opuc: &Opuc<S>, n: usize) -> Result<S> {
    let mu = opuc.moments(n)?;
    let t = Matrix::from_fn(n + 1, |i, j| mu.get(i as i64 - j as i64).clone());
    t.determinant()
}

/// `prod_{k < n} rho_k^{n-k}`.
pub fn toeplitz_det_closed<S: Scalar>(vs: &VerblunskySequence<S>, n: usize) -> Result<S> {
    let c = vs.window(n)?;
    Ok((0..n).fold(S::one(), |acc, k| acc * &c.rho(k).pow((n - k) as u32)))
}

/// Both sides of `det(mu_{m+i-j}) = prod_k rho_k^{n-k} det(mu(m+i, 0, j))`
/// for `0 <= i,j <= n`. The left side uses the moment functional, the right
/// side uses the path dynamic programs.
pub fn det_identity_sides<S: Determinant>(opuc: &Opuc<S>, m: i64, n: usize) -> Result<(S, S)> {
    let reach = (m.unsigned_abs() as usize) + n;
    let mu = opuc.moments(reach)?;
    let lhs = Matrix::from_fn(n + 1, |i, j| mu.get(m + i as i64 - j as i64).clone()).determinant()?;
    let vs = opuc.sequence();
    let mut g = Matrix::zeros(n + 1);
    for i in 0..=n {
        for j in 0..=n {
            let k = m + i as i64;
            let v = if k >= 0 {
                moment_lukasiewicz(vs, k as usize, 0, j)?
            } else {
                moment_negative(vs, k.unsigned_abs() as usize, 0, j)?
            };
            g.set(i, j, v);
        }
    }
    let rhs = toeplitz_det_closed(vs, n)? * &g.determinant()?;
    Ok((lhs, rhs))
}

pub fn det_identity_check<S: Determinant>(opuc: &Opuc<S>, m: i64, n: usize, tol: f64) -> Result<bool> {
    let (lhs, rhs) = det_identity_sides(opuc, m, n)?;
    Ok(lhs.approx_eq(&rhs, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{moment_gmotzkin, moment_lukasiewicz};

    #[test]
    fn u_powers_match_lukasiewicz() {
        let vs = VerblunskySequence::generic();
        for n in 0..=3 {
            for r in 0..=2 {
                for s in 0..=n + r {
                    assert_eq!(
                        u_power_entry(&vs, n, r, s).unwrap(),
                        moment_lukasiewicz(&vs, n, r, s).unwrap(),
                        "({n},{r},{s})"
                    );
                }
            }
        }
    }

    #[test]
    fn cmv_factors_reproduce_gentle_motzkin_weights() {
        let vs = VerblunskySequence::<Poly>::generic();
        let c = vs.window(6).unwrap();
        let (l, m) = (cmv_l(&c, 6), cmv_m(&c, 6));
        for x in 0..2i64 {
            let a = if x == 0 { &l } else { &m };
            for i in 0..5usize {
                let even = (x + i as i64) % 2 == 0;
                let expected_level = crate::paths::gmotzkin_weight(&c, x, i, crate::paths::Step::Level);
                assert_eq!(a.get(i, i), &expected_level);
                assert_eq!(a.get(i, i + 1).is_one(), even);
                if i > 0 {
                    assert_eq!(*a.get(i, i - 1) == *c.rho(i - 1), !even);
                }
            }
        }
    }

    #[test]
    fn cmv_products_match_gentle_motzkin() {
        let vs = VerblunskySequence::generic();
        for n in 0..=3 {
            for r in 0..=2 {
                for s in 0..=n + r {
                    assert_eq!(
                        cmv_walk_entry(&vs, n, r, s).unwrap(),
                        moment_gmotzkin(&vs, n, r, s).unwrap(),
                        "({n},{r},{s})"
                    );
                }
            }
        }
    }

    #[test]
    fn bareiss_on_integers() {
        let m = Matrix::from_fn(3, |i, j| Poly::from_i64([[2, 0, 1], [1, 3, 2], [1, 1, 2]][i][j]));
        assert_eq!(m.determinant().unwrap(), Poly::from_i64(6));
        let z = Matrix::from_fn(2, |i, _| Poly::from_i64(i as i64));
        assert_eq!(z.determinant().unwrap(), Poly::zero());
        let swap = Matrix::from_fn(2, |i, j| Poly::from_i64(if i == j { 0 } else { 1 }));
        assert_eq!(swap.determinant().unwrap(), Poly::from_i64(-1));
    }

    #[test]
    fn lu_on_complex() {
        let m = Matrix::from_fn(2, |i, j| Complex64::new((i * 2 + j) as f64, 1.0));
        let det = m.determinant().unwrap();
        let expected = Complex64::new(0.0, 1.0) * Complex64::new(3.0, 1.0)
            - Complex64::new(1.0, 1.0) * Complex64::new(2.0, 1.0);
        assert!((det - expected).norm() < 1e-12);
    }

    #[test]
    fn small_toeplitz_determinants() {
        let o = Opuc::new(VerblunskySequence::generic());
        for n in 0..=2 {
            let closed = toeplitz_det_closed(o.sequence(), n).unwrap();
            assert_eq!(toeplitz_det(&o, n).unwrap(), closed);
        }
    }
}
