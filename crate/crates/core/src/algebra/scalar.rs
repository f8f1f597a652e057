use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{Assignment, GaussianRational, Poly};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Symbolic,
    Numeric,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Symbolic => "symbolic",
            Mode::Numeric => "numeric",
        })
    }
}

/// Coefficient ring shared by every moment algorithm.
///
/// Implemented by [`Poly`] (exact, symbolic) and [`Complex64`] (numeric), so
/// the two modes cannot be mixed inside one computation.
pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + AddAssign
    + SubAssign
{
    const MODE: Mode;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_gaussian(q: &GaussianRational) -> Self;
    fn is_zero(&self) -> bool;
    fn conj(&self) -> Self;
    fn try_div(&self, d: &Self) -> Result<Self>;
    /// Exact equality in symbolic mode; mixed relative/absolute tolerance otherwise.
    fn approx_eq(&self, other: &Self, tol: f64) -> bool;
    fn render(&self) -> String;
    fn to_exact(&self) -> ExactScalar;
    /// Rejects Verblunsky values outside the open unit disk where checkable.
    fn check_verblunsky(&self, index: usize) -> Result<()>;

    fn from_i64(v: i64) -> Self {
        Self::from_gaussian(&GaussianRational::from_integer(v))
    }

    fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc * self;
        }
        acc
    }
}

impl Scalar for Poly {
    const MODE: Mode = Mode::Symbolic;

    fn zero() -> Self {
        Poly::zero()
    }

    fn one() -> Self {
        Poly::one()
    }

    fn from_gaussian(q: &GaussianRational) -> Self {
        Poly::constant(q.clone())
    }

    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }

    fn conj(&self) -> Self {
        Poly::conj(self)
    }

    fn try_div(&self, d: &Self) -> Result<Self> {
        self.div_exact(d)
    }

    fn approx_eq(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }

    fn render(&self) -> String {
        self.to_string()
    }

    fn to_exact(&self) -> ExactScalar {
        ExactScalar::Symbolic(self.clone())
    }

    fn check_verblunsky(&self, _index: usize) -> Result<()> {
        Ok(())
    }

    fn pow(&self, k: u32) -> Self {
        Poly::pow(self, k)
    }
}

impl Scalar for Complex64 {
    const MODE: Mode = Mode::Numeric;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn from_gaussian(q: &GaussianRational) -> Self {
        q.to_complex()
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    fn conj(&self) -> Self {
        Complex64::conj(self)
    }

    fn try_div(&self, d: &Self) -> Result<Self> {
        if Scalar::is_zero(d) {
            return Err(Error::DivisionByZero);
        }
        Ok(self / d)
    }

    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        approx_eq_complex(*self, *other, tol)
    }

    fn render(&self) -> String {
        render_complex(*self)
    }

    fn to_exact(&self) -> ExactScalar {
        ExactScalar::Numeric(*self)
    }

    fn check_verblunsky(&self, index: usize) -> Result<()> {
        let modulus = self.norm();
        if modulus < 1.0 {
            Ok(())
        } else {
            Err(Error::OutsideDisk { index, modulus })
        }
    }

    fn pow(&self, k: u32) -> Self {
        self.powu(k)
    }
}

/// `|a - b| <= tol * max(1, |a|, |b|)`.
pub fn approx_eq_complex(a: Complex64, b: Complex64, tol: f64) -> bool {
    let scale = 1.0f64.max(a.norm()).max(b.norm());
    (a - b).norm() <= tol * scale
}

pub fn render_complex(z: Complex64) -> String {
    let fmt_num = |x: f64| format!("{x:.15e}");
    if z.im == 0.0 {
        fmt_num(z.re)
    } else {
        let sign = if z.im < 0.0 { '-' } else { '+' };
        format!("{}{sign}{}i", fmt_num(z.re), fmt_num(z.im.abs()))
    }
}

/// Mode-tagged scalar for callers that decide the mode at run time.
#[derive(Clone, Debug, PartialEq)]
pub enum ExactScalar {
    Symbolic(Poly),
    Numeric(Complex64),
}

impl ExactScalar {
    pub fn mode(&self) -> Mode {
        match self {
            ExactScalar::Symbolic(_) => Mode::Symbolic,
            ExactScalar::Numeric(_) => Mode::Numeric,
        }
    }

    fn zip(
        &self,
        other: &Self,
        sym: impl FnOnce(&Poly, &Poly) -> Poly,
        num: impl FnOnce(Complex64, Complex64) -> Complex64,
    ) -> Result<Self> {
        match (self, other) {
            (ExactScalar::Symbolic(a), ExactScalar::Symbolic(b)) => Ok(ExactScalar::Symbolic(sym(a, b))),
            (ExactScalar::Numeric(a), ExactScalar::Numeric(b)) => Ok(ExactScalar::Numeric(num(*a, *b))),
            _ => Err(Error::ModeMismatch { left: self.mode(), right: other.mode() }),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a - b, |a, b| a - b)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a * b, |a, b| a * b)
    }

    pub fn conj(&self) -> Self {
        match self {
            ExactScalar::Symbolic(p) => ExactScalar::Symbolic(p.conj()),
            ExactScalar::Numeric(z) => ExactScalar::Numeric(z.conj()),
        }
    }

    pub fn evaluate_numeric(&self, assignment: &Assignment) -> Result<Complex64> {
        match self {
            ExactScalar::Symbolic(p) => p.evaluate(assignment),
            ExactScalar::Numeric(z) => Ok(*z),
        }
    }

    pub fn render(&self) -> String {
        match self {
            ExactScalar::Symbolic(p) => p.to_string(),
            ExactScalar::Numeric(z) => render_complex(*z),
        }
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixing_modes_is_rejected() {
        let s = ExactScalar::Symbolic(Poly::alpha(0));
        let n = ExactScalar::Numeric(Complex64::new(0.5, 0.0));
        assert_eq!(
            s.checked_add(&n),
            Err(Error::ModeMismatch { left: Mode::Symbolic, right: Mode::Numeric })
        );
        assert!(n.checked_mul(&n).is_ok());
    }

    #[test]
    fn numeric_verblunsky_must_lie_in_disk() {
        assert!(Complex64::new(0.6, 0.8).check_verblunsky(3).is_err());
        assert!(Complex64::new(0.6, 0.7).check_verblunsky(3).is_ok());
    }

    #[test]
    fn tolerance_is_relative_for_large_values() {
        let a = Complex64::new(1e6, 0.0);
        assert!(a.approx_eq(&(a + Complex64::new(1e-4, 0.0)), 1e-9));
        assert!(!a.approx_eq(&(a + Complex64::new(1e-2, 0.0)), 1e-9));
    }

    #[test]
    fn evaluate_symbolic_through_wrapper() {
        let asg = Assignment::from_alphas(&[Complex64::new(0.0, 0.5)]);
        let s = ExactScalar::Symbolic(Poly::alpha_bar(0));
        let v = s.evaluate_numeric(&asg).unwrap();
        assert!((v - Complex64::new(0.0, -0.5)).norm() < 1e-15);
    }
}
