use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Scalar;

/// Finite Laurent polynomial in `z` with coefficients in a [`Scalar`] ring.
#[derive(Clone, PartialEq)]
pub struct LaurentPoly<S> {
    coeffs: BTreeMap<i64, S>,
}

impl<S: Scalar> LaurentPoly<S> {
    pub fn zero() -> Self {
        Self { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(0, c)
    }

    /// `c * z^k`.
    pub fn monomial(k: i64, c: S) -> Self {
        let mut p = Self::zero();
        p.add_term(k, c);
        p
    }

    /// Coefficients `c_0, c_1, ...` of an ordinary polynomial.
    pub fn from_coeffs(coeffs: impl IntoIterator<Item = S>) -> Self {
        let mut p = Self::zero();
        for (k, c) in coeffs.into_iter().enumerate() {
            p.add_term(k as i64, c);
        }
        p
    }

    pub fn add_term(&mut self, k: i64, c: S) {
        if c.is_zero() {
            return;
        }
        let merged = match self.coeffs.remove(&k) {
            Some(old) => old + c,
            None => c,
        };
        if !merged.is_zero() {
            self.coeffs.insert(k, merged);
        }
    }

    pub fn coeff(&self, k: i64) -> S {
        self.coeffs.get(&k).cloned().unwrap_or_else(S::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &S)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero();
        for (&k, v) in &self.coeffs {
            out.add_term(k, v.clone() * c);
        }
        out
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    /// `f -> conj(f)(1/z)`: conjugates coefficients and negates exponents.
    pub fn bar_inverse_substitute(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(&e, c)| (-e, c.conj())).collect() }
    }

    pub fn map(&self, f: impl Fn(&S) -> S) -> Self {
        let mut out = Self::zero();
        for (&k, c) in &self.coeffs {
            out.add_term(k, f(c));
        }
        out
    }
}

impl<S: Scalar> Add for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn add(self, rhs: Self) -> LaurentPoly<S> {
        let mut out = self.clone();
        for (&k, c) in &rhs.coeffs {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl<S: Scalar> Sub for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn sub(self, rhs: Self) -> LaurentPoly<S> {
        let mut out = self.clone();
        for (&k, c) in &rhs.coeffs {
            out.add_term(k, -c.clone());
        }
        out
    }
}

impl<S: Scalar> Mul for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn mul(self, rhs: Self) -> LaurentPoly<S> {
        let mut out = LaurentPoly::zero();
        for (&i, a) in &self.coeffs {
            for (&j, b) in &rhs.coeffs {
                out.add_term(i + j, a.clone() * b);
            }
        }
        out
    }
}

impl<S: Scalar> Neg for LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn neg(self) -> LaurentPoly<S> {
        Self { coeffs: self.coeffs.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl<S: Scalar> fmt::Display for LaurentPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (n, (&k, c)) in self.coeffs.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let zpart = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            let text = c.render();
            let is_one = text == "1";
            match (zpart.is_empty(), is_one) {
                (true, _) => write!(f, "({text})")?,
                (false, true) => write!(f, "{zpart}")?,
                (false, false) => write!(f, "({text})*{zpart}")?,
            }
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for LaurentPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
