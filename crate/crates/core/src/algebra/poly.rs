//! Sparse Laurent polynomials in the Verblunsky symbols `a_j`, `ab_j` (and a few
//! family parameters) over Q(i).

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use super::GaussianRational;
use crate::error::{Error, Result};

/// Free parameters that families may inject as extra generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParamSym {
    Zeta,
    Geronimus,
    /// Square root of the Rogers–Szegő parameter `q`; real.
    SqrtQ,
}

impl ParamSym {
    pub fn is_real(self) -> bool {
        matches!(self, ParamSym::SqrtQ)
    }

    fn name(self) -> &'static str {
        match self {
            ParamSym::Zeta => "zeta",
            ParamSym::Geronimus => "alpha",
            ParamSym::SqrtQ => "t",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Alpha(u32),
    Param(ParamSym),
}

/// A generator; ordered by index, then by the barred flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol {
    pub var: Var,
    pub barred: bool,
}

impl Symbol {
    pub fn alpha(j: u32) -> Self {
        Self { var: Var::Alpha(j), barred: false }
    }

    pub fn alpha_bar(j: u32) -> Self {
        Self { var: Var::Alpha(j), barred: true }
    }

    pub fn param(p: ParamSym) -> Self {
        Self { var: Var::Param(p), barred: false }
    }

    pub fn conj(self) -> Self {
        match self.var {
            Var::Param(p) if p.is_real() => self,
            _ => Self { var: self.var, barred: !self.barred },
        }
    }

    pub fn alpha_index(self) -> Option<u32> {
        match self.var {
            Var::Alpha(j) => Some(j),
            Var::Param(_) => None,
        }
    }

    fn write_name(self, f: &mut fmt::Formatter<'_>, bar: &str) -> fmt::Result {
        match self.var {
            Var::Alpha(j) if self.barred => write!(f, "{bar}{j}"),
            Var::Alpha(j) => write!(f, "a{j}"),
            Var::Param(p) if self.barred => write!(f, "{}b", p.name()),
            Var::Param(p) => write!(f, "{}", p.name()),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_name(f, "ab")
    }
}

/// Product of symbols with integer (possibly negative) exponents, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Symbol, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn power(sym: Symbol, e: i32) -> Self {
        if e == 0 {
            Self::one()
        } else {
            Self(vec![(sym, e)])
        }
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (Symbol, i32)>) -> Self {
        let mut acc: BTreeMap<Symbol, i32> = BTreeMap::new();
        for (s, e) in factors {
            *acc.entry(s).or_insert(0) += e;
        }
        Self(acc.into_iter().filter(|&(_, e)| e != 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Symbol, i32)] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn exponent(&self, sym: Symbol) -> i32 {
        self.0
            .binary_search_by(|(s, _)| s.cmp(&sym))
            .map(|k| self.0[k].1)
            .unwrap_or(0)
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|&(_, e)| e > 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Self(out)
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().map(|&(s, e)| (s, -e)).collect())
    }

    pub fn conj(&self) -> Self {
        Self::from_factors(self.0.iter().map(|&(s, e)| (s.conj(), e)))
    }

    /// Divides by `other` when the quotient has no negative exponents.
    fn divide_polynomially(&self, other: &Self) -> Option<Self> {
        let q = self.mul(&other.inverse());
        q.0.iter().all(|&(_, e)| e > 0).then_some(q)
    }

    /// Pure lexicographic comparison of exponent vectors.
    fn lex_cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, e)), None) => return e.cmp(&0),
                (None, Some(&(_, e))) => return 0.cmp(&e),
                (Some(&(sa, ea)), Some(&(sb, eb))) => match sa.cmp(&sb) {
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(&eb),
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }

    fn write_with(&self, f: &mut fmt::Formatter<'_>, bar: &str) -> fmt::Result {
        for (k, &(s, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            s.write_name(f, bar)?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Graded by total degree, then reverse lexicographic; a term order on
/// polynomial monomials, so the last key of a map is its leading term.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.lex_cmp(self))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        self.write_with(f, "ab")
    }
}

/// Numeric values for the generators, used by [`Poly::evaluate`].
#[derive(Clone, Debug, Default)]
pub struct Assignment {
    pub alphas: HashMap<u32, Complex64>,
    pub params: HashMap<ParamSym, Complex64>,
}

impl Assignment {
    pub fn from_alphas(values: &[Complex64]) -> Self {
        Self {
            alphas: values.iter().enumerate().map(|(j, &v)| (j as u32, v)).collect(),
            params: HashMap::new(),
        }
    }

    fn value(&self, sym: Symbol) -> Result<Complex64> {
        let v = match sym.var {
            Var::Alpha(j) => self.alphas.get(&j),
            Var::Param(p) => self.params.get(&p),
        }
        .copied()
        .ok_or_else(|| Error::MissingAssignment(sym.to_string()))?;
        Ok(if sym.barred { v.conj() } else { v })
    }
}

/// Exact symbolic scalar: a finite sum of Gaussian-rational multiples of monomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn from_i64(v: i64) -> Self {
        Self::constant(GaussianRational::from_integer(v))
    }

    pub fn term(m: Monomial, c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn symbol(sym: Symbol) -> Self {
        Self::term(Monomial::power(sym, 1), GaussianRational::one())
    }

    pub fn alpha(j: u32) -> Self {
        Self::symbol(Symbol::alpha(j))
    }

    pub fn alpha_bar(j: u32) -> Self {
        Self::symbol(Symbol::alpha_bar(j))
    }

    /// `1 - a_j ab_j`.
    pub fn rho(j: u32) -> Self {
        Self::one() - Self::alpha(j) * Self::alpha_bar(j)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self { terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect() }
    }

    pub fn conj(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.conj(), &c.conj());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// True when no generator appears with a negative exponent.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(Monomial::is_polynomial)
    }

    pub fn symbols(&self) -> BTreeSet<Symbol> {
        self.terms.keys().flat_map(|m| m.0.iter().map(|&(s, _)| s)).collect()
    }

    pub fn max_alpha_index(&self) -> Option<u32> {
        self.symbols().into_iter().filter_map(Symbol::alpha_index).max()
    }

    /// Inverse of a single nonzero term.
    pub fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        Some(Self::term(m.inverse(), c.inverse()?))
    }

    /// Exact quotient `self / d` in the Laurent polynomial ring.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(inv) = d.unit_inverse() {
            return Ok(self * &inv);
        }
        // Strip the monomial content of the divisor and clear negative powers of
        // the dividend; the quotient of the shifted pair is then a polynomial.
        let content = min_exponents(d.terms.keys());
        let d_shift = d.mul_monomial(&content.inverse());
        let num_content = min_exponents(self.terms.keys());
        let lift = Monomial(
            num_content.0.iter().filter(|&&(_, e)| e < 0).map(|&(s, e)| (s, -e)).collect(),
        );
        let mut rem = self.mul_monomial(&content.inverse().mul(&lift));
        let (lead_m, lead_c) = d_shift.terms.iter().next_back().expect("nonzero divisor");
        let lead_inv = lead_c.inverse().expect("nonzero coefficient");
        let mut quot = Self::zero();
        while let Some((m, c)) = rem.terms.iter().next_back() {
            let qm = m.divide_polynomially(lead_m).ok_or(Error::NotDivisible)?;
            let qc = c * &lead_inv;
            for (dm, dc) in &d_shift.terms {
                rem.add_term(dm.mul(&qm), &-(dc * &qc));
            }
            quot.add_term(qm, &qc);
        }
        Ok(quot.mul_monomial(&lift.inverse()))
    }

    pub fn evaluate(&self, assignment: &Assignment) -> Result<Complex64> {
        let mut total = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut v = c.to_complex();
            for &(s, e) in m.factors() {
                v *= assignment.value(s)?.powi(e);
            }
            total += v;
        }
        Ok(total)
    }

    /// Rewrites `sym^2 -> value` (so odd powers keep one factor of `sym`).
    pub fn reduce_square(&self, sym: Symbol, value: &GaussianRational) -> Result<Self> {
        let inv = value.inverse().ok_or(Error::DivisionByZero)?;
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(sym);
            let (half, rest) = (e.div_euclid(2), e.rem_euclid(2));
            let base = if half >= 0 { value.pow(half as u32) } else { inv.pow((-half) as u32) };
            let mono = m.mul(&Monomial::power(sym, rest - e));
            out.add_term(mono, &(c * &base));
        }
        Ok(out)
    }

    /// Substitutes `ab_j = -b_j`, returning the expansion in the `a_j`, `b_j` basis.
    pub fn to_beta_basis(&self) -> BetaExpansion {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let bars: i32 = m.0.iter().filter(|(s, _)| s.barred).map(|&(_, e)| e).sum();
            let c = if bars.rem_euclid(2) == 1 { -c.clone() } else { c.clone() };
            terms.insert(m.clone(), c);
        }
        BetaExpansion { terms }
    }

    fn write_terms(
        terms: &BTreeMap<Monomial, GaussianRational>,
        f: &mut fmt::Formatter<'_>,
        bar: &str,
    ) -> fmt::Result {
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in terms.iter().enumerate() {
            let negative = c.is_real() && c.re.is_negative();
            let mag = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let coeff = if mag.is_real() { mag.to_string() } else { format!("({mag})") };
            if m.is_one() {
                write!(f, "{coeff}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{coeff}*")?;
                }
                m.write_with(f, bar)?;
            }
        }
        Ok(())
    }
}

fn min_exponents<'a>(monos: impl Iterator<Item = &'a Monomial>) -> Monomial {
    let monos: Vec<&Monomial> = monos.collect();
    let mut syms: BTreeSet<Symbol> = BTreeSet::new();
    for m in &monos {
        syms.extend(m.0.iter().map(|&(s, _)| s));
    }
    Monomial::from_factors(
        syms.into_iter()
            .map(|s| (s, monos.iter().map(|m| m.exponent(s)).min().unwrap_or(0))),
    )
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Self::write_terms(&self.terms, f, "ab")
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }
}

impl<'a> AddAssign<&'a Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl<'a> SubAssign<&'a Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), &-c.clone());
        }
    }
}

impl AddAssign for Poly {
    fn add_assign(&mut self, rhs: Poly) {
        *self += &rhs;
    }
}

impl SubAssign for Poly {
    fn sub_assign(&mut self, rhs: Poly) {
        *self -= &rhs;
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl<'a> Add<&'a Poly> for Poly {
    type Output = Poly;
    fn add(mut self, rhs: &Poly) -> Poly {
        self += rhs;
        self
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl<'a> Sub<&'a Poly> for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: &Poly) -> Poly {
        self -= rhs;
        self
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl<'a> Mul<&'a Poly> for Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        &self * rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

/// A polynomial rewritten in the `a_j`, `b_j = -ab_j` basis.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BetaExpansion {
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl BetaExpansion {
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Every coefficient is a nonnegative integer.
    pub fn is_positive(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.is_real() && c.re.is_integer() && !c.re.is_negative())
    }

    pub fn negative_terms(&self) -> Vec<(Monomial, GaussianRational)> {
        self.terms
            .iter()
            .filter(|(_, c)| !(c.is_real() && !c.re.is_negative()))
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect()
    }
}

impl fmt::Display for BetaExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Poly::write_terms(&self.terms, f, "b")
    }
}

impl fmt::Debug for BetaExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(j: u32) -> Poly {
        Poly::alpha(j)
    }

    fn ab(j: u32) -> Poly {
        Poly::alpha_bar(j)
    }

    #[test]
    fn renders_canonically() {
        assert_eq!(Poly::rho(0).to_string(), "1 - a0*ab0");
        let p = a(1) * a(0) + a(0).pow(2) + a(0) * a(1) * ab(0);
        assert_eq!(p.to_string(), "a0^2 + a0*a1 + a0*ab0*a1");
        let q = ab(1) * a(0) - a(1) * ab(0);
        assert_eq!(q.to_string(), "a0*ab1 - ab0*a1");
        assert_eq!(Poly::zero().to_string(), "0");
        let c = Poly::constant(GaussianRational::complex((1, 2), (1, 1))) * a(2);
        assert_eq!(c.to_string(), "(1/2+i)*a2");
    }

    #[test]
    fn conjugation_is_an_involution() {
        let p = a(0) * ab(1) + Poly::constant(GaussianRational::i()) * a(2).pow(2);
        assert_eq!(p.conj().conj(), p);
        assert_eq!(Poly::rho(3).conj(), Poly::rho(3));
        let t = Poly::symbol(Symbol::param(ParamSym::SqrtQ));
        assert_eq!(t.conj(), t);
    }

    #[test]
    fn exact_division_recovers_factors() {
        let f = Poly::rho(0) * Poly::rho(1) * (a(2) + ab(0));
        let q = f.div_exact(&(Poly::rho(0) * Poly::rho(1))).unwrap();
        assert_eq!(q, a(2) + ab(0));
        assert_eq!(Poly::rho(0).div_exact(&Poly::rho(1)), Err(Error::NotDivisible));
        let laurent = (a(0) - ab(1)).mul_monomial(&Monomial::power(Symbol::alpha_bar(0), -2));
        let prod = &laurent * &Poly::rho(4);
        assert_eq!(prod.div_exact(&Poly::rho(4)).unwrap(), laurent);
        assert_eq!(Poly::one().div_exact(&Poly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn unit_inverse_gives_laurent_monomial() {
        let inv = ab(0).unit_inverse().unwrap();
        assert_eq!(inv.to_string(), "ab0^-1");
        assert_eq!(&inv * &ab(0), Poly::one());
        assert!(Poly::rho(0).unit_inverse().is_none());
    }

    #[test]
    fn evaluation_conjugates_barred_symbols() {
        let z = Complex64::new(0.3, 0.4);
        let asg = Assignment::from_alphas(&[z]);
        let v = Poly::rho(0).evaluate(&asg).unwrap();
        assert!((v - Complex64::new(0.75, 0.0)).norm() < 1e-15);
        assert!(matches!(a(3).evaluate(&asg), Err(Error::MissingAssignment(_))));
    }

    #[test]
    fn beta_rewrite_flips_odd_bar_degrees() {
        let mu2 = a(0).pow(2) + a(1) * Poly::rho(0);
        let beta = mu2.to_beta_basis();
        assert_eq!(beta.to_string(), "a1 + a0^2 + a0*b0*a1");
        assert!(beta.is_positive());
    }

    #[test]
    fn square_reduction() {
        let t = Symbol::param(ParamSym::SqrtQ);
        let p = Poly::symbol(t).pow(5) + Poly::symbol(t).pow(2);
        let r = p.reduce_square(t, &GaussianRational::ratio(1, 3)).unwrap();
        assert_eq!(r.to_string(), "1/3 + 1/9*t");
    }
}
