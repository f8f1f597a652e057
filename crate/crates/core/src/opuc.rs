//! Verblunsky sequences, the Szegő recursion, the moment functional, and the
//! inner-product definition of generalized moments.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{LaurentPoly, Poly, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum SequenceSource {
    /// Free symbols `a_j`, `ab_j`.
    Generic,
    Table(usize),
    Family(String),
}

/// Rule `j -> alpha_j` together with a description of where it came from.
#[derive(Clone)]
pub struct VerblunskySequence<S> {
    source: SequenceSource,
    rule: Arc<dyn Fn(usize) -> Result<S> + Send + Sync>,
}

impl<S> fmt::Debug for VerblunskySequence<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("VerblunskySequence").field("source", &self.source).finish()
    }
}

impl<S: Scalar> VerblunskySequence<S> {
    pub fn from_fn(
        source: SequenceSource,
        rule: impl Fn(usize) -> Result<S> + Send + Sync + 'static,
    ) -> Self {
        Self { source, rule: Arc::new(rule) }
    }

    /// Finite table; indices past the end are an error.
    pub fn table(values: Vec<S>) -> Result<Self> {
        for (j, v) in values.iter().enumerate() {
            v.check_verblunsky(j)?;
        }
        let len = values.len();
        let values = Arc::new(values);
        Ok(Self::from_fn(SequenceSource::Table(len), move |j| {
            values.get(j).cloned().ok_or(Error::IndexOutOfRange(j as i64))
        }))
    }

    pub fn source(&self) -> &SequenceSource {
        &self.source
    }

    /// `alpha_j`, with `alpha_{-1} = -1`.
    pub fn alpha(&self, j: i64) -> Result<S> {
        match j {
            -1 => Ok(-S::one()),
            j if j < -1 => Err(Error::IndexOutOfRange(j)),
            j => {
                let v = (self.rule)(j as usize)?;
                v.check_verblunsky(j as usize)?;
                Ok(v)
            }
        }
    }

    /// Prefetches `alpha_j`, `conj(alpha_j)`, `rho_j` for `0 <= j < len`.
    pub fn window(&self, len: usize) -> Result<Coeffs<S>> {
        let alpha = (0..len).map(|j| self.alpha(j as i64)).collect::<Result<Vec<_>>>()?;
        Ok(Coeffs::new(alpha))
    }
}

impl<S: Scalar> VerblunskySequence<S> {
    /// Finite table continued by zeros, the Verblunsky sequence of a
    /// Bernstein–Szegő type measure.
    pub fn padded(values: Vec<S>) -> Result<Self> {
        let len = values.len();
        let seq = Self::table(values)?;
        Ok(Self::from_fn(SequenceSource::Table(len), move |j| {
            if j < len {
                seq.alpha(j as i64)
            } else {
                Ok(S::zero())
            }
        }))
    }
}

/// `len` coefficients drawn uniformly from the disk of radius `radius`.
pub fn random_alphas(rng: &mut impl Rng, len: usize, radius: f64) -> Vec<Complex64> {
    (0..len)
        .map(|_| {
            let r = radius * rng.gen::<f64>().sqrt();
            Complex64::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU))
        })
        .collect()
}

impl VerblunskySequence<Poly> {
    pub fn generic() -> Self {
        Self::from_fn(SequenceSource::Generic, |j| Ok(Poly::alpha(j as u32)))
    }
}

/// A prefetched window of Verblunsky data.
#[derive(Clone, Debug)]
pub struct Coeffs<S> {
    alpha: Vec<S>,
    alpha_bar: Vec<S>,
    rho: Vec<S>,
    minus_one: S,
}

impl<S: Scalar> Coeffs<S> {
    pub fn new(alpha: Vec<S>) -> Self {
        let alpha_bar: Vec<S> = alpha.iter().map(S::conj).collect();
        let rho = alpha
            .iter()
            .zip(&alpha_bar)
            .map(|(a, b)| S::one() - a.clone() * b)
            .collect();
        Self { alpha, alpha_bar, rho, minus_one: -S::one() }
    }

    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }

    pub fn alpha(&self, j: i64) -> &S {
        if j == -1 {
            &self.minus_one
        } else {
            &self.alpha[j as usize]
        }
    }

    pub fn alpha_bar(&self, j: i64) -> &S {
        if j == -1 {
            &self.minus_one
        } else {
            &self.alpha_bar[j as usize]
        }
    }

    pub fn rho(&self, j: usize) -> &S {
        &self.rho[j]
    }

    /// `prod_{lo <= j < hi} rho_j`.
    pub fn rho_product(&self, lo: usize, hi: usize) -> S {
        (lo..hi).fold(S::one(), |acc, j| acc * &self.rho[j])
    }

    /// Smallest `j < upto` with `alpha_j = 0`.
    pub fn first_zero(&self, upto: usize) -> Option<usize> {
        (0..upto.min(self.len())).find(|&j| self.alpha[j].is_zero())
    }
}

/// `Phi_n` and its reversal `Phi_n^*`.
#[derive(Clone, Debug, PartialEq)]
pub struct PhiPair<S: Scalar> {
    pub phi: LaurentPoly<S>,
    pub phi_star: LaurentPoly<S>,
}

/// Moments `mu_k` and `mu_{-k}` for `0 <= k <= N`.
#[derive(Clone, Debug, Default)]
pub struct MomentSeq<S> {
    pub positive: Vec<S>,
    pub negative: Vec<S>,
}

impl<S: Scalar> MomentSeq<S> {
    pub fn get(&self, k: i64) -> &S {
        if k >= 0 {
            &self.positive[k as usize]
        } else {
            &self.negative[(-k) as usize]
        }
    }
}

/// `z^d conj(f)(1/z)`.
pub fn reverse<S: Scalar>(f: &LaurentPoly<S>, declared_degree: i64) -> Result<LaurentPoly<S>> {
    if let Some(v) = f.valuation() {
        if v < 0 {
            return Err(Error::NegativeValuation(v));
        }
    }
    if let Some(d) = f.degree() {
        if d > declared_degree {
            return Err(Error::DegreeExceeded { degree: d, declared: declared_degree });
        }
    }
    Ok(f.bar_inverse_substitute().shift(declared_degree))
}

/// One Szegő step from `(Phi_n, Phi_n^*)` using `alpha_n`.
pub fn szego_step<S: Scalar>(prev: &PhiPair<S>, alpha: &S) -> PhiPair<S> {
    let zphi = prev.phi.shift(1);
    let phi = &zphi - &prev.phi_star.scale(&alpha.conj());
    let phi_star = &prev.phi_star - &zphi.scale(alpha);
    PhiPair { phi, phi_star }
}

/// Moment functional and orthogonal polynomials of one Verblunsky sequence,
/// with lazily grown caches that are safe to share between threads.
pub struct Opuc<S: Scalar> {
    seq: VerblunskySequence<S>,
    phis: RwLock<Vec<PhiPair<S>>>,
    moments: RwLock<MomentSeq<S>>,
    pairings: RwLock<BTreeMap<(usize, i64), S>>,
}

impl<S: Scalar> Opuc<S> {
    pub fn new(seq: VerblunskySequence<S>) -> Self {
        let base = PhiPair { phi: LaurentPoly::one(), phi_star: LaurentPoly::one() };
        let moments = MomentSeq { positive: vec![S::one()], negative: vec![S::one()] };
        Self {
            seq,
            phis: RwLock::new(vec![base]),
            moments: RwLock::new(moments),
            pairings: RwLock::new(BTreeMap::new()),
        }
    }

    pub fn sequence(&self) -> &VerblunskySequence<S> {
        &self.seq
    }

    fn ensure_phis(&self, n: usize) -> Result<()> {
        if self.phis.read().expect("phi cache poisoned").len() > n {
            return Ok(());
        }
        let mut phis = self.phis.write().expect("phi cache poisoned");
        while phis.len() <= n {
            let k = phis.len() - 1;
            let alpha = self.seq.alpha(k as i64)?;
            let next = szego_step(&phis[k], &alpha);
            phis.push(next);
        }
        Ok(())
    }

    pub fn phi(&self, n: usize) -> Result<PhiPair<S>> {
        self.ensure_phis(n)?;
        Ok(self.phis.read().expect("phi cache poisoned")[n].clone())
    }

    /// `prod_{i < n} rho_i`.
    pub fn kappa(&self, n: usize) -> Result<S> {
        Ok(self.seq.window(n)?.rho_product(0, n))
    }

    /// Solves the two triangular systems `L(Phi_i) = delta_{i0}` and
    /// `L(conj Phi_i(1/z)) = delta_{i0}` for `mu_{-k}` and `mu_k`, `k <= n`.
    pub fn moments(&self, n: usize) -> Result<MomentSeq<S>> {
        {
            let m = self.moments.read().expect("moment cache poisoned");
            if m.positive.len() > n {
                return Ok(MomentSeq {
                    positive: m.positive[..=n].to_vec(),
                    negative: m.negative[..=n].to_vec(),
                });
            }
        }
        self.ensure_phis(n)?;
        let phis = self.phis.read().expect("phi cache poisoned");
        let mut m = self.moments.write().expect("moment cache poisoned");
        while m.positive.len() <= n {
            let i = m.positive.len();
            let phi = &phis[i].phi;
            let mut pos = S::zero();
            let mut neg = S::zero();
            for (j, c) in phi.terms() {
                let j = j as usize;
                if j == i {
                    continue;
                }
                pos -= c.conj() * &m.positive[j];
                neg -= c.clone() * &m.negative[j];
            }
            m.positive.push(pos);
            m.negative.push(neg);
        }
        Ok(MomentSeq { positive: m.positive[..=n].to_vec(), negative: m.negative[..=n].to_vec() })
    }

    /// `mu_k = L(z^{-k})`.
    pub fn moment(&self, k: i64) -> Result<S> {
        Ok(self.moments(k.unsigned_abs() as usize)?.get(k).clone())
    }

    /// `L(f) = sum_k f_k mu_{-k}`.
    pub fn functional(&self, f: &LaurentPoly<S>) -> Result<S> {
        let reach = f.terms().map(|(k, _)| k.unsigned_abs() as usize).max().unwrap_or(0);
        let m = self.moments(reach)?;
        let mut total = S::zero();
        for (k, c) in f.terms() {
            total += c.clone() * m.get(-k);
        }
        Ok(total)
    }

    /// `<f, g> = L(f(z) conj(g)(1/z))`.
    pub fn inner_product(&self, f: &LaurentPoly<S>, g: &LaurentPoly<S>) -> Result<S> {
        self.functional(&(f * &g.bar_inverse_substitute()))
    }

    /// `<Phi_s, z^m>`, cached.
    fn pairing(&self, s: usize, m: i64) -> Result<S> {
        if let Some(v) = self.pairings.read().expect("pairing cache poisoned").get(&(s, m)) {
            return Ok(v.clone());
        }
        let v = self.inner_product(&self.phi(s)?.phi, &LaurentPoly::monomial(m, S::one()))?;
        self.pairings.write().expect("pairing cache poisoned").insert((s, m), v.clone());
        Ok(v)
    }

    /// `<Phi_s, z^n Phi_r> / <Phi_s, Phi_s>` computed from the functional.
    pub fn moment_oracle(&self, n: i64, r: usize, s: usize) -> Result<S> {
        let phi_s = self.phi(s)?.phi;
        let phi_r = self.phi(r)?.phi;
        let mut num = S::zero();
        for (i, c) in phi_r.terms() {
            num += c.conj() * &self.pairing(s, n + i)?;
        }
        let mut den = S::zero();
        for (i, c) in phi_s.terms() {
            den += c.conj() * &self.pairing(s, i)?;
        }
        num.try_div(&den)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Lukasiewicz,
    Gmotzkin,
    Schroder,
    MatrixU,
    MatrixCmv,
    Oracle,
    Closed,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::Lukasiewicz,
        Method::Gmotzkin,
        Method::Schroder,
        Method::MatrixU,
        Method::MatrixCmv,
        Method::Oracle,
        Method::Closed,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Lukasiewicz => "lukasiewicz",
            Method::Gmotzkin => "gmotzkin",
            Method::Schroder => "schroder",
            Method::MatrixU => "matrix_u",
            Method::MatrixCmv => "matrix_cmv",
            Method::Oracle => "oracle",
            Method::Closed => "closed",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug)]
pub struct MomentEntry<S> {
    pub method: Method,
    pub value: S,
}

/// Generalized moments keyed by `(n, r, s)`, one entry per method.
#[derive(Clone, Debug, Default)]
pub struct MomentTable<S> {
    entries: BTreeMap<(i64, usize, usize), Vec<MomentEntry<S>>>,
}

impl<S: Scalar> MomentTable<S> {
    pub fn new() -> Self {
        Self { entries: BTreeMap::new() }
    }

    /// Rejects `n = 0` entries that are not `delta_{r,s}`.
    pub fn insert(&mut self, key: (i64, usize, usize), method: Method, value: S) -> Result<()> {
        let (n, r, s) = key;
        if n == 0 {
            let expected = if r == s { S::one() } else { S::zero() };
            if !value.approx_eq(&expected, 1e-12) {
                return Err(Error::Invariant(format!("mu(0,{r},{s}) must equal delta_(r,s)")));
            }
        }
        self.entries.entry(key).or_default().push(MomentEntry { method, value });
        Ok(())
    }

    pub fn get(&self, key: (i64, usize, usize)) -> &[MomentEntry<S>] {
        self.entries.get(&key).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn keys(&self) -> impl Iterator<Item = (i64, usize, usize)> + '_ {
        self.entries.keys().copied()
    }

    /// Whether every method recorded for `key` agrees with the first one.
    pub fn agrees(&self, key: (i64, usize, usize), tol: f64) -> bool {
        let e = self.get(key);
        e.iter().all(|x| x.value.approx_eq(&e[0].value, tol))
    }
}
