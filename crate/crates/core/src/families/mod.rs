//! Named Verblunsky families and their closed-form generalized moments.

mod closed;
mod geronimus;
pub mod special;

use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use crate::algebra::{GaussianRational, ParamSym, Poly, Scalar, Symbol};
use crate::error::{Error, Result};
use crate::opuc::{SequenceSource, VerblunskySequence};

pub use closed::{closed_moment_nm, closed_moment_nrs, family_moment};
pub use geronimus::{
    geronimus_gf_moment, geronimus_phi_coeff, geronimus_phi_coeff_closed, geronimus_series, nrs_from_nm,
};
pub use special::{binomial, q_binomial, rising};

/// A family parameter: an exact value or a free generator (symbolic mode only).
#[derive(Clone, Debug, PartialEq)]
pub enum Param {
    Value(GaussianRational),
    Symbol,
}

impl Param {
    pub fn value(&self) -> Option<&GaussianRational> {
        match self {
            Param::Value(v) => Some(v),
            Param::Symbol => None,
        }
    }

    fn real_value(&self, name: &str) -> Result<GaussianRational> {
        match self {
            Param::Value(v) if v.is_real() => Ok(v.clone()),
            Param::Value(v) => Err(Error::ParameterOutOfRange(format!("{name} = {v} must be real"))),
            Param::Symbol => Err(Error::UnsupportedFamily(format!("symbolic {name} is not supported"))),
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Value(v) => write!(f, "{v}"),
            Param::Symbol => f.write_str("sym"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    /// Constant `alpha_n = alpha`.
    Geronimus { alpha: Param },
    /// `alpha_0 = zeta`, all later coefficients zero.
    BernsteinSzego { zeta: Param },
    /// Normalized Lebesgue measure plus a point mass at `z = 1`.
    MassPoint { gamma: Param },
    CircularJacobi { a: Param },
    /// `alpha_0 = -a/2`; for `a < 1` the coefficients involve an irrational `u`.
    SingleNontrivial { a: Param },
    RogersSzego { q: Param },
    AlSalamCarlitz { q: Param },
}

pub const FAMILY_NAMES: [&str; 7] = [
    "geronimus",
    "bernstein-szego",
    "mass-point",
    "circular-jacobi",
    "single-nontrivial",
    "rogers-szego",
    "al-salam-carlitz",
];

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Geronimus { .. } => "geronimus",
            FamilySpec::BernsteinSzego { .. } => "bernstein-szego",
            FamilySpec::MassPoint { .. } => "mass-point",
            FamilySpec::CircularJacobi { .. } => "circular-jacobi",
            FamilySpec::SingleNontrivial { .. } => "single-nontrivial",
            FamilySpec::RogersSzego { .. } => "rogers-szego",
            FamilySpec::AlSalamCarlitz { .. } => "al-salam-carlitz",
        }
    }

    fn key(&self) -> &'static str {
        match self {
            FamilySpec::Geronimus { .. } => "alpha",
            FamilySpec::BernsteinSzego { .. } => "zeta",
            FamilySpec::MassPoint { .. } => "gamma",
            FamilySpec::CircularJacobi { .. } | FamilySpec::SingleNontrivial { .. } => "a",
            FamilySpec::RogersSzego { .. } | FamilySpec::AlSalamCarlitz { .. } => "q",
        }
    }

    pub fn param(&self) -> &Param {
        match self {
            FamilySpec::Geronimus { alpha: p }
            | FamilySpec::BernsteinSzego { zeta: p }
            | FamilySpec::MassPoint { gamma: p }
            | FamilySpec::CircularJacobi { a: p }
            | FamilySpec::SingleNontrivial { a: p }
            | FamilySpec::RogersSzego { q: p }
            | FamilySpec::AlSalamCarlitz { q: p } => p,
        }
    }

    /// Builds a family from its name and `key=value` pairs. The value `sym`
    /// requests a free generator.
    pub fn parse(name: &str, params: &[(String, String)]) -> Result<Self> {
        let norm = name.to_ascii_lowercase().replace('_', "-");
        let make: fn(Param) -> FamilySpec = match norm.as_str() {
            "geronimus" => |p| FamilySpec::Geronimus { alpha: p },
            "bernstein-szego" => |p| FamilySpec::BernsteinSzego { zeta: p },
            "mass-point" => |p| FamilySpec::MassPoint { gamma: p },
            "circular-jacobi" => |p| FamilySpec::CircularJacobi { a: p },
            "single-nontrivial" => |p| FamilySpec::SingleNontrivial { a: p },
            "rogers-szego" => |p| FamilySpec::RogersSzego { q: p },
            "al-salam-carlitz" => |p| FamilySpec::AlSalamCarlitz { q: p },
            _ => return Err(Error::UnsupportedFamily(name.to_string())),
        };
        let key = make(Param::Symbol).key();
        let [(k, v)] = params else {
            return Err(Error::Parse(format!("{norm} takes exactly one parameter `{key}`")));
        };
        if k != key {
            return Err(Error::Parse(format!("{norm} has no parameter `{k}` (expected `{key}`)")));
        }
        let param = if v == "sym" { Param::Symbol } else { Param::Value(GaussianRational::parse_literal(v)?.0) };
        let spec = make(param);
        spec.validate()?;
        Ok(spec)
    }

    /// Checks the parameter range of the family.
    pub fn validate(&self) -> Result<()> {
        let Param::Value(v) = self.param() else {
            return match self {
                FamilySpec::Geronimus { .. } | FamilySpec::BernsteinSzego { .. } | FamilySpec::RogersSzego { .. } => {
                    Ok(())
                }
                _ => Err(Error::UnsupportedFamily(format!("{} needs a numeric value for `{}`", self.name(), self.key()))),
            };
        };
        let out = |why: &str| Err(Error::ParameterOutOfRange(format!("{} = {v}: {why}", self.key())));
        let zero = GaussianRational::zero();
        let one = GaussianRational::one();
        match self {
            // |alpha| = 1 is allowed so the degenerate alpha = 1 case can be run exactly.
            FamilySpec::Geronimus { .. } if v.norm_sqr() > one.re => out("need |alpha| <= 1"),
            FamilySpec::BernsteinSzego { .. } if v.norm_sqr() >= one.re => out("need |zeta| < 1"),
            FamilySpec::Geronimus { .. } | FamilySpec::BernsteinSzego { .. } => Ok(()),
            _ if !v.is_real() => out("must be real"),
            FamilySpec::MassPoint { .. } if v.re <= zero.re || v.re >= one.re => out("need 0 < gamma < 1"),
            FamilySpec::CircularJacobi { .. } if v.re <= -one.re.clone() => out("need a > -1"),
            FamilySpec::SingleNontrivial { .. } if v.re <= zero.re || v.re > one.re => out("need 0 < a <= 1"),
            FamilySpec::RogersSzego { .. } | FamilySpec::AlSalamCarlitz { .. }
                if v.re <= zero.re || v.re >= one.re =>
            {
                out("need 0 < q < 1")
            }
            _ => Ok(()),
        }
    }

    /// Verblunsky coefficients of the family.
    pub fn verblunsky<S: FamilyScalar>(&self) -> Result<VerblunskySequence<S>> {
        self.validate()?;
        let source = SequenceSource::Family(format!("{}({}={})", self.name(), self.key(), self.param()));
        let seq = match self {
            FamilySpec::Geronimus { alpha } => {
                let a = S::parameter(alpha, ParamSym::Geronimus)?;
                VerblunskySequence::from_fn(source, move |_| Ok(a.clone()))
            }
            FamilySpec::BernsteinSzego { zeta } => {
                let z = S::parameter(zeta, ParamSym::Zeta)?;
                VerblunskySequence::from_fn(source, move |j| Ok(if j == 0 { z.clone() } else { S::zero() }))
            }
            FamilySpec::MassPoint { gamma } => {
                let g = gamma.real_value("gamma")?;
                VerblunskySequence::from_fn(source, move |j| {
                    let den = GaussianRational::one() + GaussianRational::from_integer(j as i64) * g.clone();
                    Ok(S::from_gaussian(&g.checked_div(&den)?))
                })
            }
            FamilySpec::CircularJacobi { a } => {
                let a = a.real_value("a")?;
                VerblunskySequence::from_fn(source, move |j| {
                    let den = GaussianRational::from_integer(j as i64 + 1) + a.clone();
                    Ok(S::from_gaussian(&-a.checked_div(&den)?))
                })
            }
            FamilySpec::SingleNontrivial { a } => {
                let a = a.real_value("a")?;
                if a.is_one() {
                    VerblunskySequence::from_fn(source, |j| {
                        Ok(S::from_gaussian(&GaussianRational::ratio(-1, j as i64 + 2)))
                    })
                } else {
                    let u = single_nontrivial_u(&a);
                    let d = move |k: i32| u.powi(k) - u.powi(-k);
                    VerblunskySequence::from_fn(source, move |j| S::from_real(-d(1) / d(j as i32 + 2)))
                }
            }
            FamilySpec::RogersSzego { q } => {
                let t = S::sqrt_q(q)?;
                VerblunskySequence::from_fn(source, move |j| {
                    let v = t.pow(j as u32 + 1);
                    Ok(if j % 2 == 0 { v } else { -v })
                })
            }
            FamilySpec::AlSalamCarlitz { q } => {
                let q = q.real_value("q")?;
                VerblunskySequence::from_fn(source, move |j| {
                    Ok(if j % 2 == 0 {
                        S::zero()
                    } else {
                        let k = (j / 2 + 1) as u32;
                        S::from_gaussian(&(GaussianRational::one() - GaussianRational::from_integer(2) * q.pow(k)))
                    })
                })
            }
        };
        Ok(seq)
    }

    /// Maps a symbolic result to a canonical form: for Rogers–Szegő with a
    /// numeric `q`, `t^2` is replaced by `q`.
    pub fn normalize(&self, p: &Poly) -> Result<Poly> {
        match self {
            FamilySpec::RogersSzego { q: Param::Value(q) } => p.reduce_square(Symbol::param(ParamSym::SqrtQ), q),
            _ => Ok(p.clone()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}={})", self.name(), self.key(), self.param())
    }
}

/// `u = 1/a + sqrt(1/a^2 - 1)` for the single-nontrivial-moment family.
pub(crate) fn single_nontrivial_u(a: &GaussianRational) -> f64 {
    let a = a.to_complex().re;
    1.0 / a + (1.0 / (a * a) - 1.0).abs().sqrt()
}

/// Scalars that can host family parameters.
pub trait FamilyScalar: Scalar {
    fn parameter(p: &Param, sym: ParamSym) -> Result<Self>;
    /// `q^{1/2}`: the generator `t` in symbolic mode, a square root otherwise.
    fn sqrt_q(q: &Param) -> Result<Self>;
    /// An irrational real constant; numeric mode only.
    fn from_real(x: f64) -> Result<Self>;
}

impl FamilyScalar for Poly {
    fn parameter(p: &Param, sym: ParamSym) -> Result<Self> {
        Ok(match p {
            Param::Value(v) => Poly::constant(v.clone()),
            Param::Symbol => Poly::symbol(Symbol::param(sym)),
        })
    }

    fn sqrt_q(_q: &Param) -> Result<Self> {
        Ok(Poly::symbol(Symbol::param(ParamSym::SqrtQ)))
    }

    fn from_real(_x: f64) -> Result<Self> {
        Err(Error::UnsupportedFamily("irrational value needs numeric mode".into()))
    }
}

impl FamilyScalar for Complex64 {
    fn parameter(p: &Param, sym: ParamSym) -> Result<Self> {
        match p {
            Param::Value(v) => Ok(v.to_complex()),
            Param::Symbol => Err(Error::UnsupportedFamily(format!("symbolic {sym:?} needs symbolic mode"))),
        }
    }

    fn sqrt_q(q: &Param) -> Result<Self> {
        let q = Self::parameter(q, ParamSym::SqrtQ)?;
        if q.im != 0.0 || q.re.is_negative() {
            return Err(Error::ParameterOutOfRange(format!("q = {q} must be positive")));
        }
        Ok(Complex64::new(q.re.sqrt(), 0.0))
    }

    fn from_real(x: f64) -> Result<Self> {
        Ok(Complex64::new(x, 0.0))
    }
}
