use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{GaussianRational, Mode, Poly, Scalar};
use crate::error::{Error, Result};
use crate::families::{closed_moment_nm, family_moment, FamilyScalar, FamilySpec, Param};
use crate::linearization::{
    eta, eta_path, nu, nu0_matrix, nu_oracle, nu_path, reconstructions, scaled_eta, scaled_theta_neighbours,
    tau_matrix, theta, theta_path,
};
use crate::matrices::{cmv_walk_entry, det_identity_check, toeplitz_det, toeplitz_det_closed, u_power_entry, Determinant};
use crate::opuc::{random_alphas, Opuc, SequenceSource, VerblunskySequence};
use crate::paths::{
    moment_gmotzkin, moment_lukasiewicz, moment_negative, moment_schroder, positivity_certificate, reciprocity_sides,
};

use super::{CliError, CliResult, OutputRecord, Report, RunConfig, Source, Suite, VerifyArgs};

pub const TOL: f64 = 1e-9;

const RADIUS: f64 = 0.9;

fn triples(max: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for n in 0..=max {
        for r in 0..=max {
            for s in 0..=max {
                out.push((n, r, s));
            }
        }
    }
    out
}

/// Folds per-key failures into a summary check, keeping the first few.
fn summarize(suite: &str, label: &str, total: usize, failures: Vec<String>) -> super::Check {
    let detail = if failures.is_empty() {
        format!("{total} cases")
    } else {
        format!("{} of {total} failed: {}", failures.len(), failures.iter().take(5).cloned().collect::<Vec<_>>().join("; "))
    };
    super::Check::new(suite, label, failures.is_empty(), detail)
}

fn cross_model<S: Scalar>(vs: &VerblunskySequence<S>, max: usize) -> Result<Vec<String>> {
    let opuc = Opuc::new(vs.clone());
    let keys = triples(max);
    let found: Vec<Option<String>> = keys
        .par_iter()
        .map(|&(n, r, s)| -> Result<Option<String>> {
            let base = moment_lukasiewicz(vs, n, r, s)?;
            let mut others = vec![
                ("gmotzkin", moment_gmotzkin(vs, n, r, s)?),
                ("matrix_u", u_power_entry(vs, n, r, s)?),
                ("matrix_cmv", cmv_walk_entry(vs, n, r, s)?),
                ("oracle", opuc.moment_oracle(n as i64, r, s)?),
            ];
            match moment_schroder(vs, n, r, s) {
                Ok(v) => others.push(("schroder", v)),
                Err(Error::ZeroVerblunsky(_)) => {}
                Err(e) => return Err(e),
            }
            let bad: Vec<&str> = others.iter().filter(|(_, v)| !v.approx_eq(&base, TOL)).map(|(m, _)| *m).collect();
            Ok((!bad.is_empty()).then(|| format!("mu({n},{r},{s}) {}", bad.join(","))))
        })
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().collect())
}

fn reciprocity<S: Scalar>(vs: &VerblunskySequence<S>, max: usize) -> Result<Vec<String>> {
    let found: Vec<Option<String>> = triples(max)
        .par_iter()
        .map(|&(n, r, s)| -> Result<Option<String>> {
            let (lhs, rhs) = reciprocity_sides(vs, n, r, s)?;
            Ok((!lhs.approx_eq(&rhs, TOL)).then(|| format!("({n},{r},{s})")))
        })
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().collect())
}

fn linearization<S: Scalar>(vs: &VerblunskySequence<S>, max: usize) -> Result<Vec<String>> {
    let opuc = Opuc::new(vs.clone());
    let mut bad = Vec::new();
    for n in 0..=max {
        for r in 0..=max - n {
            for s in 0..=n + r {
                let v = nu(vs, n, r, s)?;
                if !v.approx_eq(&nu_oracle(&opuc, n as i64, r, s)?, TOL) {
                    bad.push(format!("nu({n},{r},{s}) vs oracle"));
                }
                if !vs.alpha(r as i64)?.is_zero() && !v.approx_eq(&nu_path(vs, n, r, s)?, TOL) {
                    bad.push(format!("nu({n},{r},{s}) vs paths"));
                }
                if n >= 1 && !eta(vs, n, r, s)?.approx_eq(&eta_path(vs, n, r, s)?, TOL) {
                    bad.push(format!("eta({n},{r},{s}) vs paths"));
                }
                if !theta(vs, n, r, s)?.approx_eq(&theta_path(vs, n, r, s)?, TOL) {
                    bad.push(format!("theta({n},{r},{s}) vs paths"));
                }
            }
            for (k, (target, rebuilt)) in reconstructions(&opuc, n, r)?.into_iter().enumerate() {
                let diff = &target - &rebuilt;
                if diff.terms().any(|(_, c)| !c.approx_eq(&S::zero(), TOL)) {
                    bad.push(format!("expansion {k} of ({n},{r})"));
                }
            }
        }
    }
    let dim = max + 2;
    let product = tau_matrix(vs, dim)?.mul(&nu0_matrix(vs, dim)?);
    for i in 0..dim {
        for j in 0..dim {
            let expected = if i == j { S::one() } else { S::zero() };
            if !product.get(i, j).approx_eq(&expected, TOL) {
                bad.push(format!("tau nu_0 at ({i},{j})"));
            }
        }
    }
    Ok(bad)
}

fn determinants<S: Determinant>(vs: &VerblunskySequence<S>, max: usize, report: &mut Report) -> Result<Vec<String>> {
    let opuc = Opuc::new(vs.clone());
    let mut bad = Vec::new();
    for n in 0..=max {
        let closed = toeplitz_det_closed(vs, n)?;
        report.results.push(OutputRecord {
            n: n as i64,
            r: 0,
            s: 0,
            method: "toeplitz_det".into(),
            value: closed.render(),
            path: None,
            elapsed_ms: None,
            mode: S::MODE,
        });
        if !toeplitz_det(&opuc, n)?.approx_eq(&closed, TOL) {
            bad.push(format!("toeplitz n={n}"));
        }
    }
    for m in -2..=2 {
        for n in 0..=max.min(3) {
            if !det_identity_check(&opuc, m, n, TOL)? {
                bad.push(format!("identity m={m} n={n}"));
            }
        }
    }
    Ok(bad)
}

fn positivity(max: usize) -> Result<Vec<String>> {
    let mut keys = Vec::new();
    for n in 0..=max {
        for r in 0..=max - n {
            for s in 0..=n + r {
                keys.push((n, r, s));
            }
        }
    }
    let found: Vec<Option<String>> = keys
        .par_iter()
        .map(|&(n, r, s)| -> Result<Option<String>> {
            match positivity_certificate(n, r, s) {
                Ok(_) => {}
                Err(Error::PositivityViolation(label)) => return Ok(Some(label)),
                Err(e) => return Err(e),
            }
            if !scaled_eta(n, r, s)?.is_polynomial() {
                return Ok(Some(format!("eta({n},{r},{s}) scaled")));
            }
            if !scaled_theta_neighbours(n, r, s)?.is_polynomial() {
                return Ok(Some(format!("theta({n},{r},{s}) scaled")));
            }
            Ok(None)
        })
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().collect())
}

/// Families with exact closed forms, checked in the stated mode.
fn family_table() -> Vec<(FamilySpec, Mode)> {
    let v = |n, d| Param::Value(GaussianRational::ratio(n, d));
    vec![
        (FamilySpec::BernsteinSzego { zeta: Param::Value(GaussianRational::complex((2, 5), (1, 5))) }, Mode::Symbolic),
        (FamilySpec::MassPoint { gamma: v(1, 2) }, Mode::Symbolic),
        (FamilySpec::CircularJacobi { a: v(3, 2) }, Mode::Symbolic),
        (FamilySpec::RogersSzego { q: v(1, 3) }, Mode::Symbolic),
        (FamilySpec::SingleNontrivial { a: v(1, 1) }, Mode::Symbolic),
        (FamilySpec::SingleNontrivial { a: v(1, 2) }, Mode::Numeric),
        (FamilySpec::Geronimus { alpha: v(1, 2) }, Mode::Symbolic),
        (FamilySpec::Geronimus { alpha: v(1, 1) }, Mode::Symbolic),
        (FamilySpec::Geronimus { alpha: Param::Value(GaussianRational::complex((3, 10), (2, 5))) }, Mode::Symbolic),
    ]
}

fn family_cases<S: FamilyScalar>(spec: &FamilySpec, max: usize) -> Result<Vec<String>> {
    let vs = spec.verblunsky::<S>()?;
    let same = |a: &S, b: &S| -> Result<bool> {
        if S::MODE == Mode::Symbolic {
            let (a, b) = (super::cast::<S, Poly>(a.clone())?, super::cast::<S, Poly>(b.clone())?);
            Ok(spec.normalize(&a)? == spec.normalize(&b)?)
        } else {
            Ok(a.approx_eq(b, TOL))
        }
    };
    let mut bad = Vec::new();
    for n in 0..=max {
        for r in 0..=max {
            for s in 0..=max {
                if !same(&family_moment(spec, n, r, s)?, &moment_lukasiewicz(&vs, n, r, s)?)? {
                    bad.push(format!("{spec} mu({n},{r},{s})"));
                }
            }
        }
        if !matches!(spec, FamilySpec::Geronimus { .. }) {
            for m in 0..=max {
                if !same(&closed_moment_nm(spec, n, m)?, &moment_lukasiewicz(&vs, n, 0, m)?)? {
                    bad.push(format!("{spec} mu({n},{m})"));
                }
            }
        }
    }
    Ok(bad)
}

/// Schröder must refuse Al-Salam–Carlitz at index 0 while the other
/// models agree with the oracle.
fn al_salam_carlitz(max: usize) -> Result<Vec<String>> {
    let spec = FamilySpec::AlSalamCarlitz { q: Param::Value(GaussianRational::ratio(1, 2)) };
    let vs = spec.verblunsky::<Complex64>()?;
    let opuc = Opuc::new(vs.clone());
    let mut bad = Vec::new();
    if moment_schroder(&vs, 1, 0, 0) != Err(Error::ZeroVerblunsky(0)) {
        bad.push("schroder accepted alpha_0 = 0".to_string());
    }
    for n in 0..=max {
        let oracle = opuc.moment_oracle(n as i64, 0, 0)?;
        for (name, v) in [
            ("lukasiewicz", moment_lukasiewicz(&vs, n, 0, 0)?),
            ("matrix_u", u_power_entry(&vs, n, 0, 0)?),
            ("matrix_cmv", cmv_walk_entry(&vs, n, 0, 0)?),
        ] {
            if !v.approx_eq(&oracle, TOL) {
                bad.push(format!("{name} mu({n})"));
            }
        }
    }
    Ok(bad)
}

fn numeric_samples(config: &RunConfig, samples: usize, len: usize) -> CliResult<Vec<VerblunskySequence<Complex64>>> {
    match &config.source {
        Source::Generic => {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            (0..samples)
                .map(|_| Ok(VerblunskySequence::padded(random_alphas(&mut rng, len, RADIUS))?))
                .collect()
        }
        other => Ok(vec![other.sequence::<Complex64>()?]),
    }
}

/// Runs one suite in the configured mode against the configured sequence,
/// or random sequences in numeric mode when none is given.
fn run_suite(config: &RunConfig, suite: Suite, args: &VerifyArgs, report: &mut Report) -> CliResult<()> {
    let max = args.max;
    let name = match suite {
        Suite::CrossModel => "cross-model",
        Suite::Reciprocity => "reciprocity",
        Suite::Determinants => "determinants",
        Suite::Families => "families",
        Suite::Linearization => "linearization",
        Suite::Positivity => "positivity",
        Suite::All => unreachable!("expanded by the caller"),
    };
    let check = |report: &mut Report, label: String, total: usize, bad: Vec<String>| {
        report.checks.push(summarize(name, &label, total, bad));
    };
    match suite {
        Suite::Positivity => {
            let total = (0..=max).map(|k| (k + 1) * (k + 1)).sum();
            check(report, format!("beta-positive moments, n+r <= {max}"), total, positivity(max)?);
        }
        Suite::Families => {
            for (spec, mode) in family_table() {
                let bad = match mode {
                    Mode::Symbolic => family_cases::<Poly>(&spec, max)?,
                    Mode::Numeric => family_cases::<Complex64>(&spec, max)?,
                };
                check(report, format!("{spec} closed form"), (max + 1).pow(3), bad);
            }
            check(report, "al-salam-carlitz(q=1/2) error contract".into(), max + 2, al_salam_carlitz(max + 2)?);
        }
        Suite::Reciprocity => {
            let vs = VerblunskySequence::<Poly>::generic();
            let oracle = Opuc::new(vs.clone()).moment_oracle(-1, 0, 1)?;
            let oriented = moment_negative(&vs, 1, 0, 1)? == oracle && {
                let (l, r) = reciprocity_sides(&vs, 1, 0, 1)?;
                l == r
            };
            report.checks.push(super::Check::new(
                name,
                "orientation",
                oriented,
                "mu(-n,r,s) * prod_{j<s} rho_j = conj(mu(n,s,r)) * prod_{j<r} rho_j, confirmed by the oracle at (1,0,1)",
            ));
            per_sequence(config, args, report, name, |vs| reciprocity(vs, max), |vs| reciprocity(vs, max))?;
        }
        Suite::CrossModel => {
            per_sequence(config, args, report, name, |vs| cross_model(vs, max), |vs| cross_model(vs, max))?;
        }
        Suite::Linearization => {
            per_sequence(config, args, report, name, |vs| linearization(vs, max), |vs| linearization(vs, max))?;
        }
        Suite::Determinants => {
            let len = 2 * max + 8;
            match config.mode {
                Mode::Symbolic => {
                    let vs = config.source.sequence::<Poly>()?;
                    let bad = determinants(&vs, max, report)?;
                    check(report, "Toeplitz determinants and shifted identity".into(), max + 16, bad);
                }
                Mode::Numeric => {
                    for (k, vs) in numeric_samples(config, args.samples, len)?.iter().enumerate() {
                        let bad = determinants(vs, max, report)?;
                        check(report, format!("sample {k}"), max + 16, bad);
                    }
                }
            }
        }
        Suite::All => unreachable!(),
    }
    Ok(())
}

fn per_sequence(
    config: &RunConfig,
    args: &VerifyArgs,
    report: &mut Report,
    name: &str,
    symbolic: impl Fn(&VerblunskySequence<Poly>) -> Result<Vec<String>>,
    numeric: impl Fn(&VerblunskySequence<Complex64>) -> Result<Vec<String>>,
) -> CliResult<()> {
    let total = (args.max + 1).pow(3);
    match config.mode {
        Mode::Symbolic => {
            let vs = config.source.sequence::<Poly>()?;
            let label = match vs.source() {
                SequenceSource::Generic => "generic symbols".to_string(),
                SequenceSource::Table(len) => format!("table of {len} coefficients"),
                SequenceSource::Family(f) => f.clone(),
            };
            report.checks.push(summarize(name, &label, total, symbolic(&vs)?));
        }
        Mode::Numeric => {
            let len = 2 * args.max + 8;
            for (k, vs) in numeric_samples(config, args.samples, len)?.iter().enumerate() {
                report.checks.push(summarize(name, &format!("sample {k}"), total, numeric(vs)?));
            }
        }
    }
    Ok(())
}

pub fn cmd_verify(config: &RunConfig, args: &VerifyArgs, report: &mut Report) -> CliResult<()> {
    let suites = match args.suite {
        Suite::All => vec![
            Suite::CrossModel,
            Suite::Reciprocity,
            Suite::Determinants,
            Suite::Families,
            Suite::Linearization,
            Suite::Positivity,
        ],
        s => vec![s],
    };
    for suite in suites {
        match run_suite(config, suite, args, report) {
            Err(CliError::Lib(Error::ZeroVerblunsky(j))) if suite == Suite::Linearization => {
                report.checks.push(super::Check::new(
                    "linearization",
                    "skipped",
                    true,
                    format!("alpha_{j} = 0, eta and theta are undefined"),
                ));
            }
            other => other?,
        }
    }
    Ok(())
}
