use num_complex::Complex64;
use proptest::prelude::*;

use opuc::algebra::{approx_eq_complex, Assignment, GaussianRational, LaurentPoly, Poly, Scalar};
use opuc::matrices::{cmv_walk_entry, toeplitz_det, toeplitz_det_closed, u_power_entry};
use opuc::opuc::{Opuc, VerblunskySequence};
use opuc::paths::{
    enumerate, moment_gmotzkin, moment_lukasiewicz, moment_schroder, path_weight, reciprocity_sides, Model,
};

const TOL: f64 = 1e-9;

fn alpha() -> impl Strategy<Value = Complex64> {
    (0.0..0.9f64, 0.0..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

fn alphas(len: usize) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec(alpha(), len)
}

fn sequence(values: Vec<Complex64>) -> VerblunskySequence<Complex64> {
    VerblunskySequence::padded(values).unwrap()
}

/// Small symbolic polynomials in `a0..a2`, `ab0..ab2` with integer coefficients.
fn poly() -> impl Strategy<Value = Poly> {
    let term = (-3i64..=3, prop::collection::vec((0u32..3, any::<bool>()), 0..4));
    prop::collection::vec(term, 0..5).prop_map(|terms| {
        let mut p = Poly::zero();
        for (c, factors) in terms {
            let mut t = Poly::from_i64(c);
            for (j, barred) in factors {
                t = t * if barred { Poly::alpha_bar(j) } else { Poly::alpha(j) };
            }
            p += t;
        }
        p
    })
}

fn laurent() -> impl Strategy<Value = LaurentPoly<Poly>> {
    prop::collection::vec((-3i64..=3, poly()), 0..4).prop_map(|terms| {
        let mut f = LaurentPoly::zero();
        for (k, c) in terms {
            f.add_term(k, c);
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn numeric_models_agree(values in alphas(10), n in 0usize..5, r in 0usize..5, s in 0usize..5) {
        let vs = sequence(values);
        let opuc = Opuc::new(vs.clone());
        let base = moment_lukasiewicz(&vs, n, r, s).unwrap();
        for other in [
            moment_gmotzkin(&vs, n, r, s).unwrap(),
            moment_schroder(&vs, n, r, s).unwrap(),
            u_power_entry(&vs, n, r, s).unwrap(),
            cmv_walk_entry(&vs, n, r, s).unwrap(),
            opuc.moment_oracle(n as i64, r, s).unwrap(),
        ] {
            prop_assert!(approx_eq_complex(base, other, TOL), "{base} vs {other}");
        }
    }

    #[test]
    fn triangularity(values in alphas(8), n in 0usize..6, m in 0usize..8) {
        let v = moment_lukasiewicz(&sequence(values), n, 0, m).unwrap();
        let expected = if m == n { 1.0 } else if m > n { 0.0 } else { return Ok(()) };
        prop_assert!(approx_eq_complex(v, Complex64::new(expected, 0.0), TOL));
    }

    #[test]
    fn reciprocity_holds_numerically(values in alphas(12), n in 0usize..5, r in 0usize..5, s in 0usize..5) {
        let (lhs, rhs) = reciprocity_sides(&sequence(values), n, r, s).unwrap();
        prop_assert!(approx_eq_complex(lhs, rhs, TOL), "{lhs} vs {rhs}");
    }

    #[test]
    fn enumeration_weights_sum_to_dp(values in alphas(8), n in 0usize..4, r in 0usize..3, s in 0usize..4) {
        let vs = sequence(values);
        for (model, dp) in [
            (Model::Lukasiewicz, moment_lukasiewicz(&vs, n, r, s).unwrap()),
            (Model::GentleMotzkin, moment_gmotzkin(&vs, n, r, s).unwrap()),
            (Model::Schroder, moment_schroder(&vs, n, r, s).unwrap()),
        ] {
            let total = enumerate(model, n, r, s, 1_000_000)
                .unwrap()
                .iter()
                .fold(Complex64::new(0.0, 0.0), |acc, p| acc + path_weight(p, &vs).unwrap());
            prop_assert!(approx_eq_complex(total, dp, TOL), "{model:?}: {total} vs {dp}");
        }
    }

    #[test]
    fn toeplitz_determinant_is_rho_product(values in alphas(6), n in 0usize..6) {
        let vs = sequence(values);
        let det = toeplitz_det(&Opuc::new(vs.clone()), n).unwrap();
        prop_assert!(approx_eq_complex(det, toeplitz_det_closed(&vs, n).unwrap(), TOL));
    }

    #[test]
    fn conjugation_is_an_involution(p in poly()) {
        prop_assert_eq!(p.conj().conj(), p);
    }

    #[test]
    fn bar_inverse_twice_is_identity(f in laurent()) {
        prop_assert_eq!(f.bar_inverse_substitute().bar_inverse_substitute(), f);
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in poly(), q in poly(), values in alphas(3)) {
        let at = Assignment::from_alphas(&values);
        let (ep, eq) = (p.evaluate(&at).unwrap(), q.evaluate(&at).unwrap());
        prop_assert!(approx_eq_complex((p.clone() * &q).evaluate(&at).unwrap(), ep * eq, TOL));
        prop_assert!(approx_eq_complex((p.clone() + &q).evaluate(&at).unwrap(), ep + eq, TOL));
        prop_assert!(approx_eq_complex(p.conj().evaluate(&at).unwrap(), ep.conj(), TOL));
    }

    #[test]
    fn symbolic_moment_evaluates_to_numeric(values in alphas(5), n in 0usize..3, r in 0usize..3, s in 0usize..4) {
        let exact = moment_lukasiewicz(&VerblunskySequence::<Poly>::generic(), n, r, s).unwrap();
        let numeric = moment_lukasiewicz(&sequence(values.clone()), n, r, s).unwrap();
        prop_assert!(approx_eq_complex(exact.evaluate(&Assignment::from_alphas(&values)).unwrap(), numeric, TOL));
    }

    #[test]
    fn literal_parsing_round_trips(re in -50i64..50, im in -50i64..50, den in 1i64..20) {
        let text = format!("{re}/{den}{}{}/{den}i", if im >= 0 { "+" } else { "-" }, im.abs());
        let (v, decimal) = GaussianRational::parse_literal(&text).unwrap();
        prop_assert!(!decimal);
        prop_assert_eq!(v, GaussianRational::complex((re, den), (im, den)));
    }
}

#[test]
fn zero_table_entry_only_blocks_schroder() {
    let vs = sequence(vec![Complex64::new(0.5, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.2, 0.1)]);
    assert!(moment_schroder(&vs, 2, 0, 0).is_err());
    assert!(moment_lukasiewicz(&vs, 2, 0, 0).unwrap().approx_eq(&u_power_entry(&vs, 2, 0, 0).unwrap(), TOL));
}
