use num_complex::Complex64;
use num_rational::BigRational;
use proptest::prelude::*;

use weyl_cartan::analysis::{contour_integral, expected_coefficient, generating_series, p_yv_float};
use weyl_cartan::config::SValue;
use weyl_cartan::series::Series;
use weyl_cartan::su11::{DiffOp, LadderTriple};
use weyl_cartan::weyl::parse::parse_operator;
use weyl_cartan::weyl::rewrite::{normalize_word, Letter, Strategy as Rewrite};
use weyl_cartan::weyl::OpPoly;
use weyl_cartan::{ExactScalar, MultiPoly, Var};

fn poly_strategy(vars: &'static [Var], max_exp: u16) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-5i64..=5, prop::collection::vec(0..=max_exp, vars.len())), 0..5).prop_map(move |terms| {
        terms.into_iter().fold(MultiPoly::zero(), |acc, (c, exps)| {
            let mono = vars.iter().zip(exps).fold(MultiPoly::int(c), |m, (v, e)| &m * &MultiPoly::var(*v).pow(e as u32));
            &acc + &mono
        })
    })
}

fn xs_poly() -> impl Strategy<Value = MultiPoly> {
    poly_strategy(&[Var::X, Var::S, Var::Hbar], 3)
}

fn op_strategy() -> impl Strategy<Value = OpPoly> {
    prop::collection::vec((-3i64..=3, any::<bool>(), 0u32..=1, 0u32..=3, 0u32..=3), 0..4).prop_map(|terms| {
        terms.into_iter().fold(OpPoly::zero(), |acc, (c, imag, h, q, p)| {
            let mut coeff = &MultiPoly::int(c) * &MultiPoly::var(Var::Hbar).pow(h);
            if imag {
                coeff = &coeff * &MultiPoly::i();
            }
            &acc + &OpPoly::word(q, p).scale(&coeff)
        })
    })
}

fn letters() -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(prop_oneof![Just(Letter::Q), Just(Letter::P)], 0..=8)
}

fn word_op(w: &[Letter]) -> OpPoly {
    w.iter().fold(OpPoly::identity(), |acc, l| match l {
        Letter::Q => &acc * &OpPoly::q(),
        Letter::P => &acc * &OpPoly::p(),
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in xs_poly(), b in xs_poly(), c in xs_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &MultiPoly::zero(), a.clone());
        prop_assert_eq!(&a * &MultiPoly::one(), a);
    }

    #[test]
    fn product_rule(a in xs_poly(), b in xs_poly()) {
        let lhs = (&a * &b).derivative(Var::X);
        let rhs = &(&a.derivative(Var::X) * &b) + &(&a * &b.derivative(Var::X));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn shift_and_back(a in xs_poly(), k in -3i64..=3) {
        let off = MultiPoly::c().scale(&ExactScalar::int(2 * k));
        let back = a.shift(Var::X, &off).shift(Var::X, &-&off);
        prop_assert_eq!(back, a);
    }

    #[test]
    fn float_matches_exact(a in xs_poly(), xn in -7i64..=7, sn in -7i64..=7, hd in 1i64..=4) {
        let bind = [
            (Var::X, ExactScalar::ratio(xn, 3)),
            (Var::S, ExactScalar::ratio(sn, 2)),
            (Var::Hbar, ExactScalar::ratio(1, hd)),
        ];
        let exact = a.eval_exact(&bind).unwrap().to_complex();
        let fbind: Vec<_> = bind.iter().map(|(v, e)| (*v, e.to_complex())).collect();
        let float = a.eval_float(&fbind).unwrap();
        prop_assert!((exact - float).norm() <= 1e-9 * exact.norm().max(1.0));
    }

    #[test]
    fn operator_product_is_associative(a in op_strategy(), b in op_strategy(), c in op_strategy()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn dagger_is_an_antihomomorphism(a in op_strategy(), b in op_strategy()) {
        prop_assert_eq!((&a * &b).dagger(), &b.dagger() * &a.dagger());
        prop_assert_eq!(a.dagger().dagger(), a);
    }

    #[test]
    fn rewriting_is_confluent(w in letters()) {
        let (a, steps_a) = normalize_word(&w, Rewrite::Leftmost);
        let (b, _) = normalize_word(&w, Rewrite::Rightmost);
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(&a, &word_op(&w));
        prop_assert!(steps_a >= weyl_cartan::weyl::rewrite::inversions(&w));
    }

    #[test]
    fn rendering_parses_back(a in op_strategy()) {
        prop_assert_eq!(parse_operator(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn difference_operators_are_linear(f in xs_poly(), g in xs_poly(), k in -4i64..=4) {
        let kk = MultiPoly::int(k);
        let combo = &(&kk * &f) + &g;
        let tr = LadderTriple::new(MultiPoly::var(Var::S));
        for op in [DiffOp::d_h(), DiffOp::d2_h(), DiffOp::mean_h(), tr.j_plus.clone(), tr.j_zero.clone()] {
            let lhs = op.apply(&combo).unwrap();
            let rhs = &(&kk * &op.apply(&f).unwrap()) + &op.apply(&g).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn s_value_spelling_round_trips(p in -50i64..=50, q in 1i64..=20, imag in any::<bool>()) {
        let r = BigRational::new(p.into(), q.into());
        let v = if imag { SValue::Imaginary(r) } else { SValue::Real(r) };
        prop_assert_eq!(v.to_string().parse::<SValue>().unwrap(), v);
    }

    #[test]
    fn series_identities(a in -0.9f64..0.9, b in -2.0f64..2.0) {
        let f = Series::linear(Complex64::new(1.0, 0.0), Complex64::new(a, b), 8);
        let round = f.ln().exp();
        let sq = f.sqrt();
        let sq2 = &sq * &sq;
        for k in 0..=8 {
            prop_assert!((round.coeffs[k] - f.coeffs[k]).norm() < 1e-12);
            prop_assert!((sq2.coeffs[k] - f.coeffs[k]).norm() < 1e-12);
        }
    }

    #[test]
    fn contour_reproduces_polynomial(n in 0u32..=5, y0 in -0.5f64..0.5, v in -2.0f64..2.0) {
        let want = p_yv_float(n, Complex64::new(y0, 0.0), v);
        let got = contour_integral(n, Complex64::new(y0, 0.0), v, 0.4, 128).unwrap();
        prop_assert!((got - want).norm() <= 1e-8 * want.norm().max(1.0));
    }

    #[test]
    fn generating_series_coefficients(y0 in -0.8f64..0.8, v in -2.0f64..2.0) {
        let g = generating_series(y0, v, 6);
        for n in 0..=6u32 {
            let want = expected_coefficient(n, y0, v);
            prop_assert!((g.coeffs[n as usize] - want).norm() <= 1e-9 * want.norm().max(1.0));
        }
    }
}
