//! Small hand-checked inputs and outputs for each public operation.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::BigRational;
use weyl_cartan::analysis::{contour_integral, generating_series, hypergeometric_residual, p_yv_bound, rodrigues_q, self_adjoint_residual};
use weyl_cartan::cartan::{by_recursion, d_ds, explicit, ode_residual, parity_image, ExplicitForm};
use weyl_cartan::classical::{
    continuous_orthogonality, discrete_orthogonality, hahn_point, identify, meixner, MeixnerPollaczek,
};
use weyl_cartan::commands::cmd_normalize;
use weyl_cartan::lattice::{central_diff, central_second_diff, forward, backward};
use weyl_cartan::quad::QuadConfig;
use weyl_cartan::su11::{u_difference_equation, DiffOp, LadderTriple};
use weyl_cartan::weyl::parse::parse_operator;
use weyl_cartan::weyl::{cartan_product_form, ordered_product, reorder, w_structure_bracket, x_hat, BracketKind, Form, OpPoly, OrderedProductSpec};
use weyl_cartan::{Error, ExactScalar, MultiPoly, Status, Var};

fn x() -> MultiPoly {
    MultiPoly::var(Var::X)
}
fn s() -> MultiPoly {
    MultiPoly::var(Var::S)
}
fn u() -> MultiPoly {
    MultiPoly::var(Var::U)
}
fn hbar() -> MultiPoly {
    MultiPoly::var(Var::Hbar)
}
fn c() -> MultiPoly {
    MultiPoly::c()
}
fn k(n: i64) -> MultiPoly {
    MultiPoly::int(n)
}
fn i_hbar() -> MultiPoly {
    MultiPoly::i() * hbar()
}
fn cplx(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

#[test]
fn polynomial_arithmetic() {
    assert_eq!(&(&x() + &s()) * &(&x() - &s()), &x().pow(2) - &s().pow(2));
    let p = &x() + &(&c() * &s());
    let want = &(&x().pow(2) + &(&i_hbar() * &(&s() * &x()))) - &(&(hbar().pow(2) * s().pow(2)) * MultiPoly::ratio(1, 4));
    assert_eq!(&p * &p, want);
    assert_eq!(p.substitute(Var::S, &MultiPoly::zero()), x());
    let y = MultiPoly::var(Var::Y);
    let iy = MultiPoly::i() * y.clone();
    assert_eq!(p.substitute(Var::S, &iy), &x() - &(&hbar() * &y).scale(&ExactScalar::ratio(1, 2)));
    let u1 = &u() + &MultiPoly::one();
    assert_eq!(x().pow(2).substitute(Var::X, &u1), &(&u().pow(2) + &u().scale(&ExactScalar::int(2))) + &MultiPoly::one());
}

#[test]
fn shifts() {
    let two_c = c().scale(&ExactScalar::int(2));
    assert_eq!(x().pow(2).shift(Var::X, &two_c), &(&x().pow(2) + &(&k(4) * &(&c() * &x()))) + &(&k(4) * &c().pow(2)));
    let want = &(&(&u().pow(3) - &(&k(3) * &u().pow(2))) + &(&k(3) * &u())) - &MultiPoly::one();
    assert_eq!(u().pow(3).shift(Var::U, &k(-1)), want);
}

#[test]
fn float_evaluation() {
    let p1 = &x() + &(&c() * &s());
    let v = p1.eval_float(&[(Var::X, cplx(1.0)), (Var::S, cplx(0.0)), (Var::Hbar, cplx(1.0))]).unwrap();
    assert!((v - cplx(1.0)).norm() < 1e-15);
    let p2 = &by_recursion(2)[2].poly;
    let v = p2.eval_float(&[(Var::X, cplx(0.0)), (Var::S, cplx(0.0)), (Var::Hbar, cplx(2.0))]).unwrap();
    assert!((v - cplx(-1.0)).norm() < 1e-15);
    match p1.eval_float(&[(Var::X, cplx(1.0))]) {
        Err(Error::UnboundVariable(v)) => assert!(v == Var::S || v == Var::Hbar),
        other => panic!("expected an unbound-variable error, got {other:?}"),
    }
}

fn t(n: u32, m: u32, s: &MultiPoly) -> OpPoly {
    ordered_product(&OrderedProductSpec::new(n, m, s.clone()), Form::QOuter)
}

#[test]
fn normal_ordering() {
    let q = OpPoly::q();
    let p = OpPoly::p();
    assert_eq!(&p * &q, &OpPoly::word(1, 1) - &OpPoly::scalar(i_hbar()));
    for kk in 0..5u32 {
        let pk = OpPoly::word(0, kk);
        let lhs = &(&x_hat() * &pk) - &(&pk * &x_hat());
        assert_eq!(lhs, pk.scale(&(&i_hbar() * &k(kk as i64))));
    }
    let q2p = OpPoly::word(2, 1);
    assert_eq!(&q2p * &q, &OpPoly::word(3, 1) - &OpPoly::word(2, 0).scale(&i_hbar()));
}

#[test]
fn ordered_products_and_reordering() {
    let half_i_hbar = i_hbar().scale(&ExactScalar::ratio(1, 2));
    assert_eq!(t(1, 1, &MultiPoly::zero()), &OpPoly::word(1, 1) - &OpPoly::scalar(half_i_hbar.clone()));
    assert_eq!(t(2, 0, &s()), OpPoly::word(2, 0));
    assert_eq!(t(1, 1, &MultiPoly::one()), OpPoly::word(1, 1));
    let sp = MultiPoly::var(Var::SPrime);
    let r = reorder(&OrderedProductSpec::new(1, 1, s()), &sp);
    assert_eq!(r.terms.len(), 2);
    assert_eq!(r.terms[&(1, 1)], MultiPoly::one());
    assert_eq!(r.terms[&(0, 0)], &half_i_hbar * &(&s() - &sp));
    let same = reorder(&OrderedProductSpec::new(3, 2, s()), &s());
    assert_eq!(same.terms.len(), 1);
    assert_eq!(&t(1, 1, &MultiPoly::one()) - &t(1, 1, &MultiPoly::zero()), OpPoly::scalar(half_i_hbar));
}

#[test]
fn conjugation() {
    let qp = OpPoly::word(1, 1);
    assert_eq!(qp.dagger(), &qp - &OpPoly::scalar(i_hbar()));
    for n in 0..=3 {
        for m in 0..=3 {
            let a = t(n, m, &MultiPoly::zero());
            assert_eq!(a.dagger(), a);
        }
    }
    let a = t(2, 1, &MultiPoly::i());
    assert_eq!(a.dagger(), a);
}

#[test]
fn brackets() {
    let (q, p) = (OpPoly::q(), OpPoly::p());
    assert_eq!(q.bracket(&p, BracketKind::Commutator), OpPoly::scalar(i_hbar()));
    assert_eq!(x_hat().bracket(&q, BracketKind::Commutator), q.scale(&-&i_hbar()));
    let zero = MultiPoly::zero();
    assert_eq!(t(0, 1, &zero).bracket(&t(1, 0, &zero), BracketKind::Commutator), OpPoly::scalar(-&i_hbar()));
    let closed = w_structure_bracket((0, 1), (1, 0), &zero, BracketKind::Commutator);
    assert_eq!(closed.terms.len(), 1);
    assert_eq!(closed.terms[&(0, 0)], -&i_hbar());
    for n in 0..=3 {
        for m in 0..=3 {
            assert!(w_structure_bracket((n, n), (m, m), &s(), BracketKind::Commutator).expand().is_zero());
        }
    }
}

#[test]
fn cartan_product_forms() {
    assert_eq!(cartan_product_form(0, 1), OpPoly::identity());
    assert_eq!(cartan_product_form(1, 1), OpPoly::word(1, 1));
    assert_eq!(cartan_product_form(2, 1), OpPoly::word(2, 2));
}

#[test]
fn cartan_polynomials() {
    assert_eq!(explicit(0, ExplicitForm::Plus).poly, MultiPoly::one());
    let p2 = &(&x().pow(2) + &(&k(4) * &(&c() * &(&s() * &x())))) + &(&c().pow(2) * &(&(&k(2) * &s().pow(2)) + &k(1)));
    assert_eq!(explicit(2, ExplicitForm::Minus).poly, p2);
    let p4_at_0 = explicit(4, ExplicitForm::Plus).poly.substitute(Var::X, &MultiPoly::zero());
    let want = &(&k(3) * &c().pow(4)) * &(&(&(&k(8) * &s().pow(4)) + &(&k(24) * &s().pow(2))) + &k(3));
    assert_eq!(p4_at_0, want);
    let table = by_recursion(4);
    assert_eq!(table[1].poly, &x() + &(&c() * &s()));
    let p3 = &(&(&x().pow(3) + &(&(&k(9) * &c()) * &(&s() * &x().pow(2)))) + &(&(&c().pow(2) * &(&(&k(18) * &s().pow(2)) + &k(5))) * &x()))
        + &(&(&k(3) * &c().pow(3)) * &(&s() * &(&(&k(2) * &s().pow(2)) + &k(3))));
    assert_eq!(table[3].poly, p3);
    assert_eq!(d_ds(&table[1].poly, 1), c());
    assert_eq!(d_ds(&table[2].poly, 2), &k(4) * &c().pow(2));
    assert_eq!(d_ds(&table[4].poly, 1), &(&k(16) * &c()) * &table[3].poly);
    assert!(d_ds(&table[2].poly, 3).is_zero());
    assert!(ode_residual(&table[0]).is_zero());
    for p in &table {
        let sign = if p.n % 2 == 0 { 1 } else { -1 };
        assert_eq!(parity_image(&p.poly), p.poly.scale(&ExactScalar::int(sign)));
    }
}

#[test]
fn difference_operators() {
    assert_eq!(central_diff(&x().pow(2)), x().scale(&ExactScalar::int(2)));
    assert!(central_second_diff(&x()).is_zero());
    assert_eq!(forward(&backward(&u().pow(2))), k(2));
}

#[test]
fn ladder_on_low_orders() {
    let tr = LadderTriple::new(s());
    let table = by_recursion(2);
    assert!(tr.j_minus.apply(&table[0].poly).unwrap().is_zero());
    assert_eq!(tr.j_zero.apply(&table[0].poly).unwrap(), MultiPoly::ratio(1, 2));
    assert_eq!(tr.j_plus.apply(&table[1].poly).unwrap(), table[2].poly);
    assert!(u_difference_equation(0, &s()).unwrap().is_zero());
    assert!(u_difference_equation(2, &MultiPoly::one()).is_err());
}

#[test]
fn contraction_operators() {
    let d = DiffOp::d_h();
    let mean = DiffOp::mean_h();
    let xx = DiffOp::var(Var::X);
    let x3 = x().pow(3);
    let dm = DiffOp::commutator(&d, &mean).apply(&x3).unwrap();
    assert!(dm.is_zero());
    assert_eq!(DiffOp::commutator(&xx, &d).apply(&x()).unwrap(), -&x());
    assert_eq!(mean.apply(&x()).unwrap(), x());
    let d_x3 = d.apply(&x3).unwrap().substitute(Var::Hbar, &MultiPoly::zero());
    assert_eq!(d_x3, &k(3) * &x().pow(2));
}

#[test]
fn meixner_values() {
    let mu = MultiPoly::var(Var::Mu);
    assert_eq!(meixner(0, &MultiPoly::one(), &mu).unwrap().scaled, MultiPoly::one());
    // mu * m_1 = mu - (1 - mu) u
    let m1 = meixner(1, &MultiPoly::one(), &mu).unwrap();
    assert_eq!(m1.scaled, &mu - &(&(&MultiPoly::one() - &mu) * &u()));
    assert!(meixner(1, &MultiPoly::one(), &MultiPoly::zero()).is_err());
    let checks = identify(1, &s()).unwrap();
    assert!(checks.iter().all(|c| c.status == Status::Pass));
    assert!(identify(1, &MultiPoly::one()).is_err());
    assert!(identify(1, &k(-1)).is_err());
}

#[test]
fn discrete_values() {
    let s3 = BigRational::from_integer((-3).into());
    let two = BigRational::from_integer(2.into());
    let r = discrete_orthogonality(0, 0, &s3, &two, 200, 1e-10).unwrap();
    assert_eq!(r.exact_sum.as_ref().map(|v| v.to_string()), Some("2".to_string()));
    assert_eq!(r.status, Status::Pass);
    let r = discrete_orthogonality(0, 1, &s3, &two, 200, 1e-10).unwrap();
    assert!(r.lhs().norm() <= r.tail_bound + 1e-12 && r.status == Status::Pass);
    let short = discrete_orthogonality(2, 2, &s3, &two, 5, 1e-10).unwrap();
    assert_eq!(short.status, Status::Flagged);
    assert!(discrete_orthogonality(0, 0, &BigRational::from_integer((-1).into()), &two, 200, 1e-10).is_err());
}

#[test]
fn continuous_values() {
    for tt in [-1.0, 0.0, 2.5] {
        assert!((MeixnerPollaczek::new(0, 1.0, 0.5).unwrap().eval(tt) - cplx(1.0)).norm() < 1e-15);
    }
    assert!(MeixnerPollaczek::new(1, 0.0, 0.5).is_err());
    assert!(MeixnerPollaczek::new(1, PI, 0.5).is_err());
    let cfg = QuadConfig::default();
    let r = continuous_orthogonality(0, 2, PI / 2.0, 1.0, &cfg, 1e-8).unwrap();
    assert_eq!(r.status, Status::Pass);
    let r = continuous_orthogonality(1, 1, PI / 3.0, 1.0, &cfg, 1e-8).unwrap();
    let printed = (1.0 / (2.0 * (PI / 3.0).sin())).powi(3);
    assert!((r.lhs().re - 2.0 * printed).abs() < 1e-10 * printed);
    let h = hahn_point(0, 0.7, 1.0).unwrap();
    assert_eq!(h.cartan, [1.0, 0.0]);
    assert!((h.via_hahn[0] - 1.0).abs() < 1e-15 && (h.via_pollaczek[0] - 1.0).abs() < 1e-15);
}

#[test]
fn analysis_values() {
    assert!(self_adjoint_residual(0).is_zero());
    assert!(self_adjoint_residual(1).is_zero());
    assert!(hypergeometric_residual(1, &p_yv_bound(1)).is_zero());
    assert_eq!(rodrigues_q(0)[0], MultiPoly::one());
    let z = contour_integral(0, Complex64::new(0.3, 0.0), 1.0, 0.5, 128).unwrap();
    assert!((z - cplx(1.0)).norm() < 1e-12);
    let z = contour_integral(1, Complex64::new(0.3, 0.0), 1.0, 0.5, 128).unwrap();
    // P_1(y, v) = v - y at hbar = 2
    assert!((z - cplx(0.7)).norm() < 1e-10);
    assert!(contour_integral(1, Complex64::new(0.0, 0.8), 1.0, 0.5, 128).is_err());
    let g = generating_series(0.0, 1.0, 3);
    assert!((g.coeffs[0] - cplx(1.0)).norm() < 1e-15);
    assert!((g.coeffs[1] - cplx(1.0)).norm() < 1e-14);
}

#[test]
fn normalize_strings() {
    assert_eq!(cmd_normalize("p*q").unwrap().summary, "q*p - i*hbar");
    assert_eq!(cmd_normalize("t[1,1;0]").unwrap().summary, "q*p - (1/2)*i*hbar");
    let direct = &(&(&OpPoly::q() * &OpPoly::p()) * &OpPoly::q()) * &OpPoly::p();
    assert_eq!(parse_operator("q*(p*q)*p").unwrap(), direct);
    assert!(matches!(cmd_normalize("q*(p"), Err(Error::Parse { .. })));
}
