//! The two-variable polynomials `P_n(s, x)` attached to the Cartan elements
//! `t^(s)_{nn}`, built by four routes and checked against their identities.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::lattice::{central_diff, central_second_diff, x_in_u, x_shift};
use crate::poly::{Monomial, MultiPoly, Var};
use crate::report::{Check, VerificationReport};
use crate::scalar::{binomial, factorial, ExactScalar};
use crate::weyl::ordered::{from_x_polynomial, reorder, to_x_polynomial};
use crate::weyl::{ordered_product, Form, OpPoly, OrderedProductSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanPoly {
    pub n: u32,
    /// Polynomial in `s`, `x`, `hbar`.
    pub poly: MultiPoly,
}

impl fmt::Display for CartanPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

impl CartanPoly {
    /// `P_n` at a fixed numeric ordering parameter.
    pub fn substitute_s(&self, val: i64) -> CartanPoly {
        CartanPoly { n: self.n, poly: self.poly.substitute(Var::S, &MultiPoly::int(val)) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExplicitForm {
    /// `sum_k C(n,k)^2 k! [-c(1-s)]^k prod_{j<=n-k} [x + c(2j-1)]`
    Plus,
    /// `sum_k C(n,k)^2 k! [c(1+s)]^k prod_{j<=n-k} [x - c(2j-1)]`
    Minus,
}

fn big(n: num_bigint::BigInt) -> MultiPoly {
    MultiPoly::constant(ExactScalar::from(n))
}

fn x() -> MultiPoly {
    MultiPoly::var(Var::X)
}

fn s() -> MultiPoly {
    MultiPoly::var(Var::S)
}

/// `prod_{j=1..n} [x + sign*c(2j-1)]`.
pub fn lattice_product(n: u32, sign: i64) -> MultiPoly {
    let c = MultiPoly::c();
    (1..=n).fold(MultiPoly::one(), |acc, j| {
        &acc * &(&x() + &c.scale(&ExactScalar::int(sign * (2 * j as i64 - 1))))
    })
}

pub fn explicit(n: u32, form: ExplicitForm) -> CartanPoly {
    let c = MultiPoly::c();
    let (step, sign) = match form {
        ExplicitForm::Plus => (-&(&c * &(&MultiPoly::one() - &s())), 1),
        ExplicitForm::Minus => (&c * &(&MultiPoly::one() + &s()), -1),
    };
    let mut poly = MultiPoly::zero();
    for k in 0..=n {
        let w = binomial(n, k).pow(2) * factorial(k);
        poly = &poly + &(&(&big(w) * &step.pow(k)) * &lattice_product(n - k, sign));
    }
    CartanPoly { n, poly }
}

/// `P_0 .. P_{n_max}` from `P_{n+1} = [x + c(2n+1)s] P_n + c^2 (1-s^2) n^2 P_{n-1}`.
pub fn by_recursion(n_max: u32) -> Vec<CartanPoly> {
    let c = MultiPoly::c();
    let c2 = c.pow(2);
    let one_minus_s2 = &MultiPoly::one() - &s().pow(2);
    let mut out = vec![MultiPoly::one()];
    if n_max >= 1 {
        out.push(&x() + &(&c * &s()));
    }
    for n in 1..n_max {
        let k = n as usize;
        let a = &x() + &(&c * &s()).scale(&ExactScalar::int(2 * n as i64 + 1));
        let b = (&c2 * &one_minus_s2).scale(&ExactScalar::int((n * n) as i64));
        out.push(&(&a * &out[k]) + &(&b * &out[k - 1]));
    }
    out.into_iter().enumerate().map(|(n, poly)| CartanPoly { n: n as u32, poly }).collect()
}

/// The operator route: write `t^(s)_{nn}` in the `s' = 1` basis, replace each
/// `t^(1)_{kk}` by its product form in `x`, and read off the c-number polynomial.
pub fn from_operator(n: u32, s_val: &MultiPoly) -> CartanPoly {
    let one = MultiPoly::one();
    let expansion = reorder(&OrderedProductSpec::new(n, n, s_val.clone()), &one);
    let mut poly = MultiPoly::zero();
    for (&(k, _), coeff) in &expansion.terms {
        poly = &poly + &(coeff * &lattice_product(k, 1));
    }
    CartanPoly { n, poly }
}

/// Decomposes `t^(s)_{nn}` into powers of the operator `x` directly.
pub fn operator_x_polynomial(n: u32, s_val: &MultiPoly) -> Result<MultiPoly> {
    to_x_polynomial(&ordered_product(&OrderedProductSpec::new(n, n, s_val.clone()), Form::QOuter))
}

/// `P_n(s, x)` as an operator, `x -> (qp+pq)/2`.
pub fn as_operator(p: &CartanPoly) -> OpPoly {
    from_x_polynomial(&p.poly)
}

pub fn d_ds(p: &MultiPoly, k: u32) -> MultiPoly {
    p.nth_derivative(Var::S, k)
}

/// `c^k [n!/(n-k)!]^2 P_{n-k}`; zero for `k > n`.
pub fn d_ds_closed_form(table: &[CartanPoly], n: u32, k: u32) -> MultiPoly {
    if k > n {
        return MultiPoly::zero();
    }
    let ratio = factorial(n) / factorial(n - k);
    &(&MultiPoly::c().pow(k) * &big(ratio.pow(2))) * &table[(n - k) as usize].poly
}

/// `c * {(1-s^2) d_s^2 + [x/c + (2n-1)s] d_s - n^2} P_n`.
pub fn ode_residual(p: &CartanPoly) -> MultiPoly {
    let c = MultiPoly::c();
    let d1 = d_ds(&p.poly, 1);
    let d2 = d_ds(&p.poly, 2);
    let a = &(&c * &(&MultiPoly::one() - &s().pow(2))) * &d2;
    let b = &(&x() + &(&c * &s()).scale(&ExactScalar::int(2 * p.n as i64 - 1))) * &d1;
    let n2 = (&c * &p.poly).scale(&ExactScalar::int((p.n * p.n) as i64));
    &(&a + &b) - &n2
}

/// `P(-s, -x)`.
pub fn parity_image(p: &MultiPoly) -> MultiPoly {
    p.substitute_many(&[(Var::S, -&s()), (Var::X, -&x())])
}

/// `P_n(s, u)` with `x = 2c(u + 1/2)`.
pub fn to_u_form(p: &MultiPoly) -> MultiPoly {
    p.substitute(Var::X, &x_in_u())
}

/// `P_n(y, v)`: `s = iy`, `x = -i c v`.
pub fn to_yv_form(p: &MultiPoly) -> MultiPoly {
    let s_sub = &MultiPoly::i() * &MultiPoly::var(Var::Y);
    let x_sub = -&(&(&MultiPoly::i() * &MultiPoly::c()) * &MultiPoly::var(Var::V));
    p.substitute_many(&[(Var::S, s_sub), (Var::X, x_sub)])
}

fn prev(table: &[CartanPoly], n: u32) -> MultiPoly {
    if n == 0 {
        MultiPoly::zero()
    } else {
        table[n as usize - 1].poly.clone()
    }
}

/// The `x`-difference relations for `n <= n_max`.
pub fn difference_relations(table: &[CartanPoly], n_max: u32) -> Vec<Check> {
    let c = MultiPoly::c();
    let c2 = c.pow(2);
    let mut out = Vec::new();
    for n in 0..=n_max {
        let p = &table[n as usize].poly;
        let pm = prev(table, n);
        let nn = ExactScalar::int((n * n) as i64);
        let params = format!("n={n}");
        let plus = &(&x() + &c) * &x_shift(p, 1);
        let minus = &(&x() - &c) * &x_shift(p, -1);

        // (x +/- c) P(s, x +/- 2c) = [x +/- c(2n+1)] P + 2c^2 n^2 (1 -/+ s) P_{n-1}
        for (sign, lhs) in [(1i64, &plus), (-1, &minus)] {
            let a = &x() + &c.scale(&ExactScalar::int(sign * (2 * n as i64 + 1)));
            let b = &(&c2.scale(&(&nn * &ExactScalar::int(2))) * &(&MultiPoly::one() - &s().scale(&ExactScalar::int(sign)))) * &pm;
            let rhs = &(&a * p) + &b;
            let tag = if sign > 0 { "cartan.shift_plus" } else { "cartan.shift_minus" };
            out.push(Check::exact(tag, &params, *lhs == rhs));
        }

        // the same at s = +1 and s = -1, where the last term drops
        for sign in [1i64, -1] {
            let ps = p.substitute(Var::S, &MultiPoly::int(sign));
            let shifted = &(&x() + &c.scale(&ExactScalar::int(sign))) * &x_shift(&ps, sign);
            let rhs = &(&x() + &c.scale(&ExactScalar::int(sign * (2 * n as i64 + 1)))) * &ps;
            out.push(Check::exact("cartan.shift_extreme_order", format!("{params},s={sign}"), shifted == rhs));
        }

        // difference and sum of the two shift relations
        let diff_rhs = &(&c * p).scale(&ExactScalar::int(4 * n as i64 + 2))
            - &(&(&c2 * &s()) * &pm).scale(&(&nn * &ExactScalar::int(4)));
        out.push(Check::exact("cartan.shift_difference", &params, &plus - &minus == diff_rhs));
        let sum_rhs = &(&x() * p).scale(&ExactScalar::int(2)) + &(&c2 * &pm).scale(&(&nn * &ExactScalar::int(4)));
        out.push(Check::exact("cartan.shift_sum", &params, &plus + &minus == sum_rhs));

        // (c^2 D^2 + x D - n) P = -s c n^2 P_{n-1};  (x D^2 + D) P = n^2 P_{n-1}
        let d1 = central_diff(p);
        let d2 = central_second_diff(p);
        let lhs = &(&(&c2 * &d2) + &(&x() * &d1)) - &p.scale(&ExactScalar::int(n as i64));
        let rhs = -&(&(&s() * &c) * &pm).scale(&nn);
        out.push(Check::exact("cartan.central_first", &params, lhs == rhs));
        let lhs = &(&x() * &d2) + &d1;
        out.push(Check::exact("cartan.central_lowering", &params, lhs == pm.scale(&nn)));
    }
    out
}

/// Taylor expansion around `s'`: `P_n(s) = sum_k C(n,k)^2 k! c^k (s-s')^k P_{n-k}(s')`,
/// compared with the reordering route.
pub fn taylor_holds(table: &[CartanPoly], n: u32) -> bool {
    let sp = MultiPoly::var(Var::SPrime);
    let at_sp = |k: u32| table[k as usize].poly.substitute(Var::S, &sp);
    let delta = &s() - &sp;
    let mut taylor = MultiPoly::zero();
    for k in 0..=n {
        let dk = d_ds(&table[n as usize].poly, k).substitute(Var::S, &sp);
        let term = (&dk * &delta.pow(k)).scale(&(ExactScalar::one() / ExactScalar::from(factorial(k))));
        taylor = &taylor + &term;
    }
    let mut closed = MultiPoly::zero();
    for k in 0..=n {
        let w = binomial(n, k).pow(2) * factorial(k);
        closed = &closed + &(&(&big(w) * &(&MultiPoly::c() * &delta).pow(k)) * &at_sp(n - k));
    }
    let expansion = reorder(&OrderedProductSpec::new(n, n, s()), &sp);
    let mut via_reorder = MultiPoly::zero();
    for (&(k, _), coeff) in &expansion.terms {
        via_reorder = &via_reorder + &(coeff * &at_sp(k));
    }
    let p = &table[n as usize].poly;
    taylor == *p && closed == *p && via_reorder == *p
}

/// Real coefficients after `s = iy` and a rational `hbar`.
pub fn reality_holds(p: &MultiPoly, hbar: &ExactScalar) -> bool {
    p.substitute_many(&[
        (Var::S, &MultiPoly::i() * &MultiPoly::var(Var::Y)),
        (Var::Hbar, MultiPoly::constant(hbar.clone())),
    ])
    .is_real()
}

/// Runs every identity check for `n <= n_max`.
pub fn verify_suite(n_max: u32) -> VerificationReport {
    let mut report = VerificationReport::new("cartan");
    let table = by_recursion(n_max + 1);
    report.timed("cartan.routes", |out| {
        for n in 0..=n_max {
            let params = format!("n={n}");
            let r = &table[n as usize].poly;
            let plus = explicit(n, ExplicitForm::Plus).poly;
            let minus = explicit(n, ExplicitForm::Minus).poly;
            out.push(Check::exact("cartan.explicit_forms", &params, plus == minus));
            out.push(Check::exact("cartan.recursion", &params, *r == plus));
            out.push(Check::exact("cartan.operator_route", &params, from_operator(n, &s()).poly == *r));
        }
    });
    report.timed("cartan.operator_identity", |out| {
        for n in 0..=n_max.min(6) {
            let holds = operator_x_polynomial(n, &s()).map(|p| p == table[n as usize].poly).unwrap_or(false);
            out.push(Check::exact("cartan.operator_identity", format!("n={n}"), holds));
        }
    });
    report.timed("cartan.structure", |out| {
        for n in 0..=n_max {
            let params = format!("n={n}");
            let p = &table[n as usize];
            let sign = ExactScalar::int(if n % 2 == 0 { 1 } else { -1 });
            out.push(Check::exact("cartan.parity", &params, parity_image(&p.poly) == p.poly.scale(&sign)));
            out.push(Check::exact("cartan.ode", &params, ode_residual(p).is_zero()));
            let monic = p.poly.degree_in(Var::X) == n
                && p.poly.nth_derivative(Var::X, n) == big(factorial(n));
            out.push(Check::exact("cartan.monic", &params, monic));
            out.push(Check::exact("cartan.reality", &params, reality_holds(&p.poly, &ExactScalar::ratio(3, 7))));
            let ok = (0..=n + 1).all(|k| d_ds(&p.poly, k) == d_ds_closed_form(&table, n, k));
            out.push(Check::exact("cartan.s_derivative", &params, ok));
        }
    });
    report.timed("cartan.taylor", |out| {
        for n in 0..=n_max.min(8) {
            out.push(Check::exact("cartan.taylor", format!("n={n}"), taylor_holds(&table, n)));
        }
    });
    report.timed("cartan.differences", |out| out.extend(difference_relations(&table, n_max)));
    report
}

#[derive(Clone, Debug, Serialize)]
pub struct CoefficientEntry {
    pub s_power: u16,
    pub x_power: u16,
    pub hbar_power: u16,
    pub coeff: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub n: u32,
    pub coefficients: Vec<CoefficientEntry>,
    pub rendered: String,
    /// `P_n(s, 0)`
    pub at_x_zero: String,
    /// `P_n(0, 0)`
    pub at_origin: String,
}

pub fn table_row(p: &CartanPoly) -> TableRow {
    let coefficients = p
        .poly
        .graded_terms()
        .into_iter()
        .map(|(m, c): (&Monomial, &ExactScalar)| CoefficientEntry {
            s_power: m.exp(Var::S),
            x_power: m.exp(Var::X),
            hbar_power: m.exp(Var::Hbar),
            coeff: c.to_string(),
        })
        .collect();
    let at_x0 = p.poly.substitute(Var::X, &MultiPoly::zero());
    TableRow {
        n: p.n,
        coefficients,
        rendered: p.poly.to_string(),
        at_origin: at_x0.substitute(Var::S, &MultiPoly::zero()).to_string(),
        at_x_zero: at_x0.to_string(),
    }
}

/// One canonical rendering per line, `P_n = ...`.
pub fn text_table(table: &[CartanPoly]) -> String {
    table.iter().map(|p| format!("P_{} = {}\n", p.n, p.poly)).collect()
}
