//! Difference operators on polynomials and the su(1,1) ladder realization.

use std::ops::{Add, Mul, Neg, Sub};

use crate::cartan::{by_recursion, to_u_form, CartanPoly};
use crate::error::{Error, Result};
use crate::lattice::{mesh, x_in_u};
use crate::poly::{MultiPoly, Var};
use crate::report::{Check, VerificationReport};
use crate::scalar::ExactScalar;

/// A linear operator on polynomials, kept as an expression tree.
#[derive(Clone, Debug, PartialEq)]
pub enum DiffOp {
    Identity,
    /// Multiplication by a variable.
    MulVar(Var),
    /// Multiplication by a fixed polynomial.
    MulConst(MultiPoly),
    /// `f(var) -> f(var + offset)`.
    Shift { var: Var, offset: MultiPoly },
    /// Exact division by `c * var^k`.
    ExactDiv { c: ExactScalar, var: Var, k: u16 },
    Sum(Vec<DiffOp>),
    /// Applied right to left.
    Compose(Vec<DiffOp>),
    Scale(ExactScalar, Box<DiffOp>),
}

impl DiffOp {
    pub fn apply(&self, f: &MultiPoly) -> Result<MultiPoly> {
        Ok(match self {
            DiffOp::Identity => f.clone(),
            DiffOp::MulVar(v) => &MultiPoly::var(*v) * f,
            DiffOp::MulConst(p) => p * f,
            DiffOp::Shift { var, offset } => f.shift(*var, offset),
            DiffOp::ExactDiv { c, var, k } => f.div_monomial(c, *var, *k)?,
            DiffOp::Sum(ops) => {
                let mut acc = MultiPoly::zero();
                for op in ops {
                    acc = &acc + &op.apply(f)?;
                }
                acc
            }
            DiffOp::Compose(ops) => {
                let mut acc = f.clone();
                for op in ops.iter().rev() {
                    acc = op.apply(&acc)?;
                }
                acc
            }
            DiffOp::Scale(c, op) => op.apply(f)?.scale(c),
        })
    }

    pub fn var(v: Var) -> Self {
        DiffOp::MulVar(v)
    }

    pub fn constant(p: MultiPoly) -> Self {
        DiffOp::MulConst(p)
    }

    pub fn shift(var: Var, offset: MultiPoly) -> Self {
        DiffOp::Shift { var, offset }
    }

    pub fn scale(self, c: ExactScalar) -> Self {
        DiffOp::Scale(c, Box::new(self))
    }

    /// `[f(x+h) - f(x-h)] / 2h` for a mesh `h = a * hbar`.
    pub fn central_diff_with(a: &ExactScalar) -> Self {
        let h = MultiPoly::var(Var::Hbar).scale(a);
        let num = DiffOp::shift(Var::X, h.clone()) - DiffOp::shift(Var::X, -&h);
        DiffOp::Compose(vec![DiffOp::ExactDiv { c: a * &ExactScalar::int(2), var: Var::Hbar, k: 1 }, num])
    }

    /// `[f(x+h) - 2f(x) + f(x-h)] / h^2` for `h = a * hbar`.
    pub fn central_second_diff_with(a: &ExactScalar) -> Self {
        let h = MultiPoly::var(Var::Hbar).scale(a);
        let num = DiffOp::shift(Var::X, h.clone()) + DiffOp::shift(Var::X, -&h) - DiffOp::Identity.scale(ExactScalar::int(2));
        DiffOp::Compose(vec![DiffOp::ExactDiv { c: a * a, var: Var::Hbar, k: 2 }, num])
    }

    /// `[f(x+h) + f(x-h)] / 2` for `h = a * hbar`.
    pub fn central_mean_with(a: &ExactScalar) -> Self {
        let h = MultiPoly::var(Var::Hbar).scale(a);
        (DiffOp::shift(Var::X, h.clone()) + DiffOp::shift(Var::X, -&h)).scale(ExactScalar::ratio(1, 2))
    }

    /// `D_h` with `h = 2c = i*hbar`.
    pub fn d_h() -> Self {
        Self::central_diff_with(&ExactScalar::i())
    }

    /// `D_h^2` with `h = 2c`.
    pub fn d2_h() -> Self {
        Self::central_second_diff_with(&ExactScalar::i())
    }

    /// `Delta_h`, the central mean, with `h = 2c`.
    pub fn mean_h() -> Self {
        Self::central_mean_with(&ExactScalar::i())
    }

    /// `f(u+1) - f(u)`.
    pub fn forward() -> Self {
        DiffOp::shift(Var::U, MultiPoly::one()) - DiffOp::Identity
    }

    /// `f(u) - f(u-1)`.
    pub fn backward() -> Self {
        DiffOp::Identity - DiffOp::shift(Var::U, MultiPoly::int(-1))
    }

    /// `a b - b a`.
    pub fn commutator(a: &DiffOp, b: &DiffOp) -> Self {
        a.clone() * b.clone() - b.clone() * a.clone()
    }
}

impl Add for DiffOp {
    type Output = DiffOp;
    fn add(self, o: DiffOp) -> DiffOp {
        match self {
            DiffOp::Sum(mut v) => {
                v.push(o);
                DiffOp::Sum(v)
            }
            a => DiffOp::Sum(vec![a, o]),
        }
    }
}

impl Neg for DiffOp {
    type Output = DiffOp;
    fn neg(self) -> DiffOp {
        self.scale(ExactScalar::int(-1))
    }
}

impl Sub for DiffOp {
    type Output = DiffOp;
    fn sub(self, o: DiffOp) -> DiffOp {
        self + (-o)
    }
}

/// Composition, `(a * b) f = a(b(f))`.
impl Mul for DiffOp {
    type Output = DiffOp;
    fn mul(self, o: DiffOp) -> DiffOp {
        DiffOp::Compose(vec![self, o])
    }
}

#[derive(Clone, Debug)]
pub struct LadderTriple {
    pub j_minus: DiffOp,
    pub j_plus: DiffOp,
    pub j_zero: DiffOp,
    pub s: MultiPoly,
}

impl LadderTriple {
    /// `J- = x D^2 + D`,
    /// `J+ = c^2 (1+s^2) J- + 2cs (c^2 D^2 + x D) + (x + cs)`,
    /// `J0 = c(c + s x) D^2 + (x + cs) D + 1/2`, all on the `h = 2c` lattice.
    pub fn new(s: MultiPoly) -> Self {
        let c = MultiPoly::c();
        let x = || DiffOp::var(Var::X);
        let d = DiffOp::d_h;
        let d2 = DiffOp::d2_h;
        let cs = &c * &s;
        let j_minus = x() * d2() + d();
        let one_plus_s2 = &MultiPoly::one() + &s.pow(2);
        let j_plus = DiffOp::constant(&c.pow(2) * &one_plus_s2) * j_minus.clone()
            + DiffOp::constant(cs.scale(&ExactScalar::int(2))) * (DiffOp::constant(c.pow(2)) * d2() + x() * d())
            + x()
            + DiffOp::constant(cs.clone());
        let j_zero = DiffOp::constant(&c * &(&c + &(&s * &MultiPoly::var(Var::X)))) * d2()
            + (x() + DiffOp::constant(cs)) * d()
            + DiffOp::constant(MultiPoly::ratio(1, 2));
        LadderTriple { j_minus, j_plus, j_zero, s }
    }

    /// `-J- J+ + J0^2 + J0`.
    pub fn casimir(&self) -> DiffOp {
        -(self.j_minus.clone() * self.j_plus.clone())
            + self.j_zero.clone() * self.j_zero.clone()
            + self.j_zero.clone()
    }
}

fn at_s(table: &[CartanPoly], s: &MultiPoly) -> Vec<MultiPoly> {
    table.iter().map(|p| p.poly.substitute(Var::S, s)).collect()
}

fn holds(op: &DiffOp, f: &MultiPoly, want: &MultiPoly) -> bool {
    op.apply(f).map(|r| r == *want).unwrap_or(false)
}

/// `J- P_n = n^2 P_{n-1}`, `J+ P_n = P_{n+1}`, `J0 P_n = (n + 1/2) P_n`.
pub fn ladder_action(triple: &LadderTriple, n_max: u32) -> VerificationReport {
    let mut report = VerificationReport::new("su11");
    let table = at_s(&by_recursion(n_max + 1), &triple.s);
    report.timed("su11.ladder", |out| {
        for n in 0..=n_max as usize {
            let params = format!("n={n}");
            let p = &table[n];
            let lower = if n == 0 { MultiPoly::zero() } else { table[n - 1].scale(&ExactScalar::int((n * n) as i64)) };
            out.push(Check::exact("su11.ladder.lower", &params, holds(&triple.j_minus, p, &lower)));
            out.push(Check::exact("su11.ladder.raise", &params, holds(&triple.j_plus, p, &table[n + 1])));
            let weight = p.scale(&ExactScalar::ratio(2 * n as i64 + 1, 2));
            out.push(Check::exact("su11.ladder.weight", &params, holds(&triple.j_zero, p, &weight)));
        }
    });
    report
}

/// `[J+, J-] = -2 J0` and `[J0, J+-] = +-J+-` on `x^k`, `k <= degree`.
pub fn su11_relations(triple: &LadderTriple, degree: u32) -> VerificationReport {
    let mut report = VerificationReport::new("su11");
    let pm = DiffOp::commutator(&triple.j_plus, &triple.j_minus);
    let zp = DiffOp::commutator(&triple.j_zero, &triple.j_plus);
    let zm = DiffOp::commutator(&triple.j_zero, &triple.j_minus);
    report.timed("su11.relations", |out| {
        for k in 0..=degree {
            let f = MultiPoly::var(Var::X).pow(k);
            let params = format!("k={k}");
            let want = triple.j_zero.apply(&f).map(|r| r.scale(&ExactScalar::int(-2)));
            out.push(Check::exact("su11.bracket.plus_minus", &params, want.map(|w| holds(&pm, &f, &w)).unwrap_or(false)));
            let want = triple.j_plus.apply(&f);
            out.push(Check::exact("su11.bracket.zero_plus", &params, want.map(|w| holds(&zp, &f, &w)).unwrap_or(false)));
            let want = triple.j_minus.apply(&f).map(|r| -&r);
            out.push(Check::exact("su11.bracket.zero_minus", &params, want.map(|w| holds(&zm, &f, &w)).unwrap_or(false)));
        }
    });
    report
}

/// `(-J- J+ + J0^2 + J0) P_n = -1/4 P_n`.
pub fn casimir(triple: &LadderTriple, n_max: u32) -> VerificationReport {
    let mut report = VerificationReport::new("su11");
    let table = at_s(&by_recursion(n_max), &triple.s);
    let cas = triple.casimir();
    report.timed("su11.casimir", |out| {
        for (n, p) in table.iter().enumerate() {
            let want = p.scale(&ExactScalar::ratio(-1, 4));
            out.push(Check::exact("su11.casimir", format!("n={n}"), holds(&cas, p, &want)));
        }
    });
    report
}

/// `(1-s) u Delta Nabla P - [2u + (1+s)] Delta P + 2n P` for `P = P_n(s, u)`.
pub fn u_difference_equation(n: u32, s: &MultiPoly) -> Result<MultiPoly> {
    if (s - &MultiPoly::one()).is_zero() {
        return Err(Error::Singular("the u-lattice equation has a pole at s = 1".into()));
    }
    let p = to_u_form(&by_recursion(n)[n as usize].poly.substitute(Var::S, s));
    let u = MultiPoly::var(Var::U);
    let fwd = DiffOp::forward();
    let second = (fwd.clone() * DiffOp::backward()).apply(&p)?;
    let first = fwd.apply(&p)?;
    let one_minus_s = &MultiPoly::one() - s;
    let a = &(&one_minus_s * &u) * &second;
    let b = &(&u.scale(&ExactScalar::int(2)) + &(&MultiPoly::one() + s)) * &first;
    Ok(&(&a - &b) + &p.scale(&ExactScalar::int(2 * n as i64)))
}

/// The `u`-lattice shift relations, directly and as images of the `x`-lattice
/// relations under `x = 2c(u + 1/2)`.
pub fn lattice_consistency(n_max: u32) -> Vec<Check> {
    let table = by_recursion(n_max);
    let c = MultiPoly::c();
    let s = MultiPoly::var(Var::S);
    let u = MultiPoly::var(Var::U);
    let two_c = mesh();
    let mut out = Vec::new();
    for n in 0..=n_max as usize {
        let params = format!("n={n}");
        let px = &table[n].poly;
        let p = to_u_form(px);
        let pm = if n == 0 { MultiPoly::zero() } else { to_u_form(&table[n - 1].poly) };
        let n2 = ExactScalar::int((n * n) as i64);
        let up = &(&u + &MultiPoly::one()) * &p.shift(Var::U, &MultiPoly::one());
        let rhs = &(&(&u + &MultiPoly::int(n as i64 + 1)) * &p) + &(&(&c * &(&MultiPoly::one() - &s)) * &pm).scale(&n2);
        out.push(Check::exact("su11.u_shift_plus", &params, up == rhs));
        let dn = &u * &p.shift(Var::U, &MultiPoly::int(-1));
        let rhs = &(&(&u - &MultiPoly::int(n as i64)) * &p) + &(&(&c * &(&MultiPoly::one() + &s)) * &pm).scale(&n2);
        out.push(Check::exact("su11.u_shift_minus", &params, dn == rhs));

        let x = MultiPoly::var(Var::X);
        let plus_x = &(&x + &c) * &px.shift(Var::X, &two_c);
        let minus_x = &(&x - &c) * &px.shift(Var::X, &-&two_c);
        let image = |f: &MultiPoly| f.substitute(Var::X, &x_in_u());
        let ok = image(&(&plus_x - &minus_x)) == (&two_c * &(&up - &dn))
            && image(&(&plus_x + &minus_x)) == (&two_c * &(&up + &dn));
        out.push(Check::exact("su11.lattice_image", &params, ok));
    }
    out
}

/// The conclusion's operator triple `{x, D_h, Delta_h}` on `x^k`, `k <= degree`.
///
/// On the `h = 2c` lattice: `[x, D_h] = -Delta_h`, `[x, Delta_h] = hbar^2 D_h`,
/// `[D_h, Delta_h] = 0`, and at `hbar = 0` `D_h -> d/dx`, `Delta_h -> 1`. With the
/// real mesh `h = hbar` the middle relation picks up the opposite sign.
pub fn e2_contraction_check(degree: u32) -> VerificationReport {
    let mut report = VerificationReport::new("su11");
    let x = DiffOp::var(Var::X);
    let hbar2 = MultiPoly::var(Var::Hbar).pow(2);
    report.timed("su11.e2", |out| {
        let (d, m) = (DiffOp::d_h(), DiffOp::mean_h());
        let real_mesh = ExactScalar::one();
        let (d_r, m_r) = (DiffOp::central_diff_with(&real_mesh), DiffOp::central_mean_with(&real_mesh));
        let mut literal_reading_fails = false;
        for k in 0..=degree {
            let f = MultiPoly::var(Var::X).pow(k);
            let params = format!("k={k}");
            let ap = |op: &DiffOp| op.apply(&f).expect("exact");
            let xd = ap(&DiffOp::commutator(&x, &d));
            out.push(Check::exact("su11.e2.x_d", &params, xd == -&ap(&m)));
            let xm = ap(&DiffOp::commutator(&x, &m));
            out.push(Check::exact("su11.e2.x_mean", &params, xm == &hbar2 * &ap(&d)));
            out.push(Check::exact("su11.e2.d_mean", &params, ap(&DiffOp::commutator(&d, &m)).is_zero()));
            let zero = MultiPoly::zero();
            let df = f.derivative(Var::X);
            out.push(Check::exact("su11.e2.limit_d", &params, ap(&d).substitute(Var::Hbar, &zero) == df));
            out.push(Check::exact("su11.e2.limit_mean", &params, ap(&m).substitute(Var::Hbar, &zero) == f));

            let xm_r = ap(&DiffOp::commutator(&x, &m_r));
            out.push(Check::exact("su11.e2.mesh_hbar_general", &params, xm_r == -&(&hbar2 * &ap(&d_r))));
            if xm_r != &hbar2 * &ap(&d_r) {
                literal_reading_fails = true;
            }
        }
        out.push(
            Check::exact("su11.e2.mesh_hbar", format!("k<={degree}"), degree == 0 || literal_reading_fails)
                .with_note("[x, Delta_h] = hbar^2 D_h is expected to fail for the real mesh h = hbar"),
        );
    });
    report
}

/// Every su(1,1) check at symbolic `s`.
pub fn verify_suite(n_max: u32, degree: u32) -> VerificationReport {
    let triple = LadderTriple::new(MultiPoly::var(Var::S));
    let mut report = VerificationReport::new("su11");
    report.extend(ladder_action(&triple, n_max));
    report.extend(su11_relations(&triple, degree));
    report.extend(casimir(&triple, n_max));
    report.timed("su11.u_equation", |out| {
        for n in 0..=n_max.min(8) {
            let ok = u_difference_equation(n, &MultiPoly::var(Var::S)).map(|r| r.is_zero()).unwrap_or(false);
            out.push(Check::exact("su11.u_equation", format!("n={n}"), ok));
        }
        out.extend(lattice_consistency(n_max.min(8)));
    });
    report.extend(e2_contraction_check(degree.min(10)));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> MultiPoly {
        MultiPoly::var(Var::X)
    }

    #[test]
    fn operator_examples() {
        assert_eq!(DiffOp::d_h().apply(&x().pow(2)).unwrap(), x().scale(&ExactScalar::int(2)));
        assert!(DiffOp::d2_h().apply(&x()).unwrap().is_zero());
        let u2 = MultiPoly::var(Var::U).pow(2);
        assert_eq!((DiffOp::forward() * DiffOp::backward()).apply(&u2).unwrap(), MultiPoly::int(2));
    }

    #[test]
    fn j_minus_matches_lowering_operator() {
        let t = LadderTriple::new(MultiPoly::var(Var::S));
        let p = by_recursion(3);
        for pn in &p[1..=3] {
            let lhs = t.j_minus.apply(&pn.poly).unwrap();
            let want = &(&x() * &crate::lattice::central_second_diff(&pn.poly)) + &crate::lattice::central_diff(&pn.poly);
            assert_eq!(lhs, want);
        }
    }

    #[test]
    fn ladder_small() {
        let t = LadderTriple::new(MultiPoly::var(Var::S));
        assert!(t.j_minus.apply(&MultiPoly::one()).unwrap().is_zero());
        assert_eq!(t.j_zero.apply(&MultiPoly::one()).unwrap(), MultiPoly::ratio(1, 2));
        let comm = DiffOp::commutator(&t.j_plus, &t.j_minus).apply(&MultiPoly::one()).unwrap();
        assert_eq!(comm, MultiPoly::int(-1));
        assert!(ladder_action(&t, 3).all_certified());
        assert!(casimir(&t, 3).all_certified());
    }

    #[test]
    fn u_equation_small() {
        let s = MultiPoly::var(Var::S);
        for n in 0..=3 {
            assert!(u_difference_equation(n, &s).unwrap().is_zero());
        }
        assert!(u_difference_equation(2, &MultiPoly::one()).is_err());
    }

    #[test]
    fn e2_small() {
        let r = e2_contraction_check(4);
        assert!(r.all_certified(), "{:?}", r.failures().collect::<Vec<_>>());
        let xd = DiffOp::commutator(&DiffOp::var(Var::X), &DiffOp::d_h()).apply(&x()).unwrap();
        assert_eq!(xd, -&x());
        let lim = DiffOp::d_h().apply(&x().pow(2)).unwrap().substitute(Var::Hbar, &MultiPoly::zero());
        assert_eq!(lim, x().scale(&ExactScalar::int(2)));
    }
}
