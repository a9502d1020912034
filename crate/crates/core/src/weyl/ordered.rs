//! s-ordered products `t^(s)_{nm}`, change of ordering, and the W-infinity
//! structure constants.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::{MultiPoly, Var};
use crate::scalar::{binomial, factorial, ExactScalar};

use super::{BracketKind, OpPoly, Word};

/// `t^(s)_{nm}`: `n` factors of `q`, `m` factors of `p`, ordering parameter `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedProductSpec {
    pub n: u32,
    pub m: u32,
    pub s: MultiPoly,
}

impl OrderedProductSpec {
    pub fn new(n: u32, m: u32, s: MultiPoly) -> Self {
        OrderedProductSpec { n, m, s }
    }
}

/// Which of the two equivalent binomial sums to expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    /// `2^-n sum_j C(n,j) (1+s)^j (1-s)^(n-j) q^j p^m q^(n-j)`
    QOuter,
    /// `2^-m sum_k C(m,k) (1-s)^k (1+s)^(m-k) p^k q^n p^(m-k)`
    POuter,
}

fn big(n: num_bigint::BigInt) -> MultiPoly {
    MultiPoly::constant(ExactScalar::from(n))
}

pub fn ordered_product(spec: &OrderedProductSpec, form: Form) -> OpPoly {
    let one = MultiPoly::one();
    let plus = &one + &spec.s;
    let minus = &one - &spec.s;
    let (outer, inner, a, b, outer_is_q) = match form {
        Form::QOuter => (spec.n, spec.m, plus, minus, true),
        Form::POuter => (spec.m, spec.n, minus, plus, false),
    };
    let scale = MultiPoly::constant(ExactScalar::ratio(1, 1i64 << outer));
    let mut out = OpPoly::zero();
    for j in 0..=outer {
        let coeff = &(&big(binomial(outer, j)) * &a.pow(j)) * &b.pow(outer - j);
        let word = if outer_is_q {
            &(&OpPoly::word(j, 0) * &OpPoly::word(0, inner)) * &OpPoly::word(outer - j, 0)
        } else {
            &(&OpPoly::word(0, j) * &OpPoly::word(inner, 0)) * &OpPoly::word(0, outer - j)
        };
        out = &out + &word.scale(&(&coeff * &scale));
    }
    out
}

/// `x = (qp + pq)/2`.
pub fn x_hat() -> OpPoly {
    let qp = OpPoly::word(1, 1);
    let pq = &OpPoly::p() * &OpPoly::q();
    (&qp + &pq).scale(&MultiPoly::ratio(1, 2))
}

/// A linear combination `sum coeff * t^(s)_{nm}` over a shared ordering parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedSum {
    pub s: MultiPoly,
    pub terms: BTreeMap<(u32, u32), MultiPoly>,
}

impl OrderedSum {
    pub fn new(s: MultiPoly) -> Self {
        OrderedSum { s, terms: BTreeMap::new() }
    }

    pub fn add(&mut self, n: u32, m: u32, c: MultiPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((n, m)).or_default();
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&(n, m));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Expands every ordered product and normal-orders the sum.
    pub fn expand(&self) -> OpPoly {
        let mut out = OpPoly::zero();
        for (&(n, m), c) in &self.terms {
            let t = ordered_product(&OrderedProductSpec::new(n, m, self.s.clone()), Form::QOuter);
            out = &out + &t.scale(c);
        }
        out
    }

    pub fn map_coeffs<F: Fn(&MultiPoly) -> MultiPoly>(&self, f: F) -> Self {
        let mut out = OrderedSum::new(self.s.clone());
        for (&(n, m), c) in &self.terms {
            out.add(n, m, f(c));
        }
        out
    }

    /// Rewrites every term in the `s_new` basis.
    pub fn reorder(&self, s_new: &MultiPoly) -> OrderedSum {
        let mut out = OrderedSum::new(s_new.clone());
        for (&(n, m), c) in &self.terms {
            let r = reorder(&OrderedProductSpec::new(n, m, self.s.clone()), s_new);
            for (&(a, b), d) in &r.terms {
                out.add(a, b, c * d);
            }
        }
        out
    }
}

/// Expresses `t^(s)_{nm}` in the `s_new` basis:
/// `sum_k 2^-k C(n,k) C(m,k) k! [i*hbar*(s - s_new)]^k t^(s_new)_{n-k,m-k}`.
pub fn reorder(spec: &OrderedProductSpec, s_new: &MultiPoly) -> OrderedSum {
    let step = MultiPoly::i() * MultiPoly::var(Var::Hbar) * (&spec.s - s_new);
    let mut out = OrderedSum::new(s_new.clone());
    for k in 0..=spec.n.min(spec.m) {
        let c = big(binomial(spec.n, k) * binomial(spec.m, k) * factorial(k))
            * MultiPoly::ratio(1, 1i64 << k)
            * step.pow(k);
        out.add(spec.n - k, spec.m - k, c);
    }
    out
}

/// `[t_{kl}, t_{nm}]` (or the anticommutator) in the same `s` basis, from the
/// closed-form structure constants.
///
/// `sum_j i^j/j! sum_r C(j,r) f_{srj} a_{nmkl,rj} t_{n+k-j, m+l-j}` with
/// `f_{srj} = (s-)^r (-s+)^(j-r) -/+ (s-)^(j-r) (-s+)^r`, `s(+/-) = hbar(1 +/- s)/2`,
/// `a = n! m! k! l! / ((n+r-j)! (m-r)! (k-r)! (l+r-j)!)`. Terms with a negative
/// factorial argument are skipped.
pub fn w_structure_bracket(
    kl: (u32, u32),
    nm: (u32, u32),
    s: &MultiPoly,
    kind: BracketKind,
) -> OrderedSum {
    let (k, l) = kl;
    let (n, m) = nm;
    let hbar = MultiPoly::var(Var::Hbar);
    let half = MultiPoly::ratio(1, 2);
    let s_minus = &(&hbar * &(&MultiPoly::one() - s)) * &half;
    let neg_s_plus = -&(&(&hbar * &(&MultiPoly::one() + s)) * &half);
    let r_max = m.min(k);
    let j_max = (n + r_max).min(l + r_max);
    let numer = factorial(n) * factorial(m) * factorial(k) * factorial(l);

    let mut out = OrderedSum::new(s.clone());
    let mut i_pow = ExactScalar::one();
    for j in 0..=j_max {
        let mut inner = MultiPoly::zero();
        for r in 0..=r_max.min(j) {
            let args = [n as i64 + r as i64 - j as i64, m as i64 - r as i64, k as i64 - r as i64, l as i64 + r as i64 - j as i64];
            if args.iter().any(|&a| a < 0) {
                continue;
            }
            let denom = args.iter().fold(num_bigint::BigInt::from(1), |acc, &a| acc * factorial(a as u32));
            let a = ExactScalar::from(num_rational::BigRational::new(numer.clone(), denom));
            let first = &s_minus.pow(r) * &neg_s_plus.pow(j - r);
            let second = &s_minus.pow(j - r) * &neg_s_plus.pow(r);
            let f = match kind {
                BracketKind::Commutator => &first - &second,
                BracketKind::Anticommutator => &first + &second,
            };
            inner = &inner + &f.scale(&(a * ExactScalar::from(binomial(j, r))));
        }
        let weight = &i_pow / &ExactScalar::from(factorial(j));
        out.add(n + k - j, m + l - j, inner.scale(&weight));
        i_pow = &i_pow * &ExactScalar::i();
    }
    out
}

/// `prod_{j=1..n} [x + sign * c (2j - 1)]` as an operator, `c = i*hbar/2`.
pub fn cartan_product_form(n: u32, sign: i32) -> OpPoly {
    let x = x_hat();
    let c = MultiPoly::c();
    (1..=n).fold(OpPoly::identity(), |acc, j| {
        let shift = c.scale(&ExactScalar::int(sign.signum() as i64 * (2 * j as i64 - 1)));
        &acc * &(&x + &OpPoly::scalar(shift))
    })
}

/// Writes an element of the Cartan subalgebra as a polynomial in `x`.
///
/// Peels off the highest diagonal word `q^k p^k` against `x^k` until nothing is
/// left; any off-diagonal word means the element is not a polynomial in `x`.
pub fn to_x_polynomial(op: &OpPoly) -> Result<MultiPoly> {
    let mut rest = op.clone();
    let mut powers = vec![OpPoly::identity()];
    let x = x_hat();
    let mut out = MultiPoly::zero();
    while let Some((&w, c)) = rest.graded_terms().first().map(|(w, c)| (*w, (*c).clone())) {
        if w.q != w.p {
            return Err(Error::NotCartan(format!("word q^{} p^{}", w.q, w.p)));
        }
        while powers.len() <= w.q as usize {
            let next = &powers[powers.len() - 1] * &x;
            powers.push(next);
        }
        rest = &rest - &powers[w.q as usize].scale(&c);
        out = &out + &(&c * &MultiPoly::var(Var::X).pow(w.q));
    }
    Ok(out)
}

/// Replaces the c-number `x` by the operator `x = (qp+pq)/2`.
pub fn from_x_polynomial(p: &MultiPoly) -> OpPoly {
    let x = x_hat();
    let coeffs = p.coefficients_in(Var::X);
    let mut acc = OpPoly::zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * &x) + &OpPoly::scalar(c.clone());
    }
    acc
}

impl From<Word> for OpPoly {
    fn from(w: Word) -> Self {
        OpPoly::word(w.q, w.p)
    }
}
