//! Multivariate polynomials over [`ExactScalar`] in a small fixed variable universe.
//!
//! Exponent vectors are dense over [`Var::ALL`]. Terms live in a `BTreeMap`, zero
//! coefficients are never stored, so structural equality is polynomial equality.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::ExactScalar;

pub type FloatComplex = Complex64;

pub const NVARS: usize = 9;

/// Formal symbols. `Hbar` is Planck's constant kept symbolic; `SPrime` is a second,
/// independent ordering parameter; `Gamma`/`Mu` are Meixner parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    U,
    Y,
    V,
    S,
    SPrime,
    Hbar,
    Gamma,
    Mu,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::X,
        Var::U,
        Var::Y,
        Var::V,
        Var::S,
        Var::SPrime,
        Var::Hbar,
        Var::Gamma,
        Var::Mu,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::U => "u",
            Var::Y => "y",
            Var::V => "v",
            Var::S => "s",
            Var::SPrime => "sp",
            Var::Hbar => "hbar",
            Var::Gamma => "gamma",
            Var::Mu => "mu",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub [u16; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var, k: u16) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = k;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    fn mul(&self, o: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(o.0.iter()) {
            *a += *b;
        }
        Monomial(e)
    }

    fn render(&self) -> String {
        let mut parts = Vec::new();
        for v in Var::ALL {
            match self.exp(v) {
                0 => {}
                1 => parts.push(v.name().to_string()),
                k => parts.push(format!("{}^{}", v.name(), k)),
            }
        }
        parts.join("*")
    }
}

/// Multivariate polynomial with Gaussian-rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, ExactScalar>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(ExactScalar::one())
    }

    pub fn constant(c: ExactScalar) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn int(n: i64) -> Self {
        Self::constant(ExactScalar::int(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::constant(ExactScalar::ratio(n, d))
    }

    /// The imaginary unit as a constant polynomial.
    pub fn i() -> Self {
        Self::constant(ExactScalar::i())
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(ExactScalar::one(), Monomial::var(v, 1))
    }

    pub fn monomial(c: ExactScalar, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// `c = i*hbar/2`, the commutator constant of the Cartan polynomials.
    pub fn c() -> Self {
        Self::monomial(ExactScalar::imag(crate::scalar::rat(1, 2)), Monomial::var(Var::Hbar, 1))
    }

    pub fn add_term(&mut self, m: Monomial, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> ExactScalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The constant coefficient if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<ExactScalar> {
        match self.terms.len() {
            0 => Some(ExactScalar::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .iter()
            .copied()
            .filter(|&v| self.terms.keys().any(|m| m.exp(v) > 0))
            .collect()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v) as u32).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Complex conjugation of the coefficients; formal symbols are treated as real.
    pub fn conj(&self) -> Self {
        MultiPoly { terms: self.terms.iter().map(|(m, a)| (*m, a.conj())).collect() }
    }

    /// Splits `p = sum_k c_k * v^k` and returns the `c_k` indexed by `k`.
    pub fn coefficients_in(&self, v: Var) -> Vec<MultiPoly> {
        let mut out = vec![MultiPoly::zero(); self.degree_in(v) as usize + 1];
        for (m, a) in &self.terms {
            let k = m.exp(v) as usize;
            let mut rest = *m;
            rest.0[v.index()] = 0;
            out[k].add_term(rest, a.clone());
        }
        out
    }

    pub fn derivative(&self, v: Var) -> Self {
        let mut out = Self::zero();
        for (m, a) in &self.terms {
            let k = m.exp(v);
            if k == 0 {
                continue;
            }
            let mut dm = *m;
            dm.0[v.index()] -= 1;
            out.add_term(dm, a * &ExactScalar::int(k as i64));
        }
        out
    }

    pub fn nth_derivative(&self, v: Var, k: u32) -> Self {
        (0..k).fold(self.clone(), |p, _| p.derivative(v))
    }

    /// Exact composition `p(v := val)`, evaluated by Horner's scheme in `val`.
    pub fn substitute(&self, v: Var, val: &MultiPoly) -> Self {
        let coeffs = self.coefficients_in(v);
        let mut acc = Self::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * val) + c;
        }
        acc
    }

    /// Simultaneous substitution of several variables.
    pub fn substitute_many(&self, subs: &[(Var, MultiPoly)]) -> Self {
        let mut out = Self::zero();
        let mut cache: HashMap<(Var, u16), MultiPoly> = HashMap::new();
        for (m, a) in &self.terms {
            let mut term = MultiPoly::constant(a.clone());
            let mut rest = *m;
            for (v, val) in subs {
                let k = m.exp(*v);
                rest.0[v.index()] = 0;
                if k > 0 {
                    let pw = cache.entry((*v, k)).or_insert_with(|| val.pow(k as u32));
                    term = &term * &*pw;
                }
            }
            out = &out + &(&term * &MultiPoly::monomial(ExactScalar::one(), rest));
        }
        out
    }

    /// `p(v := v + offset)`.
    pub fn shift(&self, v: Var, offset: &MultiPoly) -> Self {
        self.substitute(v, &(&MultiPoly::var(v) + offset))
    }

    /// `den^degree * p(v := num/den)`, a polynomial whenever `deg_v p <= degree`.
    pub fn substitute_fraction(&self, v: Var, num: &MultiPoly, den: &MultiPoly, degree: u32) -> Result<Self> {
        let coeffs = self.coefficients_in(v);
        if coeffs.len() as u32 > degree + 1 {
            return Err(Error::InvalidParameter(format!(
                "degree in {v} exceeds homogenization degree {degree}"
            )));
        }
        let mut out = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            let k = k as u32;
            out = &out + &(&(c * &num.pow(k)) * &den.pow(degree - k));
        }
        Ok(out)
    }

    /// Exact division by `c * v^k`; fails if some term has a lower power of `v`.
    pub fn div_monomial(&self, c: &ExactScalar, v: Var, k: u16) -> Result<Self> {
        let inv = c.inv().ok_or_else(|| Error::NotDivisible("zero".into()))?;
        let mut out = Self::zero();
        for (m, a) in &self.terms {
            if m.exp(v) < k {
                return Err(Error::NotDivisible(format!("{c}*{v}^{k}")));
            }
            let mut dm = *m;
            dm.0[v.index()] -= k;
            out.add_term(dm, a * &inv);
        }
        Ok(out)
    }

    pub fn eval_exact(&self, bindings: &[(Var, ExactScalar)]) -> Result<ExactScalar> {
        let subs: Vec<(Var, MultiPoly)> =
            bindings.iter().map(|(v, x)| (*v, MultiPoly::constant(x.clone()))).collect();
        let r = self.substitute_many(&subs);
        r.as_constant().ok_or_else(|| Error::UnboundVariable(r.variables()[0]))
    }

    /// Floating evaluation with cached powers per variable.
    pub fn eval_float(&self, bindings: &[(Var, FloatComplex)]) -> Result<FloatComplex> {
        let mut vals: [Option<FloatComplex>; NVARS] = [None; NVARS];
        for (v, x) in bindings {
            vals[v.index()] = Some(*x);
        }
        for v in self.variables() {
            if vals[v.index()].is_none() {
                return Err(Error::UnboundVariable(v));
            }
        }
        let mut powers: Vec<Vec<FloatComplex>> = Vec::with_capacity(NVARS);
        for v in Var::ALL {
            let d = self.degree_in(v) as usize;
            let x = vals[v.index()].unwrap_or_default();
            let mut p = Vec::with_capacity(d + 1);
            p.push(FloatComplex::new(1.0, 0.0));
            for k in 1..=d {
                p.push(p[k - 1] * x);
            }
            powers.push(p);
        }
        let mut acc = FloatComplex::zero();
        for (m, a) in &self.terms {
            let mut t = a.to_complex();
            for v in Var::ALL {
                let k = m.exp(v) as usize;
                if k > 0 {
                    t *= powers[v.index()][k];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Terms in graded-lexicographic order: higher total degree first, then by
    /// exponent vector in variable order.
    pub fn graded_terms(&self) -> Vec<(&Monomial, &ExactScalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| b.0.cmp(a.0)));
        v
    }

    /// Imaginary parts all vanish.
    pub fn is_real(&self) -> bool {
        self.terms.values().all(ExactScalar::is_real)
    }
}

fn render_term(m: &Monomial, a: &ExactScalar) -> String {
    let mono = m.render();
    if mono.is_empty() {
        return a.to_string();
    }
    if a.is_one() {
        return mono;
    }
    if (-a).is_one() {
        return format!("-{mono}");
    }
    if !a.re.is_zero() && !a.im.is_zero() {
        format!("({a})*{mono}")
    } else {
        format!("{a}*{mono}")
    }
}

/// Canonical text: graded-lex terms joined by ` + ` / ` - `.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, a)) in self.graded_terms().into_iter().enumerate() {
            let t = render_term(m, a);
            if idx == 0 {
                f.write_str(&t)?;
            } else if let Some(rest) = t.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {t}")?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, a) in &o.terms {
            out.add_term(*m, a.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, a) in &o.terms {
            out.add_term(*m, -a);
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, a) in &self.terms {
            for (mb, b) in &o.terms {
                out.add_term(ma.mul(mb), a * b);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, a)| (*m, -a)).collect() }
    }
}

macro_rules! forward_poly {
    ($tr:ident, $m:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, o: MultiPoly) -> MultiPoly {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, o: &MultiPoly) -> MultiPoly {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $m(self, o: MultiPoly) -> MultiPoly {
                self.$m(&o)
            }
        }
    };
}
forward_poly!(Add, add);
forward_poly!(Sub, sub);
forward_poly!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl From<ExactScalar> for MultiPoly {
    fn from(c: ExactScalar) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn x() -> MultiPoly {
        MultiPoly::var(Var::X)
    }
    fn s() -> MultiPoly {
        MultiPoly::var(Var::S)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!((x() + s()) * (x() - s()), x() * x() - s() * s());
        assert_eq!(&x() + &MultiPoly::zero(), x());
    }

    #[test]
    fn square_of_p1_by_hand() {
        let p1 = x() + MultiPoly::c() * s();
        let h = MultiPoly::var(Var::Hbar);
        let expect = x().pow(2) + MultiPoly::i() * &h * s() * x()
            - MultiPoly::ratio(1, 4) * h.pow(2) * s().pow(2);
        assert_eq!(&p1 * &p1, expect);
    }

    #[test]
    fn substitution_examples() {
        let p1 = x() + MultiPoly::c() * s();
        assert_eq!(p1.substitute(Var::S, &MultiPoly::zero()), x());
        let iy = MultiPoly::i() * MultiPoly::var(Var::Y);
        let h = MultiPoly::var(Var::Hbar);
        assert_eq!(
            p1.substitute(Var::S, &iy),
            x() - MultiPoly::ratio(1, 2) * h * MultiPoly::var(Var::Y)
        );
        let u = MultiPoly::var(Var::U);
        assert_eq!(
            x().pow(2).substitute(Var::X, &(&u + &MultiPoly::one())),
            u.pow(2) + MultiPoly::int(2) * &u + MultiPoly::one()
        );
    }

    #[test]
    fn shift_examples() {
        let two_c = MultiPoly::int(2) * MultiPoly::c();
        let c = MultiPoly::c();
        assert_eq!(
            x().pow(2).shift(Var::X, &two_c),
            x().pow(2) + MultiPoly::int(4) * &c * x() + MultiPoly::int(4) * c.pow(2)
        );
        let u = MultiPoly::var(Var::U);
        assert_eq!(
            u.pow(3).shift(Var::U, &MultiPoly::int(-1)),
            u.pow(3) - MultiPoly::int(3) * u.pow(2) + MultiPoly::int(3) * &u - MultiPoly::one()
        );
    }

    #[test]
    fn eval_examples() {
        let p1 = x() + MultiPoly::c() * s();
        let one = FloatComplex::new(1.0, 0.0);
        let zero = FloatComplex::new(0.0, 0.0);
        let r = p1.eval_float(&[(Var::X, one), (Var::S, zero), (Var::Hbar, one)]).unwrap();
        assert_eq!(r, one);
        match p1.eval_float(&[(Var::X, one)]) {
            Err(Error::UnboundVariable(v)) => assert!(v == Var::S || v == Var::Hbar),
            other => panic!("expected unbound variable error, got {other:?}"),
        }
    }

    #[test]
    fn fraction_substitution_and_division() {
        // (s-1)^1 * mu|_{mu=(s+1)/(s-1)} = s+1
        let mu = MultiPoly::var(Var::Mu);
        let num = s() + MultiPoly::one();
        let den = s() - MultiPoly::one();
        assert_eq!(mu.substitute_fraction(Var::Mu, &num, &den, 1).unwrap(), num);
        let h = MultiPoly::var(Var::Hbar);
        let p = MultiPoly::int(6) * h.pow(2) * x();
        let q = p.div_monomial(&ExactScalar::int(3), Var::Hbar, 1).unwrap();
        assert_eq!(q, MultiPoly::int(2) * h * x());
        assert!(x().div_monomial(&ExactScalar::one(), Var::Hbar, 1).is_err());
    }

    #[test]
    fn rendering() {
        let p = x().pow(2) + MultiPoly::c() * s() - MultiPoly::ratio(3, 2);
        assert_eq!(p.to_string(), "x^2 + 1/2*i*s*hbar - 3/2");
        let q = MultiPoly::constant(ExactScalar::new(rat(1, 2), rat(1, 1))) * x();
        assert_eq!(q.to_string(), "(1/2+i)*x");
        assert_eq!(MultiPoly::zero().to_string(), "0");
    }
}
