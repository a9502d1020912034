//! The Heisenberg-Weyl algebra `[q, p] = i*hbar` and its s-ordered products.
//!
//! Elements are stored in normal order (all `q` left of all `p`) as a map from the
//! word `q^a p^b` to a [`MultiPoly`] coefficient in `hbar`, `s`, `sp`.

pub mod ordered;
pub mod parse;
pub mod rewrite;
pub mod suite;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::poly::{MultiPoly, Var};
use crate::scalar::{binomial, factorial, ExactScalar};

pub use ordered::{
    cartan_product_form, ordered_product, reorder, w_structure_bracket, x_hat, Form,
    OrderedProductSpec, OrderedSum,
};

/// The normal-ordered word `q^q p^p`; the empty word is the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub q: u32,
    pub p: u32,
}

impl Word {
    pub const IDENTITY: Word = Word { q: 0, p: 0 };

    pub fn new(q: u32, p: u32) -> Self {
        Word { q, p }
    }

    pub fn degree(&self) -> u32 {
        self.q + self.p
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketKind {
    Commutator,
    Anticommutator,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OpPoly {
    terms: BTreeMap<Word, MultiPoly>,
}

impl OpPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::scalar(MultiPoly::one())
    }

    pub fn scalar(c: MultiPoly) -> Self {
        Self::term(c, Word::IDENTITY)
    }

    pub fn term(c: MultiPoly, w: Word) -> Self {
        let mut o = Self::zero();
        o.add_term(w, c);
        o
    }

    pub fn word(q: u32, p: u32) -> Self {
        Self::term(MultiPoly::one(), Word::new(q, p))
    }

    pub fn q() -> Self {
        Self::word(1, 0)
    }

    pub fn p() -> Self {
        Self::word(0, 1)
    }

    pub fn add_term(&mut self, w: Word, c: MultiPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_default();
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &MultiPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: Word) -> MultiPoly {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of the identity if this element is a pure scalar.
    pub fn as_scalar(&self) -> Option<MultiPoly> {
        match self.terms.len() {
            0 => Some(MultiPoly::zero()),
            1 => self.terms.get(&Word::IDENTITY).cloned(),
            _ => None,
        }
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(Word::degree).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &MultiPoly) -> Self {
        let mut out = Self::zero();
        for (w, a) in &self.terms {
            out.add_term(*w, a * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(), |acc, _| &acc * self)
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs<F: Fn(&MultiPoly) -> MultiPoly>(&self, f: F) -> Self {
        let mut out = Self::zero();
        for (w, a) in &self.terms {
            out.add_term(*w, f(a));
        }
        out
    }

    pub fn substitute(&self, v: Var, val: &MultiPoly) -> Self {
        self.map_coeffs(|a| a.substitute(v, val))
    }

    /// Hermitian conjugate: reverses every word and conjugates coefficients, with
    /// formal symbols treated as real.
    pub fn dagger(&self) -> Self {
        let mut out = Self::zero();
        for (w, a) in &self.terms {
            let reversed = &Self::word(0, w.p) * &Self::word(w.q, 0);
            out = &out + &reversed.scale(&a.conj());
        }
        out
    }

    pub fn bracket(&self, o: &OpPoly, kind: BracketKind) -> Self {
        normal_order_bracket(self, o, kind)
    }

    /// Terms in descending graded order: total degree, then power of `q`.
    pub fn graded_terms(&self) -> Vec<(&Word, &MultiPoly)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then(b.0.q.cmp(&a.0.q)));
        v
    }
}

/// `p^b q^c` in normal order: `sum_k C(b,k) C(c,k) k! (-i*hbar)^k q^(c-k) p^(b-k)`.
fn swap_powers(b: u32, c: u32) -> Vec<(Word, MultiPoly)> {
    let minus_i_hbar = -&(MultiPoly::i() * MultiPoly::var(Var::Hbar));
    (0..=b.min(c))
        .map(|k| {
            let comb = binomial(b, k) * binomial(c, k) * factorial(k);
            let coeff = MultiPoly::constant(ExactScalar::from(comb)) * minus_i_hbar.pow(k);
            (Word::new(c - k, b - k), coeff)
        })
        .collect()
}

/// Product of two normal-ordered elements, returned in normal order.
pub fn normal_order_mul(a: &OpPoly, b: &OpPoly) -> OpPoly {
    let mut out = OpPoly::zero();
    for (wa, ca) in &a.terms {
        for (wb, cb) in &b.terms {
            let cab = ca * cb;
            for (mid, k) in swap_powers(wa.p, wb.q) {
                out.add_term(Word::new(wa.q + mid.q, mid.p + wb.p), &cab * &k);
            }
        }
    }
    out
}

pub fn normal_order_bracket(a: &OpPoly, b: &OpPoly, kind: BracketKind) -> OpPoly {
    let ab = a * b;
    let ba = b * a;
    match kind {
        BracketKind::Commutator => &ab - &ba,
        BracketKind::Anticommutator => &ab + &ba,
    }
}

impl<'a> Mul<&'a OpPoly> for &'a OpPoly {
    type Output = OpPoly;
    fn mul(self, o: &OpPoly) -> OpPoly {
        normal_order_mul(self, o)
    }
}

impl<'a> Add<&'a OpPoly> for &'a OpPoly {
    type Output = OpPoly;
    fn add(self, o: &OpPoly) -> OpPoly {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(*w, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a OpPoly> for &'a OpPoly {
    type Output = OpPoly;
    fn sub(self, o: &OpPoly) -> OpPoly {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(*w, -c);
        }
        out
    }
}

impl Neg for &OpPoly {
    type Output = OpPoly;
    fn neg(self) -> OpPoly {
        self.map_coeffs(|a| -a)
    }
}

fn word_text(w: &Word) -> String {
    let mut parts = Vec::new();
    match w.q {
        0 => {}
        1 => parts.push("q".to_string()),
        k => parts.push(format!("q^{k}")),
    }
    match w.p {
        0 => {}
        1 => parts.push("p".to_string()),
        k => parts.push(format!("p^{k}")),
    }
    parts.join("*")
}

/// Renders a scalar coefficient in the operator grammar; returns (negative, text).
fn coeff_text(c: &MultiPoly) -> (bool, String) {
    let terms = c.graded_terms();
    if terms.len() == 1 {
        let (m, a) = terms[0];
        let mono: Vec<String> = Var::ALL
            .iter()
            .filter_map(|&v| match m.exp(v) {
                0 => None,
                1 => Some(v.name().to_string()),
                k => Some(format!("{}^{}", v.name(), k)),
            })
            .collect();
        let (neg, mag) = scalar_grammar(a);
        if let Some(mag) = mag {
            let mut parts = Vec::new();
            if mag != "1" || mono.is_empty() {
                parts.push(mag);
            }
            parts.extend(mono);
            return (neg, parts.join("*"));
        }
    }
    (false, format!("({})", poly_grammar(c)))
}

fn rational_grammar(r: &num_rational::BigRational) -> String {
    if r.denom() == &num_bigint::BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("({}/{})", r.numer(), r.denom())
    }
}

/// A real or purely imaginary scalar as (negative, magnitude text); `None` for mixed.
fn scalar_grammar(a: &ExactScalar) -> (bool, Option<String>) {
    use num_traits::{One, Signed, Zero};
    if a.im.is_zero() {
        let neg = a.re.is_negative();
        let mag = a.re.abs();
        return (neg, Some(if mag.is_one() { "1".into() } else { rational_grammar(&mag) }));
    }
    if a.re.is_zero() {
        let neg = a.im.is_negative();
        let mag = a.im.abs();
        return (neg, Some(if mag.is_one() { "i".into() } else { format!("{}*i", rational_grammar(&mag)) }));
    }
    (false, None)
}

fn poly_grammar(c: &MultiPoly) -> String {
    let mut out = String::new();
    for (idx, (m, a)) in c.graded_terms().into_iter().enumerate() {
        let single = MultiPoly::monomial(a.clone(), *m);
        let (neg, text) = match scalar_grammar(a) {
            (_, Some(_)) => coeff_text(&single),
            (_, None) => {
                let (neg_im, im_text) = scalar_grammar(&ExactScalar::imag(a.im.clone()));
                let (neg_re, re_text) = scalar_grammar(&ExactScalar::real(a.re.clone()));
                let inner = format!(
                    "{}{} {} {}",
                    if neg_re { "-" } else { "" },
                    re_text.unwrap_or_default(),
                    if neg_im { "-" } else { "+" },
                    im_text.unwrap_or_default()
                );
                if *m == crate::poly::Monomial::one() {
                    (false, format!("({inner})"))
                } else {
                    let (_, mono_text) = coeff_text(&MultiPoly::monomial(ExactScalar::one(), *m));
                    let mono_text = mono_text.strip_prefix("1*").unwrap_or(&mono_text).to_string();
                    (false, format!("({inner})*{mono_text}"))
                }
            }
        };
        let text = text.strip_prefix("1*").map(str::to_string).unwrap_or(text);
        push_signed(&mut out, idx == 0, neg, &text);
    }
    out
}

fn push_signed(out: &mut String, first: bool, neg: bool, text: &str) {
    match (first, neg) {
        (true, false) => out.push_str(text),
        (true, true) => {
            out.push('-');
            out.push_str(text);
        }
        (false, false) => {
            out.push_str(" + ");
            out.push_str(text);
        }
        (false, true) => {
            out.push_str(" - ");
            out.push_str(text);
        }
    }
}

/// Canonical rendering in the operator grammar, e.g. `q*p - (1/2)*i*hbar`.
impl fmt::Display for OpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (idx, (w, c)) in self.graded_terms().into_iter().enumerate() {
            let (neg, ctext) = coeff_text(c);
            let wtext = word_text(w);
            let text = match (ctext.as_str(), wtext.is_empty()) {
                (_, true) => ctext.clone(),
                ("1", false) => wtext,
                (_, false) => format!("{ctext}*{wtext}"),
            };
            push_signed(&mut out, idx == 0, neg, &text);
        }
        f.write_str(&out)
    }
}
