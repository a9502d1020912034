//! Word-level rewriting `p q -> q p - i*hbar`.
//!
//! Each rewrite either removes one inversion (the swapped word) or shortens the
//! word by two letters, so the inversion count strictly decreases and the process
//! terminates. [`super::normal_order_mul`] uses the closed form of the result; this
//! module is the reference engine it is checked against.

use std::collections::BTreeMap;

use crate::poly::{MultiPoly, Var};

use super::{OpPoly, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Q,
    P,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Swap the leftmost `p q` pair.
    Leftmost,
    /// Swap the rightmost `p q` pair.
    Rightmost,
}

pub fn inversions(word: &[Letter]) -> usize {
    let mut ps = 0;
    let mut inv = 0;
    for l in word {
        match l {
            Letter::P => ps += 1,
            Letter::Q => inv += ps,
        }
    }
    inv
}

fn find_pq(word: &[Letter], strategy: Strategy) -> Option<usize> {
    let mut idx = (0..word.len().saturating_sub(1)).filter(|&i| word[i] == Letter::P && word[i + 1] == Letter::Q);
    match strategy {
        Strategy::Leftmost => idx.next(),
        Strategy::Rightmost => idx.next_back(),
    }
}

/// Normal-orders a single word; returns the result and the number of rewrites.
pub fn normalize_word(word: &[Letter], strategy: Strategy) -> (OpPoly, usize) {
    let minus_i_hbar = -&(MultiPoly::i() * MultiPoly::var(Var::Hbar));
    let mut pending: BTreeMap<Vec<Letter>, MultiPoly> = BTreeMap::new();
    pending.insert(word.to_vec(), MultiPoly::one());
    let mut out = OpPoly::zero();
    let mut steps = 0;
    while let Some((w, c)) = pending.pop_first() {
        match find_pq(&w, strategy) {
            None => {
                let q = w.iter().filter(|&&l| l == Letter::Q).count() as u32;
                out.add_term(Word::new(q, w.len() as u32 - q), c);
            }
            Some(i) => {
                steps += 1;
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                let mut shorter = w.clone();
                shorter.drain(i..i + 2);
                let e = pending.entry(swapped).or_default();
                *e = &*e + &c;
                let e = pending.entry(shorter).or_default();
                *e = &*e + &(&c * &minus_i_hbar);
            }
        }
    }
    (out, steps)
}

pub fn parse_word(s: &str) -> Vec<Letter> {
    s.chars()
        .filter_map(|ch| match ch {
            'q' => Some(Letter::Q),
            'p' => Some(Letter::P),
            _ => None,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_swap() {
        let (r, steps) = normalize_word(&parse_word("pq"), Strategy::Leftmost);
        assert_eq!(steps, 1);
        assert_eq!(r.to_string(), "q*p - i*hbar");
    }

    #[test]
    fn strategies_agree_with_closed_form() {
        for w in ["qqpq", "ppqq", "pqpq", "pppqqq", "qpqpqp"] {
            let letters = parse_word(w);
            let (a, _) = normalize_word(&letters, Strategy::Leftmost);
            let (b, _) = normalize_word(&letters, Strategy::Rightmost);
            let direct = letters.iter().fold(OpPoly::identity(), |acc, l| match l {
                Letter::Q => &acc * &OpPoly::q(),
                Letter::P => &acc * &OpPoly::p(),
            });
            assert_eq!(a, b, "{w}");
            assert_eq!(a, direct, "{w}");
        }
    }

    #[test]
    fn inversion_count() {
        assert_eq!(inversions(&parse_word("qqpp")), 0);
        assert_eq!(inversions(&parse_word("ppqq")), 4);
    }
}
