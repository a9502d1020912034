//! Oracle checks for the Weyl-algebra layer.

use crate::poly::{MultiPoly, Var};
use crate::report::{Check, VerificationReport};
use crate::scalar::ExactScalar;

use super::rewrite::{normalize_word, Letter, Strategy};
use super::{
    cartan_product_form, ordered_product, reorder, w_structure_bracket, x_hat, BracketKind, Form, OpPoly,
    OrderedProductSpec,
};

/// Numeric ordering parameters used alongside the symbolic one.
pub fn sample_s_values() -> Vec<(&'static str, MultiPoly)> {
    vec![
        ("0", MultiPoly::zero()),
        ("1", MultiPoly::one()),
        ("-1", MultiPoly::int(-1)),
        ("i", MultiPoly::i()),
        ("1/2", MultiPoly::ratio(1, 2)),
    ]
}

fn s_sym() -> MultiPoly {
    MultiPoly::var(Var::S)
}

fn t(n: u32, m: u32, s: &MultiPoly) -> OpPoly {
    ordered_product(&OrderedProductSpec::new(n, m, s.clone()), Form::QOuter)
}

fn kind_name(kind: BracketKind) -> &'static str {
    match kind {
        BracketKind::Commutator => "commutator",
        BracketKind::Anticommutator => "anticommutator",
    }
}

/// Closed-form bracket expanded back to operators against the direct bracket,
/// symbolic `s` first and then each sample value substituted afterwards.
pub fn structure_constant_checks(index_max: u32) -> Vec<Check> {
    let mut out = Vec::new();
    let s = s_sym();
    let samples = sample_s_values();
    for kind in [BracketKind::Commutator, BracketKind::Anticommutator] {
        for k in 0..=index_max {
            for l in 0..=index_max {
                for n in 0..=index_max {
                    for m in 0..=index_max {
                        let closed = w_structure_bracket((k, l), (n, m), &s, kind).expand();
                        let direct = t(k, l, &s).bracket(&t(n, m, &s), kind);
                        let base = format!("{},k={k},l={l},n={n},m={m}", kind_name(kind));
                        out.push(Check::exact("weyl.structure_constants", format!("{base},s=sym"), closed == direct));
                        for (name, val) in &samples {
                            let closed_at = closed.substitute(Var::S, val);
                            let direct_at = t(k, l, val).bracket(&t(n, m, val), kind);
                            out.push(Check::exact(
                                "weyl.structure_constants",
                                format!("{base},s={name}"),
                                closed_at == direct_at,
                            ));
                        }
                    }
                }
            }
        }
    }
    out
}

/// The bracket with the opposite overall sign, compared at symbolic `s`.
/// Passes when that reading disagrees with the direct bracket; the note
/// records how many quadruples it gets wrong.
pub fn opposite_sign_check(index_max: u32) -> Check {
    let s = s_sym();
    let mut total = 0;
    let mut wrong = 0;
    for kind in [BracketKind::Commutator, BracketKind::Anticommutator] {
        for k in 0..=index_max {
            for l in 0..=index_max {
                for n in 0..=index_max {
                    for m in 0..=index_max {
                        let negated = -&w_structure_bracket((k, l), (n, m), &s, kind).expand();
                        let direct = t(k, l, &s).bracket(&t(n, m, &s), kind);
                        total += 1;
                        if negated != direct {
                            wrong += 1;
                        }
                    }
                }
            }
        }
    }
    Check::exact("weyl.structure_constants.opposite_sign", format!("indices<={index_max}"), wrong > 0)
        .with_note(format!("opposite sign mismatches {wrong} of {total} brackets"))
}

fn letters(word: &[Letter]) -> OpPoly {
    word.iter().fold(OpPoly::identity(), |acc, l| match l {
        Letter::Q => &acc * &OpPoly::q(),
        Letter::P => &acc * &OpPoly::p(),
    })
}

pub fn verify_suite(index_max: u32) -> VerificationReport {
    let mut report = VerificationReport::new("weyl");
    let s = s_sym();
    let sp = MultiPoly::var(Var::SPrime);
    let i_hbar = MultiPoly::i() * MultiPoly::var(Var::Hbar);
    report.timed("weyl.basic", |out| {
        let qp = &OpPoly::q() * &OpPoly::p();
        let pq = &OpPoly::p() * &OpPoly::q();
        out.push(Check::exact("weyl.canonical_relation", "", &qp - &pq == OpPoly::scalar(i_hbar.clone())));
        for k in 0..=6u32 {
            let pk = OpPoly::word(0, k);
            let lhs = x_hat().bracket(&pk, BracketKind::Commutator);
            let rhs = pk.scale(&i_hbar.scale(&ExactScalar::int(k as i64)));
            out.push(Check::exact("weyl.x_p_power", format!("k={k}"), lhs == rhs));
        }
        // two rewrite strategies against the closed-form product on every word of length <= 8
        for len in 0..=8usize {
            let ok = (0..(1u32 << len)).all(|bits| {
                let word: Vec<Letter> = (0..len).map(|b| if bits >> b & 1 == 1 { Letter::P } else { Letter::Q }).collect();
                let (a, _) = normalize_word(&word, Strategy::Leftmost);
                let (b, _) = normalize_word(&word, Strategy::Rightmost);
                a == b && a == letters(&word)
            });
            out.push(Check::exact("weyl.rewrite_confluence", format!("len={len}"), ok));
        }
    });
    report.timed("weyl.ordering", |out| {
        for n in 0..=5 {
            for m in 0..=5 {
                let spec = OrderedProductSpec::new(n, m, s.clone());
                let params = format!("n={n},m={m}");
                let a = ordered_product(&spec, Form::QOuter);
                out.push(Check::exact("weyl.ordered_forms", &params, a == ordered_product(&spec, Form::POuter)));
                if n <= 3 && m <= 3 {
                    let std = &OpPoly::word(n, 0) * &OpPoly::word(0, m);
                    let anti = &OpPoly::word(0, m) * &OpPoly::word(n, 0);
                    out.push(Check::exact("weyl.ordered_limits", &params, t(n, m, &MultiPoly::one()) == std && t(n, m, &MultiPoly::int(-1)) == anti));
                    out.push(Check::exact("weyl.dagger_involution", &params, a.dagger().dagger() == a));
                    out.push(Check::exact("weyl.dagger_reverses_order", &params, a.dagger() == t(n, m, &-&s)));
                }
                if n <= 4 && m <= 4 {
                    let r = reorder(&spec, &sp);
                    out.push(Check::exact("weyl.reorder", &params, r.expand() == a));
                    let back = r.reorder(&s);
                    let single = back.terms.len() == 1 && back.terms.get(&(n, m)) == Some(&MultiPoly::one());
                    out.push(Check::exact("weyl.reorder_round_trip", &params, single));
                }
            }
        }
    });
    report.timed("weyl.hermiticity", |out| {
        let hermitian_points = [("0", MultiPoly::zero()), ("i", MultiPoly::i()), ("2i", MultiPoly::i().scale(&ExactScalar::int(2)))];
        for n in 0..=3 {
            for m in 0..=3 {
                let params = format!("n={n},m={m}");
                for (name, val) in &hermitian_points {
                    let a = t(n, m, val);
                    out.push(Check::exact("weyl.hermitian", format!("{params},s={name}"), a.dagger() == a));
                }
            }
        }
        out.push(hermiticity_boundary_check());
    });
    report.timed("weyl.structure_constants", |out| {
        out.extend(structure_constant_checks(index_max));
        out.push(opposite_sign_check(index_max.min(2)));
    });
    report.timed("weyl.cartan", |out| {
        for n in 0..=3 {
            for k in 0..=3 {
                let c = t(n, n, &s).bracket(&t(k, k, &sp), BracketKind::Commutator);
                out.push(Check::exact("weyl.cartan_commute", format!("n={n},k={k}"), c.is_zero()));
            }
        }
        for n in 0..=4 {
            let ok = cartan_product_form(n, 1) == t(n, n, &MultiPoly::one())
                && cartan_product_form(n, -1) == t(n, n, &MultiPoly::int(-1));
            out.push(Check::exact("weyl.cartan_product_form", format!("n={n}"), ok));
        }
        for n in 0..=3 {
            for m in 0..=3 {
                out.push(Check::exact("weyl.x_anticommutator", format!("n={n},m={m}"), x_anticommutator_holds(n, m)));
            }
        }
    });
    report
}

/// At `s = 1` the ordered products with both indices positive are not
/// Hermitian; at `s = i` every one is. Passes when both behaviours are seen.
pub fn hermiticity_boundary_check() -> Check {
    let mut fails_at_one = true;
    let mut holds_at_i = true;
    for n in 1..=3 {
        for m in 1..=3 {
            let a = t(n, m, &MultiPoly::one());
            fails_at_one &= a.dagger() != a;
            let b = t(n, m, &MultiPoly::i());
            holds_at_i &= b.dagger() == b;
        }
    }
    Check::exact("weyl.hermitian_boundary", "s=1 vs s=i,n,m<=3", fails_at_one && holds_at_i)
        .with_note(format!("s=1 non-Hermitian: {fails_at_one}; s=i Hermitian: {holds_at_i}"))
}

/// `[x, t_nm]_+ = 2[t_{n+1,m+1} - c s (n+m+1) t_nm - c^2 n m (1 - s^2) t_{n-1,m-1}]`.
pub fn x_anticommutator_holds(n: u32, m: u32) -> bool {
    let s = s_sym();
    let c = MultiPoly::c();
    let lhs = x_hat().bracket(&t(n, m, &s), BracketKind::Anticommutator);
    let mut rhs = &t(n + 1, m + 1, &s) - &t(n, m, &s).scale(&(&(&c * &s) * &MultiPoly::int((n + m + 1) as i64)));
    if n > 0 && m > 0 {
        let k = &(&c.pow(2) * &MultiPoly::int((n * m) as i64)) * &(&MultiPoly::one() - &s.pow(2));
        rhs = &rhs - &t(n - 1, m - 1, &s).scale(&k);
    }
    lhs == rhs.scale(&MultiPoly::int(2))
}
