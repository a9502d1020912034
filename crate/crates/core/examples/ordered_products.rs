//! s-ordered products, change of ordering, and brackets from the structure constants.

use weyl_cartan::weyl::{ordered_product, reorder, w_structure_bracket, BracketKind, Form, OrderedProductSpec};
use weyl_cartan::{MultiPoly, Var};

fn main() {
    let s = MultiPoly::var(Var::S);
    for (n, m) in [(1, 1), (2, 1), (2, 2)] {
        let spec = OrderedProductSpec::new(n, m, s.clone());
        println!("t_{{{n}{m}}}(s) = {}", ordered_product(&spec, Form::QOuter));
    }

    // symmetric ordering rewritten in the standard (s = 1) basis
    let spec = OrderedProductSpec::new(2, 2, MultiPoly::zero());
    let sum = reorder(&spec, &MultiPoly::one());
    println!("\nt_{{22}}(0) in the s = 1 basis:");
    for ((a, b), c) in &sum.terms {
        println!("  ({c}) t_{{{a}{b}}}(1)");
    }

    println!("\nbrackets at s = 0:");
    let sym = MultiPoly::zero();
    for (kl, nm) in [((2, 0), (0, 2)), ((2, 1), (1, 2)), ((3, 0), (0, 3))] {
        for kind in [BracketKind::Commutator, BracketKind::Anticommutator] {
            let closed = w_structure_bracket(kl, nm, &sym, kind).expand();
            let a = ordered_product(&OrderedProductSpec::new(kl.0, kl.1, sym.clone()), Form::QOuter);
            let b = ordered_product(&OrderedProductSpec::new(nm.0, nm.1, sym.clone()), Form::QOuter);
            let direct = a.bracket(&b, kind);
            println!("  {kind:?} t{kl:?} t{nm:?} = {closed}   agrees with direct: {}", closed == direct);
        }
    }
}
