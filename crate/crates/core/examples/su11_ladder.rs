//! su(1,1) ladder operators acting on the Cartan polynomials.

use weyl_cartan::cartan::by_recursion;
use weyl_cartan::su11::{self, LadderTriple};
use weyl_cartan::{MultiPoly, Var};

fn main() {
    let triple = LadderTriple::new(MultiPoly::var(Var::S));
    let table = by_recursion(4);
    for p in &table[..4] {
        let up = triple.j_plus.apply(&p.poly).expect("polynomial argument");
        let weight = triple.j_zero.apply(&p.poly).expect("polynomial argument");
        println!("n={}: J+ P_n = P_(n+1): {}, J0 P_n = (n+1/2) P_n: {}", p.n, up == table[p.n as usize + 1].poly,
            weight == p.poly.scale(&weyl_cartan::ExactScalar::ratio(2 * p.n as i64 + 1, 2)));
    }
    println!("Casimir on P_2: {}", triple.casimir().apply(&table[2].poly).unwrap());

    let report = su11::verify_suite(6, 8);
    println!("\n{}", report.summary_line());
}
