//! The Cartan polynomials `P_n(s, x)` by recursion, explicit sums and the operator route.

use weyl_cartan::cartan::{by_recursion, explicit, from_operator, text_table, to_u_form, ExplicitForm};
use weyl_cartan::{MultiPoly, Var};

fn main() {
    let n_max = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let table = by_recursion(n_max);
    print!("{}", text_table(&table));

    let s = MultiPoly::var(Var::S);
    for p in &table {
        let plus = explicit(p.n, ExplicitForm::Plus) == *p;
        let minus = explicit(p.n, ExplicitForm::Minus) == *p;
        let op = from_operator(p.n, &s) == *p;
        println!("n={}: explicit(+) {plus}, explicit(-) {minus}, operator route {op}", p.n);
    }

    println!("\nu form (x = 2c(u + 1/2)):");
    for p in table.iter().take(3) {
        println!("P_{} = {}", p.n, to_u_form(&p.poly));
    }
}
