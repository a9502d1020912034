//! Meixner identification and discrete orthogonality on the u-lattice at s = -3, hbar = 2.

use num_rational::BigRational;
use weyl_cartan::classical::{discrete_orthogonality, identify, meixner};
use weyl_cartan::{MultiPoly, Var};

fn main() {
    let m2 = meixner(2, &MultiPoly::var(Var::Gamma), &MultiPoly::var(Var::Mu)).unwrap();
    println!("mu^2 m_2(u; gamma, mu) = {}", m2.scaled);
    let ids = identify(6, &MultiPoly::var(Var::S)).unwrap();
    println!("P_n = Meixner for n <= 6: {}", ids.iter().all(|c| c.status == weyl_cartan::Status::Pass));

    let s = BigRational::from_integer((-3).into());
    let hbar = BigRational::from_integer(2.into());
    println!("\n n  m  sum                          expected");
    for n in 0..=3 {
        for m in n..=3 {
            let r = discrete_orthogonality(n, m, &s, &hbar, 400, 1e-10).unwrap();
            let exact = r.exact_sum.as_ref().map(|e| e.to_string()).unwrap_or_default();
            let want = r.exact_rhs.as_ref().map(|e| e.to_string()).unwrap_or_default();
            println!("{n:2} {m:2}  {exact:<28} {want}   {:?}", r.status);
        }
    }
}
