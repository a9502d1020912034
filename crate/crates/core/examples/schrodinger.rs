//! Residual of the Schrodinger form -Psi'' + V Psi = 0 on a symmetric grid.

use weyl_cartan::analysis::{potential_numerator, schrodinger_polynomial_residual, schrodinger_residual, SchrodingerCase};

fn main() {
    println!("4 sigma^2 V(y) = -({})  for n = 1", potential_numerator(1));
    for n in 0..=5 {
        let exact = schrodinger_polynomial_residual(n).is_zero();
        let worst = [0.0, 1.0, 2.0]
            .iter()
            .map(|&v| schrodinger_residual(&SchrodingerCase::symmetric(n, v, 8.0, 161).unwrap()).relative)
            .fold(0.0, f64::max);
        println!("n={n}: exact residual vanishes {exact}, worst relative grid residual {worst:.2e}");
    }
    let out = schrodinger_residual(&SchrodingerCase::symmetric(2, 0.0, 8.0, 9).unwrap());
    for r in &out.rows {
        println!("  y={:+.1}  V={:+.6}  psi={:+.6}  res={:.1e}", r.y, r.potential, r.psi, r.residual);
    }
}
