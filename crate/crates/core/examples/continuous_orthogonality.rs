//! Orthogonality on the line u = -1/2 + i x/hbar at s = i cot(phi).

use std::f64::consts::PI;

use weyl_cartan::classical::{continuous_orthogonality, normalization_resolution, pollaczek_bridge};
use weyl_cartan::quad::QuadConfig;

fn main() {
    let cfg = QuadConfig::default();
    let hbar = 1.0;
    for phi in [PI / 2.0, PI / 3.0] {
        let res = normalization_resolution(phi, hbar, &cfg).unwrap();
        println!("phi={phi:.4}: n=0 integral {:.12}, printed {:.12}, ratio {:.12}", res.quadrature_n0, res.printed_n0, res.measured_ratio);
        for (n, m) in [(0, 0), (1, 1), (2, 2), (0, 2), (1, 3), (3, 3)] {
            let r = continuous_orthogonality(n, m, phi, hbar, &cfg, 1e-8).unwrap();
            println!("  <P_{n}, P_{m}> = {:+.10e}  expected {:+.10e}  rel err {:.1e}", r.lhs_re, r.rhs_re, r.rel_err);
        }
        let (cartan, mp) = pollaczek_bridge(3, phi, hbar, 0.7).unwrap();
        println!("  P_3 vs scaled Meixner-Pollaczek at t=0.7: {cartan:.10} / {mp:.10}");
    }
}
