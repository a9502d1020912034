//! Rodrigues formula and its Cauchy-integral form for the polynomials in (y, v).

use num_complex::Complex64;
use weyl_cartan::analysis::{contour_integral, p_yv_bound, p_yv_float, rodrigues_by_differentiation, rodrigues_q};

fn main() {
    let q = rodrigues_q(4);
    for (n, p) in q.iter().enumerate() {
        let by_diff = rodrigues_by_differentiation(n as u32);
        println!("Q_{n} = {p}   (matches nth derivative: {}, matches P_n: {})", *p == by_diff, *p == p_yv_bound(n as u32));
    }

    let (y0, v) = (0.3, 1.0);
    println!("\ncontour at y0={y0}, v={v}, radius 0.5:");
    for n in 0..=6 {
        let want = p_yv_float(n, Complex64::new(y0, 0.0), v);
        let a = contour_integral(n, Complex64::new(y0, 0.0), v, 0.5, 128).unwrap();
        let b = contour_integral(n, Complex64::new(y0, 0.0), v, 0.5, 256).unwrap();
        println!("  n={n}: {:+.12}  direct {:+.12}  128 vs 256 nodes {:.1e}", a.re, want.re, (a - b).norm());
    }
    match contour_integral(2, Complex64::new(0.0, 0.0), v, 0.99, 128) {
        Ok(_) => println!("radius 0.99 accepted"),
        Err(e) => println!("radius 0.99 rejected: {e}"),
    }
}
