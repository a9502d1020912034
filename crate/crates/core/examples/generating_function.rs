//! Taylor coefficients of the generating function against P_n / n!.

use weyl_cartan::analysis::{expected_coefficient, generating_function_check, generating_series, generating_series_as_printed};

fn main() {
    let (y0, v, order) = (0.3, 1.0, 6);
    let g = generating_series(y0, v, order);
    let printed = generating_series_as_printed(y0, v, order);
    println!(" n  series coefficient     P_n/n!              printed-form coefficient");
    for n in 0..=order {
        let want = expected_coefficient(n as u32, y0, v);
        println!("{n:2}  {:+.14}  {:+.14}  {:+.14}", g.coeffs[n].re, want.re, printed.coeffs[n].re);
    }
    for c in generating_function_check(y0, v, 8, 1e-9) {
        println!("{:<40} {:<28} {:?}", c.tag, c.params, c.status);
    }
}
