//! Shifts and differences on the `x` lattice (mesh `h = 2c = i*hbar`) and the unit
//! `u` lattice.

use crate::poly::{MultiPoly, Var};
use crate::scalar::ExactScalar;

/// The `x`-lattice mesh `h = 2c = i*hbar`.
pub fn mesh() -> MultiPoly {
    MultiPoly::c().scale(&ExactScalar::int(2))
}

/// `f(x + k*h)`.
pub fn x_shift(f: &MultiPoly, k: i64) -> MultiPoly {
    f.shift(Var::X, &mesh().scale(&ExactScalar::int(k)))
}

/// `[f(x+h) - f(x-h)] / 2h`.
pub fn central_diff(f: &MultiPoly) -> MultiPoly {
    let num = &x_shift(f, 1) - &x_shift(f, -1);
    // 2h = 2i*hbar
    num.div_monomial(&(&ExactScalar::i() * &ExactScalar::int(2)), Var::Hbar, 1)
        .expect("odd part of a shift difference carries a factor of hbar")
}

/// `[f(x+h) - 2f(x) + f(x-h)] / h^2`.
pub fn central_second_diff(f: &MultiPoly) -> MultiPoly {
    let num = &(&x_shift(f, 1) + &x_shift(f, -1)) - &f.scale(&ExactScalar::int(2));
    // h^2 = -hbar^2
    num.div_monomial(&ExactScalar::int(-1), Var::Hbar, 2)
        .expect("even part of a shift difference carries a factor of hbar^2")
}

/// `[f(x+h) + f(x-h)] / 2`.
pub fn central_mean(f: &MultiPoly) -> MultiPoly {
    (&x_shift(f, 1) + &x_shift(f, -1)).scale(&ExactScalar::ratio(1, 2))
}

/// `f(u + k)`.
pub fn u_shift(f: &MultiPoly, k: i64) -> MultiPoly {
    f.shift(Var::U, &MultiPoly::int(k))
}

/// `f(u+1) - f(u)`.
pub fn forward(f: &MultiPoly) -> MultiPoly {
    &u_shift(f, 1) - f
}

/// `f(u) - f(u-1)`.
pub fn backward(f: &MultiPoly) -> MultiPoly {
    f - &u_shift(f, -1)
}

/// `x = 2c(u + 1/2)`, the change to the unit lattice.
pub fn x_in_u() -> MultiPoly {
    &mesh() * &(&MultiPoly::var(Var::U) + &MultiPoly::ratio(1, 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> MultiPoly {
        MultiPoly::var(Var::X)
    }

    #[test]
    fn central_difference_examples() {
        assert_eq!(central_diff(&x().pow(2)), x().scale(&ExactScalar::int(2)));
        assert!(central_second_diff(&x()).is_zero());
        assert_eq!(central_second_diff(&x().pow(2)), MultiPoly::int(2));
        assert_eq!(central_mean(&x()), x());
    }

    #[test]
    fn unit_lattice_examples() {
        let u2 = MultiPoly::var(Var::U).pow(2);
        assert_eq!(forward(&backward(&u2)), MultiPoly::int(2));
        assert_eq!(x_in_u().substitute(Var::U, &MultiPoly::ratio(-1, 2)), MultiPoly::zero());
    }
}
