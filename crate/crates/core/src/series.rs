//! Truncated power series in one variable with complex coefficients.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

/// `sum_{k <= order} a_k u^k`; products are exact through `order`.
#[derive(Clone, Debug, PartialEq)]
pub struct Series {
    pub coeffs: Vec<Complex64>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![Complex64::new(0.0, 0.0); order + 1] }
    }

    pub fn constant(c: Complex64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `a + b u`.
    pub fn linear(a: Complex64, b: Complex64, order: usize) -> Self {
        let mut s = Self::constant(a, order);
        if order >= 1 {
            s.coeffs[1] = b;
        }
        s
    }

    pub fn from_coeffs(mut coeffs: Vec<Complex64>, order: usize) -> Self {
        coeffs.resize(order + 1, Complex64::new(0.0, 0.0));
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Series { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn derivative(&self) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for k in 1..=n {
            out.coeffs[k - 1] = self.coeffs[k] * k as f64;
        }
        out
    }

    /// Antiderivative with constant term `c0`; the top coefficient is dropped.
    pub fn integral(&self, c0: Complex64) -> Self {
        let n = self.order();
        let mut out = Self::constant(c0, n);
        for k in 1..=n {
            out.coeffs[k] = self.coeffs[k - 1] / k as f64;
        }
        out
    }

    /// `f / u`, assuming `f(0) = 0`; the order drops by one.
    pub fn div_u(&self) -> Self {
        Series { coeffs: self.coeffs[1..].to_vec() }
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    pub fn inv(&self) -> Self {
        let n = self.order();
        let a0 = self.coeffs[0];
        let mut out = Self::zero(n);
        out.coeffs[0] = a0.inv();
        for k in 1..=n {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 1..=k {
                acc += self.coeffs[j] * out.coeffs[k - j];
            }
            out.coeffs[k] = -acc / a0;
        }
        out
    }

    /// `exp(f)` from `g' = f' g`.
    pub fn exp(&self) -> Self {
        let n = self.order();
        let df = self.derivative();
        let mut out = Self::constant(self.coeffs[0].exp(), n);
        for k in 1..=n {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..k {
                acc += df.coeffs[j] * out.coeffs[k - 1 - j];
            }
            out.coeffs[k] = acc / k as f64;
        }
        out
    }

    /// Principal `log(f)`.
    pub fn ln(&self) -> Self {
        (&self.derivative() * &self.inv()).integral(self.coeffs[0].ln())
    }

    /// Principal `f^alpha`.
    pub fn powc(&self, alpha: Complex64) -> Self {
        self.ln().scale(alpha).exp()
    }

    /// Principal square root, `sqrt(f(0))` on the principal branch.
    pub fn sqrt(&self) -> Self {
        self.powc(Complex64::new(0.5, 0.0))
    }

    /// Principal `atan(f)` from `(atan f)' = f' / (1 + f^2)`.
    pub fn atan(&self) -> Self {
        let one = Series::constant(Complex64::new(1.0, 0.0), self.order());
        let denom = &one + &(self * self);
        (&self.derivative() * &denom.inv()).integral(self.coeffs[0].atan())
    }
}

impl<'a> Add<&'a Series> for &'a Series {
    type Output = Series;
    fn add(self, o: &Series) -> Series {
        Series { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub<&'a Series> for &'a Series {
    type Output = Series;
    fn sub(self, o: &Series) -> Series {
        Series { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl<'a> Mul<&'a Series> for &'a Series {
    type Output = Series;
    fn mul(self, o: &Series) -> Series {
        let n = self.order().min(o.order());
        let mut out = Series::zero(n);
        for i in 0..=n {
            for j in 0..=n - i {
                out.coeffs[i + j] += self.coeffs[i] * o.coeffs[j];
            }
        }
        out
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn geometric_and_exp() {
        let one_minus_u = Series::linear(c(1.0), c(-1.0), 6);
        assert!(one_minus_u.inv().coeffs.iter().all(|a| (a - c(1.0)).norm() < 1e-15));
        let e = Series::linear(c(0.0), c(1.0), 6).exp();
        let mut f = 1.0;
        for k in 0..=6 {
            assert!((e.coeffs[k] - c(1.0 / f)).norm() < 1e-15);
            f *= (k + 1) as f64;
        }
    }

    #[test]
    fn sqrt_and_atan() {
        let s = Series::linear(c(1.0), c(1.0), 5).sqrt();
        let sq = &s * &s;
        assert!((&sq - &Series::linear(c(1.0), c(1.0), 5)).coeffs.iter().all(|a| a.norm() < 1e-14));
        // atan(u) = u - u^3/3 + u^5/5
        let a = Series::linear(c(0.0), c(1.0), 5).atan();
        let want = [0.0, 1.0, 0.0, -1.0 / 3.0, 0.0, 0.2];
        for (k, w) in want.iter().enumerate() {
            assert!((a.coeffs[k] - c(*w)).norm() < 1e-15);
        }
    }
}
