//! Double-exponential quadrature on the whole real line.
//!
//! `x = sinh(pi/2 * sinh t)` turns exponentially decaying integrands into doubly
//! exponentially decaying ones; the trapezoid rule in `t` is then refined by
//! halving the step until two levels agree.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadConfig {
    /// Relative agreement required between successive levels.
    pub rel_tol: f64,
    pub initial_step: f64,
    pub max_levels: usize,
    /// Truncation range in `t`.
    pub t_max: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig { rel_tol: 1e-13, initial_step: 0.5, max_levels: 10, t_max: 5.0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadResult {
    pub value: Complex64,
    /// Integral of `|f|`, the scale for the convergence test.
    pub abs_value: f64,
    /// Difference between the last two levels.
    pub error_estimate: f64,
    pub levels: usize,
    pub converged: bool,
}

fn node(t: f64) -> (f64, f64) {
    let sh = FRAC_PI_2 * t.sinh();
    (sh.sinh(), FRAC_PI_2 * t.cosh() * sh.cosh())
}

/// Sum of `f(x(t)) x'(t)` over `t = offset + k*step`, `|t| <= t_max`.
/// Non-finite samples are treated as underflowed tails.
fn trapezoid_sum<F: Fn(f64) -> Complex64>(f: &F, step: f64, offset: f64, t_max: f64) -> (Complex64, f64) {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut abs = 0.0;
    let kmax = ((t_max - offset) / step).floor() as i64;
    let kmin = ((-t_max - offset) / step).ceil() as i64;
    for k in kmin..=kmax {
        let t = offset + k as f64 * step;
        let (x, w) = node(t);
        if !x.is_finite() || !w.is_finite() {
            continue;
        }
        let v = f(x) * w;
        if v.re.is_finite() && v.im.is_finite() {
            acc += v;
            abs += v.norm();
        }
    }
    (acc, abs)
}

/// Convergence is declared when two successive levels differ by less than
/// `rel_tol` times the integral of `|f|`, so integrals that cancel to zero converge too.
pub fn integrate_real_line<F: Fn(f64) -> Complex64>(f: F, cfg: &QuadConfig) -> QuadResult {
    let mut h = cfg.initial_step;
    let (mut sum, mut abs) = trapezoid_sum(&f, h, 0.0, cfg.t_max);
    let mut value = sum * h;
    let mut err = f64::INFINITY;
    for level in 1..=cfg.max_levels {
        // new nodes sit halfway between the old ones
        let (s, a) = trapezoid_sum(&f, h, h / 2.0, cfg.t_max);
        sum += s;
        abs += a;
        h /= 2.0;
        let next = sum * h;
        err = (next - value).norm();
        value = next;
        let scale = (abs * h).max(f64::MIN_POSITIVE);
        if level >= 2 && err <= cfg.rel_tol * scale {
            return QuadResult { value, abs_value: abs * h, error_estimate: err, levels: level, converged: true };
        }
    }
    QuadResult { value, abs_value: abs * h, error_estimate: err, levels: cfg.max_levels, converged: false }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn sech_integral() {
        let r = integrate_real_line(|x| Complex64::new(1.0 / (PI * x).cosh(), 0.0), &QuadConfig::default());
        assert!(r.converged);
        assert!((r.value.re - 1.0).abs() < 1e-13, "{:?}", r);
    }

    #[test]
    fn gaussian() {
        let r = integrate_real_line(|x| Complex64::new((-x * x).exp(), 0.0), &QuadConfig::default());
        assert!((r.value.re - PI.sqrt()).abs() < 1e-13);
    }
}
