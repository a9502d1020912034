//! Weight, Rodrigues formula, contour integral, generating function and the
//! zero-energy Schrodinger states of the `(y, v)` polynomials.
//!
//! Numeric checks bind `hbar = 2`, so that `c = i` and `(-ic)^n = 1`.

use std::f64::consts::PI;
use std::path::Path;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::cartan::{by_recursion, to_yv_form};
use crate::error::{Error, Result};
use crate::poly::{MultiPoly, Var};
use crate::report::{Check, VerificationReport};
use crate::scalar::{factorial, ExactScalar};
use crate::series::Series;

fn y() -> MultiPoly {
    MultiPoly::var(Var::Y)
}

fn v() -> MultiPoly {
    MultiPoly::var(Var::V)
}

/// `1 + y^2`.
pub fn sigma() -> MultiPoly {
    &MultiPoly::one() + &y().pow(2)
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// `p(y, v) * exp(a v atan y) * (1 + y^2)^beta`, closed under `d/dy`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFn {
    pub poly: MultiPoly,
    pub exp_coeff: BigRational,
    pub sigma_pow: BigRational,
}

impl ClassFn {
    pub fn new(poly: MultiPoly, exp_coeff: BigRational, sigma_pow: BigRational) -> Self {
        ClassFn { poly, exp_coeff, sigma_pow }
    }

    /// `d/dy = exp(..) sigma^(beta-1) [sigma p' + (a v + 2 beta y) p]`.
    pub fn derivative(&self) -> ClassFn {
        let a = MultiPoly::constant(ExactScalar::from(self.exp_coeff.clone()));
        let two_beta = MultiPoly::constant(ExactScalar::from(&self.sigma_pow * rat(2, 1)));
        let lin = &(&a * &v()) + &(&two_beta * &y());
        let poly = &(&sigma() * &self.poly.derivative(Var::Y)) + &(&lin * &self.poly);
        ClassFn { poly, exp_coeff: self.exp_coeff.clone(), sigma_pow: &self.sigma_pow - rat(1, 1) }
    }

    pub fn nth_derivative(&self, k: u32) -> ClassFn {
        (0..k).fold(self.clone(), |f, _| f.derivative())
    }

    pub fn eval(&self, yv: f64, vv: f64) -> Complex64 {
        let p = self
            .poly
            .eval_float(&[(Var::Y, Complex64::new(yv, 0.0)), (Var::V, Complex64::new(vv, 0.0))])
            .expect("polynomial in y and v");
        let a = self.exp_coeff.to_f64().unwrap_or(0.0);
        let b = self.sigma_pow.to_f64().unwrap_or(0.0);
        p * (a * vv * yv.atan()).exp() * (1.0 + yv * yv).powf(b)
    }
}

/// `rho(y, v) = exp(v atan y) (1 + y^2)^{-(2n+1)/2}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WeightExpr {
    pub v: f64,
    pub n: u32,
}

impl WeightExpr {
    pub fn class_fn(n: u32) -> ClassFn {
        ClassFn::new(MultiPoly::one(), rat(1, 1), rat(-(2 * n as i64 + 1), 2))
    }

    pub fn eval(&self, y: Complex64) -> Complex64 {
        let s = Complex64::new(1.0, 0.0) + y * y;
        (self.v * y.atan()).exp() * s.powf(-(2.0 * self.n as f64 + 1.0) / 2.0)
    }

    /// `rho'/rho = [v - (2n+1) y] / (1 + y^2)`.
    pub fn log_derivative(&self, y: f64) -> f64 {
        (self.v - (2.0 * self.n as f64 + 1.0) * y) / (1.0 + y * y)
    }
}

/// `d/dy[(1+y^2) rho] = [v - (2n-1) y] rho` and the logarithmic derivative of `rho`,
/// both as identities in the function class.
pub fn pearson_holds(n: u32) -> bool {
    let rho = WeightExpr::class_fn(n);
    let sigma_rho = ClassFn::new(MultiPoly::one(), rho.exp_coeff.clone(), &rho.sigma_pow + rat(1, 1));
    let d = sigma_rho.derivative();
    let want = &v() - &y().scale(&ExactScalar::int(2 * n as i64 - 1));
    let log_d = rho.derivative();
    let want_log = &v() - &y().scale(&ExactScalar::int(2 * n as i64 + 1));
    d.sigma_pow == rho.sigma_pow && d.poly == want && log_d.poly == want_log
}

/// `Q_0 .. Q_{n_max}` with `Q_{n+1} = (1+y^2) Q_n' + [v - (2n+1) y] Q_n`.
pub fn rodrigues_q(n_max: u32) -> Vec<MultiPoly> {
    let mut out = vec![MultiPoly::one()];
    for n in 0..n_max {
        let q = &out[n as usize];
        let lin = &v() - &y().scale(&ExactScalar::int(2 * n as i64 + 1));
        out.push(&(&sigma() * &q.derivative(Var::Y)) + &(&lin * q));
    }
    out
}

/// `d^n/dy^n [exp(v atan y)(1+y^2)^{-1/2}]` divided by `rho`, straight from the class.
pub fn rodrigues_by_differentiation(n: u32) -> MultiPoly {
    WeightExpr::class_fn(0).nth_derivative(n).poly
}

/// `P_n(y, v)` with symbolic `hbar`.
pub fn p_yv(n: u32) -> MultiPoly {
    to_yv_form(&by_recursion(n)[n as usize].poly)
}

/// `P_n(y, v)` at `hbar = 2`.
pub fn p_yv_bound(n: u32) -> MultiPoly {
    p_yv(n).substitute(Var::Hbar, &MultiPoly::int(2))
}

/// `(-ic)^n`.
pub fn rodrigues_prefactor(n: u32) -> MultiPoly {
    (-&(&MultiPoly::i() * &MultiPoly::c())).pow(n)
}

/// `(1+y^2) P'' + [v - (2n-1) y] P' + n^2 P`.
pub fn hypergeometric_residual(n: u32, p: &MultiPoly) -> MultiPoly {
    let lin = &v() - &y().scale(&ExactScalar::int(2 * n as i64 - 1));
    let a = &sigma() * &p.nth_derivative(Var::Y, 2);
    let b = &lin * &p.derivative(Var::Y);
    &(&a + &b) + &p.scale(&ExactScalar::int((n * n) as i64))
}

/// `{d/dy[(1+y^2) rho d/dy] + rho n^2} P_n`, divided by the common
/// `exp(v atan y) (1+y^2)^{-(2n+1)/2}`.
pub fn self_adjoint_residual(n: u32) -> MultiPoly {
    let p = p_yv_bound(n);
    let rho = WeightExpr::class_fn(n);
    let flux = ClassFn::new(p.derivative(Var::Y), rho.exp_coeff.clone(), &rho.sigma_pow + rat(1, 1));
    let d = flux.derivative();
    debug_assert_eq!(d.sigma_pow, rho.sigma_pow);
    &d.poly + &p.scale(&ExactScalar::int((n * n) as i64))
}

/// Float `P_n(y, v)` at `hbar = 2`, complex `y` allowed.
pub fn p_yv_float(n: u32, yv: Complex64, vv: f64) -> Complex64 {
    p_yv_bound(n).eval_float(&[(Var::Y, yv), (Var::V, Complex64::new(vv, 0.0))]).expect("bound")
}

/// Distance from `z` to the branch set `{i t : |t| >= 1}` of `rho`.
fn distance_to_cuts(z: Complex64) -> f64 {
    let up = if z.im >= 1.0 { z.re.abs() } else { (z - Complex64::new(0.0, 1.0)).norm() };
    let down = if z.im <= -1.0 { z.re.abs() } else { (z + Complex64::new(0.0, 1.0)).norm() };
    up.min(down)
}

/// `(-ic)^n n! / (2 pi i rho(y0)) * contour integral of (1+z^2)^n / (z-y0)^{n+1} rho(z) dz`
/// on the counterclockwise circle `|z - y0| = radius`, trapezoid rule with `nodes` points.
pub fn contour_integral(n: u32, y0: Complex64, vv: f64, radius: f64, nodes: usize) -> Result<Complex64> {
    if nodes < 64 {
        return Err(Error::InvalidParameter(format!("need at least 64 nodes, got {nodes}")));
    }
    let d = distance_to_cuts(y0);
    if !(radius > 0.0 && radius < 0.95 * d) {
        return Err(Error::InvalidParameter(format!(
            "contour of radius {radius} around {y0} comes within 5% of a singularity of the weight (distance {d:.4})"
        )));
    }
    let rho = WeightExpr { v: vv, n };
    let one = Complex64::new(1.0, 0.0);
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..nodes {
        let e = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / nodes as f64);
        let z = y0 + e * radius;
        let dz = Complex64::new(0.0, 1.0) * e * radius;
        acc += (one + z * z).powu(n) / (z - y0).powu(n + 1) * rho.eval(z) * dz;
    }
    acc *= 2.0 * PI / nodes as f64;
    let f = factorial(n).to_f64().unwrap_or(f64::INFINITY);
    Ok(acc * f / (Complex64::new(0.0, 2.0 * PI) * rho.eval(y0)))
}

/// `w(z) = exp(v atan z) (1 + z^2)^{-1/2}` on a series.
fn w_series(z: &Series, vv: f64) -> Series {
    let one = Series::constant(Complex64::new(1.0, 0.0), z.order());
    let e = z.atan().scale(Complex64::new(vv, 0.0)).exp();
    let s = (&one + &(z * z)).powc(Complex64::new(-0.5, 0.0));
    &e * &s
}

fn w_value(y0: f64, vv: f64) -> Complex64 {
    Complex64::new((vv * y0.atan()).exp() / (1.0 + y0 * y0).sqrt(), 0.0)
}

/// `w(y0 + u (1 + y0^2)) / w(y0) = sum_n P_n(y0, v)/n! (-u/ic)^n`.
pub fn generating_series(y0: f64, vv: f64, order: usize) -> Series {
    let z = Series::linear(Complex64::new(y0, 0.0), Complex64::new(1.0 + y0 * y0, 0.0), order);
    w_series(&z, vv).scale(w_value(y0, vv).inv())
}

/// The printed form `(1 - 4uy - 4u^2)^{-1/2} rho(xi, v)/rho(y, v)` with
/// `xi = [1 - (1 - 4uy - 4u^2)^{1/2}] / 2u` and the `n = 0` weight.
pub fn generating_series_as_printed(y0: f64, vv: f64, order: usize) -> Series {
    let c = |x: f64| Complex64::new(x, 0.0);
    let mut disc = Series::linear(c(1.0), c(-4.0 * y0), order + 1);
    if order + 1 >= 2 {
        disc.coeffs[2] = c(-4.0);
    }
    let root = disc.sqrt();
    let one = Series::constant(c(1.0), order + 1);
    let xi = (&one - &root).div_u().scale(c(0.5));
    let pre = disc.truncate(order).powc(c(-0.5));
    (&pre * &w_series(&xi, vv)).scale(w_value(y0, vv).inv())
}

/// `R_n = w^{-1} d^n[(1+y^2)^n w]`, the polynomials the printed form generates.
pub fn printed_form_polynomials(n: u32) -> MultiPoly {
    ClassFn::new(MultiPoly::one(), rat(1, 1), rat(2 * n as i64 - 1, 2)).nth_derivative(n).poly
}

/// `P_n(y0, v)/n! (-1/ic)^n` at `hbar = 2`, i.e. `P_n/n!`.
pub fn expected_coefficient(n: u32, y0: f64, vv: f64) -> Complex64 {
    // -1/(ic) with c = i is 1
    p_yv_float(n, Complex64::new(y0, 0.0), vv) / factorial(n).to_f64().unwrap_or(f64::INFINITY)
}

fn rel(a: Complex64, b: Complex64, floor: f64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(floor)
}

/// Coefficient checks through `order` at one expansion point.
pub fn generating_function_check(y0: f64, vv: f64, order: usize, tol: f64) -> Vec<Check> {
    let mut out = Vec::new();
    let params = format!("y0={y0},v={vv}");
    let g = generating_series(y0, vv, order);
    let printed = generating_series_as_printed(y0, vv, order);
    let largest = g.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut printed_matches_p = true;
    for n in 0..=order {
        let want = expected_coefficient(n as u32, y0, vv);
        let p = format!("{params},n={n}");
        let mut c = Check::numeric("analysis.genfun", &p, rel(g.coeffs[n], want, 1.0), tol);
        if largest * f64::EPSILON > tol {
            c = c.flagged("series coefficients too large for the requested tolerance");
        }
        out.push(c);
        let r = printed_form_polynomials(n as u32)
            .eval_float(&[(Var::Y, Complex64::new(y0, 0.0)), (Var::V, Complex64::new(vv, 0.0))])
            .expect("bound")
            / factorial(n as u32).to_f64().unwrap_or(f64::INFINITY);
        out.push(Check::numeric("analysis.genfun.printed_form", &p, rel(printed.coeffs[n], r, 1.0), tol));
        if rel(printed.coeffs[n], want, 1.0) > tol {
            printed_matches_p = false;
        }
    }
    out.push(
        Check::exact("analysis.genfun.printed_form_differs", params, order == 0 || !printed_matches_p)
            .with_note("the printed generating function is expected not to reproduce P_n"),
    );
    out
}

fn lagrange_at(points: &[(f64, Complex64)], x: f64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (i, &(xi, yi)) in points.iter().enumerate() {
        let mut w = 1.0;
        for (j, &(xj, _)) in points.iter().enumerate() {
            if i != j {
                w *= (x - xj) / (xi - xj);
            }
        }
        acc += yi * w;
    }
    acc
}

/// Rebuilds `P_n(., v)` from the generating series at two disjoint sets of
/// expansion points and compares both with the series at `y_star`.
pub fn expansion_point_independence(n: u32, vv: f64, y_star: f64, tol: f64) -> Check {
    let f = factorial(n).to_f64().unwrap_or(f64::INFINITY);
    let value = |y0: f64| generating_series(y0, vv, n as usize).coeffs[n as usize] * f;
    let set = |offset: f64| -> Vec<(f64, Complex64)> {
        (0..=n).map(|k| {
            let y0 = offset + 0.25 * k as f64;
            (y0, value(y0))
        }).collect()
    };
    let direct = value(y_star);
    let a = lagrange_at(&set(-0.9), y_star);
    let b = lagrange_at(&set(-0.8), y_star);
    let scale = direct.norm().max(1.0);
    let r = ((a - direct).norm().max((b - direct).norm())) / scale;
    Check::numeric("analysis.genfun.point_independence", format!("n={n},v={vv}"), r, tol)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SchrodingerCase {
    pub n: u32,
    pub v: f64,
    pub grid: Vec<f64>,
}

impl SchrodingerCase {
    /// Evenly spaced, symmetric grid on `[-half_width, half_width]`.
    pub fn symmetric(n: u32, v: f64, half_width: f64, points: usize) -> Result<Self> {
        if points < 2 || half_width < 8.0 {
            return Err(Error::InvalidParameter("grid must cover [-8, 8] with at least two points".into()));
        }
        let step = 2.0 * half_width / (points - 1) as f64;
        let grid = (0..points).map(|k| if 2 * k + 1 == points { 0.0 } else { -half_width + step * k as f64 }).collect();
        Ok(SchrodingerCase { n, v, grid })
    }
}

/// `Psi_n = [(1+y^2) rho]^{1/2} P_n = exp(v/2 atan y) (1+y^2)^{(1-2n)/4} P_n`.
pub fn psi(n: u32) -> ClassFn {
    ClassFn::new(p_yv_bound(n), rat(1, 2), rat(1 - 2 * n as i64, 4))
}

/// `y^2 + 2v(2n+1) y + (2n+1)^2 - (v^2 + 3)`.
pub fn potential_numerator(n: u32) -> MultiPoly {
    let k = 2 * n as i64 + 1;
    &(&(&y().pow(2) + &(&v() * &y()).scale(&ExactScalar::int(2 * k))) + &MultiPoly::int(k * k))
        - &(&v().pow(2) + &MultiPoly::int(3))
}

/// `V_n(y, v)` with the scale `2m/(eta^2 hbar^2)` set to one.
pub fn potential(n: u32, yv: f64, vv: f64) -> f64 {
    let num = potential_numerator(n)
        .eval_float(&[(Var::Y, Complex64::new(yv, 0.0)), (Var::V, Complex64::new(vv, 0.0))])
        .expect("bound")
        .re;
    -num / (4.0 * (1.0 + yv * yv).powi(2))
}

/// `Psi'' + N/(4 (1+y^2)^2) Psi` reduced to its polynomial factor; zero iff the
/// equation holds identically in `(y, v)`.
pub fn schrodinger_polynomial_residual(n: u32) -> MultiPoly {
    let p = psi(n);
    let d2 = p.nth_derivative(2);
    debug_assert_eq!(&p.sigma_pow - rat(2, 1), d2.sigma_pow);
    &d2.poly + &(&potential_numerator(n) * &p.poly).scale(&ExactScalar::ratio(1, 4))
}

#[derive(Clone, Debug, Serialize)]
pub struct SchrodingerRow {
    pub y: f64,
    pub potential: f64,
    pub psi: f64,
    pub residual: f64,
}

#[derive(Clone, Debug)]
pub struct SchrodingerOutcome {
    pub rows: Vec<SchrodingerRow>,
    pub max_residual: f64,
    /// `max |residual| / max |Psi * N / (4 (1+y^2)^2)|`
    pub relative: f64,
    /// `max |Psi(-y) - (-1)^n Psi(y)|` over the grid, `v = 0` only.
    pub parity_defect: Option<f64>,
}

pub fn schrodinger_residual(case: &SchrodingerCase) -> SchrodingerOutcome {
    let p = psi(case.n);
    let d2 = p.nth_derivative(2);
    let mut rows = Vec::with_capacity(case.grid.len());
    let mut max_res: f64 = 0.0;
    let mut max_term: f64 = 0.0;
    for &yv in &case.grid {
        let ps = p.eval(yv, case.v).re;
        let pot = potential(case.n, yv, case.v);
        let term = -pot * ps;
        let res = d2.eval(yv, case.v).re + term;
        max_res = max_res.max(res.abs());
        max_term = max_term.max(term.abs());
        rows.push(SchrodingerRow { y: yv, potential: pot, psi: ps, residual: res });
    }
    let parity_defect = (case.v == 0.0).then(|| {
        let sign = if case.n.is_multiple_of(2) { 1.0 } else { -1.0 };
        case.grid
            .iter()
            .map(|&yv| (p.eval(-yv, 0.0).re - sign * p.eval(yv, 0.0).re).abs())
            .fold(0.0, f64::max)
    });
    SchrodingerOutcome { rows, max_residual: max_res, relative: max_res / max_term.max(f64::MIN_POSITIVE), parity_defect }
}

pub fn write_schrodinger_csv(path: &Path, rows: &[SchrodingerRow]) -> Result<()> {
    let io = |e: std::io::Error| Error::Io { path: path.to_path_buf(), source: e };
    let mut w = csv::Writer::from_path(path).map_err(|e| io(e.into()))?;
    for r in rows {
        w.serialize(r).map_err(|e| io(e.into()))?;
    }
    w.flush().map_err(io)
}

#[derive(Clone, Debug)]
pub struct AnalysisOptions {
    pub n_max: u32,
    pub vs: Vec<f64>,
    pub tol: f64,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions { n_max: 10, vs: vec![0.0, 1.0, 2.0], tol: 1e-10 }
    }
}

pub fn verify_suite(opts: &AnalysisOptions) -> VerificationReport {
    let mut report = VerificationReport::new("analysis");
    let n_max = opts.n_max;
    report.timed("analysis.exact", |out| {
        let q = rodrigues_q(n_max);
        for n in 0..=n_max {
            let params = format!("n={n}");
            out.push(Check::exact("analysis.pearson", &params, pearson_holds(n)));
            out.push(Check::exact("analysis.self_adjoint", &params, self_adjoint_residual(n).is_zero()));
            out.push(Check::exact("analysis.hypergeometric", &params, hypergeometric_residual(n, &p_yv_bound(n)).is_zero()));
            if n <= 8 {
                let qn = &q[n as usize];
                let bound = &rodrigues_prefactor(n).substitute(Var::Hbar, &MultiPoly::int(2)) * qn;
                out.push(Check::exact("analysis.rodrigues", &params, bound == p_yv_bound(n)));
                out.push(Check::exact("analysis.rodrigues_symbolic_hbar", &params, &rodrigues_prefactor(n) * qn == p_yv(n)));
                out.push(Check::exact("analysis.rodrigues_derivative", &params, rodrigues_by_differentiation(n) == *qn));
                out.push(Check::exact("analysis.rodrigues_equation", &params, hypergeometric_residual(n, qn).is_zero()));
            }
            if n <= 5 {
                out.push(Check::exact("analysis.schrodinger_exact", &params, schrodinger_polynomial_residual(n).is_zero()));
            }
        }
    });
    report.timed("analysis.contour", |out| {
        let cases = [(0.3, 1.0, 0.5), (-0.2, 2.0, 0.5), (0.0, 0.0, 0.6), (1.5, -1.0, 0.8)];
        for n in 0..=n_max.min(8) {
            for &(y0, vv, r) in &cases {
                let params = format!("n={n},y0={y0},v={vv},r={r}");
                let want = p_yv_float(n, Complex64::new(y0, 0.0), vv);
                let a = contour_integral(n, Complex64::new(y0, 0.0), vv, r, 128);
                let b = contour_integral(n, Complex64::new(y0, 0.0), vv, r, 256);
                match (a, b) {
                    (Ok(a), Ok(b)) => {
                        let scale = want.norm().max(1.0);
                        out.push(Check::numeric("analysis.contour", &params, (a - want).norm() / scale, 1e-8));
                        out.push(Check::numeric("analysis.contour.doubling", &params, (a - b).norm() / scale, 1e-10));
                    }
                    _ => out.push(Check::exact("analysis.contour", &params, false)),
                }
            }
        }
    });
    report.timed("analysis.genfun", |out| {
        for (y0, vv) in [(0.0, 0.0), (0.3, 1.0), (-0.5, 2.0)] {
            out.extend(generating_function_check(y0, vv, 8, 1e-9));
        }
        for n in 0..=6 {
            out.push(expansion_point_independence(n, 1.0, 0.35, 1e-9));
        }
    });
    report.timed("analysis.schrodinger", |out| {
        for n in 0..=n_max.min(5) {
            for &vv in &opts.vs {
                let params = format!("n={n},v={vv}");
                let Ok(case) = SchrodingerCase::symmetric(n, vv, 8.0, 161) else { continue };
                let o = schrodinger_residual(&case);
                out.push(Check::numeric("analysis.schrodinger", &params, o.relative, opts.tol));
                if let Some(d) = o.parity_defect {
                    out.push(Check::numeric("analysis.schrodinger.parity", &params, d, 1e-13));
                }
            }
        }
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_order_rodrigues() {
        let q = rodrigues_q(2);
        assert_eq!(q[1], &v() - &y());
        assert_eq!(p_yv_bound(1), &v() - &y());
        assert_eq!(p_yv_bound(2), &(&(&v().pow(2) - &(&v() * &y()).scale(&ExactScalar::int(4))) + &y().pow(2).scale(&ExactScalar::int(2))) - &MultiPoly::one());
    }

    #[test]
    fn printed_form_low_order() {
        assert_eq!(printed_form_polynomials(1), &v() + &y());
        let want = &(&(&v().pow(2) + &(&v() * &y()).scale(&ExactScalar::int(4))) + &y().pow(2).scale(&ExactScalar::int(6))) + &MultiPoly::int(3);
        assert_eq!(printed_form_polynomials(2), want);
    }

    #[test]
    fn contour_rejects_singular_circle() {
        assert!(contour_integral(1, Complex64::new(0.0, 0.5), 1.0, 0.5, 128).is_err());
        assert!(contour_integral(1, Complex64::new(0.0, 2.0), 1.0, 0.5, 128).is_err());
        assert!(contour_integral(1, Complex64::new(0.3, 0.0), 1.0, 0.5, 32).is_err());
        let z = contour_integral(0, Complex64::new(0.3, 0.0), 1.0, 0.5, 64).unwrap();
        assert!((z - 1.0).norm() < 1e-12);
    }

    #[test]
    fn zero_order_generating_coefficient() {
        let g = generating_series(0.3, 1.0, 3);
        assert!((g.coeffs[0] - 1.0).norm() < 1e-15);
        let want = expected_coefficient(1, 0.3, 1.0);
        assert!((g.coeffs[1] - want).norm() < 1e-14);
    }
}
