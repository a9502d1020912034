//! Meixner, Meixner-Pollaczek and continuous Hahn polynomials, and the
//! identification of `P_n(s, u)` with them.

use std::f64::consts::{FRAC_PI_2, PI};
use std::path::Path;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::cartan::{by_recursion, to_u_form, CartanPoly};
use crate::error::{Error, Result};
use crate::poly::{MultiPoly, Var};
use crate::quad::{integrate_real_line, QuadConfig};
use crate::report::{Check, Status, VerificationReport};
use crate::scalar::{binomial, factorial, ExactScalar};

/// `m_n^(gamma, mu)(u)`, stored as `mu^n m_n`, which is polynomial in `mu`.
#[derive(Clone, Debug, PartialEq)]
pub struct MeixnerPoly {
    pub n: u32,
    pub gamma: MultiPoly,
    pub mu: MultiPoly,
    /// `mu^n m_n(u)`
    pub scaled: MultiPoly,
}

/// `m_0 .. m_{n_max}` from
/// `mu m_{n+1} = [gamma mu + (1+mu) n - (1-mu) u] m_n - n(n+gamma-1) m_{n-1}`.
pub fn meixner_table(n_max: u32, gamma: &MultiPoly, mu: &MultiPoly) -> Result<Vec<MeixnerPoly>> {
    if mu.is_zero() {
        return Err(Error::InvalidParameter("Meixner parameter mu must be nonzero".into()));
    }
    let u = MultiPoly::var(Var::U);
    let one = MultiPoly::one();
    let mut out: Vec<MultiPoly> = vec![one.clone()];
    for n in 0..n_max {
        let k = n as usize;
        let nn = MultiPoly::int(n as i64);
        let a = &(&(gamma * mu) + &(&(&one + mu) * &nn)) - &(&(&one - mu) * &u);
        let mut next = &a * &out[k];
        if n > 0 {
            let b = &(&nn * &(&(&nn + gamma) - &one)) * mu;
            next = &next - &(&b * &out[k - 1]);
        }
        out.push(next);
    }
    Ok(out
        .into_iter()
        .enumerate()
        .map(|(n, scaled)| MeixnerPoly { n: n as u32, gamma: gamma.clone(), mu: mu.clone(), scaled })
        .collect())
}

pub fn meixner(n: u32, gamma: &MultiPoly, mu: &MultiPoly) -> Result<MeixnerPoly> {
    Ok(meixner_table(n, gamma, mu)?.pop().expect("nonempty"))
}

fn forward(f: &MultiPoly) -> MultiPoly {
    crate::lattice::forward(f)
}

impl MeixnerPoly {
    /// `u Delta Nabla m + [(mu-1) u + mu gamma] Delta m + n(1-mu) m`, scaled by `mu^n`.
    pub fn difference_residual(&self) -> MultiPoly {
        let u = MultiPoly::var(Var::U);
        let one = MultiPoly::one();
        let f = &self.scaled;
        let dn = &u * &forward(&crate::lattice::backward(f));
        let coeff = &(&(&self.mu - &one) * &u) + &(&self.mu * &self.gamma);
        let lam = (&one - &self.mu).scale(&ExactScalar::int(self.n as i64));
        &(&dn + &(&coeff * &forward(f))) + &(&lam * f)
    }

    /// `Delta^n (mu^n m_n) = n! (mu - 1)^n`.
    pub fn normalization_holds(&self) -> bool {
        let mut f = self.scaled.clone();
        for _ in 0..self.n {
            f = forward(&f);
        }
        let want = (&self.mu - &MultiPoly::one()).pow(self.n).scale(&ExactScalar::from(factorial(self.n)));
        f == want
    }

    /// `m_n(u)` at complex `u`, binding `gamma` and `mu` when they are symbols.
    pub fn eval(&self, u: Complex64, gamma: Complex64, mu: Complex64) -> Result<Complex64> {
        let v = self.scaled.eval_float(&[(Var::U, u), (Var::Gamma, gamma), (Var::Mu, mu)])?;
        Ok(v / mu.powu(self.n))
    }
}

fn is_exactly(s: &MultiPoly, k: i64) -> bool {
    (s - &MultiPoly::int(k)).is_zero()
}

/// `P_n(s, u)` against `[c(s+1)]^n m_n^(1, (s+1)/(s-1))(u)`, i.e.
/// `c^n (s-1)^n (mu^n m_n)` at `mu = (s+1)/(s-1)`, for `n <= n_max`.
pub fn identify(n_max: u32, s: &MultiPoly) -> Result<Vec<Check>> {
    if is_exactly(s, 1) || is_exactly(s, -1) {
        return Err(Error::Singular("the Meixner parameter degenerates at s = +-1".into()));
    }
    let table = by_recursion(n_max);
    let meix = meixner_table(n_max, &MultiPoly::one(), &MultiPoly::var(Var::Mu))?;
    let num = s + &MultiPoly::one();
    let den = s - &MultiPoly::one();
    let mut out = Vec::new();
    for n in 0..=n_max as usize {
        let p = to_u_form(&table[n].poly).substitute(Var::S, s);
        let m = meix[n].scaled.substitute_fraction(Var::Mu, &num, &den, n as u32)?;
        let rhs = &MultiPoly::c().pow(n as u32) * &m;
        out.push(Check::exact("classical.meixner_bridge", format!("n={n}"), p == rhs));
    }
    Ok(out)
}

/// The Meixner recurrence, rewritten for `P_n = [c(s+1)]^n m_n` with `gamma = 1`,
/// against the Cartan recurrence `P_{n+1} = [x + c(2n+1)s] P_n + c^2(1-s^2) n^2 P_{n-1}`.
pub fn recurrence_dictionary(n_max: u32) -> Vec<Check> {
    let s = MultiPoly::var(Var::S);
    let u = MultiPoly::var(Var::U);
    let c = MultiPoly::c();
    let one = MultiPoly::one();
    let num = &s + &one;
    let den = &s - &one;
    let mu = MultiPoly::var(Var::Mu);
    let table: Vec<MultiPoly> = by_recursion(n_max + 1).iter().map(|p| to_u_form(&p.poly)).collect();
    let mut out = Vec::new();
    for n in 0..=n_max {
        let nn = MultiPoly::int(n as i64);
        // A = gamma mu + (1+mu) n - (1-mu) u;  P_{n+1} = c(s-1) A P_n - n^2 c^2 (s+1)(s-1) P_{n-1}
        let a = &(&mu + &(&(&one + &mu) * &nn)) - &(&(&one - &mu) * &u);
        let a_s = &c * &a.substitute_fraction(Var::Mu, &num, &den, 1).expect("degree 1");
        let want_a = to_u_form(&(&MultiPoly::var(Var::X) + &(&c * &s).scale(&ExactScalar::int(2 * n as i64 + 1))));
        let b_s = -&(&(&c.pow(2) * &num) * &den).scale(&ExactScalar::int((n * n) as i64));
        let want_b = (&c.pow(2) * &(&one - &s.pow(2))).scale(&ExactScalar::int((n * n) as i64));
        let k = n as usize;
        let prev = if n == 0 { MultiPoly::zero() } else { table[k - 1].clone() };
        let stepped = &(&a_s * &table[k]) + &(&b_s * &prev);
        let ok = a_s == want_a && b_s == want_b && stepped == table[k + 1];
        out.push(Check::exact("classical.recurrence_dictionary", format!("n={n}"), ok));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrthogonalityResult {
    pub n: u32,
    pub m: u32,
    pub lhs_re: f64,
    pub lhs_im: f64,
    pub rhs_re: f64,
    pub rhs_im: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    /// Certified bound on the omitted tail (discrete) or quadrature error estimate.
    pub tail_bound: f64,
    pub status: Status,
    #[serde(skip)]
    pub exact_sum: Option<ExactScalar>,
    #[serde(skip)]
    pub exact_rhs: Option<ExactScalar>,
    #[serde(skip)]
    pub note: Option<String>,
}

impl OrthogonalityResult {
    pub fn lhs(&self) -> Complex64 {
        Complex64::new(self.lhs_re, self.lhs_im)
    }

    pub fn rhs(&self) -> Complex64 {
        Complex64::new(self.rhs_re, self.rhs_im)
    }

    pub fn to_check(&self, tag: &str, params: &str, tol: f64) -> Check {
        let mut c = Check::numeric(tag, format!("n={},m={},{params}", self.n, self.m), self.rel_err, tol);
        c.status = self.status;
        c.note = self.note.clone();
        c
    }
}

/// Univariate coefficients in `u` of a polynomial with all other symbols bound.
fn exact_coeffs_in_u(p: &MultiPoly, s: &ExactScalar, hbar: &ExactScalar) -> Vec<ExactScalar> {
    let bound = p.substitute_many(&[
        (Var::S, MultiPoly::constant(s.clone())),
        (Var::Hbar, MultiPoly::constant(hbar.clone())),
    ]);
    bound.coefficients_in(Var::U).iter().map(|c| c.as_constant().expect("only u remains")).collect()
}

fn mul_coeffs(a: &[ExactScalar], b: &[ExactScalar]) -> Vec<ExactScalar> {
    let mut out = vec![ExactScalar::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    out
}

fn horner(coeffs: &[ExactScalar], u: &ExactScalar) -> ExactScalar {
    coeffs.iter().rev().fold(ExactScalar::zero(), |acc, c| &(&acc * u) + c)
}

fn rat_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::INFINITY)
}

/// `S_k = sum_{u>=0} u^k mu^u` for `k <= k_max`:
/// `S_0 = 1/(1-mu)`, `(1-mu) S_k = mu sum_{j<k} C(k,j) S_j`.
pub fn moment_sums(mu: &BigRational, k_max: usize) -> Vec<BigRational> {
    let one = BigRational::one();
    let inv = &one / (&one - mu);
    let mut out: Vec<BigRational> = vec![inv.clone()];
    for k in 1..=k_max {
        let mut acc = BigRational::zero();
        for (j, s) in out.iter().enumerate() {
            acc += BigRational::from(binomial(k as u32, j as u32)) * s;
        }
        out.push(mu * &acc * &inv);
    }
    out
}

pub struct WeightedSum {
    /// `sum_{u <= u_max} f(u) mu^u`
    pub partial: ExactScalar,
    /// The full series in closed form.
    pub exact: ExactScalar,
    /// Upper bound on `|sum_{u > u_max} f(u) mu^u|`; infinite when not certified.
    pub tail_bound: f64,
}

/// `sum_u f(u) mu^u` for a polynomial `f` with exact coefficients and `0 < mu < 1`.
pub fn weighted_sum(f: &[ExactScalar], mu: &BigRational, u_max: u64) -> WeightedSum {
    let mut partial = ExactScalar::zero();
    let mut mu_pow = BigRational::one();
    for u in 0..=u_max {
        let val = horner(f, &ExactScalar::int(u as i64));
        partial += &(&val * &ExactScalar::from(mu_pow.clone()));
        mu_pow *= mu;
    }
    let sums = moment_sums(mu, f.len().saturating_sub(1));
    let exact = f
        .iter()
        .zip(&sums)
        .fold(ExactScalar::zero(), |acc, (a, s)| &acc + &(a * &ExactScalar::from(s.clone())));

    // |f(u)| <= B(u) = sum |a_k| u^k, and B(u+1)/B(u) <= ((u+1)/u)^deg for u >= U+1
    let deg = f.len().saturating_sub(1) as i32;
    let bounds: Vec<f64> = f.iter().map(|a| rat_to_f64(&a.abs_bound())).collect();
    let u1 = (u_max + 1) as f64;
    let b_u1: f64 = bounds.iter().rev().fold(0.0, |acc, b| acc * u1 + b);
    let mu_f = rat_to_f64(mu);
    let r = mu_f * ((u1 + 1.0) / u1).powi(deg);
    let tail_bound = if r < 1.0 {
        let log_first = b_u1.ln() + u1 * mu_f.ln();
        log_first.exp() / (1.0 - r) * (1.0 + 1e-12)
    } else {
        f64::INFINITY
    };
    WeightedSum { partial, exact, tail_bound }
}

/// `d'_n^2 = 1/2 (n!)^2 c^{2n} (1-s)(s^2-1)^n`.
pub fn discrete_norm(n: u32, s: &ExactScalar, hbar: &ExactScalar) -> ExactScalar {
    let c = &ExactScalar::ratio(1, 2) * &(&ExactScalar::i() * hbar);
    let one = ExactScalar::one();
    let f = ExactScalar::from(factorial(n));
    &(&(&(&ExactScalar::ratio(1, 2) * &(&f * &f)) * &c.pow(2 * n)) * &(&one - s)) * &(&(s * s) - &one).pow(n)
}

fn finish(n: u32, m: u32, partial: Complex64, rhs: Complex64, scale: f64, tail: f64, tol: f64) -> OrthogonalityResult {
    let abs_err = (partial - rhs).norm();
    let denom = partial.norm().max(rhs.norm()).max(scale);
    let rel_err = abs_err / denom;
    let certified = tail / denom <= tol;
    let (status, note) = if !certified {
        (Status::Flagged, Some(format!("tail bound {tail:e} not certified below tolerance; raise u_max")))
    } else if rel_err <= tol {
        (Status::Pass, None)
    } else {
        (Status::Fail, None)
    };
    OrthogonalityResult {
        n,
        m,
        lhs_re: partial.re,
        lhs_im: partial.im,
        rhs_re: rhs.re,
        rhs_im: rhs.im,
        abs_err,
        rel_err,
        tail_bound: tail,
        status,
        exact_sum: None,
        exact_rhs: None,
        note,
    }
}

/// `sum_{u=0}^{u_max} P_n(s,u) P_m(s,u) rho'(u)` against `delta_nm d'_n^2`, with
/// `rho'(u) = mu^u Gamma(u+1)/u! = mu^u` and `mu = (s+1)/(s-1)`.
pub fn discrete_orthogonality(
    n: u32,
    m: u32,
    s: &BigRational,
    hbar: &BigRational,
    u_max: u64,
    tol: f64,
) -> Result<OrthogonalityResult> {
    let one = BigRational::one();
    if *s >= -one.clone() {
        return Err(Error::InvalidParameter(format!("discrete orthogonality needs s < -1, got {s}")));
    }
    let mu = (s + &one) / (s - &one);
    let sx = ExactScalar::from(s.clone());
    let hx = ExactScalar::from(hbar.clone());
    let table = by_recursion(n.max(m));
    let coeffs = |k: u32| exact_coeffs_in_u(&to_u_form(&table[k as usize].poly), &sx, &hx);
    let f = mul_coeffs(&coeffs(n), &coeffs(m));
    let ws = weighted_sum(&f, &mu, u_max);
    let rhs = if n == m { discrete_norm(n, &sx, &hx) } else { ExactScalar::zero() };
    let scale = (discrete_norm(n, &sx, &hx).to_complex().norm() * discrete_norm(m, &sx, &hx).to_complex().norm()).sqrt();
    let mut r = finish(n, m, ws.partial.to_complex(), rhs.to_complex(), scale, ws.tail_bound, tol);
    if ws.exact != rhs && r.status != Status::Flagged {
        r.status = Status::Fail;
        r.note = Some(format!("closed-form sum {} differs from {}", ws.exact, rhs));
    }
    r.exact_sum = Some(ws.exact);
    r.exact_rhs = Some(rhs);
    Ok(r)
}

/// Plain Meixner orthogonality, `gamma = 1`: `sum_u m_n m_m mu^u = delta_nm (n!)^2 mu^{-n}/(1-mu)`.
pub fn meixner_orthogonality(n: u32, m: u32, mu: &BigRational, u_max: u64, tol: f64) -> Result<OrthogonalityResult> {
    let one = BigRational::one();
    if !(mu.is_positive() && *mu < one) {
        return Err(Error::InvalidParameter(format!("need 0 < mu < 1, got {mu}")));
    }
    let mux = ExactScalar::from(mu.clone());
    let table = meixner_table(n.max(m), &MultiPoly::one(), &MultiPoly::constant(mux.clone()))?;
    let coeffs = |k: u32| -> Vec<ExactScalar> {
        let inv = ExactScalar::one() / mux.pow(k);
        table[k as usize]
            .scaled
            .coefficients_in(Var::U)
            .iter()
            .map(|c| &c.as_constant().expect("numeric") * &inv)
            .collect()
    };
    let f = mul_coeffs(&coeffs(n), &coeffs(m));
    let ws = weighted_sum(&f, mu, u_max);
    let norm = |k: u32| {
        let fk = ExactScalar::from(factorial(k));
        &(&(&fk * &fk) / &mux.pow(k)) / &(&ExactScalar::one() - &mux)
    };
    let rhs = if n == m { norm(n) } else { ExactScalar::zero() };
    let scale = (norm(n).to_complex().norm() * norm(m).to_complex().norm()).sqrt();
    let mut r = finish(n, m, ws.partial.to_complex(), rhs.to_complex(), scale, ws.tail_bound, tol);
    if ws.exact != rhs && r.status != Status::Flagged {
        r.status = Status::Fail;
    }
    r.exact_sum = Some(ws.exact);
    r.exact_rhs = Some(rhs);
    Ok(r)
}

fn check_phi(phi: f64) -> Result<()> {
    if phi > 0.0 && phi < PI {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("phi must lie in (0, pi), got {phi}")))
    }
}

/// `P_n^lambda(phi, t) = e^{-i n phi}/n! m_n^(2 lambda, e^{-2i phi})(-lambda + i t)`.
#[derive(Clone, Debug)]
pub struct MeixnerPollaczek {
    pub n: u32,
    pub phi: f64,
    pub lambda: f64,
    meixner: MeixnerPoly,
}

impl MeixnerPollaczek {
    pub fn new(n: u32, phi: f64, lambda: f64) -> Result<Self> {
        check_phi(phi)?;
        if lambda.is_nan() || lambda <= 0.0 {
            return Err(Error::InvalidParameter(format!("lambda must be positive, got {lambda}")));
        }
        let meixner = meixner(n, &MultiPoly::var(Var::Gamma), &MultiPoly::var(Var::Mu))?;
        Ok(MeixnerPollaczek { n, phi, lambda, meixner })
    }

    pub fn eval(&self, t: f64) -> Complex64 {
        let mu = Complex64::from_polar(1.0, -2.0 * self.phi);
        let u = Complex64::new(-self.lambda, t);
        let m = self.meixner.eval(u, Complex64::new(2.0 * self.lambda, 0.0), mu).expect("all symbols bound");
        let f = factorial(self.n).to_f64().unwrap_or(f64::INFINITY);
        Complex64::from_polar(1.0, -(self.n as f64) * self.phi) * m / f
    }
}

/// Float coefficients in `u` of `P_n(s, u)` at complex `s` and real `hbar`.
pub fn u_coeffs_float(p: &CartanPoly, s: Complex64, hbar: f64) -> Vec<Complex64> {
    to_u_form(&p.poly)
        .coefficients_in(Var::U)
        .iter()
        .map(|c| c.eval_float(&[(Var::S, s), (Var::Hbar, Complex64::new(hbar, 0.0))]).expect("bound"))
        .collect()
}

pub fn horner_c(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
}

/// `(lhs, rhs)` of `P_n(i cot phi, i t - 1/2) = n! (-hbar / 2 sin phi)^n P_n^{1/2}(phi, t)`.
pub fn pollaczek_bridge(n: u32, phi: f64, hbar: f64, t: f64) -> Result<(Complex64, Complex64)> {
    check_phi(phi)?;
    let p = &by_recursion(n)[n as usize];
    let s = Complex64::new(0.0, phi.cos() / phi.sin());
    let lhs = horner_c(&u_coeffs_float(p, s, hbar), Complex64::new(-0.5, t));
    let mp = MeixnerPollaczek::new(n, phi, 0.5)?.eval(t);
    let f = factorial(n).to_f64().unwrap_or(f64::INFINITY);
    let rhs = mp * f * (-hbar / (2.0 * phi.sin())).powi(n as i32);
    Ok((lhs, rhs))
}

/// `rho_0(x) = exp[(2 phi - pi) x / hbar] / cosh(pi x / hbar)`, evaluated without overflow.
pub fn rho0(x: f64, phi: f64, hbar: f64) -> f64 {
    let a = (2.0 * phi - PI) * x / hbar;
    let b = PI * x.abs() / hbar;
    2.0 * (a - b).exp() / (1.0 + (-2.0 * b).exp())
}

/// Right-hand side as printed: `delta_nm (n!)^2 (hbar / 2 sin phi)^{2n+1}`.
pub fn continuous_norm_as_printed(n: u32, phi: f64, hbar: f64) -> f64 {
    let f = factorial(n).to_f64().unwrap_or(f64::INFINITY);
    f * f * (hbar / (2.0 * phi.sin())).powi(2 * n as i32 + 1)
}

/// `int rho_0 dx = pi / (b cos(pi a / 2b))` with `a = (2 phi - pi)/hbar`, `b = pi/hbar`.
pub fn rho0_integral_closed_form(phi: f64, hbar: f64) -> f64 {
    hbar / phi.sin()
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalizationResolution {
    pub phi: f64,
    pub hbar: f64,
    pub quadrature_n0: f64,
    pub closed_form_n0: f64,
    pub printed_n0: f64,
    /// `quadrature_n0 / printed_n0`
    pub measured_ratio: f64,
    /// The constant applied to the printed right-hand side.
    pub resolved_constant: f64,
}

pub const CONTINUOUS_NORMALIZATION: f64 = 2.0;

/// Fixes the absolute normalization of the continuous relation from the `n = 0` integral.
pub fn normalization_resolution(phi: f64, hbar: f64, cfg: &QuadConfig) -> Result<NormalizationResolution> {
    check_phi(phi)?;
    let q = integrate_real_line(|x| Complex64::new(rho0(x, phi, hbar), 0.0), cfg);
    let printed = continuous_norm_as_printed(0, phi, hbar);
    Ok(NormalizationResolution {
        phi,
        hbar,
        quadrature_n0: q.value.re,
        closed_form_n0: rho0_integral_closed_form(phi, hbar),
        printed_n0: printed,
        measured_ratio: q.value.re / printed,
        resolved_constant: CONTINUOUS_NORMALIZATION,
    })
}

/// `int P_n(s, i x/hbar - 1/2) P_m(s, i x/hbar - 1/2) rho_0(x) dx`, `s = i cot phi`,
/// against `CONTINUOUS_NORMALIZATION * delta_nm (n!)^2 (hbar / 2 sin phi)^{2n+1}`.
pub fn continuous_orthogonality(n: u32, m: u32, phi: f64, hbar: f64, cfg: &QuadConfig, tol: f64) -> Result<OrthogonalityResult> {
    check_phi(phi)?;
    let table = by_recursion(n.max(m));
    let s = Complex64::new(0.0, phi.cos() / phi.sin());
    let cn = u_coeffs_float(&table[n as usize], s, hbar);
    let cm = u_coeffs_float(&table[m as usize], s, hbar);
    let q = integrate_real_line(
        |x| {
            let u = Complex64::new(-0.5, x / hbar);
            horner_c(&cn, u) * horner_c(&cm, u) * rho0(x, phi, hbar)
        },
        cfg,
    );
    let norm = |k: u32| CONTINUOUS_NORMALIZATION * continuous_norm_as_printed(k, phi, hbar);
    let rhs = if n == m { norm(n) } else { 0.0 };
    let scale = (norm(n) * norm(m)).sqrt();
    let mut r = finish(n, m, q.value, Complex64::new(rhs, 0.0), scale, q.error_estimate, tol);
    if !q.converged {
        r.status = Status::Flagged;
        r.note = Some(format!("quadrature did not converge after {} levels", q.levels));
    }
    Ok(r)
}

fn pochhammer(a: Complex64, k: u32) -> Complex64 {
    (0..k).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (a + j as f64))
}

/// Continuous Hahn `h_n^(alpha, beta)(z, N)` as the terminating
/// `(-1)^n (N-n)_n (beta+1)_n / n! 3F2(-n, alpha+beta+n+1, -z; beta+1, 1-N; 1)`.
pub fn continuous_hahn(n: u32, alpha: f64, beta: f64, z: Complex64, big_n: f64) -> Complex64 {
    let c = |x: f64| Complex64::new(x, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut term = c(1.0);
    for k in 0..=n {
        sum += term;
        let kf = k as f64;
        term = term * (c(kf - n as f64)) * c(alpha + beta + n as f64 + 1.0 + kf) * (-z + kf)
            / (c(beta + 1.0 + kf) * c(1.0 - big_n + kf) * (kf + 1.0));
    }
    let f = factorial(n).to_f64().unwrap_or(f64::INFINITY);
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    sum * pochhammer(c(big_n - n as f64), n) * pochhammer(c(beta + 1.0), n) * sign / f
}

#[derive(Clone, Debug, Serialize)]
pub struct HahnPoint {
    pub n: u32,
    pub t: f64,
    /// `P_n(0, i t - 1/2)`
    pub cartan: [f64; 2],
    /// `n! (-hbar/2)^n P_n^{1/2}(pi/2, t)`
    pub via_pollaczek: [f64; 2],
    /// `n! (-hbar/2)^n [(1/2)_n]^{-1} (-i)^n h_n^(0,0)(i t/2 - 1/4, 1/2)`
    pub via_hahn: [f64; 2],
}

pub fn hahn_point(n: u32, t: f64, hbar: f64) -> Result<HahnPoint> {
    let p = &by_recursion(n)[n as usize];
    let lhs = horner_c(&u_coeffs_float(p, Complex64::new(0.0, 0.0), hbar), Complex64::new(-0.5, t));
    let f = factorial(n).to_f64().unwrap_or(f64::INFINITY);
    let pre = f * (-hbar / 2.0).powi(n as i32);
    let mp = MeixnerPollaczek::new(n, FRAC_PI_2, 0.5)?.eval(t);
    let half_n = pochhammer(Complex64::new(0.5, 0.0), n);
    let h = continuous_hahn(n, 0.0, 0.0, Complex64::new(-0.25, t / 2.0), 0.5);
    let q_hahn = Complex64::new(0.0, -1.0).powu(n) * h;
    let a = |z: Complex64| [z.re, z.im];
    Ok(HahnPoint { n, t, cartan: a(lhs), via_pollaczek: a(mp * pre), via_hahn: a(q_hahn * pre / half_n) })
}

/// `|a - b|` relative to `max(|a|, |b|, floor)`.
fn rel(a: Complex64, b: Complex64, floor: f64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(floor)
}

/// `n! (hbar / 2 sin phi)^n`, the size of `P_n(s, i t - 1/2)` near `t = 0`; used as
/// the floor for relative comparisons at zeros.
pub fn bridge_scale(n: u32, phi: f64, hbar: f64) -> f64 {
    factorial(n).to_f64().unwrap_or(f64::INFINITY) * (hbar / (2.0 * phi.sin())).powi(n as i32)
}

/// Weyl-ordering special cases through Meixner-Pollaczek and continuous Hahn.
pub fn hahn_special_cases(n_max: u32, hbar: f64, grid: &[f64], tol: f64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        for &t in grid {
            let pt = hahn_point(n, t, hbar)?;
            let z = |a: [f64; 2]| Complex64::new(a[0], a[1]);
            let params = format!("n={n},t={t}");
            let floor = bridge_scale(n, FRAC_PI_2, hbar);
            out.push(Check::numeric("classical.hahn.pollaczek", &params, rel(z(pt.cartan), z(pt.via_pollaczek), floor), tol));
            out.push(Check::numeric("classical.hahn.hahn", &params, rel(z(pt.cartan), z(pt.via_hahn), floor), tol));
        }
    }
    Ok(out)
}

pub fn write_orthogonality_csv(path: &Path, rows: &[OrthogonalityResult]) -> Result<()> {
    let io = |e: std::io::Error| Error::Io { path: path.to_path_buf(), source: e };
    let mut w = csv::Writer::from_path(path).map_err(|e| io(e.into()))?;
    for r in rows {
        w.serialize(r).map_err(|e| io(e.into()))?;
    }
    w.flush().map_err(io)
}

#[derive(Clone, Debug)]
pub struct ClassicalOptions {
    pub n_max: u32,
    pub hbar: f64,
    pub phis: Vec<f64>,
    pub tol: f64,
    pub u_max: u64,
    pub quad: QuadConfig,
}

impl Default for ClassicalOptions {
    fn default() -> Self {
        ClassicalOptions { n_max: 6, hbar: 1.0, phis: vec![FRAC_PI_2, PI / 3.0], tol: 1e-8, u_max: 400, quad: QuadConfig::default() }
    }
}

/// The full classical-polynomial suite.
pub fn verify_suite(opts: &ClassicalOptions) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("classical");
    let n_sym = opts.n_max.max(8);
    let mut err = None;
    report.timed("classical.meixner", |out| {
        match meixner_table(n_sym, &MultiPoly::var(Var::Gamma), &MultiPoly::var(Var::Mu)) {
            Ok(t) => {
                for m in &t {
                    let params = format!("n={}", m.n);
                    out.push(Check::exact("classical.meixner.difference", &params, m.difference_residual().is_zero()));
                    out.push(Check::exact("classical.meixner.normalization", &params, m.normalization_holds()));
                }
            }
            Err(e) => err = Some(e),
        }
        match identify(n_sym, &MultiPoly::var(Var::S)) {
            Ok(c) => out.extend(c),
            Err(e) => err = Some(e),
        }
        out.extend(recurrence_dictionary(n_sym));
    });
    if let Some(e) = err {
        return Err(e);
    }
    let s = BigRational::from_integer((-3).into());
    let two = BigRational::from_integer(2.into());
    let half = BigRational::new(1.into(), 2.into());
    let mut discrete = Vec::new();
    report.timed("classical.discrete", |out| {
        for n in 0..=opts.n_max {
            for m in 0..=opts.n_max {
                if let Ok(r) = discrete_orthogonality(n, m, &s, &two, opts.u_max, 1e-10) {
                    out.push(r.to_check("classical.discrete", "s=-3,hbar=2", 1e-10));
                    discrete.push(r);
                }
                if let Ok(r) = meixner_orthogonality(n, m, &half, opts.u_max, 1e-10) {
                    out.push(r.to_check("classical.meixner_orthogonality", "mu=1/2", 1e-10));
                }
            }
        }
    });
    report.timed("classical.pollaczek", |out| {
        for &phi in &opts.phis {
            for n in 0..=opts.n_max {
                let Ok(mp) = MeixnerPollaczek::new(n, phi, 0.5) else { continue };
                let worst = (-20..=20).map(|k| {
                    let v = mp.eval(k as f64 * 0.25);
                    v.im.abs() / v.norm().max(1.0)
                });
                let worst = worst.fold(0.0, f64::max);
                out.push(Check::numeric("classical.pollaczek.real", format!("n={n},phi={phi:.6}"), worst, 1e-12));
            }
        }
        let phi = PI / 3.0;
        for n in 0..=opts.n_max {
            for t in [0.0, 1.0, -1.0, 2.0] {
                if let Ok((a, b)) = pollaczek_bridge(n, phi, opts.hbar, t) {
                    let floor = bridge_scale(n, phi, opts.hbar);
                    out.push(Check::numeric("classical.pollaczek.bridge", format!("n={n},t={t}"), rel(a, b, floor), 1e-10));
                }
            }
        }
    });
    report.timed("classical.continuous", |out| {
        for &phi in &opts.phis {
            for n in 0..=opts.n_max {
                for m in 0..=opts.n_max {
                    if let Ok(r) = continuous_orthogonality(n, m, phi, opts.hbar, &opts.quad, opts.tol) {
                        out.push(r.to_check("classical.continuous", &format!("phi={phi:.6}"), opts.tol));
                    }
                }
            }
        }
    });
    report.timed("classical.hahn", |out| {
        if let Ok(c) = hahn_special_cases(opts.n_max.min(5), opts.hbar, &[0.0, 1.0, -1.0, 2.0, -2.0], 1e-10) {
            out.extend(c);
        }
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn meixner_low_order() {
        let mu = MultiPoly::var(Var::Mu);
        let m1 = meixner(1, &MultiPoly::one(), &mu).unwrap();
        // mu m_1 = mu - (1-mu) u
        let want = &mu - &(&(&MultiPoly::one() - &mu) * &MultiPoly::var(Var::U));
        assert_eq!(m1.scaled, want);
        assert!(meixner(2, &MultiPoly::one(), &MultiPoly::zero()).is_err());
    }

    #[test]
    fn bridge_small() {
        for c in identify(4, &MultiPoly::var(Var::S)).unwrap() {
            assert_eq!(c.status, Status::Pass, "{c:?}");
        }
        assert!(identify(2, &MultiPoly::one()).is_err());
        assert!(identify(2, &MultiPoly::int(-1)).is_err());
    }

    #[test]
    fn geometric_value() {
        let s = BigRational::from_integer((-3).into());
        let h = BigRational::from_integer(2.into());
        let r = discrete_orthogonality(0, 0, &s, &h, 100, 1e-10).unwrap();
        assert_eq!(r.exact_sum, Some(ExactScalar::int(2)));
        assert_eq!(r.status, Status::Pass);
        let r = discrete_orthogonality(1, 1, &s, &h, 100, 1e-10).unwrap();
        assert_eq!(r.exact_rhs, Some(ExactScalar::int(-16)));
        assert!(discrete_orthogonality(0, 0, &BigRational::from_integer((-1).into()), &h, 10, 1e-10).is_err());
        let r = discrete_orthogonality(3, 3, &s, &h, 5, 1e-10).unwrap();
        assert_eq!(r.status, Status::Flagged);
    }

    #[test]
    fn moment_sums_small() {
        let half = BigRational::new(1.into(), 2.into());
        let s = moment_sums(&half, 2);
        // sum u (1/2)^u = 2, sum u^2 (1/2)^u = 6
        assert_eq!(s[1], BigRational::from_integer(2.into()));
        assert_eq!(s[2], BigRational::from_integer(6.into()));
    }

    #[test]
    fn normalization_constant() {
        let r = normalization_resolution(PI / 3.0, 1.0, &QuadConfig::default()).unwrap();
        assert!((r.measured_ratio - 2.0).abs() < 1e-12, "{r:?}");
        assert!((r.quadrature_n0 - r.closed_form_n0).abs() < 1e-12);
    }
}
