//! The command-line operations, callable without the binary.
//!
//! Every command returns an [`Outcome`]: a deterministic JSON document, its wall
//! times kept in a separate map, a human-readable summary and a pass flag.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use num_complex::Complex64;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::{self, AnalysisOptions, SchrodingerCase};
use crate::cartan::{self, by_recursion, explicit, ExplicitForm};
use crate::classical::{self, ClassicalOptions, OrthogonalityResult};
use crate::config::{RunConfig, SValue};
use crate::error::{Error, Result};
use crate::quad::QuadConfig;
use crate::report::{Status, VerificationReport, SCHEMA_VERSION};
use crate::su11;
use crate::weyl::parse::parse_operator;
use crate::weyl::{suite as weyl_suite, BracketKind};

#[derive(Clone, Debug)]
pub struct Outcome {
    pub command: &'static str,
    pub passed: bool,
    pub document: Value,
    /// Milliseconds; never part of `document`.
    pub timing: BTreeMap<String, f64>,
    pub summary: String,
    pub files: Vec<PathBuf>,
}

impl Outcome {
    fn new(command: &'static str, passed: bool, document: Value, summary: String) -> Self {
        Outcome { command, passed, document, timing: BTreeMap::new(), summary, files: Vec::new() }
    }

    /// `{schema_version, command, passed, result, timing_ms}`; only `timing_ms` varies between identical runs.
    pub fn to_json(&self) -> String {
        let doc = json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "passed": self.passed,
            "result": self.document,
            "timing_ms": self.timing,
        });
        serde_json::to_string_pretty(&doc).expect("json values serialize")
    }

    /// The JSON with `timing_ms` removed, for byte comparison.
    pub fn deterministic_json(&self) -> String {
        let doc = json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "passed": self.passed,
            "result": self.document,
        });
        serde_json::to_string_pretty(&doc).expect("json values serialize")
    }

    pub fn write_json(&mut self, dir: &Path) -> Result<PathBuf> {
        let path = dir.join(format!("{}.json", self.command));
        write_file(&path, &self.to_json())?;
        self.files.push(path.clone());
        Ok(path)
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |e| Error::Io { path: path.to_path_buf(), source: e }
}

fn ensure_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(io_err(dir))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    if let Some(parent) = path.parent() {
        ensure_dir(parent)?;
    }
    fs::write(path, text).map_err(io_err(path))
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

/// `P_0 .. P_{n_max}` as JSON rows and a text table, with the explicit forms
/// checked against the recursion on the way.
pub fn cmd_table(cfg: &RunConfig) -> Result<Outcome> {
    cfg.validate()?;
    let t0 = Instant::now();
    let table = by_recursion(cfg.n_max);
    let mismatches: Vec<u32> = table
        .iter()
        .filter(|p| explicit(p.n, ExplicitForm::Plus) != **p || explicit(p.n, ExplicitForm::Minus) != **p)
        .map(|p| p.n)
        .collect();
    let rows: Vec<_> = table.iter().map(cartan::table_row).collect();
    let text = cartan::text_table(&table);
    let doc = json!({ "n_max": cfg.n_max, "rows": to_value(&rows), "route_mismatches": mismatches });
    let mut out = Outcome::new("table", mismatches.is_empty(), doc, text.clone());
    out.timing.insert("table".into(), t0.elapsed().as_secs_f64() * 1e3);
    let txt = cfg.out.join("table.txt");
    write_file(&txt, &text)?;
    out.files.push(txt);
    out.write_json(&cfg.out)?;
    Ok(out)
}

fn run_suite(name: &str, cfg: &RunConfig) -> Result<VerificationReport> {
    let phis = cfg.phis()?;
    match name {
        "weyl" => Ok(weyl_suite::verify_suite(cfg.n_max.min(3))),
        "cartan" => Ok(cartan::verify_suite(cfg.n_max)),
        "su11" => Ok(su11::verify_suite(cfg.n_max, 12)),
        "classical" => {
            let mut opts = ClassicalOptions { n_max: cfg.n_max, hbar: cfg.hbar, phis, ..Default::default() };
            if let Some(t) = cfg.tol {
                opts.tol = t;
            }
            classical::verify_suite(&opts)
        }
        "analysis" => {
            let mut opts = AnalysisOptions { n_max: cfg.n_max, vs: cfg.v.clone(), ..Default::default() };
            if let Some(t) = cfg.tol {
                opts.tol = t;
            }
            Ok(analysis::verify_suite(&opts))
        }
        other => Err(Error::Config(format!("unknown suite {other:?}"))),
    }
}

/// Runs the selected suites, up to `cfg.jobs` at a time; the report order is
/// fixed by suite name, then tag, then parameters.
pub fn cmd_verify(cfg: &RunConfig) -> Result<Outcome> {
    cfg.validate()?;
    let names = cfg.suite_list()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    let reports: Vec<Result<VerificationReport>> = pool.install(|| names.par_iter().map(|n| run_suite(n, cfg)).collect());
    let mut reports = reports.into_iter().collect::<Result<Vec<_>>>()?;
    let mut timing = BTreeMap::new();
    let mut suites = Vec::new();
    let mut lines = Vec::new();
    for r in &mut reports {
        r.sort();
        for (k, v) in &r.timing {
            timing.insert(format!("{}/{k}", r.suite), *v);
        }
        lines.push(r.summary_line());
        for c in r.checks.iter().filter(|c| c.status != Status::Pass) {
            let note = c.note.as_deref().map(|n| format!(" ({n})")).unwrap_or_default();
            lines.push(format!("  {:?} {} [{}] residual {:.3e} tol {:.1e}{note}", c.status, c.tag, c.params, c.residual, c.tolerance));
        }
        suites.push(json!({ "suite": r.suite, "passed": r.passed(), "checks": to_value(&r.checks) }));
    }
    let passed = reports.iter().all(|r| r.passed());
    let mut out = Outcome::new("verify", passed, json!({ "suites": suites }), lines.join("\n"));
    out.timing = timing;
    out.write_json(&cfg.out)?;
    Ok(out)
}

/// Canonical normal-ordered form of an operator expression.
pub fn cmd_normalize(expr: &str) -> Result<Outcome> {
    let op = parse_operator(expr)?;
    let text = op.to_string();
    Ok(Outcome::new("normalize", true, json!({ "input": expr, "normal_form": text }), text))
}

/// `[a, b]` or `[a, b]_+` of two operator expressions, normal-ordered.
pub fn cmd_bracket(a: &str, b: &str, anticommutator: bool) -> Result<Outcome> {
    let x = parse_operator(a)?;
    let y = parse_operator(b)?;
    let kind = if anticommutator { BracketKind::Anticommutator } else { BracketKind::Commutator };
    let text = x.bracket(&y, kind).to_string();
    let doc = json!({ "a": a, "b": b, "kind": if anticommutator { "anticommutator" } else { "commutator" }, "result": text });
    Ok(Outcome::new("bracket", true, doc, text))
}

fn status_counts(rows: &[OrthogonalityResult]) -> (usize, usize, usize) {
    let c = |s| rows.iter().filter(|r| r.status == s).count();
    (c(Status::Pass), c(Status::Fail), c(Status::Flagged))
}

/// Discrete grids for every real `s < -1` in the config (`s = -3` if none) and
/// continuous grids for every `phi`, each written as CSV, plus the normalization
/// resolution of the continuous relation.
pub fn cmd_orthogonality(cfg: &RunConfig) -> Result<Outcome> {
    cfg.validate()?;
    ensure_dir(&cfg.out)?;
    let t0 = Instant::now();
    let minus_one = BigRational::from_integer((-1).into());
    let mut ss: Vec<BigRational> = cfg
        .s_values()?
        .into_iter()
        .filter_map(|s| match s {
            SValue::Real(r) if r < minus_one => Some(r),
            _ => None,
        })
        .collect();
    if ss.is_empty() {
        ss.push(BigRational::from_integer((-3).into()));
    }
    let hbar = BigRational::from_float(cfg.hbar).ok_or_else(|| Error::Config("hbar is not finite".into()))?;
    let tol_discrete = cfg.tol.unwrap_or(1e-10);
    let tol_continuous = cfg.tol.unwrap_or(1e-8);
    let mut files = Vec::new();
    let mut grids = Vec::new();
    let mut lines = Vec::new();
    let mut passed = true;
    for s in &ss {
        let mut rows = Vec::new();
        for n in 0..=cfg.n_max {
            for m in 0..=cfg.n_max {
                rows.push(classical::discrete_orthogonality(n, m, s, &hbar, 400, tol_discrete)?);
            }
        }
        let path = cfg.out.join(format!("discrete_s{s}.csv").replace('/', "_"));
        classical::write_orthogonality_csv(&path, &rows)?;
        let (p, f, fl) = status_counts(&rows);
        passed &= f == 0;
        lines.push(format!("discrete s={s} hbar={}: {p} pass, {f} fail, {fl} flagged -> {}", cfg.hbar, path.display()));
        grids.push(json!({ "kind": "discrete", "s": s.to_string(), "hbar": cfg.hbar, "tol": tol_discrete, "rows": to_value(&rows) }));
        files.push(path);
    }
    let quad = QuadConfig::default();
    let mut resolutions = Vec::new();
    for (label, phi) in cfg.phi.iter().zip(cfg.phis()?) {
        let res = classical::normalization_resolution(phi, cfg.hbar, &quad)?;
        lines.push(format!(
            "continuous normalization at phi={label}: measured n=0 ratio {:.12}, closed form {:.12}, resolved constant K = {}",
            res.measured_ratio,
            res.closed_form_n0 / res.printed_n0,
            res.resolved_constant
        ));
        resolutions.push(to_value(&res));
        let mut rows = Vec::new();
        for n in 0..=cfg.n_max {
            for m in 0..=cfg.n_max {
                rows.push(classical::continuous_orthogonality(n, m, phi, cfg.hbar, &quad, tol_continuous)?);
            }
        }
        let path = cfg.out.join(format!("continuous_phi{phi:.6}.csv"));
        classical::write_orthogonality_csv(&path, &rows)?;
        let (p, f, fl) = status_counts(&rows);
        passed &= f == 0;
        lines.push(format!("continuous phi={label} hbar={}: {p} pass, {f} fail, {fl} flagged -> {}", cfg.hbar, path.display()));
        grids.push(json!({ "kind": "continuous", "phi": phi, "hbar": cfg.hbar, "tol": tol_continuous, "rows": to_value(&rows) }));
        files.push(path);
    }
    let doc = json!({
        "grids": grids,
        "normalization": { "resolved_constant": classical::CONTINUOUS_NORMALIZATION, "per_phi": resolutions },
    });
    let mut out = Outcome::new("orthogonality", passed, doc, lines.join("\n"));
    out.timing.insert("orthogonality".into(), t0.elapsed().as_secs_f64() * 1e3);
    out.files = files;
    out.write_json(&cfg.out)?;
    Ok(out)
}

/// Residual of the zero-energy equation for `n <= min(n_max, 5)` and each `v`,
/// one CSV per case.
pub fn cmd_schrodinger(cfg: &RunConfig) -> Result<Outcome> {
    cfg.validate()?;
    ensure_dir(&cfg.out)?;
    let t0 = Instant::now();
    let tol = cfg.tol.unwrap_or(1e-10);
    let mut cases = Vec::new();
    let mut lines = Vec::new();
    let mut files = Vec::new();
    let mut passed = true;
    for n in 0..=cfg.n_max.min(5) {
        for &v in &cfg.v {
            let case = SchrodingerCase::symmetric(n, v, 8.0, 161)?;
            let o = analysis::schrodinger_residual(&case);
            let exact = analysis::schrodinger_polynomial_residual(n).is_zero();
            let ok = exact && o.relative <= tol && o.parity_defect.is_none_or(|d| d <= 1e-13);
            passed &= ok;
            let path = cfg.out.join(format!("schrodinger_n{n}_v{v}.csv"));
            analysis::write_schrodinger_csv(&path, &o.rows)?;
            lines.push(format!(
                "n={n} v={v}: exact={exact} relative residual {:.3e}{} -> {}",
                o.relative,
                o.parity_defect.map(|d| format!(", parity defect {d:.1e}")).unwrap_or_default(),
                path.display()
            ));
            cases.push(json!({
                "n": n, "v": v, "exact_identity": exact, "max_residual": o.max_residual,
                "relative_residual": o.relative, "parity_defect": o.parity_defect, "passed": ok,
            }));
            files.push(path);
        }
    }
    let mut out = Outcome::new("schrodinger", passed, json!({ "tol": tol, "cases": cases }), lines.join("\n"));
    out.timing.insert("schrodinger".into(), t0.elapsed().as_secs_f64() * 1e3);
    out.files = files;
    out.write_json(&cfg.out)?;
    Ok(out)
}

/// Expansion points used by `genfun`, each paired with every configured `v`.
pub const GENFUN_POINTS: [f64; 3] = [0.0, 0.3, -0.5];

fn cplx(z: Complex64) -> Value {
    json!([z.re, z.im])
}

/// Generating-series coefficients through order `n_max` against `P_n / n!`.
pub fn cmd_genfun(cfg: &RunConfig) -> Result<Outcome> {
    cfg.validate()?;
    let t0 = Instant::now();
    let tol = cfg.tol.unwrap_or(1e-9);
    let order = cfg.n_max as usize;
    let mut points = Vec::new();
    let mut lines = Vec::new();
    let mut passed = true;
    for &y0 in &GENFUN_POINTS {
        for &v in &cfg.v {
            let checks = analysis::generating_function_check(y0, v, order, tol);
            let ok = checks.iter().all(|c| c.status != Status::Fail);
            passed &= ok;
            let g = analysis::generating_series(y0, v, order);
            let coeffs: Vec<Value> = (0..=order)
                .map(|n| json!({ "n": n, "series": cplx(g.coeffs[n]), "expected": cplx(analysis::expected_coefficient(n as u32, y0, v)) }))
                .collect();
            let worst = checks.iter().filter(|c| c.tag == "analysis.genfun").map(|c| c.residual).fold(0.0, f64::max);
            lines.push(format!("y0={y0} v={v}: max relative deviation {worst:.3e} through order {order}{}", if ok { "" } else { " FAIL" }));
            points.push(json!({ "y0": y0, "v": v, "coefficients": coeffs, "checks": to_value(&checks) }));
        }
    }
    let mut out = Outcome::new("genfun", passed, json!({ "order": order, "tol": tol, "points": points }), lines.join("\n"));
    out.timing.insert("genfun".into(), t0.elapsed().as_secs_f64() * 1e3);
    out.write_json(&cfg.out)?;
    Ok(out)
}
