//! Run configuration: one TOML document, every key overridable from the command line.

use std::f64::consts::PI;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{MultiPoly, Var};
use crate::scalar::ExactScalar;

pub const SUITES: [&str; 5] = ["weyl", "cartan", "su11", "classical", "analysis"];

/// An ordering parameter: `sym`, `p/q` or `p/q*i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SValue {
    Symbolic,
    Real(BigRational),
    Imaginary(BigRational),
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    (!d.is_zero()).then(|| BigRational::new(n, d))
}

impl FromStr for SValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "sym" {
            return Ok(SValue::Symbolic);
        }
        let bad = || Error::Config(format!("s value {s:?}: expected \"sym\", \"p/q\" or \"p/q*i\""));
        if let Some(head) = t.strip_suffix("*i") {
            return parse_rational(head).map(SValue::Imaginary).ok_or_else(bad);
        }
        if t == "i" {
            return Ok(SValue::Imaginary(BigRational::from_integer(1.into())));
        }
        parse_rational(t).map(SValue::Real).ok_or_else(bad)
    }
}

impl fmt::Display for SValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SValue::Symbolic => write!(f, "sym"),
            SValue::Real(r) => write!(f, "{r}"),
            SValue::Imaginary(r) => write!(f, "{r}*i"),
        }
    }
}

impl SValue {
    pub fn to_poly(&self) -> MultiPoly {
        match self {
            SValue::Symbolic => MultiPoly::var(Var::S),
            SValue::Real(r) => MultiPoly::constant(ExactScalar::real(r.clone())),
            SValue::Imaginary(r) => MultiPoly::constant(ExactScalar::imag(r.clone())),
        }
    }
}

/// An angle in radians: a decimal number, `pi`, `pi/q` or `p*pi/q`.
pub fn parse_angle(s: &str) -> Result<f64> {
    let t = s.trim().replace(' ', "");
    let bad = || Error::Config(format!("angle {s:?}: expected a number or p*pi/q"));
    if let Ok(x) = t.parse::<f64>() {
        return Ok(x);
    }
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.to_string(), b.parse::<f64>().map_err(|_| bad())?),
        None => (t.clone(), 1.0),
    };
    let k = match num.as_str() {
        "pi" => 1.0,
        other => other.strip_suffix("*pi").or_else(|| other.strip_suffix("pi")).and_then(|k| k.parse::<f64>().ok()).ok_or_else(bad)?,
    };
    Ok(k * PI / den)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub n_max: u32,
    pub s: Vec<String>,
    pub phi: Vec<String>,
    pub v: Vec<f64>,
    pub hbar: f64,
    /// Overrides the pinned per-check tolerances when set.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    pub out: PathBuf,
    pub jobs: usize,
    pub suites: Vec<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            n_max: 6,
            s: vec!["sym".into()],
            phi: vec!["pi/2".into(), "pi/3".into()],
            v: vec![0.0, 1.0, 2.0],
            hbar: 1.0,
            tol: None,
            out: PathBuf::from("out"),
            jobs: 1,
            suites: SUITES.iter().map(|s| s.to_string()).collect(),
        }
    }
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: RunConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(t) = self.tol {
            if !(t > 0.0 && t.is_finite()) {
                return Err(Error::Config(format!("tol must be positive, got {t}")));
            }
        }
        if !(self.hbar > 0.0 && self.hbar.is_finite()) {
            return Err(Error::Config(format!("hbar must be positive, got {}", self.hbar)));
        }
        if self.jobs == 0 {
            return Err(Error::Config("jobs must be at least 1".into()));
        }
        self.s_values()?;
        for phi in self.phis()? {
            if !(phi > 0.0 && phi < PI) {
                return Err(Error::Config(format!("phi must lie in (0, pi), got {phi}")));
            }
        }
        if self.v.iter().any(|v| !v.is_finite()) {
            return Err(Error::Config("v values must be finite".into()));
        }
        self.suite_list()?;
        Ok(())
    }

    pub fn s_values(&self) -> Result<Vec<SValue>> {
        self.s.iter().map(|s| s.parse()).collect()
    }

    pub fn phis(&self) -> Result<Vec<f64>> {
        self.phi.iter().map(|p| parse_angle(p)).collect()
    }

    /// The requested suites in canonical order; unknown names and an empty list are errors.
    pub fn suite_list(&self) -> Result<Vec<&'static str>> {
        if self.suites.is_empty() {
            return Err(Error::Config("no suites selected".into()));
        }
        for s in &self.suites {
            if !SUITES.contains(&s.as_str()) {
                return Err(Error::Config(format!("unknown suite {s:?}; known: {}", SUITES.join(", "))));
            }
        }
        Ok(SUITES.iter().copied().filter(|k| self.suites.iter().any(|s| s == k)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_spellings() {
        assert_eq!("sym".parse::<SValue>().unwrap(), SValue::Symbolic);
        assert_eq!("-3".parse::<SValue>().unwrap().to_string(), "-3");
        assert_eq!("1/2*i".parse::<SValue>().unwrap().to_poly(), MultiPoly::constant(ExactScalar::imag(BigRational::new(1.into(), 2.into()))));
        assert!("1/0".parse::<SValue>().is_err());
        assert!("x".parse::<SValue>().is_err());
    }

    #[test]
    fn angles() {
        assert!((parse_angle("pi/3").unwrap() - PI / 3.0).abs() < 1e-15);
        assert!((parse_angle("2*pi/3").unwrap() - 2.0 * PI / 3.0).abs() < 1e-15);
        assert!((parse_angle("0.5").unwrap() - 0.5).abs() < 1e-15);
        assert!(parse_angle("tau").is_err());
    }

    #[test]
    fn toml_round_trip_and_validation() {
        let cfg = RunConfig::from_toml("n_max = 4\ns = [\"sym\", \"-3\", \"1/2*i\"]\nsuites = [\"cartan\"]\n").unwrap();
        assert_eq!(cfg.n_max, 4);
        assert_eq!(cfg.suite_list().unwrap(), vec!["cartan"]);
        assert!(RunConfig::from_toml("tol = -1.0").is_err());
        assert!(RunConfig::from_toml("suites = []").is_err());
        assert!(RunConfig::from_toml("suites = [\"nope\"]").is_err());
        assert!(RunConfig::from_toml("bogus = 1").is_err());
        let text = toml::to_string(&cfg).unwrap();
        assert_eq!(RunConfig::from_toml(&text).unwrap(), cfg);
    }
}
