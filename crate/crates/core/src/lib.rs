//! Exact Weyl-algebra orderings, Cartan polynomials and their su(1,1) and
//! classical-polynomial structure.

pub mod analysis;
pub mod cartan;
pub mod classical;
pub mod commands;
pub mod config;
pub mod error;
pub mod lattice;
pub mod poly;
pub mod quad;
pub mod report;
pub mod scalar;
pub mod series;
pub mod su11;
pub mod weyl;

pub use error::{Error, Result};
pub use poly::{FloatComplex, Monomial, MultiPoly, Var};
pub use report::{Check, Status, VerificationReport};
pub use scalar::ExactScalar;
