//! Exact Fano test for homogeneous toric bundles over flag manifolds.
//!
//! A bundle `M = G^C ×_{P,τ} F` is described by a compact semisimple group
//! (a product of simple factors), a polarization element fixing the flag
//! manifold `G/K`, a smooth complete fan for the toric fiber `F`, and the
//! twist `τ` on the center `z(k)`. [`check`] decides whether `c₁(M) > 0`
//! with exact rational arithmetic and reports every margin.
//!
//! ```
//! use toric_fano::{check, presets};
//!
//! let report = check(&presets::hirzebruch(1)).unwrap();
//! assert!(report.verdict);
//! assert_eq!(report.min_margin.to_string(), "1/4");
//! ```

pub mod criterion;
pub mod error;
pub mod flag;
pub mod io;
pub mod linalg;
pub mod root_system;
pub mod toric_fiber;
pub mod twist;

pub use criterion::{evaluate_criterion, FanoReport};
pub use error::{Error, Result};
pub use io::{check, parse_spec, presets, ProblemSpec};
pub use linalg::Rational;
