//! Configurable-precision engine for Hasse-Weil L-functions of elliptic
//! curves over Q and the family of truncated-Euler-product approximations
//! Lambda_N, with zero localization around the central point.
//!
//! Module map:
//! - [`precision`], [`real`], [`complex`], [`gamma`]: arbitrary-precision
//!   arithmetic and the special functions (Gamma, upper incomplete Gamma,
//!   archimedean factor).
//! - [`curve`]: curve data, point counting, Dirichlet coefficients.
//! - [`smooth`]: smooth-index enumeration.
//! - [`euler`]: local factors, pole spectra, and the direct
//!   (Euler-minus-principal-part) construction used as a validation oracle.
//! - [`approx`]: the production incomplete-gamma series evaluators and the
//!   leading error term.
//! - [`zeros`]: winding-number zero counting, zero refinement, Taylor data,
//!   and the scaled polygon reports.
//! - [`formats`]: curve file schema, coefficient cache, report serialization.
//! - [`svg`]: deterministic constellation plots.

pub mod approx;
pub mod bundled;
pub mod complex;
pub mod curve;
pub mod error;
pub mod euler;
pub mod formats;
pub mod gamma;
pub mod precision;
pub mod real;
pub mod smooth;
pub mod svg;
pub mod zeros;

pub use complex::Complex;
pub use error::{Error, Result};
pub use precision::PrecisionConfig;
pub use real::Real;
