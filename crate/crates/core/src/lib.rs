//! Certification of pretty good fractional revival (PGFR) of a vertex subset
//! under a diagonal perturbation `M + Q * D_K`.
//!
//! The pipeline combines exact symbolic factorization of the characteristic
//! polynomial (over `Q(sqrt(d))[Q]`) with numeric spectral analysis and a
//! revival-time witness search:
//!
//! * [`graphs`] — weighted graphs, the subset `K`, and the generator families;
//! * [`exact`] — quadratic-field rationals, bivariate polynomials,
//!   characteristic and relative minimal polynomials;
//! * [`spectral`] — numeric eigendecomposition, eigenvalue support, and the
//!   induced partition of the spectrum;
//! * [`cospectral`] — discovery and verification of H-cospectrality;
//! * [`certify`] — the certification pipeline and the degeneracy falsifier;
//! * [`dynamics`] — continuous-time walk evolution and witness search.

pub mod certify;
pub mod cospectral;
pub mod dynamics;
pub mod error;
pub mod exact;
pub mod graphs;
pub mod spectral;

pub use error::{Error, Result};
