//! Geodesic model spaces, convexity moduli, and ergodic cocycles of
//! nonexpansive maps.
//!
//! The crate provides:
//!
//! - [`geometry`]: Euclidean d-space, the hyperbolic plane, filled spherical
//!   triangles, point gluings, and the glued triangle chain, with exact
//!   distance / geodesic / midpoint kernels;
//! - [`convexity`]: seeded estimators and checkers for convexity moduli
//!   (sampled ball infima, midpoint convexity, p-uniform convexity, the
//!   near-additivity implication, gluing moduli);
//! - [`ergodic`]: Bernoulli symbol paths, families of nonexpansive maps,
//!   cocycle orbits and their distance sequences, drift estimation, and the
//!   displacement-gap certificate used by the ray construction;
//! - [`ray`]: tolerance schedules, index-sequence selection with direct
//!   re-verification, geodesic approximants of the limit ray, and the
//!   residual audits that track the orbit against the ray.
//!
//! Every estimator is seeded and deterministic; witnesses carry full
//! coordinates so any reported violation can be replayed as a test.

pub mod convexity;
pub mod ergodic;
pub mod error;
pub mod geometry;
pub mod ray;

pub use error::{Error, Result};
