//! Exact tropicalisation of rational maps over `K = Q(i)(t^Q)`.
//!
//! [`tropical`] turns polynomials and maps into piecewise-linear objects,
//! [`polyhedra::covers`] decides whether one polyhedral complex contains
//! another, and [`constructions`] builds the reparameterisations used to
//! make a map tropically surjective. [`scenarios`] runs the worked examples.

pub mod constructions;
pub mod error;
pub mod expr;
pub mod laurent;
pub mod linalg;
pub mod polyhedra;
pub mod scalar;
pub mod scenarios;
pub mod tropical;

pub use error::{Error, Result};
