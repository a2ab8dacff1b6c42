//! Exact rational polyhedra, their images and the coverage decision.

pub mod complex;
pub mod coverage;
pub mod fm;
pub mod lp;
pub mod polyhedron;

pub use complex::PolyhedralComplex;
pub use coverage::{arrangement_subdivide, covers, CellCoverage, CellStatus, CoverageReport};
pub use lp::{maximize, LpOutcome};
pub use polyhedron::{AffineChart, AffineMapQ, LinConstraint, Polyhedron, Relation};

/// A rational point.
pub type QPoint = Vec<crate::scalar::Rational>;
