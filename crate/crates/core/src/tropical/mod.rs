//! Tropicalisation: tropical polynomials, hypersurfaces, linear spaces and
//! the piecewise-linear map `Trop(φ)`.

pub mod hypersurface;
pub mod linear_space;
pub mod pl_map;
pub mod trop_poly;

pub use hypersurface::{trop_hypersurface, TropHypersurface};
pub use linear_space::{circuits, trop_linear_space, CircuitScalar, CircuitSet};
pub use pl_map::{check_consistency, linearity_complex, pl_image, PLMap};
pub use trop_poly::{trop_eval_map, tropicalize_function, tropicalize_map, tropicalize_poly, TropPoly, TropRational};

use crate::polyhedra::PolyhedralComplex;
use crate::scalar::Rational;

/// Whether `xi` lies in some cell of `c`.
pub fn membership(xi: &[Rational], c: &PolyhedralComplex) -> bool {
    c.membership(xi)
}
