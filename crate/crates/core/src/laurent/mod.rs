//! Laurent polynomials, rational functions and rational maps over `K`.

pub mod map;
pub mod parse;
pub mod poly;
pub mod rational_fn;

pub use map::{common_denominator_form, compose_maps, dehomogenize_map, homogenize_map, min_homogenization_degree, RationalMap};
pub use parse::{parse_map, parse_poly, parse_poly_file, parse_rational_function};
pub use poly::{poly_arith, ExponentVec, LaurentPoly, PolyOp};
pub use rational_fn::{substitute, RationalFunction};
