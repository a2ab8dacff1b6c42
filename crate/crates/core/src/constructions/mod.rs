//! Constructive toolkit: toric pushforwards, cones, named
//! parameterisations, the Combination Lemma, birational projections, local
//! linearity certificates and Puiseux root expansions.

pub mod combine;
pub mod local;
pub mod params;
pub mod projection;
pub mod puiseux;
pub mod roots;
pub mod toric;

pub use combine::{combine_reparams, CombineDegrees};
pub use local::{local_linearity_check, LocalLinearityCertificate, TermTie, WeightPoint};
pub use params::{
    curve_factorization, grassmannian2_param, horn_param, integer_kernel, rank2_param, yu_yuster_from_equations, yu_yuster_param, CurveFactorization,
};
pub use projection::{
    horizontal_cells, horizontal_cover_report, projection_inverse_linear, verify_projection_spec, CellHorizontality, HorizontalReport, ProjectionSpec,
};
pub use puiseux::{eval_at, puiseux_roots, upoly_coefficients, RootExpansion};
pub use roots::gaussian_roots;
pub use toric::{cone_over_map, toric_pushforward, MonomialMap, TorusPoint};
