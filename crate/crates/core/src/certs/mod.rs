//! Continuous gyrocolourings, certificate files, built-in certificates and the
//! `Z_5^2` incidence-matrix check.

mod builtin;
mod continuous;
mod json;
mod matrix;

pub use builtin::{figure1_certificate, figure1_graph, g5_certificate};
pub use continuous::{
    continuous_from_base, discretize, refine_grid, verify_gyrocoloring, ContinuousGyrocoloring,
};
pub use json::{
    parse_any, parse_certificate, parse_certificate_with_warnings, parse_gyrocoloring,
    serialize_certificate, serialize_gyrocoloring, CertificateFile,
};
pub use matrix::{bareiss_determinant, lemma63_matrix_check, square_incidence_matrix};
