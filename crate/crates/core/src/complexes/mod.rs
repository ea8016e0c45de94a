//! Pearl complexes: graded free modules with a degree `-1` differential
//! whose nonzero entries are monomials `t^k`, validation of the grading and
//! of `d^2 = 0`, homology over both coefficient modes, chain-map checks,
//! virtual-dimension formulas and the exponent-filtration spectral sequence.

mod basis;
mod chain_map;
mod dimension;
mod document;
mod homology;
mod pearl;
mod spectral;

pub use basis::{Generator, GradedBasis};
pub use chain_map::{verify_chain_map, ChainMapReport};
pub use dimension::{virtual_dimension, DimensionQuery};
pub use document::{complex_from_document, complex_to_document, ComplexDocument};
pub use homology::{
    fundamental_class_survives, homology_over_lambda, homology_over_lambda_plus, morse_betti,
    HomologyResult, TorsionSummand,
};
pub(crate) use homology::slice_matrix;
pub use pearl::{DifferentialReport, PearlComplex, RingMode};
pub use spectral::{graded_homology_dims, infinity_page, spectral_sequence, SpectralPage};
