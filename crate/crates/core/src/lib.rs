//! Exact integer-lattice algebra for toric configurations: Graver bases,
//! circuits, minimal Markov bases, higher Lawrence liftings, complexity
//! measures, hierarchical log-linear models and oriented-matroid face
//! certificates. All arithmetic is exact (checked 64-bit, 128-bit
//! eliminations, arbitrary-precision rationals for LP); nothing is
//! randomized.

pub mod circuits;
pub mod complexity;
pub mod config;
pub mod error;
pub mod graver;
pub mod intmat;
pub mod lawrence;
pub mod markov;
pub mod matroid;
pub mod models;
pub mod ratlp;
pub mod vecops;

pub use circuits::{circuits, is_circuit, CircuitSet};
pub use complexity::{
    circuit_complexity, graver_complexity, graver_complexity_bounds, markov_complexity,
    ComplexityReport, GraverBounds,
};
pub use config::{conformal_leq, Configuration, Move};
pub use error::{Error, Result};
pub use graver::{graver_basis, is_graver_element, normal_form, GraverBasis};
pub use lawrence::{lift, Lifting, Table};
pub use markov::{
    fiber, fiber_connected, fiber_with_limit, minimal_markov_basis,
    minimal_markov_from_candidates, Fiber, MarkovBasis,
};
pub use matroid::{
    face_certificate, face_test_by_restriction, is_covector, is_covector_with, orthogonal,
    sign_vector, sign_vector_int, FaceCertificate, Sign, SignVector,
};
pub use models::{
    logit_model, model_matrix, parse_brackets, verify_logit_correspondence, ModelSpec,
};
