//! Finitely presented algebras around the quantum group SL_h(2): the group
//! itself, the quantum h-plane, the covariant h-oscillator and their mixed and
//! tensor products, with exact normal forms.

mod algebras;
mod dfun;
mod free;
mod hopf;
mod presentation;
mod suite;

pub use algebras::{
    all_presentations, mixed_oscillator, mixed_plane, oscillator, plane, quantum_matrices, scalars,
    sl_h2, sl_h2_without_det, tensor_square, GROUP,
};
pub use dfun::{
    classical_dfunction, coalgebra_defects, commutative_image, dfunction, plane_basis, plane_form,
    CommPoly, DMatrix, DRoute, PlaneForm,
};
pub use free::{FreePoly, Word};
pub use hopf::{
    antipode_matrix, coproduct, counit, covariance_defect, det_t, printed_r, reverse_basis,
    rtt_defects, rtt_rank_at_h_zero, t_matrix, CovarianceTarget,
};
pub use presentation::{CriticalPair, NCElement, Presentation, PresentationBuilder, NC_ORDER};
pub use suite::{dfunction_checks, oscillator_bridge_checks, plane_checks, slh2_suite, PRINTED_D1};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Slh2Error {
    #[error("cannot parse '{text}' at {pos}: {msg}")]
    Parse {
        text: String,
        pos: usize,
        msg: String,
    },
    #[error("{presentation}: rule {rule} is not weight-homogeneous")]
    Inhomogeneous { presentation: String, rule: String },
    #[error("{presentation}: rule {rule} does not decrease in the term order")]
    NotDecreasing { presentation: String, rule: String },
    #[error("{presentation}: two rules for {word}")]
    DuplicateRule { presentation: String, word: String },
    #[error("{presentation}: overlap {overlap} does not resolve, difference {difference}")]
    NonConfluent {
        presentation: String,
        overlap: String,
        difference: String,
    },
    #[error("invalid label j = {j}, m = {m}")]
    InvalidLabel { j: String, m: String },
    #[error("d^{j}: pivot for k = {k} is not an invertible constant")]
    SingularPivot { j: String, k: String },
    #[error("d^{j}: column m = {m} leaves residual {residual}")]
    Residual {
        j: String,
        m: String,
        residual: String,
    },
}
