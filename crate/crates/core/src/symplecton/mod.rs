//! Classical and h-deformed symplecton polynomials and their verification
//! suites.

mod adjoint;
mod classical;
mod genfun;
mod hsym;
mod hyper;
mod product;
mod prop3;
mod suite;

pub use adjoint::{adjoint_action, adjoint_via_hopf, tensor_operator_check, Generator};
pub use classical::{
    classical_symplecton, classical_terms, defining_form_text, symmetry_check, Form,
};
pub use genfun::{
    binomial_expansion, classical_generating_defects, generating_function_check,
    h_generating_defects,
};
pub use hsym::{
    decompose_h_symplecton_basis, h_symplecton_osc, h_symplecton_weyl, oscillator_form, OscForm,
};
pub use hyper::{hypergeometric_any, hypergeometric_form, HyperPrefactor};
pub use product::{
    inner_product, inner_product_formula, intermediate_identity_holds, predicted_coefficient,
    product_law, product_law_checks, product_law_suite, InnerProductReading, ProductLawReport,
    RatioTable, TwistPair,
};
pub use prop3::{
    conjugation_holds, prop3_and_j1_checks, shift_expansion_holds, spin_one_relations,
    twisted_sum_holds, TwistedSumIndex,
};
pub use suite::{classical_checks, h_symplecton_checks, oscillator_examples, symplecton_suite};

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::scalar::HalfInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymplectonError {
    #[error("invalid symplecton label {0}")]
    InvalidLabel(SymplectonLabel),
    #[error("hypergeometric sum for {label} leaves a non-polynomial residue in N")]
    NonPolynomial { label: SymplectonLabel },
    #[error("hypergeometric form needs m <= 0, got {0}")]
    PositiveWeight(SymplectonLabel),
    #[error(transparent)]
    Weyl(#[from] crate::weyl::WeylError),
}

/// Spin and weight `(j, m)` of a symplecton.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SymplectonLabel {
    pub j: HalfInt,
    pub m: HalfInt,
}

impl SymplectonLabel {
    pub fn new(j: HalfInt, m: HalfInt) -> Result<Self, SymplectonError> {
        let label = SymplectonLabel { j, m };
        classical::validate(label)?;
        Ok(label)
    }

    /// All labels with `j <= max_j`, ordered by `j` then `m`.
    pub fn all_up_to(max_j: HalfInt) -> Vec<SymplectonLabel> {
        HalfInt::spins_between(HalfInt::ZERO, max_j)
            .flat_map(|j| j.projections().map(move |m| SymplectonLabel { j, m }))
            .collect()
    }
}

impl fmt::Display for SymplectonLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(j={}, m={})", self.j, self.m)
    }
}
