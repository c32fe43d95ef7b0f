//! Lowering edge weights one step at a time and tracking the change in `ω`.
//!
//! Every change is computed at least two ways: directly from the definition
//! of `ω` ([`delta_omega_direct`]) and through a grouped formula that only
//! looks at simplices whose Coxeter diagram is connected and passes through
//! the edge, weighting `ω` of their links by a type-dependent coefficient.

mod coefficients;
pub mod engine;
mod delta;
mod identities;
mod pipeline;

use thiserror::Error;

use crate::complex::ComplexError;

pub use coefficients::{
    closed_form, sporadic_from_engine, CoefficientTable, FiveToFourBrackets, Sporadic, DEFAULT_MAX_N,
};
pub use delta::{
    delta_omega_3_to_2, delta_omega_4_to_3, delta_omega_5_to_4, delta_omega_direct, delta_omega_high,
    delta_omega_inclusion_exclusion, Edge,
};
pub use identities::{
    alpha_polynomials, beta_from_recurrence, ugly1_sides, ugly2_sides, verify_generating_functions,
    verify_identity_ugly1, verify_identity_ugly2, GeneratingFunctionReport,
};
pub use pipeline::{reduce_once, reduce_pipeline, Lemma, ReductionStep, ReductionTrace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("weight {0} is below 2")]
    BadWeight(u32),
    #[error("lowering a weight produced an infinite Coxeter group")]
    FinitenessViolation,
    #[error("simplex of unexpected type {0} through the edge")]
    UnexpectedType(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}
