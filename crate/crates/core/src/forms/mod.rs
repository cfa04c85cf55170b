//! Polynomial differential forms on simplices, global forms on finite
//! simplicial sets, normalized cochains and the integration map `∮`.
//!
//! Forms on the `n`-simplex live in `Λ(t_0..t_n; y_0..y_n)/(1 − Σt, Σy)` and
//! are stored in the reduced coordinates `t_1..t_n`, `y_1..y_n`.

mod complex;
mod global;
mod poly;

pub use complex::{
    builtin_complex, normalize_word, parse_complex, simplex_boundary, standard_simplex, SimplexRef,
    SimplicialComplexFin,
};
pub use global::{
    closed_form_basis, cochain_cohomology, cochain_differential, cup_product,
    global_form_space_dim, non_multiplicativity_witness, sample_global_form, verify_stokes,
    Cochain, CohomologyCheck, GlobalForm, MultiplicativityWitness, StokesReport, StokesTrial,
};
pub use poly::{FormTerm, PolyForm};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormsError {
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("invalid simplicial set: {0}")]
    Invalid(String),
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("forms disagree on face {face} of '{simplex}'")]
    Incompatible { simplex: String, face: usize },
}
