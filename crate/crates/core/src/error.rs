use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::cdga::{CdgaError, FormatError};
use crate::forms::FormsError;
use crate::invariants::InvariantsError;
use crate::linalg::LinalgError;
use crate::sullivan::SullivanError;

/// Crate-wide error.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Cdga(#[from] CdgaError),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Sullivan(#[from] SullivanError),
    #[error(transparent)]
    Forms(#[from] FormsError),
    #[error(transparent)]
    Invariants(#[from] InvariantsError),
}
