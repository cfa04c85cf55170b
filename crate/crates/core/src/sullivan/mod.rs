//! Sullivan algebras: minimal models, relative Sullivan algebras and their
//! pushouts, acyclic closures and models of loop spaces.

mod closure;
mod loops;
mod minimal;
mod relative;

pub use closure::{acyclic_closure, loop_cohomology, LoopCohomology};
pub use loops::{
    free_loop_model, multiplication_morphism, path_space_model, path_space_model_with_cap,
    DEFAULT_SERIES_CAP,
};
pub use minimal::{minimal_model, MinimalModelResult, StageLog};
pub use relative::{fiber_model, pushout_model, RelativeSullivanAlgebra};

use thiserror::Error;

use crate::cdga::{Cdga, CdgaError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SullivanError {
    #[error(transparent)]
    Cdga(#[from] CdgaError),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("base mismatch: {0}")]
    BaseMismatch(String),
    #[error("D({generator}) involves '{offending}', which is not an earlier generator")]
    NotWellOrdered {
        generator: String,
        offending: String,
    },
    #[error("path-space series for '{generator}' did not terminate within {cap} terms")]
    SeriesCap { generator: String, cap: usize },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// Whether a free, simply connected CDGA is minimal: no generator's
/// differential has a word-length-1 (linear) part.
pub fn check_minimal_sullivan(c: &Cdga) -> Result<bool, SullivanError> {
    c.require_free()?;
    c.require_simply_connected()?;
    Ok((0..c.gens().len()).all(|g| c.d_of(g).terms().keys().all(|m| m.word_length() >= 2)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimality() {
        let s2 = Cdga::from_spec("s2", &[("y", 2), ("z", 3)], &[("z", "y^2")]).unwrap();
        assert_eq!(check_minimal_sullivan(&s2), Ok(true));
        let cone = Cdga::from_spec("cone", &[("u", 3), ("v", 2)], &[("v", "u")]).unwrap();
        assert_eq!(check_minimal_sullivan(&cone), Ok(false));
        let low = Cdga::from_spec("low", &[("a", 1)], &[]).unwrap();
        assert!(matches!(
            check_minimal_sullivan(&low),
            Err(SullivanError::Cdga(CdgaError::NotSimplyConnected(_)))
        ));
        let q = Cdga::from_spec("hs2", &[("y", 2)], &[])
            .unwrap()
            .with_relation_text(&["y^2"])
            .unwrap();
        assert!(check_minimal_sullivan(&q).is_err());
    }
}
