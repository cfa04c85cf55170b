//! Invariants: pure algebras, ellipticity, exponents, Euler characteristics,
//! cuplength and category bounds, loop-space Poincaré series.

mod category;
mod ellipticity;
mod pure;
mod series;

pub use category::{cat_bounds, cuplength, toomer_rank, CatBounds, ToomerReport, ToomerRow};
pub use ellipticity::{
    classify_ellipticity, euler_characteristics, exponent_numerology, finiteness_test,
    generator_dims, torus_rank_bound, EllipticityReport, EulerCharacteristics, ExponentProfile,
    Finiteness, FinitenessTest, Numerology, StructuralChecks, Verdict,
};
pub use pure::{associated_pure, is_pure, pure_filtration_homology};
pub use series::{
    gap_probe, growth_classify, growth_classify_with, loop_poincare_series, GapProbe, GapStatus,
    Growth, GrowthConfig, PoincareSeries,
};

use thiserror::Error;

use crate::cdga::CdgaError;
use crate::sullivan::SullivanError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum InvariantsError {
    #[error(transparent)]
    Cdga(#[from] CdgaError),
    #[error(transparent)]
    Sullivan(#[from] SullivanError),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
