//! Exact computations in rational homotopy theory.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: free graded-commutative algebras `ΛV` with exact rational
//!   coefficients, Koszul signs and graded derivations.
//! * [`linalg`]: exact echelon forms, kernels, images, quotients and solving.
//! * [`cdga`]: differential graded algebras presented on `ΛV` (optionally
//!   modulo degreewise relations), their cohomology, morphisms and
//!   constructions such as tensor and fibered products.
//! * [`sullivan`]: minimal models, relative Sullivan algebras, acyclic
//!   closures and loop-space models.
//! * [`forms`]: polynomial differential forms on simplices, global forms on
//!   finite simplicial sets and the integration map to cochains.
//! * [`invariants`]: pure algebras, ellipticity, Euler characteristics,
//!   cuplength and category bounds, Poincaré series.

pub mod algebra;
pub mod cdga;
pub mod forms;
pub mod invariants;
pub mod linalg;
pub mod sullivan;

mod error;

pub use error::Error;

/// Exact rational scalar used throughout.
pub type Rational = num_rational::BigRational;
