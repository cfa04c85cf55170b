//! Commutative differential graded algebras presented on a free algebra.
//!
//! A [`Cdga`] is `(ΛV, d)`, optionally divided by the ideal generated by a
//! finite list of homogeneous relations, or by the ideal of words longer
//! than a fixed length. All computations are degreewise: each degree is a
//! finite-dimensional space of monomials modulo the degree part of the ideal.

mod cohomology;
mod construct;
mod format;
mod morphism;
mod space;

pub use cohomology::{cohomology, Cohomology, CohomologyReport, DegreeCohomology};
pub use construct::{
    fibered_product, tensor_product, word_length_quotient, TensorProduct, WordLengthQuotient,
};
pub use format::{parse_cdga, FormatError};
pub use morphism::{check_quasi_iso, CdgaMorphism, QuasiIsoDegree, QuasiIsoReport};
pub use space::{Complex, DegreeSpace};

use std::fmt;

use thiserror::Error;

use crate::algebra::{AlgElement, AlgebraError, Derivation, GeneratorSet, Homogeneity, Universe};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CdgaError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("differential must have degree +1, got {0}")]
    WrongShift(i32),
    #[error("not a cochain algebra: {}", format_defects(.0))]
    Invalid(Vec<Defect>),
    #[error("relation '{0}' is not homogeneous of positive degree")]
    BadRelation(String),
    #[error("{0} is not a free algebra (it has relations or a word-length cap)")]
    NotFree(String),
    #[error("generator '{0}' has degree < 2; a simply connected Sullivan algebra is required")]
    NotSimplyConnected(String),
    #[error("morphism image of '{generator}' has the wrong degree or lives in another algebra: {detail}")]
    BadImage { generator: String, detail: String },
    #[error("morphism does not commute with differentials on '{generator}': residue {residue}")]
    NotChainMap { generator: String, residue: String },
    #[error("morphism source does not match: {0}")]
    SourceMismatch(String),
    #[error("element '{0}' is not a cocycle")]
    NotCocycle(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

fn format_defects(d: &[Defect]) -> String {
    d.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

/// One failed check found by [`validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Defect {
    /// `d(d(g)) ≠ 0`.
    SquareNonzero { generator: String, residue: String },
    /// `d(r)` is not in the relation ideal.
    RelationNotStable { relation: String, image: String },
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Defect::SquareNonzero { generator, residue } => {
                write!(f, "d(d({generator})) = {residue} != 0")
            }
            Defect::RelationNotStable { relation, image } => {
                write!(f, "d({relation}) = {image} is not in the relation ideal")
            }
        }
    }
}

/// An unvalidated presentation: generators, differential on generators and
/// relations. Turn it into a [`Cdga`] with [`Cdga::from_presentation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub name: String,
    pub differential: Derivation,
    pub relations: Vec<AlgElement>,
    pub word_cap: Option<u32>,
}

/// A validated CDGA presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cdga {
    name: String,
    differential: Derivation,
    relations: Vec<AlgElement>,
    word_cap: Option<u32>,
}

/// Checks `d² = 0` on generators and, with relations, that `d` maps each
/// relation into the relation ideal. Never fails; returns the defects found.
pub fn validate(p: &Presentation) -> Vec<Defect> {
    let c = Cdga {
        name: p.name.clone(),
        differential: p.differential.clone(),
        relations: p.relations.clone(),
        word_cap: p.word_cap,
    };
    let mut defects = Vec::new();
    let u = c.universe().clone();
    for g in 0..u.len() {
        let dd = c.differential.apply(c.differential.image(g));
        let dd = c.reduce(&dd);
        if !dd.is_zero() {
            defects.push(Defect::SquareNonzero {
                generator: u.get(g).name().to_string(),
                residue: dd.to_string(),
            });
        }
    }
    for r in &c.relations {
        let dr = c.differential.apply(r);
        if !c.reduce(&dr).is_zero() {
            defects.push(Defect::RelationNotStable {
                relation: r.to_string(),
                image: dr.to_string(),
            });
        }
    }
    defects
}

impl Cdga {
    /// A free CDGA `(ΛV, d)`; fails unless `d` has degree +1 and `d² = 0`.
    pub fn new(name: impl Into<String>, differential: Derivation) -> Result<Self, CdgaError> {
        Self::from_presentation(Presentation {
            name: name.into(),
            differential,
            relations: Vec::new(),
            word_cap: None,
        })
    }

    pub fn from_presentation(p: Presentation) -> Result<Self, CdgaError> {
        if p.differential.shift() != 1 {
            return Err(CdgaError::WrongShift(p.differential.shift()));
        }
        let u = p.differential.universe().clone();
        for r in &p.relations {
            if !crate::algebra::same_universe(&u, r.universe()) {
                return Err(CdgaError::Algebra(AlgebraError::ForeignGenerator(
                    u.foreign_in(r.universe()).unwrap_or_default(),
                )));
            }
            match r.homogeneity() {
                Homogeneity::Degree(d) if d > 0 => {}
                _ => return Err(CdgaError::BadRelation(r.to_string())),
            }
        }
        let defects = validate(&p);
        if !defects.is_empty() {
            return Err(CdgaError::Invalid(defects));
        }
        Ok(Cdga {
            name: p.name,
            differential: p.differential,
            relations: p.relations,
            word_cap: p.word_cap,
        })
    }

    /// Convenience constructor: generators as `(name, degree)` and
    /// differentials as `(name, polynomial text)`.
    pub fn from_spec(
        name: impl Into<String>,
        gens: &[(&str, u32)],
        diffs: &[(&str, &str)],
    ) -> Result<Self, CdgaError> {
        let u = GeneratorSet::new(gens.iter().copied())?.into_universe();
        let mut d = Derivation::zero(&u, 1);
        for (g, text) in diffs {
            let i = u
                .position(g)
                .ok_or_else(|| AlgebraError::UnknownGenerator(g.to_string()))?;
            d.set(i, crate::algebra::parse_poly(&u, text)?)?;
        }
        Self::new(name, d)
    }

    /// Adds homogeneous relations; the result is the quotient by the ideal
    /// they generate.
    pub fn with_relations(self, relations: Vec<AlgElement>) -> Result<Self, CdgaError> {
        let mut all = self.relations;
        all.extend(relations);
        Self::from_presentation(Presentation {
            name: self.name,
            differential: self.differential,
            relations: all,
            word_cap: self.word_cap,
        })
    }

    /// Same as [`Cdga::with_relations`] with relations given as text.
    pub fn with_relation_text(self, relations: &[&str]) -> Result<Self, CdgaError> {
        let u = self.universe().clone();
        let rels = relations
            .iter()
            .map(|r| crate::algebra::parse_poly(&u, r))
            .collect::<Result<Vec<_>, _>>()?;
        self.with_relations(rels)
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn universe(&self) -> &Universe {
        self.differential.universe()
    }

    pub fn gens(&self) -> &GeneratorSet {
        self.differential.universe()
    }

    pub fn differential(&self) -> &Derivation {
        &self.differential
    }

    /// `d` of generator `g`.
    pub fn d_of(&self, g: usize) -> &AlgElement {
        self.differential.image(g)
    }

    pub fn relations(&self) -> &[AlgElement] {
        &self.relations
    }

    pub fn word_cap(&self) -> Option<u32> {
        self.word_cap
    }

    pub fn is_free(&self) -> bool {
        self.relations.is_empty() && self.word_cap.is_none()
    }

    pub fn require_free(&self) -> Result<(), CdgaError> {
        if self.is_free() {
            Ok(())
        } else {
            Err(CdgaError::NotFree(self.name.clone()))
        }
    }

    /// Fails when a generator has degree below 2.
    pub fn require_simply_connected(&self) -> Result<(), CdgaError> {
        match self.gens().iter().find(|g| g.degree() < 2) {
            Some(g) => Err(CdgaError::NotSimplyConnected(g.name().to_string())),
            None => Ok(()),
        }
    }

    pub fn presentation(&self) -> Presentation {
        Presentation {
            name: self.name.clone(),
            differential: self.differential.clone(),
            relations: self.relations.clone(),
            word_cap: self.word_cap,
        }
    }

    pub fn d(&self, a: &AlgElement) -> AlgElement {
        self.reduce(&self.differential.apply(a))
    }

    /// Normal form modulo the relation ideal (and word-length cap): the
    /// unique representative supported on each degree's quotient basis.
    pub fn reduce(&self, a: &AlgElement) -> AlgElement {
        if self.is_free() || a.is_zero() {
            return a.clone();
        }
        let mut degrees: Vec<u32> = a.terms().keys().map(|m| m.degree(self.gens())).collect();
        degrees.sort_unstable();
        degrees.dedup();
        let mut out = AlgElement::zero(self.universe());
        for k in degrees {
            let space = DegreeSpace::new(self, k);
            out += &space.element(&space.coords(&a.component(k)));
        }
        out
    }

    /// Dimension of the degree-`k` part of the algebra.
    pub fn dim_in_degree(&self, k: u32) -> usize {
        DegreeSpace::new(self, k).dim()
    }

    /// Serializes in the text format read by [`parse_cdga`].
    pub fn to_text(&self) -> String {
        format::write_cdga(self)
    }
}

impl fmt::Display for Cdga {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}
