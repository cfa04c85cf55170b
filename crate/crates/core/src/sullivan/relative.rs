use std::collections::HashSet;

use super::SullivanError;
use crate::algebra::{parse_poly, AlgElement, Derivation, GeneratorSet, Universe};
use crate::cdga::{Cdga, CdgaError, CdgaMorphism, Presentation};

/// `(B ⊗ ΛW, D)`: a base CDGA `B` with fiber generators `W` adjoined in a
/// fixed well-order.
///
/// The total algebra's generators are the base generators (same ordinals)
/// followed by `W`. Each `D(w_β)` may only involve base generators and
/// earlier fiber generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeSullivanAlgebra {
    base: Cdga,
    total: Cdga,
}

impl RelativeSullivanAlgebra {
    /// Validates and assembles. `differential` lives over the total universe,
    /// whose first generators must be those of `base`.
    pub fn new(
        base: Cdga,
        name: impl Into<String>,
        differential: Derivation,
    ) -> Result<Self, SullivanError> {
        if base.word_cap().is_some() {
            return Err(CdgaError::NotFree(base.name().to_string()).into());
        }
        let u = differential.universe().clone();
        let nb = base.gens().len();
        if u.len() < nb
            || (0..nb).any(|g| {
                u.get(g).name() != base.gens().get(g).name() || u.degree(g) != base.gens().degree(g)
            })
        {
            return Err(SullivanError::BaseMismatch(format!(
                "generators of '{}' must come first in the total algebra",
                base.name()
            )));
        }
        let map: Vec<usize> = (0..nb).collect();
        for g in 0..nb {
            let expected = base.d_of(g).remap_monotone(&u, &map);
            if &expected != differential.image(g) {
                return Err(SullivanError::BaseMismatch(format!(
                    "D({}) = {} differs from the base differential {}",
                    u.get(g).name(),
                    differential.image(g),
                    base.d_of(g)
                )));
            }
        }
        for w in nb..u.len() {
            if let Some(&bad) = differential.image(w).support().iter().find(|&&g| g >= w) {
                return Err(SullivanError::NotWellOrdered {
                    generator: u.get(w).name().to_string(),
                    offending: u.get(bad).name().to_string(),
                });
            }
        }
        let relations = base
            .relations()
            .iter()
            .map(|r| r.remap_monotone(&u, &map))
            .collect();
        let total = Cdga::from_presentation(Presentation {
            name: name.into(),
            differential,
            relations,
            word_cap: None,
        })?;
        Ok(RelativeSullivanAlgebra { base, total })
    }

    /// Fiber generators as `(name, degree)` and their differentials as
    /// polynomial text over the total algebra.
    pub fn from_text(
        base: Cdga,
        name: impl Into<String>,
        fiber: &[(&str, u32)],
        diffs: &[(&str, &str)],
    ) -> Result<Self, SullivanError> {
        let u = total_universe(&base, fiber.iter().map(|(n, d)| (n.to_string(), *d)))?;
        let mut d = base_differential_on(&base, &u);
        for (g, text) in diffs {
            let i = u
                .position(g)
                .filter(|&i| i >= base.gens().len())
                .ok_or_else(|| {
                    SullivanError::BaseMismatch(format!("'{g}' is not a fiber generator"))
                })?;
            d.set(i, parse_poly(&u, text).map_err(CdgaError::from)?)
                .map_err(CdgaError::from)?;
        }
        Self::new(base, name, d)
    }

    pub fn base(&self) -> &Cdga {
        &self.base
    }

    /// The total algebra `B ⊗ ΛW`.
    pub fn total(&self) -> &Cdga {
        &self.total
    }

    pub fn universe(&self) -> &Universe {
        self.total.universe()
    }

    pub fn base_len(&self) -> usize {
        self.base.gens().len()
    }

    /// Ordinals (in the total algebra) of the fiber generators.
    pub fn fiber_ordinals(&self) -> std::ops::Range<usize> {
        self.base_len()..self.universe().len()
    }

    pub fn fiber_profile(&self) -> Vec<(String, u32)> {
        self.fiber_ordinals()
            .map(|g| {
                (
                    self.universe().get(g).name().to_string(),
                    self.universe().degree(g),
                )
            })
            .collect()
    }

    /// `D` on the fiber generator with total ordinal `g`.
    pub fn d_of(&self, g: usize) -> &AlgElement {
        self.total.d_of(g)
    }

    /// The base inclusion `B → B ⊗ ΛW`.
    pub fn inclusion(&self) -> CdgaMorphism {
        let u = self.universe();
        CdgaMorphism::new(
            self.base.clone(),
            self.total.clone(),
            (0..self.base_len())
                .map(|g| AlgElement::generator(u, g))
                .collect(),
        )
        .expect("the base is a sub-CDGA")
    }
}

/// Base generators followed by the fiber ones; fiber names clashing with the
/// base are rejected.
pub(crate) fn total_universe(
    base: &Cdga,
    fiber: impl IntoIterator<Item = (String, u32)>,
) -> Result<Universe, SullivanError> {
    let mut spec = base.gens().profile();
    spec.extend(fiber);
    Ok(GeneratorSet::new(spec)
        .map_err(CdgaError::from)?
        .into_universe())
}

/// Derivation over `u` agreeing with the base differential on the leading
/// generators and zero on the rest.
pub(crate) fn base_differential_on(base: &Cdga, u: &Universe) -> Derivation {
    let nb = base.gens().len();
    let map: Vec<usize> = (0..nb).collect();
    let mut d = Derivation::zero(u, 1);
    for g in 0..nb {
        d.set(g, base.d_of(g).remap_monotone(u, &map))
            .expect("degrees carry over");
    }
    d
}

fn fresh(name: &str, used: &HashSet<String>) -> String {
    if !used.contains(name) {
        return name.to_string();
    }
    (2..)
        .map(|i| format!("{name}_{i}"))
        .find(|n| !used.contains(n))
        .expect("unbounded search")
}

/// Pushout of a relative Sullivan algebra along a morphism of bases
/// `φ: B → B'`: `B' ⊗ ΛW` with `D̄w = (φ ⊗ id)(Dw)`.
pub fn pushout_model(
    phi: &CdgaMorphism,
    rel: &RelativeSullivanAlgebra,
) -> Result<RelativeSullivanAlgebra, SullivanError> {
    if phi.source() != rel.base() {
        return Err(SullivanError::BaseMismatch(format!(
            "morphism source '{}' is not the base '{}'",
            phi.source().name(),
            rel.base().name()
        )));
    }
    let target = phi.target().clone();
    let mut used: HashSet<String> = target.gens().iter().map(|g| g.name().to_string()).collect();
    let fiber: Vec<(String, u32)> = rel
        .fiber_profile()
        .into_iter()
        .map(|(n, d)| {
            let n = fresh(&n, &used);
            used.insert(n.clone());
            (n, d)
        })
        .collect();
    let u = total_universe(&target, fiber)?;
    let nt = target.gens().len();
    let lift: Vec<usize> = (0..nt).collect();
    let mut images: Vec<AlgElement> = phi
        .images()
        .iter()
        .map(|i| i.remap_monotone(&u, &lift))
        .collect();
    images.extend((0..rel.fiber_ordinals().len()).map(|j| AlgElement::generator(&u, nt + j)));
    let mut d = base_differential_on(&target, &u);
    for (j, w) in rel.fiber_ordinals().enumerate() {
        d.set(nt + j, rel.d_of(w).substitute(&u, &images))
            .map_err(CdgaError::from)?;
    }
    let name = format!("{}_po", rel.total().name());
    RelativeSullivanAlgebra::new(target, name, d)
}

/// `ℚ ⊗_B (B ⊗ ΛW, D)`: every monomial involving a base generator is
/// discarded.
pub fn fiber_model(rel: &RelativeSullivanAlgebra) -> Result<Cdga, SullivanError> {
    let nb = rel.base_len();
    let u = GeneratorSet::new(rel.fiber_profile())
        .map_err(CdgaError::from)?
        .into_universe();
    let map: Vec<usize> = (0..rel.universe().len())
        .map(|g| g.saturating_sub(nb))
        .collect();
    let mut d = Derivation::zero(&u, 1);
    for (j, w) in rel.fiber_ordinals().enumerate() {
        let img = rel
            .d_of(w)
            .filter_terms(|m| m.exponents().iter().all(|&(g, _)| g >= nb))
            .remap_monotone(&u, &map);
        d.set(j, img).map_err(CdgaError::from)?;
    }
    Ok(Cdga::new(format!("{}_fiber", rel.total().name()), d)?)
}
