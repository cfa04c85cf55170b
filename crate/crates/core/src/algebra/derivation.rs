use num_traits::{One, Zero};

use super::generator::same_universe;
use super::{AlgElement, AlgebraError, Homogeneity, Monomial, Universe};
use crate::Rational;

/// A graded derivation of fixed degree `shift`, given by its values on the
/// generators and extended by the graded Leibniz rule
/// `δ(ab) = δa·b + (−1)^{shift·|a|} a·δb`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    universe: Universe,
    shift: i32,
    images: Vec<AlgElement>,
}

impl Derivation {
    /// Zero derivation of the given degree.
    pub fn zero(universe: &Universe, shift: i32) -> Self {
        Derivation {
            universe: universe.clone(),
            shift,
            images: (0..universe.len())
                .map(|_| AlgElement::zero(universe))
                .collect(),
        }
    }

    /// Builds a derivation from generator images (by ordinal); generators
    /// not listed map to zero. Each image must be zero or homogeneous of
    /// degree `deg(g) + shift`.
    pub fn new(
        universe: &Universe,
        shift: i32,
        images: impl IntoIterator<Item = (usize, AlgElement)>,
    ) -> Result<Self, AlgebraError> {
        let mut d = Self::zero(universe, shift);
        for (g, img) in images {
            d.set(g, img)?;
        }
        Ok(d)
    }

    pub fn set(&mut self, g: usize, img: AlgElement) -> Result<(), AlgebraError> {
        let gen = self.universe.get(g);
        if !same_universe(&self.universe, img.universe()) {
            let name = self
                .universe
                .foreign_in(img.universe())
                .unwrap_or_else(|| gen.name().to_string());
            return Err(AlgebraError::ForeignGenerator(name));
        }
        let expected = gen.degree() as i64 + self.shift as i64;
        match img.homogeneity() {
            Homogeneity::Zero => {}
            Homogeneity::Degree(d) if d as i64 == expected => {}
            _ => {
                return Err(AlgebraError::BadImageDegree {
                    generator: gen.name().to_string(),
                    expected,
                    image: img.to_string(),
                })
            }
        }
        self.images[g] = img;
        Ok(())
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn shift(&self) -> i32 {
        self.shift
    }

    pub fn image(&self, g: usize) -> &AlgElement {
        &self.images[g]
    }

    pub fn images(&self) -> &[AlgElement] {
        &self.images
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(AlgElement::is_zero)
    }

    fn prefix_sign(&self, prefix: &Monomial) -> bool {
        self.shift.rem_euclid(2) == 1 && prefix.degree(&self.universe) % 2 == 1
    }

    /// Value on a single monomial.
    pub fn apply_monomial(&self, m: &Monomial) -> AlgElement {
        let mut out = AlgElement::zero(&self.universe);
        for pos in 0..m.exponents().len() {
            let (prefix, g, p, suffix) = m.split_at_letter(pos);
            let img = &self.images[g];
            if img.is_zero() {
                continue;
            }
            // δ(g^p) = p·g^{p−1}·δg; only even g reach p > 1, and they commute
            let mut coeff = Rational::from_integer(p.into());
            if self.prefix_sign(&prefix) {
                coeff = -coeff;
            }
            let mut left = prefix;
            if p > 1 {
                left = left
                    .mul(
                        &Monomial::from_sorted_unchecked(vec![(g, p - 1)]),
                        &self.universe,
                    )
                    .expect("even letter")
                    .0;
            }
            let left = AlgElement::from_monomial(&self.universe, left, coeff);
            let term = &left * img;
            out += &term.mul_monomial(&suffix, &Rational::one());
        }
        out
    }

    /// Linear extension to arbitrary elements.
    pub fn try_apply(&self, a: &AlgElement) -> Result<AlgElement, AlgebraError> {
        if !same_universe(&self.universe, a.universe()) {
            let name = self.universe.foreign_in(a.universe()).unwrap_or_default();
            return Err(AlgebraError::ForeignGenerator(name));
        }
        Ok(self.apply(a))
    }

    /// Panics on a foreign element; see [`Derivation::try_apply`].
    pub fn apply(&self, a: &AlgElement) -> AlgElement {
        assert!(
            same_universe(&self.universe, a.universe()),
            "derivation applied to an element of another algebra"
        );
        let mut out = AlgElement::zero(&self.universe);
        for (m, c) in a.terms() {
            if c.is_zero() {
                continue;
            }
            out += &self.apply_monomial(m).scale(c);
        }
        out
    }
}
