use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::generator::same_universe;
use super::{AlgebraError, GeneratorSet, Monomial, Universe};
use crate::Rational;

/// Homogeneity of an element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Degree(u32),
    Mixed,
}

/// An exact rational combination of monomials over a fixed generator set.
///
/// Zero coefficients are never stored, so two elements are equal exactly
/// when their universes and term maps agree.
#[derive(Clone, Debug)]
pub struct AlgElement {
    universe: Universe,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for AlgElement {
    fn eq(&self, other: &Self) -> bool {
        same_universe(&self.universe, &other.universe) && self.terms == other.terms
    }
}

impl Eq for AlgElement {}

impl AlgElement {
    pub fn zero(universe: &Universe) -> Self {
        AlgElement {
            universe: universe.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(universe: &Universe) -> Self {
        Self::from_monomial(universe, Monomial::unit(), Rational::one())
    }

    pub fn constant(universe: &Universe, c: Rational) -> Self {
        Self::from_monomial(universe, Monomial::unit(), c)
    }

    pub fn from_monomial(universe: &Universe, m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        AlgElement {
            universe: universe.clone(),
            terms,
        }
    }

    pub fn generator(universe: &Universe, ordinal: usize) -> Self {
        Self::from_monomial(universe, Monomial::generator(ordinal), Rational::one())
    }

    pub fn named(universe: &Universe, name: &str) -> Result<Self, AlgebraError> {
        let i = universe
            .position(name)
            .ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))?;
        Ok(Self::generator(universe, i))
    }

    /// Builds an element from `(monomial, coefficient)` pairs, summing repeats.
    pub fn from_terms(
        universe: &Universe,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut e = Self::zero(universe);
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn gens(&self) -> &GeneratorSet {
        &self.universe
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Rational> {
        self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut degs = self.terms.keys().map(|m| m.degree(&self.universe));
        match degs.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if degs.all(|e| e == d) {
                    Homogeneity::Degree(d)
                } else {
                    Homogeneity::Mixed
                }
            }
        }
    }

    /// Degree of a nonzero homogeneous element; `None` for zero.
    pub fn degree(&self) -> Result<Option<u32>, AlgebraError> {
        match self.homogeneity() {
            Homogeneity::Zero => Ok(None),
            Homogeneity::Degree(d) => Ok(Some(d)),
            Homogeneity::Mixed => Err(AlgebraError::Inhomogeneous(self.to_string())),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.universe);
        }
        AlgElement {
            universe: self.universe.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    fn check_universe(&self, other: &AlgElement) -> Result<(), AlgebraError> {
        if same_universe(&self.universe, &other.universe) {
            return Ok(());
        }
        let name = self
            .universe
            .foreign_in(&other.universe)
            .or_else(|| other.universe.foreign_in(&self.universe))
            .unwrap_or_default();
        Err(AlgebraError::ForeignGenerator(name))
    }

    /// Graded-commutative product. Fails when the operands live over
    /// different generator sets.
    pub fn try_mul(&self, other: &AlgElement) -> Result<AlgElement, AlgebraError> {
        self.check_universe(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn try_add(&self, other: &AlgElement) -> Result<AlgElement, AlgebraError> {
        self.check_universe(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    fn mul_unchecked(&self, other: &AlgElement) -> AlgElement {
        let gens = &*self.universe;
        let mut out = AlgElement::zero(&self.universe);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((m, neg)) = ma.mul(mb, gens) {
                    let c = ca * cb;
                    out.add_term(m, if neg { -c } else { c });
                }
            }
        }
        out
    }

    /// Product with a single monomial on the right.
    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> AlgElement {
        let gens = &*self.universe;
        let mut out = AlgElement::zero(&self.universe);
        for (ma, ca) in &self.terms {
            if let Some((p, neg)) = ma.mul(m, gens) {
                let v = ca * c;
                out.add_term(p, if neg { -v } else { v });
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> AlgElement {
        let mut acc = AlgElement::one(&self.universe);
        for _ in 0..n {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Splits into pieces of pure word length; the pieces sum back to `self`.
    pub fn word_length_split(&self) -> BTreeMap<u32, AlgElement> {
        let mut out: BTreeMap<u32, AlgElement> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.word_length())
                .or_insert_with(|| AlgElement::zero(&self.universe))
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// The part of `self` whose monomials satisfy `keep`.
    pub fn filter_terms(&self, mut keep: impl FnMut(&Monomial) -> bool) -> AlgElement {
        AlgElement {
            universe: self.universe.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Degree-`k` homogeneous component.
    pub fn component(&self, k: u32) -> AlgElement {
        let gens = self.universe.clone();
        self.filter_terms(|m| m.degree(&gens) == k)
    }

    /// Reinterprets the element over another universe, sending generator `i`
    /// to generator `map[i]`. The map must be order-preserving on the letters
    /// that occur.
    pub(crate) fn remap_monotone(&self, target: &Universe, map: &[usize]) -> AlgElement {
        AlgElement {
            universe: target.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.remap_monotone(|g| map[g]), c.clone()))
                .collect(),
        }
    }

    /// Image under the algebra map (over another universe) sending generator
    /// `i` to `images[i]`. Not a chain-map check: just substitution.
    pub fn substitute(&self, target: &Universe, images: &[AlgElement]) -> AlgElement {
        assert_eq!(images.len(), self.universe.len(), "one image per generator");
        assert!(
            images.iter().all(|i| same_universe(i.universe(), target)),
            "substitution images must live over the target"
        );
        let mut out = AlgElement::zero(target);
        for (m, c) in &self.terms {
            let mut acc = AlgElement::constant(target, c.clone());
            for &(g, p) in m.exponents() {
                for _ in 0..p {
                    acc = acc.mul_unchecked(&images[g]);
                }
                if acc.is_zero() {
                    break;
                }
            }
            out += &acc;
        }
        out
    }

    /// Letters (ordinals) occurring anywhere in the element.
    pub fn support(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .terms
            .keys()
            .flat_map(|m| m.exponents().iter().map(|&(g, _)| g))
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if m.is_unit() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.format(&self.universe))?;
            } else {
                write!(f, "{abs}*{}", m.format(&self.universe))?;
            }
        }
        Ok(())
    }
}

fn assert_same(a: &AlgElement, b: &AlgElement) {
    if let Err(e) = a.check_universe(b) {
        panic!("{e}");
    }
}

impl Add for &AlgElement {
    type Output = AlgElement;

    fn add(self, rhs: &AlgElement) -> AlgElement {
        assert_same(self, rhs);
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &AlgElement {
    type Output = AlgElement;

    fn sub(self, rhs: &AlgElement) -> AlgElement {
        assert_same(self, rhs);
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&AlgElement> for AlgElement {
    fn add_assign(&mut self, rhs: &AlgElement) {
        assert_same(self, rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&AlgElement> for AlgElement {
    fn sub_assign(&mut self, rhs: &AlgElement) {
        assert_same(self, rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Neg for &AlgElement {
    type Output = AlgElement;

    fn neg(self) -> AlgElement {
        AlgElement {
            universe: self.universe.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

/// Panics on mismatched universes; use [`AlgElement::try_mul`] to get an error.
impl Mul for &AlgElement {
    type Output = AlgElement;

    fn mul(self, rhs: &AlgElement) -> AlgElement {
        assert_same(self, rhs);
        self.mul_unchecked(rhs)
    }
}

impl Add for AlgElement {
    type Output = AlgElement;

    fn add(self, rhs: AlgElement) -> AlgElement {
        &self + &rhs
    }
}

impl Sub for AlgElement {
    type Output = AlgElement;

    fn sub(self, rhs: AlgElement) -> AlgElement {
        &self - &rhs
    }
}

impl Mul for AlgElement {
    type Output = AlgElement;

    fn mul(self, rhs: AlgElement) -> AlgElement {
        &self * &rhs
    }
}

impl Neg for AlgElement {
    type Output = AlgElement;

    fn neg(self) -> AlgElement {
        -&self
    }
}
