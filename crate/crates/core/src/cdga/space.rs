use std::collections::HashMap;

use num_traits::Zero;

use super::Cdga;
use crate::algebra::{basis_of_degree, AlgElement, Monomial, Universe, WordFilter};
use crate::linalg::{RatMatrix, SubspaceBasis};
use crate::Rational;

/// The degree-`k` part of a [`Cdga`]: monomials of degree `k` (within the
/// word cap) modulo the degree-`k` part of the relation ideal.
///
/// Quotient coordinates are taken on the monomials that are not pivots of
/// the relation span's echelon form.
#[derive(Clone, Debug)]
pub struct DegreeSpace {
    degree: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    relations: SubspaceBasis,
    basis: Vec<usize>,
    position: Vec<Option<usize>>,
    universe: Universe,
}

impl DegreeSpace {
    pub fn new(c: &Cdga, k: u32) -> Self {
        let gens = c.gens();
        let filter = c.word_cap().map(WordFilter::at_most);
        let monomials = basis_of_degree(gens, k, filter);
        let index: HashMap<Monomial, usize> = monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let n = monomials.len();
        let mut rel_vectors = Vec::new();
        for r in c.relations() {
            let rd = r.degree().ok().flatten().unwrap_or(0);
            if rd > k {
                continue;
            }
            for m in basis_of_degree(gens, k - rd, None) {
                let prod = r.mul_monomial(&m, &Rational::from_integer(1.into()));
                if prod.is_zero() {
                    continue;
                }
                let mut v = vec![Rational::zero(); n];
                let mut any = false;
                for (mm, coef) in prod.terms() {
                    if let Some(&i) = index.get(mm) {
                        v[i] = coef.clone();
                        any = true;
                    }
                }
                if any {
                    rel_vectors.push(v);
                }
            }
        }
        let relations = SubspaceBasis::span(n, &rel_vectors);
        let mut is_pivot = vec![false; n];
        for &p in relations.pivots() {
            is_pivot[p] = true;
        }
        let basis: Vec<usize> = (0..n).filter(|&i| !is_pivot[i]).collect();
        let mut position = vec![None; n];
        for (j, &i) in basis.iter().enumerate() {
            position[i] = Some(j);
        }
        DegreeSpace {
            degree: k,
            monomials,
            index,
            relations,
            basis,
            position,
            universe: c.universe().clone(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Monomials forming the quotient basis.
    pub fn basis_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.basis.iter().map(move |&i| &self.monomials[i])
    }

    pub fn basis_monomial(&self, j: usize) -> &Monomial {
        &self.monomials[self.basis[j]]
    }

    /// Quotient coordinates of a degree-`k` element. Terms of other degrees
    /// or beyond the word cap are ignored.
    pub fn coords(&self, e: &AlgElement) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.monomials.len()];
        for (m, c) in e.terms() {
            if let Some(&i) = self.index.get(m) {
                v[i] = c.clone();
            }
        }
        let v = if self.relations.dim() > 0 {
            self.relations.reduce(&v)
        } else {
            v
        };
        let mut out = vec![Rational::zero(); self.basis.len()];
        for (i, x) in v.into_iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let j = self.position[i].expect("reduced vector is supported on the quotient basis");
            out[j] = x;
        }
        out
    }

    /// Element with the given quotient coordinates.
    pub fn element(&self, coords: &[Rational]) -> AlgElement {
        assert_eq!(coords.len(), self.basis.len());
        AlgElement::from_terms(
            &self.universe,
            coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| (self.basis_monomial(j).clone(), c.clone())),
        )
    }
}

/// Degreewise spaces and differential matrices of a [`Cdga`] in degrees
/// `0..=top`. `matrix(k)` represents `d: A^k → A^{k+1}` for `k < top`.
#[derive(Clone, Debug)]
pub struct Complex {
    spaces: Vec<DegreeSpace>,
    matrices: Vec<RatMatrix>,
}

impl Complex {
    pub fn new(c: &Cdga, top: u32) -> Self {
        let spaces: Vec<DegreeSpace> = (0..=top).map(|k| DegreeSpace::new(c, k)).collect();
        let matrices = (0..top as usize)
            .map(|k| {
                let src = &spaces[k];
                let dst = &spaces[k + 1];
                let columns: Vec<Vec<Rational>> = src
                    .basis_monomials()
                    .map(|m| dst.coords(&c.differential().apply_monomial(m)))
                    .collect();
                RatMatrix::from_columns(dst.dim(), &columns)
            })
            .collect();
        Complex { spaces, matrices }
    }

    pub fn top(&self) -> u32 {
        (self.spaces.len() - 1) as u32
    }

    pub fn space(&self, k: u32) -> &DegreeSpace {
        &self.spaces[k as usize]
    }

    pub fn matrix(&self, k: u32) -> &RatMatrix {
        &self.matrices[k as usize]
    }
}
