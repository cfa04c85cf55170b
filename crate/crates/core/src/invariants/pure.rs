use std::collections::HashMap;

use num_traits::Zero;

use super::InvariantsError;
use crate::algebra::{basis_of_degree, basis_of_degree_in, AlgElement, Derivation, Monomial};
use crate::cdga::{Cdga, CdgaError};
use crate::linalg::RatMatrix;
use crate::Rational;

/// Whether `d(V^even) = 0` and `d(V^odd) ⊆ ΛV^even`.
pub fn is_pure(c: &Cdga) -> Result<bool, InvariantsError> {
    c.require_free()?;
    let gens = c.gens();
    Ok((0..gens.len()).all(|g| {
        let dg = c.d_of(g);
        if gens.is_odd(g) {
            dg.terms().keys().all(|m| m.odd_length(gens) == 0)
        } else {
            dg.is_zero()
        }
    }))
}

/// The associated pure algebra `(ΛV, d_σ)`: `d_σ` kills the even generators
/// and keeps the part of `d(odd)` without odd letters.
pub fn associated_pure(c: &Cdga) -> Result<Cdga, InvariantsError> {
    c.require_free()?;
    let u = c.universe();
    let gens = c.gens();
    let mut d = Derivation::zero(u, 1);
    for g in 0..gens.len() {
        if gens.is_odd(g) {
            let img = c.d_of(g).filter_terms(|m| m.odd_length(gens) == 0);
            d.set(g, img).map_err(CdgaError::from)?;
        }
    }
    for g in 0..gens.len() {
        let dd = d.apply(d.image(g));
        if !dd.is_zero() {
            return Err(InvariantsError::Internal(format!(
                "d_σ² ≠ 0 on '{}': residue {dd}",
                gens.get(g).name()
            )));
        }
    }
    Ok(Cdga::new(format!("{}_pure", c.name()), d)?)
}

/// Rank of a family of elements, as vectors in the span of their monomials.
pub(crate) fn rank_of(elements: &[AlgElement]) -> usize {
    let mut index: HashMap<&Monomial, usize> = HashMap::new();
    for e in elements {
        for m in e.terms().keys() {
            let n = index.len();
            index.entry(m).or_insert(n);
        }
    }
    if index.is_empty() {
        return 0;
    }
    let columns: Vec<Vec<Rational>> = elements
        .iter()
        .map(|e| {
            let mut v = vec![Rational::zero(); index.len()];
            for (m, c) in e.terms() {
                v[index[m]] = c.clone();
            }
            v
        })
        .collect();
    RatMatrix::from_columns(index.len(), &columns).rank()
}

/// Monomials of degree `m` with exactly `k` odd letters.
fn odd_graded_basis(c: &Cdga, m: u32, k: u32) -> Vec<Monomial> {
    basis_of_degree(c.gens(), m, None)
        .into_iter()
        .filter(|mono| mono.odd_length(c.gens()) == k)
        .collect()
}

/// Rank of `d` on the monomials of degree `m` with `k` odd letters.
fn d_rank(c: &Cdga, m: u32, k: u32) -> usize {
    let images: Vec<AlgElement> = odd_graded_basis(c, m, k)
        .iter()
        .map(|mono| c.differential().apply_monomial(mono))
        .collect();
    rank_of(&images)
}

/// `dim H_k` of a pure algebra in degrees `0..=n`, where `H_k` is the
/// homology of `d` at the monomials with exactly `k` odd letters.
pub fn pure_filtration_homology(c: &Cdga, k: u32, n: u32) -> Result<Vec<usize>, InvariantsError> {
    if !is_pure(c)? {
        return Err(InvariantsError::Precondition(format!(
            "'{}' is not pure",
            c.name()
        )));
    }
    Ok((0..=n)
        .map(|m| {
            let space = odd_graded_basis(c, m, k).len();
            let kernel = space - if k == 0 { 0 } else { d_rank(c, m, k) };
            let image = if m == 0 { 0 } else { d_rank(c, m - 1, k + 1) };
            kernel - image
        })
        .collect())
}

/// `dim` in degree `m` of `ℚ[V^even] / (d_σ V^odd)`, computed directly as
/// the quotient of the even polynomials by the ideal.
pub(crate) fn h0_dim(pure: &Cdga, m: u32) -> usize {
    let gens = pure.gens();
    let even: Vec<usize> = (0..gens.len()).filter(|&g| !gens.is_odd(g)).collect();
    let space = basis_of_degree_in(gens, &even, m, None).len();
    let mut ideal = Vec::new();
    for g in (0..gens.len()).filter(|&g| gens.is_odd(g)) {
        let rel = pure.d_of(g);
        let rdeg = gens.degree(g) + 1;
        if rel.is_zero() || rdeg > m {
            continue;
        }
        for mono in basis_of_degree_in(gens, &even, m - rdeg, None) {
            ideal.push(rel.mul_monomial(&mono, &Rational::from_integer(1.into())));
        }
    }
    space - rank_of(&ideal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cdga::cohomology;

    pub(crate) fn paper_example() -> Cdga {
        Cdga::from_spec(
            "e14",
            &[("a", 2), ("x", 3), ("u", 3), ("b", 4), ("v", 5), ("w", 7)],
            &[
                ("u", "a^2"),
                ("b", "a*x"),
                ("v", "a*b - u*x"),
                ("w", "b^2 - 2*v*x"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn printed_differential_is_not_a_differential() {
        let u = crate::algebra::GeneratorSet::new([
            ("a", 2),
            ("x", 3),
            ("u", 3),
            ("b", 4),
            ("v", 5),
            ("w", 7),
        ])
        .unwrap()
        .into_universe();
        let mut d = Derivation::zero(&u, 1);
        for (g, img) in [
            ("u", "a^2"),
            ("b", "a*x"),
            ("v", "a*b - u*x"),
            ("w", "b^2 - v*x"),
        ] {
            d.set(
                u.position(g).unwrap(),
                crate::algebra::parse_poly(&u, img).unwrap(),
            )
            .unwrap();
        }
        let w = u.position("w").unwrap();
        assert!(!d.apply(d.image(w)).is_zero());
    }

    #[test]
    fn purity() {
        let c = paper_example();
        assert!(!is_pure(&c).unwrap());
        let p = associated_pure(&c).unwrap();
        assert!(is_pure(&p).unwrap());
        let g = p.gens();
        assert_eq!(p.d_of(g.position("b").unwrap()).to_string(), "0");
        assert_eq!(p.d_of(g.position("v").unwrap()).to_string(), "a*b");
        assert_eq!(p.d_of(g.position("w").unwrap()).to_string(), "b^2");
        let s2 = Cdga::from_spec("s2", &[("y", 2), ("z", 3)], &[("z", "y^2")]).unwrap();
        assert!(is_pure(&s2).unwrap());
        let t = Cdga::from_spec("t", &[("x", 3), ("y", 4)], &[]).unwrap();
        assert!(is_pure(&t).unwrap());
        assert_eq!(
            associated_pure(&t).unwrap().differential(),
            t.differential()
        );
    }

    #[test]
    fn paper_example_pure_cohomology() {
        let p = associated_pure(&paper_example()).unwrap();
        let dims = cohomology(&p, 16).dims();
        assert_eq!(
            dims,
            vec![1, 0, 1, 1, 1, 1, 0, 2, 0, 1, 1, 1, 1, 0, 1, 0, 0]
        );
        // top class in H_r, r = dim V^odd − dim V^even = 2
        assert_eq!(pure_filtration_homology(&p, 2, 14).unwrap()[14], 1);
        for k in [0, 1, 3, 4] {
            assert_eq!(pure_filtration_homology(&p, k, 14).unwrap()[14], 0);
        }
    }

    #[test]
    fn filtration_homology() {
        let s2 = Cdga::from_spec("s2", &[("y", 2), ("z", 3)], &[("z", "y^2")]).unwrap();
        assert_eq!(
            pure_filtration_homology(&s2, 0, 6).unwrap(),
            vec![1, 0, 1, 0, 0, 0, 0]
        );
        assert_eq!(pure_filtration_homology(&s2, 2, 6).unwrap(), vec![0; 7]);
        assert!(pure_filtration_homology(&paper_example(), 0, 4).is_err());
        assert_eq!(h0_dim(&s2, 4), 0);
        assert_eq!(h0_dim(&s2, 2), 1);
    }

    #[test]
    fn top_class_in_expected_filtration() {
        let c =
            Cdga::from_spec("cp2xs3", &[("u", 2), ("x", 5), ("s", 3)], &[("x", "u^3")]).unwrap();
        // r = dim V^odd − dim V^even = 1; fdim = 5 − 1 + 3 = 7
        let h1 = pure_filtration_homology(&c, 1, 8).unwrap();
        assert_eq!(h1[7], 1);
        let h0 = pure_filtration_homology(&c, 0, 8).unwrap();
        assert_eq!(h0[7], 0);
    }
}
