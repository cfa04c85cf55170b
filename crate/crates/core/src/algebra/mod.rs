//! Free graded-commutative algebras over the rationals.
//!
//! `ΛV` is the polynomial algebra on the even generators tensored with the
//! exterior algebra on the odd ones. Elements are exact, canonical sparse
//! sums of [`Monomial`]s; products carry the Koszul sign.

mod basis;
mod derivation;
mod element;
mod generator;
mod monomial;
mod poly;

pub use basis::{basis_of_degree, basis_of_degree_in, WordFilter};
pub use derivation::Derivation;
pub use element::{AlgElement, Homogeneity};
pub use generator::{Generator, GeneratorSet, Universe};
pub use monomial::Monomial;
pub use poly::{parse_monomial, parse_poly};

pub(crate) use generator::{is_identifier, same_universe};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("generator '{0}' is not part of this algebra")]
    ForeignGenerator(String),
    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),
    #[error("duplicate generator '{0}'")]
    DuplicateGenerator(String),
    #[error("generator '{0}' has degree 0")]
    DegreeZero(String),
    #[error("'{0}' is not a valid identifier")]
    InvalidName(String),
    #[error("element '{0}' is not homogeneous")]
    Inhomogeneous(String),
    #[error("image of '{generator}' must have degree {expected}, got '{image}'")]
    BadImageDegree {
        generator: String,
        expected: i64,
        image: String,
    },
    #[error("parse error at offset {pos}: {message}")]
    Parse { pos: usize, message: String },
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn universe(spec: &[(&str, u32)]) -> Universe {
        GeneratorSet::new(spec.iter().map(|&(n, d)| (n, d)))
            .unwrap()
            .into_universe()
    }

    fn p(u: &Universe, s: &str) -> AlgElement {
        parse_poly(u, s).unwrap()
    }

    #[test]
    fn odd_product_sign() {
        let u = universe(&[("x", 3), ("y", 3)]);
        let x = p(&u, "x");
        let y = p(&u, "y");
        assert_eq!((&x * &y).to_string(), "x*y");
        assert_eq!((&y * &x).to_string(), "-x*y");
        assert!((&x * &x).is_zero());
    }

    #[test]
    fn mixed_parity_product() {
        let u = universe(&[("y", 2), ("z", 3)]);
        let e = &p(&u, "y + z") * &p(&u, "y");
        assert_eq!(e, p(&u, "y^2 + y*z"));
        assert_eq!(e, p(&u, "y^2 + z*y"));
    }

    #[test]
    fn foreign_generator_is_reported() {
        let u = universe(&[("y", 2)]);
        let v = universe(&[("y", 2), ("w", 5)]);
        let err = p(&u, "y").try_mul(&p(&v, "w")).unwrap_err();
        assert_eq!(err, AlgebraError::ForeignGenerator("w".into()));
    }

    #[test]
    fn derivation_on_even_sphere_model() {
        let u = universe(&[("y", 2), ("z", 3)]);
        let d = Derivation::new(&u, 1, [(1, p(&u, "y^2"))]).unwrap();
        assert_eq!(d.apply(&p(&u, "y*z")), p(&u, "y^3"));
        assert!(d.apply(&AlgElement::one(&u)).is_zero());
    }

    #[test]
    fn degree_lowering_derivation() {
        let u = universe(&[("y", 2), ("ybar", 1)]);
        let s = Derivation::new(&u, -1, [(0, p(&u, "ybar"))]).unwrap();
        assert_eq!(s.apply(&p(&u, "y^2")), p(&u, "2*y*ybar"));
    }

    #[test]
    fn derivation_rejects_wrong_degree() {
        let u = universe(&[("y", 2), ("z", 3)]);
        assert!(matches!(
            Derivation::new(&u, 1, [(1, p(&u, "y"))]),
            Err(AlgebraError::BadImageDegree { .. })
        ));
        assert!(Derivation::new(&u, 1, [(1, p(&u, "y^2 + y"))]).is_err());
    }

    #[test]
    fn basis_examples() {
        let x = GeneratorSet::new([("x", 3)]).unwrap();
        assert_eq!(basis_of_degree(&x, 3, None).len(), 1);
        assert!(basis_of_degree(&x, 6, None).is_empty());

        let yz = GeneratorSet::new([("y", 2), ("z", 3)]).unwrap();
        let b6 = basis_of_degree(&yz, 6, None);
        assert_eq!(b6, vec![Monomial::from_sorted_unchecked(vec![(0, 3)])]);
        let b5 = basis_of_degree(&yz, 5, None);
        assert_eq!(
            b5,
            vec![Monomial::from_sorted_unchecked(vec![(0, 1), (1, 1)])]
        );

        let ux = GeneratorSet::new([("u", 2), ("x", 5)]).unwrap();
        let b10 = basis_of_degree(&ux, 10, None);
        assert_eq!(b10, vec![Monomial::from_sorted_unchecked(vec![(0, 5)])]);
        assert_eq!(basis_of_degree(&ux, 0, None), vec![Monomial::unit()]);
    }

    #[test]
    fn basis_word_filter() {
        let g = GeneratorSet::new([("y", 2), ("z", 3)]).unwrap();
        // degree 12: y^6, y^3*... z even power impossible; y^6 (len 6) and y^... z*? none odd
        let all = basis_of_degree(&g, 7, None);
        assert_eq!(all.len(), 1); // y^2*z
        assert!(basis_of_degree(&g, 7, Some(WordFilter::at_most(2))).is_empty());
        assert_eq!(
            basis_of_degree(&g, 7, Some(WordFilter::exactly(3))).len(),
            1
        );
    }

    #[test]
    fn word_length_split_examples() {
        let u = universe(&[("y", 2), ("z", 3)]);
        let split = p(&u, "y^2 + z").word_length_split();
        assert_eq!(split[&2], p(&u, "y^2"));
        assert_eq!(split[&1], p(&u, "z"));
        let unit = AlgElement::one(&u).word_length_split();
        assert_eq!(unit.len(), 1);
        assert_eq!(unit[&0], AlgElement::one(&u));

        let v = universe(&[("a", 2), ("b", 4), ("u", 3), ("x", 3)]);
        let s = p(&v, "a*b - u*x").word_length_split();
        assert_eq!(s.len(), 1);
        assert_eq!(s[&2], p(&v, "a*b - u*x"));
    }

    #[test]
    fn printing_round_trips() {
        let u = universe(&[("a", 2), ("x", 3), ("u", 3)]);
        for s in ["0", "1", "-3/4*a^2*x + x*u - 7", "a + 2*a^3 - 1/2*x*u*a"] {
            let e = p(&u, s);
            assert_eq!(p(&u, &e.to_string()), e, "{s}");
        }
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let u = universe(&[("a", 2)]);
        assert!(matches!(
            parse_poly(&u, "a + b"),
            Err(AlgebraError::UnknownGenerator(_))
        ));
        assert!(matches!(
            parse_poly(&u, "a +"),
            Err(AlgebraError::Parse { pos: 3, .. })
        ));
        assert!(matches!(
            parse_poly(&u, "a ^ 0"),
            Err(AlgebraError::Parse { .. })
        ));
        assert!(matches!(
            parse_poly(&u, "2/0*a"),
            Err(AlgebraError::Parse { .. })
        ));
        assert_eq!(p(&u, "a # comment"), p(&u, "a"));
    }

    #[test]
    fn homogeneity() {
        let u = universe(&[("a", 2), ("x", 3)]);
        assert_eq!(p(&u, "a*x").degree().unwrap(), Some(5));
        assert_eq!(AlgElement::zero(&u).degree().unwrap(), None);
        assert!(p(&u, "a + x").degree().is_err());
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(p(&u, "a").scale(&half).to_string(), "1/2*a");
    }
}
