use num_traits::One;

use super::{cohomology, Cdga, CdgaError};
use crate::algebra::{same_universe, AlgElement, Homogeneity, Monomial};
use crate::linalg::RatMatrix;
use crate::Rational;

/// A CDGA morphism determined by generator images. Validated to preserve
/// degrees and commute with the differentials; the multiplicative extension
/// is computed on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdgaMorphism {
    source: Cdga,
    target: Cdga,
    images: Vec<AlgElement>,
}

impl CdgaMorphism {
    pub fn new(source: Cdga, target: Cdga, images: Vec<AlgElement>) -> Result<Self, CdgaError> {
        let gens = source.gens();
        if images.len() != gens.len() {
            return Err(CdgaError::BadImage {
                generator: String::new(),
                detail: format!("{} images for {} generators", images.len(), gens.len()),
            });
        }
        for (g, img) in images.iter().enumerate() {
            let name = gens.get(g).name().to_string();
            if !same_universe(img.universe(), target.universe()) {
                return Err(CdgaError::BadImage {
                    generator: name,
                    detail: "image is not an element of the target".into(),
                });
            }
            match img.homogeneity() {
                Homogeneity::Zero => {}
                Homogeneity::Degree(d) if d == gens.degree(g) => {}
                _ => {
                    return Err(CdgaError::BadImage {
                        generator: name,
                        detail: format!("'{img}' does not have degree {}", gens.degree(g)),
                    })
                }
            }
        }
        let images = images.iter().map(|i| target.reduce(i)).collect();
        let f = CdgaMorphism {
            source,
            target,
            images,
        };
        for g in 0..f.source.gens().len() {
            let lhs = f.apply(f.source.d_of(g));
            let rhs = f.target.d(&f.images[g]);
            let residue = f.target.reduce(&(&lhs - &rhs));
            if !residue.is_zero() {
                return Err(CdgaError::NotChainMap {
                    generator: f.source.gens().get(g).name().to_string(),
                    residue: residue.to_string(),
                });
            }
        }
        Ok(f)
    }

    /// Identity morphism.
    pub fn identity(c: &Cdga) -> Self {
        let u = c.universe();
        CdgaMorphism {
            source: c.clone(),
            target: c.clone(),
            images: (0..u.len()).map(|g| AlgElement::generator(u, g)).collect(),
        }
    }

    /// Images given as polynomial text over the target, one per source generator.
    pub fn from_text(source: Cdga, target: Cdga, images: &[&str]) -> Result<Self, CdgaError> {
        let u = target.universe().clone();
        let images = images
            .iter()
            .map(|s| crate::algebra::parse_poly(&u, s))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(source, target, images)
    }

    pub fn source(&self) -> &Cdga {
        &self.source
    }

    pub fn target(&self) -> &Cdga {
        &self.target
    }

    pub fn images(&self) -> &[AlgElement] {
        &self.images
    }

    pub fn image(&self, g: usize) -> &AlgElement {
        &self.images[g]
    }

    fn apply_monomial(&self, m: &Monomial) -> AlgElement {
        let mut acc = AlgElement::one(self.target.universe());
        for &(g, p) in m.exponents() {
            for _ in 0..p {
                acc = &acc * &self.images[g];
                if acc.is_zero() {
                    return acc;
                }
            }
        }
        acc
    }

    /// Image of an arbitrary source element, in target normal form.
    pub fn apply(&self, a: &AlgElement) -> AlgElement {
        let mut out = AlgElement::zero(self.target.universe());
        for (m, c) in a.terms() {
            let img = self.apply_monomial(m);
            if c.is_one() {
                out += &img;
            } else {
                out += &img.scale(c);
            }
        }
        self.target.reduce(&out)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &CdgaMorphism) -> Result<CdgaMorphism, CdgaError> {
        if self.target != other.source {
            return Err(CdgaError::SourceMismatch(format!(
                "cannot compose into '{}' from '{}'",
                other.source.name(),
                self.target.name()
            )));
        }
        let images = self.images.iter().map(|i| other.apply(i)).collect();
        Ok(CdgaMorphism {
            source: self.source.clone(),
            target: other.target.clone(),
            images,
        })
    }
}

/// Behaviour of `H^k(φ)` in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiIsoDegree {
    pub degree: u32,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub injective: bool,
    pub surjective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiIsoReport {
    pub degrees: Vec<QuasiIsoDegree>,
}

impl QuasiIsoReport {
    /// Bijective on `H^k` for every `k ≤ N`.
    pub fn is_quasi_iso(&self) -> bool {
        self.degrees.iter().all(|d| d.injective && d.surjective)
    }

    /// First degree where `H^k(φ)` fails to be bijective.
    pub fn first_failure(&self) -> Option<u32> {
        self.degrees
            .iter()
            .find(|d| !(d.injective && d.surjective))
            .map(|d| d.degree)
    }
}

/// Matrix of `H^k(φ)` in the representative bases, for `k ≤ n`.
pub(crate) fn induced_matrices(
    f: &CdgaMorphism,
    hs: &cohomology::Cohomology,
    ht: &cohomology::Cohomology,
    n: u32,
) -> Vec<RatMatrix> {
    (0..=n)
        .map(|k| {
            let columns: Vec<Vec<Rational>> = hs
                .representatives(k)
                .iter()
                .map(|z| {
                    ht.class_of(k, &f.apply(z))
                        .expect("a chain map sends cocycles to cocycles")
                })
                .collect();
            RatMatrix::from_columns(ht.dim(k), &columns)
        })
        .collect()
}

/// Ranks, injectivity and surjectivity of `H^k(φ)` for `k ≤ n`.
pub fn check_quasi_iso(f: &CdgaMorphism, n: u32) -> QuasiIsoReport {
    let hs = cohomology::cohomology(&f.source, n);
    let ht = cohomology::cohomology(&f.target, n);
    let degrees = induced_matrices(f, &hs, &ht, n)
        .iter()
        .enumerate()
        .map(|(k, m)| {
            let rank = m.rank();
            QuasiIsoDegree {
                degree: k as u32,
                source_dim: hs.dim(k as u32),
                target_dim: ht.dim(k as u32),
                rank,
                injective: rank == hs.dim(k as u32),
                surjective: rank == ht.dim(k as u32),
            }
        })
        .collect();
    QuasiIsoReport { degrees }
}
