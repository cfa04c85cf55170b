use num_traits::Zero;

use super::{Cdga, CdgaError, Complex};
use crate::algebra::AlgElement;
use crate::linalg::{complement_in, image_basis, kernel_basis, solve, RatMatrix, SubspaceBasis};
use crate::Rational;

/// Cohomology of one degree.
#[derive(Clone, Debug)]
pub struct DegreeCohomology {
    pub degree: u32,
    pub space_dim: usize,
    pub cocycle_dim: usize,
    pub boundary_dim: usize,
    /// Coordinates (in the degree space) of the chosen representatives.
    pub representative_coords: Vec<Vec<Rational>>,
    pub representatives: Vec<AlgElement>,
    boundaries: SubspaceBasis,
    /// Columns: representatives then boundary basis, for class coordinates.
    solver: RatMatrix,
}

impl DegreeCohomology {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }
}

/// Cohomology of a [`Cdga`] in degrees `0..=max_degree`, together with the
/// complex it was computed from.
#[derive(Clone, Debug)]
pub struct Cohomology {
    complex: Complex,
    degrees: Vec<DegreeCohomology>,
}

/// Plain-data summary of [`Cohomology`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyReport {
    pub dims: Vec<usize>,
    pub boundary_dims: Vec<usize>,
    pub representatives: Vec<Vec<String>>,
}

/// Cohomology of `c` in degrees `0..=n`.
pub fn cohomology(c: &Cdga, n: u32) -> Cohomology {
    Cohomology::new(c, n)
}

impl Cohomology {
    pub fn new(c: &Cdga, n: u32) -> Self {
        let complex = Complex::new(c, n + 1);
        let degrees = (0..=n)
            .map(|k| {
                let space = complex.space(k);
                let cocycles = kernel_basis(complex.matrix(k));
                let boundaries = if k == 0 {
                    SubspaceBasis::zero(space.dim())
                } else {
                    image_basis(complex.matrix(k - 1))
                };
                let reps = complement_in(&boundaries, cocycles.vectors());
                let mut columns = reps.clone();
                columns.extend(boundaries.vectors().iter().cloned());
                let solver = RatMatrix::from_columns(space.dim(), &columns);
                DegreeCohomology {
                    degree: k,
                    space_dim: space.dim(),
                    cocycle_dim: cocycles.dim(),
                    boundary_dim: boundaries.dim(),
                    representatives: reps.iter().map(|v| space.element(v)).collect(),
                    representative_coords: reps,
                    boundaries,
                    solver,
                }
            })
            .collect();
        Cohomology { complex, degrees }
    }

    pub fn max_degree(&self) -> u32 {
        (self.degrees.len() - 1) as u32
    }

    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    pub fn degree(&self, k: u32) -> &DegreeCohomology {
        &self.degrees[k as usize]
    }

    pub fn dim(&self, k: u32) -> usize {
        self.degrees[k as usize].dim()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(DegreeCohomology::dim).collect()
    }

    pub fn representatives(&self, k: u32) -> &[AlgElement] {
        &self.degrees[k as usize].representatives
    }

    /// Coordinates of the class of a degree-`k` cocycle in the basis of
    /// representatives.
    pub fn class_of(&self, k: u32, z: &AlgElement) -> Result<Vec<Rational>, CdgaError> {
        let v = self.complex.space(k).coords(z);
        self.class_of_coords(k, &v)
            .ok_or_else(|| CdgaError::NotCocycle(z.to_string()))
    }

    pub(crate) fn class_of_coords(&self, k: u32, v: &[Rational]) -> Option<Vec<Rational>> {
        let dc = &self.degrees[k as usize];
        if dc.dim() == 0 {
            return if self.is_cocycle_coords(k, v) {
                Some(Vec::new())
            } else {
                None
            };
        }
        let x = solve(&dc.solver, v).ok()?;
        Some(x[..dc.dim()].to_vec())
    }

    fn is_cocycle_coords(&self, k: u32, v: &[Rational]) -> bool {
        if k >= self.complex.top() {
            return true;
        }
        self.complex.matrix(k).mul_vec(v).iter().all(Zero::is_zero)
    }

    /// Whether a degree-`k` element is a coboundary.
    pub fn is_boundary(&self, k: u32, z: &AlgElement) -> bool {
        let v = self.complex.space(k).coords(z);
        self.degrees[k as usize].boundaries.contains(&v)
    }

    pub fn report(&self) -> CohomologyReport {
        CohomologyReport {
            dims: self.dims(),
            boundary_dims: self.degrees.iter().map(|d| d.boundary_dim).collect(),
            representatives: self
                .degrees
                .iter()
                .map(|d| d.representatives.iter().map(|r| r.to_string()).collect())
                .collect(),
        }
    }
}
