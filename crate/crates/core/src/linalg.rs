//! Exact linear algebra over the rationals.
//!
//! Elimination runs on sparse integer rows (each input row is scaled to a
//! primitive integer vector and kept primitive after every combination);
//! rationals only reappear when the final echelon rows are normalized.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::Rational;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("basis vector {index} of the subspace is not contained in the ambient subspace")]
    NotContained { index: usize, vector: Vec<Rational> },
    /// `certificate` is a row vector `y` with `y·A = 0` and `y·b ≠ 0`.
    #[error("linear system has no solution")]
    NoSolution { certificate: Vec<Rational> },
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(LinalgError::DimensionMismatch(format!(
                    "row {i} has length {}, expected {cols}",
                    r.len()
                )));
            }
            data.extend(r);
        }
        Ok(RatMatrix {
            rows: nrows,
            cols,
            data,
        })
    }

    /// Convenience constructor from integer entries.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&x| Rational::from_integer(x.into()))
            })
            .collect();
        RatMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column {j} has the wrong length");
            for (i, x) in c.iter().enumerate() {
                if !x.is_zero() {
                    m.set(i, j, x.clone());
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if !v.is_zero() {
                    t.set(c, r, v.clone());
                }
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length does not match columns");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let v = out.get(r, c) + a * b;
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        echelon_int(self.cols, self.row_iter()).1.len()
    }

    fn row_iter(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |r| self.row(r))
    }
}

type IntRow = Vec<(usize, BigInt)>;

fn primitive(row: &mut IntRow) {
    let mut g = BigInt::zero();
    for (_, x) in row.iter() {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() {
        return;
    }
    // leading coefficient positive
    if row[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, x) in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

fn to_int_row(row: &[Rational]) -> IntRow {
    let mut lcm = BigInt::one();
    for x in row.iter().filter(|x| !x.is_zero()) {
        lcm = lcm.lcm(x.denom());
    }
    let mut out: IntRow = row
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.numer() * (&lcm / x.denom())))
        .collect();
    primitive(&mut out);
    out
}

fn entry(row: &IntRow, col: usize) -> Option<&BigInt> {
    row.binary_search_by_key(&col, |(c, _)| *c)
        .ok()
        .map(|i| &row[i].1)
}

/// `a·target − b·source`, made primitive.
fn combine(target: &IntRow, a: &BigInt, source: &IntRow, b: &BigInt) -> IntRow {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < source.len() {
        let ci = target.get(i).map(|e| e.0);
        let cj = source.get(j).map(|e| e.0);
        match (ci, cj) {
            (Some(x), Some(y)) if x == y => {
                let v = a * &target[i].1 - b * &source[j].1;
                if !v.is_zero() {
                    out.push((x, v));
                }
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push((x, a * &target[i].1));
                i += 1;
            }
            (Some(x), None) => {
                out.push((x, a * &target[i].1));
                i += 1;
            }
            (_, Some(y)) => {
                out.push((y, -(b * &source[j].1)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    primitive(&mut out);
    out
}

/// Integer reduced echelon form: returns the nonzero reduced rows and their
/// pivot columns. Pivot choice: leftmost nonzero column, first row holding it.
fn echelon_int<'a>(
    cols: usize,
    rows: impl Iterator<Item = &'a [Rational]>,
) -> (Vec<IntRow>, Vec<usize>) {
    let mut work: Vec<IntRow> = rows
        .map(|r| {
            debug_assert_eq!(r.len(), cols);
            to_int_row(r)
        })
        .filter(|r| !r.is_empty())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    while r < work.len() {
        // drop rows that became zero
        work.retain(|row| !row.is_empty());
        if r >= work.len() {
            break;
        }
        let (idx, col) = work[r..]
            .iter()
            .enumerate()
            .map(|(i, row)| (i + r, row[0].0))
            .min_by_key(|&(i, c)| (c, i))
            .expect("nonempty");
        work.swap(r, idx);
        let pivot = work[r][0].1.clone();
        for j in r + 1..work.len() {
            if work[j].first().map(|e| e.0) == Some(col) {
                let e = work[j][0].1.clone();
                let g = pivot.gcd(&e);
                work[j] = combine(&work[j], &(&pivot / &g), &work[r], &(&e / &g));
            }
        }
        pivots.push(col);
        r += 1;
    }
    work.retain(|row| !row.is_empty());
    debug_assert_eq!(work.len(), pivots.len());
    // back substitution
    for i in (0..work.len()).rev() {
        let col = pivots[i];
        let pivot = work[i][0].1.clone();
        for k in 0..i {
            if let Some(e) = entry(&work[k], col).cloned() {
                let g = pivot.gcd(&e);
                work[k] = combine(&work[k], &(&pivot / &g), &work[i], &(&e / &g));
            }
        }
    }
    (work, pivots)
}

fn normalize(row: &IntRow, cols: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); cols];
    let lead = &row[0].1;
    for (c, x) in row {
        out[*c] = Rational::new(x.clone(), lead.clone());
    }
    out
}

/// Result of [`rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: RatMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Reduced row echelon form, exact.
pub fn rref(m: &RatMatrix) -> Rref {
    let (rows, pivots) = echelon_int(m.cols, m.row_iter());
    let mut out = RatMatrix::zeros(m.rows, m.cols);
    for (i, row) in rows.iter().enumerate() {
        for (c, x) in normalize(row, m.cols).into_iter().enumerate() {
            if !x.is_zero() {
                out.set(i, c, x);
            }
        }
    }
    Rref {
        matrix: out,
        rank: pivots.len(),
        pivots,
    }
}

/// A subspace of `Q^ambient`, stored as the nonzero rows of its reduced
/// echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient: usize,
    vectors: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn zero(ambient: usize) -> Self {
        SubspaceBasis {
            ambient,
            vectors: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_rref(&rref(&RatMatrix::identity(ambient)))
    }

    /// Span of the given vectors.
    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector of wrong length");
        }
        let (rows, pivots) = echelon_int(ambient, vectors.iter().map(Vec::as_slice));
        SubspaceBasis {
            ambient,
            vectors: rows.iter().map(|r| normalize(r, ambient)).collect(),
            pivots,
        }
    }

    fn from_rref(r: &Rref) -> Self {
        SubspaceBasis {
            ambient: r.matrix.cols,
            vectors: (0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect(),
            pivots: r.pivots.clone(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection along pivot coordinates; zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (b, &p) in self.vectors.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                if !x.is_zero() {
                    *o -= &c * x;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Coordinates of `v` in this basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains_subspace(&self, other: &SubspaceBasis) -> bool {
        other.vectors.iter().all(|v| self.contains(v))
    }
}

/// Basis of `{x : m·x = 0}`.
pub fn kernel_basis(m: &RatMatrix) -> SubspaceBasis {
    let r = rref(m);
    let mut is_pivot = vec![false; m.cols];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let vectors: Vec<Vec<Rational>> = (0..m.cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); m.cols];
            v[f] = Rational::one();
            for (i, &p) in r.pivots.iter().enumerate() {
                let x = r.matrix.get(i, f);
                if !x.is_zero() {
                    v[p] = -x.clone();
                }
            }
            v
        })
        .collect();
    SubspaceBasis::span(m.cols, &vectors)
}

/// Basis of the column space of `m`.
pub fn image_basis(m: &RatMatrix) -> SubspaceBasis {
    SubspaceBasis::from_rref(&rref(&m.transpose())).with_ambient(m.rows)
}

impl SubspaceBasis {
    fn with_ambient(mut self, ambient: usize) -> Self {
        self.ambient = ambient;
        self
    }
}

/// Coset representatives of `within / sub`: the vectors of `within`'s basis,
/// in order, that are independent of `sub` and of the previously chosen ones.
pub fn quotient_basis(
    sub: &SubspaceBasis,
    within: &SubspaceBasis,
) -> Result<Vec<Vec<Rational>>, LinalgError> {
    if sub.ambient != within.ambient {
        return Err(LinalgError::DimensionMismatch(format!(
            "ambient dimensions {} and {}",
            sub.ambient, within.ambient
        )));
    }
    for (index, v) in sub.vectors.iter().enumerate() {
        if !within.contains(v) {
            return Err(LinalgError::NotContained {
                index,
                vector: v.clone(),
            });
        }
    }
    Ok(complement_in(sub, within.vectors()))
}

/// Picks, in order, the candidates that are independent modulo `sub` and the
/// earlier picks.
pub fn complement_in(sub: &SubspaceBasis, candidates: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut acc = Echelon::from_subspace(sub);
    let mut reps = Vec::new();
    for v in candidates {
        if acc.insert(v) {
            reps.push(v.clone());
        }
    }
    reps
}

/// Solves `m·x = b`, setting free variables to zero.
pub fn solve(m: &RatMatrix, b: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
    if b.len() != m.rows {
        return Err(LinalgError::DimensionMismatch(format!(
            "right-hand side has length {}, matrix has {} rows",
            b.len(),
            m.rows
        )));
    }
    let cols = m.cols + 1;
    let augmented: Vec<Vec<Rational>> = (0..m.rows)
        .map(|r| {
            let mut row = m.row(r).to_vec();
            row.push(b[r].clone());
            row
        })
        .collect();
    let (rows, pivots) = echelon_int(cols, augmented.iter().map(Vec::as_slice));
    if pivots.last() == Some(&m.cols) {
        let left = kernel_basis(&m.transpose());
        let certificate = left
            .vectors()
            .iter()
            .find(|y| !dot(y, b).is_zero())
            .cloned()
            .expect("inconsistent system has a left certificate");
        return Err(LinalgError::NoSolution { certificate });
    }
    let mut x = vec![Rational::zero(); m.cols];
    for (row, &p) in rows.iter().zip(&pivots) {
        if let Some(rhs) = entry(row, m.cols) {
            x[p] = Rational::new(rhs.clone(), row[0].1.clone());
        }
    }
    Ok(x)
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Incrementally built echelon basis (pivot entries normalized to one).
#[derive(Clone, Debug, Default)]
pub(crate) struct Echelon {
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Echelon {
    pub(crate) fn from_subspace(s: &SubspaceBasis) -> Self {
        Echelon {
            rows: s
                .pivots
                .iter()
                .cloned()
                .zip(s.vectors.iter().cloned())
                .collect(),
        }
    }

    pub(crate) fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (p, row) in &self.rows {
            let c = out[*p].clone();
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(row) {
                if !x.is_zero() {
                    *o -= &c * x;
                }
            }
        }
        out
    }

    /// Adds `v` if independent; returns whether it was.
    pub(crate) fn insert(&mut self, v: &[Rational]) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = r[p].clone();
        let r: Vec<Rational> = r.into_iter().map(|x| x / &lead).collect();
        self.rows.push((p, r));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| q(x, 1)).collect()
    }

    #[test]
    fn rref_examples() {
        let r = rref(&RatMatrix::from_ints(&[&[1, 2], &[2, 4]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.matrix, RatMatrix::from_ints(&[&[1, 2], &[0, 0]]));

        let id = RatMatrix::identity(3);
        let r = rref(&id);
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 3);

        let m =
            RatMatrix::from_rows(2, vec![vec![q(1, 2), q(1, 1)], vec![q(1, 1), q(3, 1)]]).unwrap();
        assert_eq!(rref(&m).rank, 2);
    }

    #[test]
    fn rref_normalizes_fractions() {
        let m = RatMatrix::from_rows(
            3,
            vec![
                vec![q(2, 3), q(1, 3), q(0, 1)],
                vec![q(0, 1), q(1, 2), q(5, 7)],
            ],
        )
        .unwrap();
        let r = rref(&m);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.matrix.row(0), &[q(1, 1), q(0, 1), q(-5, 7)]);
        assert_eq!(r.matrix.row(1), &[q(0, 1), q(1, 1), q(10, 7)]);
    }

    #[test]
    fn kernel_and_image_examples() {
        let z = RatMatrix::zeros(2, 3);
        assert_eq!(kernel_basis(&z).dim(), 3);
        assert_eq!(image_basis(&z).dim(), 0);

        let m = RatMatrix::from_ints(&[&[1, 1]]);
        let k = kernel_basis(&m);
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&ints(&[1, -1])));
        assert_eq!(image_basis(&m).dim(), 1);
        assert_eq!(image_basis(&m).ambient(), 1);
    }

    #[test]
    fn quotient_examples() {
        let sub = SubspaceBasis::span(3, &[ints(&[1, 0, 0])]);
        let within = SubspaceBasis::span(3, &[ints(&[1, 0, 0]), ints(&[0, 1, 0])]);
        let reps = quotient_basis(&sub, &within).unwrap();
        assert_eq!(reps, vec![ints(&[0, 1, 0])]);

        let bad = SubspaceBasis::span(3, &[ints(&[0, 0, 1])]);
        assert!(matches!(
            quotient_basis(&bad, &within),
            Err(LinalgError::NotContained { index: 0, .. })
        ));
    }

    #[test]
    fn solve_examples() {
        let b = ints(&[3, -1, 2]);
        assert_eq!(solve(&RatMatrix::identity(3), &b).unwrap(), b);
        assert_eq!(
            solve(&RatMatrix::from_ints(&[&[1, 1]]), &ints(&[2])).unwrap(),
            ints(&[2, 0])
        );
        match solve(&RatMatrix::from_ints(&[&[0]]), &ints(&[1])) {
            Err(LinalgError::NoSolution { certificate }) => {
                assert!(!certificate[0].is_zero());
            }
            other => panic!("expected NoSolution, got {other:?}"),
        }
        assert!(matches!(
            solve(&RatMatrix::identity(2), &ints(&[1])),
            Err(LinalgError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn certificate_annihilates_columns() {
        let m = RatMatrix::from_ints(&[&[1, 2], &[2, 4], &[0, 0]]);
        let b = ints(&[1, 3, 0]);
        let Err(LinalgError::NoSolution { certificate }) = solve(&m, &b) else {
            panic!("system is inconsistent");
        };
        for c in 0..2 {
            assert!(dot(&certificate, &m.column(c)).is_zero());
        }
        assert!(!dot(&certificate, &b).is_zero());
    }
}
