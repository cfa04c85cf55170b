use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::FormsError;
use crate::Rational;

/// One term `t^a · y_S` in reduced coordinates: `exps[j]` is the power of
/// `t_{j+1}`, `ext` the ascending exterior indices (each in `1..=n`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormTerm {
    pub ext: Vec<usize>,
    pub exps: Vec<u32>,
}

/// A homogeneous polynomial differential form on the `n`-simplex, stored in
/// the reduced coordinates `t_1..t_n`, `y_1..y_n` (with `t_0 = 1 − Σ t_i`
/// and `y_0 = −Σ y_i` eliminated).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyForm {
    dim: usize,
    degree: usize,
    terms: BTreeMap<FormTerm, Rational>,
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Sign of the permutation sorting the concatenation of two ascending
/// index lists, or `None` when they share an index.
fn merge_sign(a: &[usize], b: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut inversions = 0usize;
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i < a.len() && a[i] == b[j] {
            return None;
        } else {
            inversions += a.len() - i;
            out.push(b[j]);
            j += 1;
        }
    }
    Some((out, inversions % 2 == 1))
}

impl PolyForm {
    pub fn zero(dim: usize, degree: usize) -> Self {
        PolyForm {
            dim,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        let mut f = Self::zero(dim, 0);
        f.add_term(
            FormTerm {
                ext: Vec::new(),
                exps: vec![0; dim],
            },
            c,
        );
        f
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, Rational::one())
    }

    /// The coordinate `t_i`, `0 ≤ i ≤ dim`; `t_0` is expanded.
    pub fn t(dim: usize, i: usize) -> Result<Self, FormsError> {
        if i > dim {
            return Err(FormsError::IndexOutOfRange { index: i, dim });
        }
        if i == 0 {
            let mut f = Self::one(dim);
            for j in 1..=dim {
                f = &f - &Self::t(dim, j)?;
            }
            return Ok(f);
        }
        let mut exps = vec![0; dim];
        exps[i - 1] = 1;
        let mut f = Self::zero(dim, 0);
        f.add_term(
            FormTerm {
                ext: Vec::new(),
                exps,
            },
            Rational::one(),
        );
        Ok(f)
    }

    /// The coordinate `y_i = dt_i`, `0 ≤ i ≤ dim`; `y_0` is expanded.
    pub fn y(dim: usize, i: usize) -> Result<Self, FormsError> {
        Ok(Self::t(dim, i)?.d())
    }

    /// `c · t^exps · y_ext`, with `ext` in any order (the permutation sign is
    /// applied). Returns zero for a repeated exterior index.
    pub fn monomial(
        dim: usize,
        exps: Vec<u32>,
        ext: &[usize],
        c: Rational,
    ) -> Result<Self, FormsError> {
        if exps.len() != dim {
            return Err(FormsError::IndexOutOfRange {
                index: exps.len(),
                dim,
            });
        }
        if let Some(&bad) = ext.iter().find(|&&i| i == 0 || i > dim) {
            return Err(FormsError::IndexOutOfRange { index: bad, dim });
        }
        let mut f = Self::zero(dim, ext.len());
        let mut sorted: Vec<usize> = Vec::new();
        let mut negative = false;
        for &i in ext {
            match merge_sign(&sorted, &[i]) {
                Some((s, neg)) => {
                    sorted = s;
                    negative ^= neg;
                }
                None => return Ok(f),
            }
        }
        f.add_term(
            FormTerm { ext: sorted, exps },
            if negative { -c } else { c },
        );
        Ok(f)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Form degree (number of `y`'s).
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<FormTerm, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest total `t`-degree among the terms (0 for the zero form).
    pub fn poly_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|t| t.exps.iter().sum())
            .max()
            .unwrap_or(0)
    }

    pub fn add_term(&mut self, term: FormTerm, c: Rational) {
        debug_assert_eq!(term.ext.len(), self.degree);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(term) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.dim, self.degree);
        for (t, a) in &self.terms {
            out.add_term(t.clone(), a * c);
        }
        out
    }

    /// Exterior product.
    pub fn wedge(&self, other: &PolyForm) -> PolyForm {
        assert_eq!(
            self.dim, other.dim,
            "forms on simplices of different dimension"
        );
        let mut out = Self::zero(self.dim, self.degree + other.degree);
        for (ta, ca) in &self.terms {
            for (tb, cb) in &other.terms {
                let Some((ext, negative)) = merge_sign(&ta.ext, &tb.ext) else {
                    continue;
                };
                let exps = ta.exps.iter().zip(&tb.exps).map(|(a, b)| a + b).collect();
                let c = ca * cb;
                out.add_term(FormTerm { ext, exps }, if negative { -c } else { c });
            }
        }
        out
    }

    /// Exterior derivative: `d t_i = y_i`, `d y_i = 0`.
    pub fn d(&self) -> PolyForm {
        let mut out = Self::zero(self.dim, self.degree + 1);
        for (t, c) in &self.terms {
            for j in 0..self.dim {
                let a = t.exps[j];
                if a == 0 {
                    continue;
                }
                let Some((ext, negative)) = merge_sign(&[j + 1], &t.ext) else {
                    continue;
                };
                let mut exps = t.exps.clone();
                exps[j] -= 1;
                let v = c * Rational::from_integer(a.into());
                out.add_term(FormTerm { ext, exps }, if negative { -v } else { v });
            }
        }
        out
    }

    /// Image under the algebra map `t_k ↦ t_images[k−1]`, `y_k ↦ d(t_images[k−1])`.
    fn substitute(&self, target_dim: usize, t_images: &[PolyForm]) -> PolyForm {
        let y_images: Vec<PolyForm> = t_images.iter().map(PolyForm::d).collect();
        let mut out = Self::zero(target_dim, self.degree);
        for (t, c) in &self.terms {
            let mut acc = Self::constant(target_dim, c.clone());
            for (j, &a) in t.exps.iter().enumerate() {
                for _ in 0..a {
                    acc = acc.wedge(&t_images[j]);
                }
            }
            for &k in &t.ext {
                acc = acc.wedge(&y_images[k - 1]);
            }
            out = &out + &acc;
        }
        out
    }

    /// Face operator `∂_i: 𝔄_n → 𝔄_{n−1}`, `0 ≤ i ≤ n`.
    pub fn face(&self, i: usize) -> Result<PolyForm, FormsError> {
        let n = self.dim;
        if n == 0 || i > n {
            return Err(FormsError::IndexOutOfRange { index: i, dim: n });
        }
        let m = n - 1;
        let images = (1..=n)
            .map(|k| match k.cmp(&i) {
                std::cmp::Ordering::Less => PolyForm::t(m, k),
                std::cmp::Ordering::Equal => Ok(PolyForm::zero(m, 0)),
                std::cmp::Ordering::Greater => PolyForm::t(m, k - 1),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.substitute(m, &images))
    }

    /// Degeneracy operator `s_i: 𝔄_n → 𝔄_{n+1}`, `0 ≤ i ≤ n`.
    pub fn degen(&self, i: usize) -> Result<PolyForm, FormsError> {
        let n = self.dim;
        if i > n {
            return Err(FormsError::IndexOutOfRange { index: i, dim: n });
        }
        let m = n + 1;
        let images = (1..=n)
            .map(|k| match k.cmp(&i) {
                std::cmp::Ordering::Less => PolyForm::t(m, k),
                std::cmp::Ordering::Equal => Ok(&PolyForm::t(m, k)? + &PolyForm::t(m, k + 1)?),
                std::cmp::Ordering::Greater => PolyForm::t(m, k + 1),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.substitute(m, &images))
    }

    /// `∫_{Δⁿ}` of a top-degree form, using
    /// `∫ t_1^{a_1}⋯t_n^{a_n} dt = ∏ a_i! / (n + Σ a_i)!`. Forms of lower
    /// degree integrate to zero except in dimension 0, where a function is
    /// evaluated at the single point.
    pub fn integrate(&self) -> Rational {
        if self.degree != self.dim {
            return Rational::zero();
        }
        let n = self.dim as u32;
        let mut total = Rational::zero();
        for (t, c) in &self.terms {
            let num: BigInt = t.exps.iter().map(|&a| factorial(a)).product();
            let den = factorial(n + t.exps.iter().sum::<u32>());
            total += c * Rational::new(num, den);
        }
        total
    }
}

impl std::ops::Add for &PolyForm {
    type Output = PolyForm;
    fn add(self, other: &PolyForm) -> PolyForm {
        assert_eq!(
            (self.dim, self.degree),
            (other.dim, other.degree),
            "form shape mismatch"
        );
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &PolyForm {
    type Output = PolyForm;
    fn sub(self, other: &PolyForm) -> PolyForm {
        self + &(-other)
    }
}

impl std::ops::Neg for &PolyForm {
    type Output = PolyForm;
    fn neg(self) -> PolyForm {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for PolyForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (t, c)) in self.terms.iter().enumerate() {
            let mut factors: Vec<String> = Vec::new();
            for (j, &a) in t.exps.iter().enumerate() {
                match a {
                    0 => {}
                    1 => factors.push(format!("t{}", j + 1)),
                    _ => factors.push(format!("t{}^{a}", j + 1)),
                }
            }
            factors.extend(t.ext.iter().map(|k| format!("y{k}")));
            let mag = c.abs();
            let sign = if c.is_negative() {
                if idx == 0 {
                    "-"
                } else {
                    " - "
                }
            } else if idx == 0 {
                ""
            } else {
                " + "
            };
            let body = if factors.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                factors.join("*")
            } else {
                format!("{mag}*{}", factors.join("*"))
            };
            write!(f, "{sign}{body}")?;
        }
        Ok(())
    }
}
