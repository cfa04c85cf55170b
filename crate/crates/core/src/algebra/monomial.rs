use super::GeneratorSet;

/// A monomial in a free graded-commutative algebra: `(ordinal, power)` pairs
/// sorted by ordinal, with no zero powers. Odd generators have power 1.
///
/// The derived order is lexicographic in the exponent list, which is the
/// canonical term order everywhere in the crate.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(usize, u32)>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn generator(ordinal: usize) -> Self {
        Monomial(vec![(ordinal, 1)])
    }

    /// Builds a monomial from arbitrary `(ordinal, power)` pairs, merging
    /// repeats. Returns `None` when the product vanishes because an odd
    /// generator would appear twice. The sign of reordering odd letters is
    /// discarded; use [`Monomial::mul`] when the sign matters.
    pub fn from_exponents(
        gens: &GeneratorSet,
        exps: impl IntoIterator<Item = (usize, u32)>,
    ) -> Option<Self> {
        let mut v: Vec<(usize, u32)> = exps.into_iter().filter(|&(_, p)| p > 0).collect();
        v.sort_unstable();
        let mut out: Vec<(usize, u32)> = Vec::with_capacity(v.len());
        for (g, p) in v {
            match out.last_mut() {
                Some(last) if last.0 == g => last.1 += p,
                _ => out.push((g, p)),
            }
        }
        if out.iter().any(|&(g, p)| p > 1 && gens.is_odd(g)) {
            return None;
        }
        Some(Monomial(out))
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[(usize, u32)] {
        &self.0
    }

    pub fn power_of(&self, ordinal: usize) -> u32 {
        self.0
            .binary_search_by_key(&ordinal, |&(g, _)| g)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn contains(&self, ordinal: usize) -> bool {
        self.power_of(ordinal) > 0
    }

    pub fn degree(&self, gens: &GeneratorSet) -> u32 {
        self.0.iter().map(|&(g, p)| p * gens.degree(g)).sum()
    }

    /// Number of letters counted with multiplicity.
    pub fn word_length(&self) -> u32 {
        self.0.iter().map(|&(_, p)| p).sum()
    }

    /// Number of odd letters.
    pub fn odd_length(&self, gens: &GeneratorSet) -> u32 {
        self.0
            .iter()
            .filter(|&&(g, _)| gens.is_odd(g))
            .map(|&(_, p)| p)
            .sum()
    }

    pub fn max_ordinal(&self) -> Option<usize> {
        self.0.last().map(|&(g, _)| g)
    }

    /// Product `self * other`. Returns `None` when an odd generator repeats,
    /// otherwise the canonical monomial and whether the Koszul sign is negative.
    pub fn mul(&self, other: &Monomial, gens: &GeneratorSet) -> Option<(Monomial, bool)> {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let mut negative = false;
        // odd letters of `self` not yet passed by the merge
        let mut odd_left: usize = self.0.iter().filter(|&&(g, _)| gens.is_odd(g)).count();
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            let take_left = match (self.0.get(i), other.0.get(j)) {
                (Some(a), Some(b)) => a.0 <= b.0,
                (Some(_), None) => true,
                _ => false,
            };
            if take_left {
                let (g, p) = self.0[i];
                if let Some(&(h, q)) = other.0.get(j) {
                    if h == g {
                        if gens.is_odd(g) {
                            return None;
                        }
                        out.push((g, p + q));
                        i += 1;
                        j += 1;
                        continue;
                    }
                }
                if gens.is_odd(g) {
                    odd_left -= 1;
                }
                out.push((g, p));
                i += 1;
            } else {
                let (h, q) = other.0[j];
                if gens.is_odd(h) && odd_left % 2 == 1 {
                    negative = !negative;
                }
                out.push((h, q));
                j += 1;
            }
        }
        Some((Monomial(out), negative))
    }

    /// Splits off the letter at position `pos` of the exponent list:
    /// returns `(prefix, generator, power, suffix)`.
    pub(crate) fn split_at_letter(&self, pos: usize) -> (Monomial, usize, u32, Monomial) {
        let (g, p) = self.0[pos];
        (
            Monomial(self.0[..pos].to_vec()),
            g,
            p,
            Monomial(self.0[pos + 1..].to_vec()),
        )
    }

    pub(crate) fn from_sorted_unchecked(v: Vec<(usize, u32)>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0].0 < w[1].0));
        Monomial(v)
    }

    /// The monomial with every ordinal passed through `f` (which must be
    /// strictly increasing on the letters present).
    pub(crate) fn remap_monotone(&self, f: impl Fn(usize) -> usize) -> Monomial {
        Monomial(self.0.iter().map(|&(g, p)| (f(g), p)).collect())
    }

    pub fn format(&self, gens: &GeneratorSet) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|&(g, p)| {
                let name = gens.get(g).name();
                if p == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{p}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}
