use super::{GeneratorSet, Monomial};

/// Inclusive bounds on word length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WordFilter {
    pub min: u32,
    pub max: u32,
}

impl WordFilter {
    pub fn at_most(max: u32) -> Self {
        WordFilter { min: 0, max }
    }

    pub fn exactly(len: u32) -> Self {
        WordFilter { min: len, max: len }
    }

    pub fn accepts(&self, len: u32) -> bool {
        self.min <= len && len <= self.max
    }
}

/// All monomials of total degree `n` (optionally within a word-length
/// window), in canonical order.
pub fn basis_of_degree(gens: &GeneratorSet, n: u32, filter: Option<WordFilter>) -> Vec<Monomial> {
    let all: Vec<usize> = (0..gens.len()).collect();
    basis_of_degree_in(gens, &all, n, filter)
}

/// Like [`basis_of_degree`], restricted to the generators listed in `allowed`.
pub fn basis_of_degree_in(
    gens: &GeneratorSet,
    allowed: &[usize],
    n: u32,
    filter: Option<WordFilter>,
) -> Vec<Monomial> {
    let mut allowed = allowed.to_vec();
    allowed.sort_unstable();
    allowed.dedup();
    let mut out = Vec::new();
    let mut current = Vec::new();
    enumerate(gens, &allowed, 0, n, 0, filter, &mut current, &mut out);
    out.sort();
    out
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    gens: &GeneratorSet,
    allowed: &[usize],
    start: usize,
    remaining: u32,
    words: u32,
    filter: Option<WordFilter>,
    current: &mut Vec<(usize, u32)>,
    out: &mut Vec<Monomial>,
) {
    if remaining == 0 {
        if filter.is_none_or(|f| f.accepts(words)) {
            out.push(Monomial::from_sorted_unchecked(current.clone()));
        }
        return;
    }
    if let Some(f) = filter {
        if words >= f.max {
            return;
        }
    }
    for idx in start..allowed.len() {
        let g = allowed[idx];
        let deg = gens.degree(g);
        if deg > remaining {
            continue;
        }
        let max_pow = if gens.is_odd(g) { 1 } else { remaining / deg };
        for p in 1..=max_pow {
            if let Some(f) = filter {
                if words + p > f.max {
                    break;
                }
            }
            current.push((g, p));
            enumerate(
                gens,
                allowed,
                idx + 1,
                remaining - p * deg,
                words + p,
                filter,
                current,
                out,
            );
            current.pop();
        }
    }
}
