use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::AlgebraError;

/// A named generator of a free graded-commutative algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    name: String,
    degree: u32,
    ordinal: usize,
}

impl Generator {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Position in the canonical order of the owning set.
    pub fn ordinal(&self) -> usize {
        self.ordinal
    }

    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }

    pub fn is_even(&self) -> bool {
        self.degree.is_multiple_of(2)
    }
}

/// An ordered, duplicate-free list of generators. The ordinal of a generator
/// is its index here; monomials are sorted by it.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    gens: Vec<Generator>,
    index: HashMap<String, usize>,
}

/// Shared handle to a generator set; every [`AlgElement`](super::AlgElement)
/// carries one.
pub type Universe = Arc<GeneratorSet>;

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl GeneratorSet {
    /// Builds a generator set from `(name, degree)` pairs in ordinal order.
    /// Degrees must be at least 1.
    pub fn new<S: Into<String>>(
        gens: impl IntoIterator<Item = (S, u32)>,
    ) -> Result<Self, AlgebraError> {
        let mut out = Vec::new();
        let mut index = HashMap::new();
        for (ordinal, (name, degree)) in gens.into_iter().enumerate() {
            let name = name.into();
            if !is_identifier(&name) {
                return Err(AlgebraError::InvalidName(name));
            }
            if degree == 0 {
                return Err(AlgebraError::DegreeZero(name));
            }
            if index.insert(name.clone(), ordinal).is_some() {
                return Err(AlgebraError::DuplicateGenerator(name));
            }
            out.push(Generator {
                name,
                degree,
                ordinal,
            });
        }
        Ok(GeneratorSet { gens: out, index })
    }

    pub fn empty() -> Self {
        GeneratorSet {
            gens: Vec::new(),
            index: HashMap::new(),
        }
    }

    pub fn into_universe(self) -> Universe {
        Arc::new(self)
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn get(&self, ordinal: usize) -> &Generator {
        &self.gens[ordinal]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Generator> {
        self.gens.iter()
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn degree(&self, ordinal: usize) -> u32 {
        self.gens[ordinal].degree
    }

    pub fn is_odd(&self, ordinal: usize) -> bool {
        self.gens[ordinal].is_odd()
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(|g| g.degree).max().unwrap_or(0)
    }

    /// `(name, degree)` pairs in ordinal order.
    pub fn profile(&self) -> Vec<(String, u32)> {
        self.gens
            .iter()
            .map(|g| (g.name.clone(), g.degree))
            .collect()
    }

    /// First generator of `other` that does not occur (same name and degree) here.
    pub(crate) fn foreign_in(&self, other: &GeneratorSet) -> Option<String> {
        other
            .gens
            .iter()
            .find(|g| {
                self.position(&g.name)
                    .map(|i| self.gens[i].degree != g.degree || i != g.ordinal)
                    .unwrap_or(true)
            })
            .map(|g| g.name.clone())
    }
}

impl PartialEq for GeneratorSet {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens
    }
}

impl Eq for GeneratorSet {}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|g| format!("{}:{}", g.name, g.degree))
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

pub(crate) fn same_universe(a: &Universe, b: &Universe) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
