use std::collections::HashSet;

use super::{Cdga, CdgaError, CdgaMorphism, Presentation};
use crate::algebra::{AlgElement, Derivation, GeneratorSet, Universe};

/// `A ⊗ B` with its two inclusions.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    pub product: Cdga,
    pub left: CdgaMorphism,
    pub right: CdgaMorphism,
}

fn fresh_name(base: &str, used: &HashSet<String>) -> String {
    (2..)
        .map(|i| format!("{base}_{i}"))
        .find(|n| !used.contains(n))
        .expect("unbounded search")
}

fn embed(e: &AlgElement, target: &Universe, offset: usize) -> AlgElement {
    let map: Vec<usize> = (0..e.gens().len()).map(|g| g + offset).collect();
    e.remap_monotone(target, &map)
}

/// Tensor product; generators of `b` whose names clash with `a` get a
/// `_2` (or `_3`, …) suffix.
pub fn tensor_product(a: &Cdga, b: &Cdga) -> Result<TensorProduct, CdgaError> {
    if a.word_cap().is_some() {
        return Err(CdgaError::NotFree(a.name().to_string()));
    }
    if b.word_cap().is_some() {
        return Err(CdgaError::NotFree(b.name().to_string()));
    }
    let mut used: HashSet<String> = a.gens().iter().map(|g| g.name().to_string()).collect();
    let mut spec: Vec<(String, u32)> = a.gens().profile();
    for g in b.gens().iter() {
        let name = if used.contains(g.name()) {
            fresh_name(g.name(), &used)
        } else {
            g.name().to_string()
        };
        used.insert(name.clone());
        spec.push((name, g.degree()));
    }
    let u = GeneratorSet::new(spec)?.into_universe();
    let na = a.gens().len();
    let mut d = Derivation::zero(&u, 1);
    for g in 0..na {
        d.set(g, embed(a.d_of(g), &u, 0))?;
    }
    for g in 0..b.gens().len() {
        d.set(na + g, embed(b.d_of(g), &u, na))?;
    }
    let mut relations: Vec<AlgElement> = a.relations().iter().map(|r| embed(r, &u, 0)).collect();
    relations.extend(b.relations().iter().map(|r| embed(r, &u, na)));
    let product = Cdga::from_presentation(Presentation {
        name: format!("{}_{}", a.name(), b.name()),
        differential: d,
        relations,
        word_cap: None,
    })?;
    let left = CdgaMorphism::new(
        a.clone(),
        product.clone(),
        (0..na).map(|g| AlgElement::generator(&u, g)).collect(),
    )?;
    let right = CdgaMorphism::new(
        b.clone(),
        product.clone(),
        (0..b.gens().len())
            .map(|g| AlgElement::generator(&u, na + g))
            .collect(),
    )?;
    Ok(TensorProduct {
        product,
        left,
        right,
    })
}

/// Product of augmented CDGAs over `ℚ`: a common unit and the direct sum of
/// the positive-degree parts, with products between different factors set
/// to zero. Presented as the tensor product modulo all cross products of
/// generators. Every factor is degreewise finite because generators have
/// positive degree.
pub fn fibered_product(factors: &[Cdga]) -> Result<Cdga, CdgaError> {
    let Some(first) = factors.first() else {
        return Cdga::from_spec("Q", &[], &[]);
    };
    if factors.len() == 1 {
        return Ok(first.clone());
    }
    let mut acc = first.clone();
    let mut ranges = vec![(0, first.gens().len())];
    for f in &factors[1..] {
        let start = acc.gens().len();
        acc = tensor_product(&acc, f)?.product;
        ranges.push((start, start + f.gens().len()));
    }
    let u = acc.universe().clone();
    let mut cross = Vec::new();
    for (i, &(a0, a1)) in ranges.iter().enumerate() {
        for &(b0, b1) in &ranges[i + 1..] {
            for g in a0..a1 {
                for h in b0..b1 {
                    cross.push(&AlgElement::generator(&u, g) * &AlgElement::generator(&u, h));
                }
            }
        }
    }
    let name = factors
        .iter()
        .map(|f| f.name().to_string())
        .collect::<Vec<_>>()
        .join("_v_");
    Ok(acc.with_relations(cross)?.renamed(name))
}

/// `ΛV / Λ^{>n}V` with the quotient map.
#[derive(Clone, Debug)]
pub struct WordLengthQuotient {
    pub quotient: Cdga,
    pub map: CdgaMorphism,
}

/// Quotient of a free CDGA by the ideal of words of length greater than `n`.
pub fn word_length_quotient(c: &Cdga, n: u32) -> Result<WordLengthQuotient, CdgaError> {
    c.require_free()?;
    if n == 0 {
        return Err(CdgaError::Internal(
            "word-length quotient needs n >= 1".into(),
        ));
    }
    let quotient = Cdga::from_presentation(Presentation {
        name: format!("{}_wl{}", c.name(), n),
        differential: c.differential().clone(),
        relations: Vec::new(),
        word_cap: Some(n),
    })?;
    let u = c.universe();
    let map = CdgaMorphism::new(
        c.clone(),
        quotient.clone(),
        (0..u.len()).map(|g| AlgElement::generator(u, g)).collect(),
    )?;
    Ok(WordLengthQuotient { quotient, map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cdga::cohomology;

    fn s3() -> Cdga {
        Cdga::from_spec("s3", &[("x", 3)], &[]).unwrap()
    }

    fn s2() -> Cdga {
        Cdga::from_spec("s2", &[("y", 2), ("z", 3)], &[("z", "y^2")]).unwrap()
    }

    fn h_s2() -> Cdga {
        Cdga::from_spec("hs2", &[("y", 2)], &[])
            .unwrap()
            .with_relation_text(&["y^2"])
            .unwrap()
    }

    #[test]
    fn tensor_of_odd_spheres() {
        let t = tensor_product(&s3(), &s3()).unwrap();
        assert_eq!(t.product.gens().profile()[1].0, "x_2");
        assert_eq!(
            cohomology(&t.product, 7).dims(),
            vec![1, 0, 0, 2, 0, 0, 1, 0]
        );
    }

    #[test]
    fn tensor_with_unit() {
        let q = Cdga::from_spec("Q", &[], &[]).unwrap();
        let t = tensor_product(&s2(), &q).unwrap();
        assert_eq!(t.product.gens(), s2().gens());
        assert_eq!(
            cohomology(&t.product, 8).dims(),
            cohomology(&s2(), 8).dims()
        );
    }

    #[test]
    fn tensor_s2_s3() {
        let t = tensor_product(&s2(), &s3()).unwrap();
        let dims = cohomology(&t.product, 6).dims();
        assert_eq!(dims, vec![1, 0, 1, 1, 0, 1, 0]);
    }

    #[test]
    fn wedge_of_sphere_cohomologies() {
        let h_s3 = Cdga::from_spec("hs3", &[("x", 3)], &[]).unwrap();
        let w = fibered_product(&[h_s2(), h_s3]).unwrap();
        assert_eq!(cohomology(&w, 6).dims(), vec![1, 0, 1, 1, 0, 0, 0]);

        let single = fibered_product(&[h_s2()]).unwrap();
        assert_eq!(single, h_s2());

        let w2 = fibered_product(&[h_s2(), h_s2()]).unwrap();
        let h = cohomology(&w2, 4);
        assert_eq!(h.dim(2), 2);
        let reps = h.representatives(2);
        let prod = w2.reduce(&(&reps[0] * &reps[1]));
        assert!(prod.is_zero());
        assert_eq!(h.dim(4), 0);
    }

    #[test]
    fn word_length_quotients() {
        let q = word_length_quotient(&s3(), 1).unwrap();
        assert_eq!(
            cohomology(&q.quotient, 9).dims(),
            cohomology(&s3(), 9).dims()
        );

        let q = word_length_quotient(&s2(), 1).unwrap();
        let h = cohomology(&q.quotient, 8);
        assert_eq!(h.dims(), vec![1, 0, 1, 1, 0, 0, 0, 0, 0]);
        for k in 0..=8 {
            let expected = if [0, 2, 3].contains(&k) { 1 } else { 0 };
            assert_eq!(q.quotient.dim_in_degree(k), expected);
        }

        let q = word_length_quotient(&s2(), 9).unwrap();
        assert_eq!(
            cohomology(&q.quotient, 8).dims(),
            cohomology(&s2(), 8).dims()
        );

        assert!(word_length_quotient(&h_s2(), 1).is_err());
    }
}
