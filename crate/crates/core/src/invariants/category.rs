use super::ellipticity::{finiteness_test, Finiteness};
use super::InvariantsError;
use crate::algebra::AlgElement;
use crate::cdga::{check_quasi_iso, cohomology, word_length_quotient, Cdga, Cohomology};
use crate::linalg::SubspaceBasis;
use crate::sullivan::check_minimal_sullivan;
use crate::Rational;

/// Element of `H^k` with the given coordinates in the representative basis.
fn class_element(c: &Cdga, h: &Cohomology, k: u32, coords: &[Rational]) -> AlgElement {
    let reps = h.representatives(k);
    let mut out = AlgElement::zero(c.universe());
    for (r, x) in reps.iter().zip(coords) {
        out += &r.scale(x);
    }
    out
}

/// Greatest `m` with a nonzero `m`-fold product of positive-degree classes,
/// searching products of total degree `≤ n`.
pub fn cuplength(c: &Cdga, n: u32) -> Result<u32, InvariantsError> {
    let h = cohomology(c, n);
    // powers[k]: classes of degree k that are j-fold products
    let mut powers: Vec<Vec<AlgElement>> = (0..=n)
        .map(|k| {
            if k == 0 {
                Vec::new()
            } else {
                h.representatives(k).to_vec()
            }
        })
        .collect();
    let mut length = 0;
    while powers.iter().any(|p| !p.is_empty()) {
        length += 1;
        let mut next = vec![Vec::new(); n as usize + 1];
        for k in 2..=n {
            let mut coords = Vec::new();
            for m in 1..k {
                for a in h.representatives(m) {
                    for p in &powers[(k - m) as usize] {
                        let prod = c.reduce(&(a * p));
                        coords.push(h.class_of(k, &prod)?);
                    }
                }
            }
            let span = SubspaceBasis::span(h.dim(k), &coords);
            next[k as usize] = span
                .vectors()
                .iter()
                .map(|v| class_element(c, &h, k, v))
                .collect();
        }
        powers = next;
    }
    Ok(length)
}

/// Rational category bounds: `cuplength ≤ cat₀ ≤ ⌊fdim / r⌋`, where `r` is
/// the first positive degree with nonzero cohomology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatBounds {
    pub lower: u32,
    pub upper: Option<u32>,
    pub formal_dimension: Option<u32>,
    pub r: Option<u32>,
}

/// The upper bound needs certified finite cohomology with formal dimension
/// `≤ n`, which is only available for free algebras.
pub fn cat_bounds(c: &Cdga, n: u32) -> Result<CatBounds, InvariantsError> {
    let lower = cuplength(c, n)?;
    let fdim = if c.is_free() {
        match finiteness_test(c, n)?.outcome {
            Finiteness::Finite { last_nonzero, .. } if last_nonzero <= n => Some(last_nonzero),
            _ => None,
        }
    } else {
        None
    };
    let dims = cohomology(c, n).dims();
    let r = (1..=n).find(|&k| dims[k as usize] != 0);
    let upper = match (fdim, r) {
        (Some(d), Some(r)) => Some(d / r),
        (Some(_), None) => Some(0),
        _ => None,
    };
    Ok(CatBounds {
        lower,
        upper,
        formal_dimension: fdim,
        r,
    })
}

/// `H(q)` for one word-length quotient `q: ΛV → ΛV/Λ^{>m}V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToomerRow {
    pub m: u32,
    /// Rank of `H^k(q)` for `k = 0..=n`.
    pub ranks: Vec<usize>,
    pub injective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToomerReport {
    pub rows: Vec<ToomerRow>,
    /// Least `m ≤ cap` with `H(q)` injective through degree `n`.
    pub first_injective: Option<u32>,
}

/// Ranks of `H(ΛV) → H(ΛV/Λ^{>m}V)` for `m = 1..=cap`, stopping at the
/// first injective one.
pub fn toomer_rank(c: &Cdga, cap: u32, n: u32) -> Result<ToomerReport, InvariantsError> {
    if !check_minimal_sullivan(c)? {
        return Err(InvariantsError::Precondition(format!(
            "'{}' is not minimal",
            c.name()
        )));
    }
    let mut rows = Vec::new();
    for m in 1..=cap {
        let q = word_length_quotient(c, m)?;
        let report = check_quasi_iso(&q.map, n);
        let injective = report.degrees.iter().all(|d| d.injective);
        rows.push(ToomerRow {
            m,
            ranks: report.degrees.iter().map(|d| d.rank).collect(),
            injective,
        });
        if injective {
            return Ok(ToomerReport {
                rows,
                first_injective: Some(m),
            });
        }
    }
    Ok(ToomerReport {
        rows,
        first_injective: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cp(n: u32) -> Cdga {
        let x = format!("u^{}", n + 1);
        Cdga::from_spec("cp", &[("u", 2), ("x", 2 * n + 1)], &[("x", &x)]).unwrap()
    }

    #[test]
    fn projective_spaces() {
        for n in [2, 3] {
            let b = cat_bounds(&cp(n), 2 * n + 2).unwrap();
            assert_eq!((b.lower, b.upper), (n, Some(n)));
        }
    }

    #[test]
    fn spheres_and_products() {
        let s3 = Cdga::from_spec("s3", &[("x", 3)], &[]).unwrap();
        assert_eq!(cuplength(&s3, 8).unwrap(), 1);
        let s3s3 = Cdga::from_spec("t", &[("x", 3), ("x2", 3)], &[]).unwrap();
        assert_eq!(cuplength(&s3s3, 8).unwrap(), 2);
        let b = cat_bounds(&s3s3, 8).unwrap();
        assert_eq!(b.upper, Some(2));
        let q = Cdga::from_spec("hcp2", &[("u", 2)], &[])
            .unwrap()
            .with_relation_text(&["u^3"])
            .unwrap();
        assert_eq!(cuplength(&q, 8).unwrap(), 2);
        assert_eq!(cat_bounds(&q, 8).unwrap().upper, None);
    }

    #[test]
    fn toomer() {
        let s3 = Cdga::from_spec("s3", &[("x", 3)], &[]).unwrap();
        assert_eq!(toomer_rank(&s3, 4, 10).unwrap().first_injective, Some(1));
        let r = toomer_rank(&cp(2), 4, 10).unwrap();
        assert_eq!(r.first_injective, Some(2));
        assert!(!r.rows[0].injective);
        let s3s3 = Cdga::from_spec("t", &[("x", 3), ("x2", 3)], &[]).unwrap();
        assert_eq!(toomer_rank(&s3s3, 4, 8).unwrap().first_injective, Some(2));
    }
}
