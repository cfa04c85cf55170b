use std::collections::HashMap;

use num_traits::Zero;

use super::relative::{base_differential_on, total_universe};
use super::{check_minimal_sullivan, fiber_model, RelativeSullivanAlgebra, SullivanError};
use crate::algebra::{basis_of_degree, basis_of_degree_in, AlgElement, Derivation, Monomial};
use crate::cdga::{cohomology, Cdga, CdgaError};
use crate::linalg::{solve, RatMatrix};
use crate::Rational;

/// Name of the shifted copy `v̄` of a generator.
pub(crate) fn bar(name: &str) -> String {
    format!("{name}_bar")
}

/// Solves `D(C) = target` for `C` in the span of `candidates`.
fn solve_in_span(
    d: &Derivation,
    candidates: &[Monomial],
    target: &AlgElement,
) -> Option<AlgElement> {
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    let images: Vec<AlgElement> = candidates.iter().map(|m| d.apply_monomial(m)).collect();
    for e in images.iter().chain(std::iter::once(target)) {
        for m in e.terms().keys() {
            let n = index.len();
            index.entry(m.clone()).or_insert(n);
        }
    }
    let coords = |e: &AlgElement| {
        let mut v = vec![Rational::zero(); index.len()];
        for (m, c) in e.terms() {
            v[index[m]] = c.clone();
        }
        v
    };
    let columns: Vec<Vec<Rational>> = images.iter().map(coords).collect();
    let m = RatMatrix::from_columns(index.len(), &columns);
    let x = solve(&m, &coords(target)).ok()?;
    let mut out = AlgElement::zero(d.universe());
    for (mono, c) in candidates.iter().zip(x) {
        if !c.is_zero() {
            out.add_term(mono.clone(), c);
        }
    }
    Some(out)
}

/// Acyclic closure `(ΛV ⊗ ΛV̄, D)` of a minimal Sullivan algebra, with
/// `deg v̄ = deg v − 1` and `Dv̄ = v − C(v)`, where the correction `C(v)` lies
/// in the ideal generated by `V̄` and is solved degreewise so that
/// `D² v̄ = 0`. The result is checked to be acyclic in degrees `1..=n`.
pub fn acyclic_closure(model: &Cdga, n: u32) -> Result<RelativeSullivanAlgebra, SullivanError> {
    if !check_minimal_sullivan(model)? {
        return Err(SullivanError::Precondition(format!(
            "'{}' is not minimal",
            model.name()
        )));
    }
    let nv = model.gens().len();
    let fiber = model.gens().iter().map(|g| (bar(g.name()), g.degree() - 1));
    let u = total_universe(model, fiber)?;
    let mut d = base_differential_on(model, &u);
    // generators in increasing degree; ties keep the model's order
    let mut order: Vec<usize> = (0..nv).collect();
    order.sort_by_key(|&g| (u.degree(g), g));
    let mut done: Vec<usize> = Vec::new();
    for &g in &order {
        let deg = u.degree(g);
        let dv = d.image(g).clone();
        let correction = if dv.is_zero() {
            AlgElement::zero(&u)
        } else {
            let mut allowed: Vec<usize> = (0..nv).collect();
            allowed.extend(done.iter().map(|&j| nv + j));
            let candidates: Vec<Monomial> = basis_of_degree_in(&u, &allowed, deg, None)
                .into_iter()
                .filter(|m| m.exponents().iter().any(|&(x, _)| x >= nv))
                .collect();
            solve_in_span(&d, &candidates, &dv).ok_or_else(|| {
                SullivanError::Internal(format!(
                    "no correction for {} in degree {deg}",
                    u.get(g).name()
                ))
            })?
        };
        let img = &AlgElement::generator(&u, g) - &correction;
        d.set(nv + g, img).map_err(CdgaError::from)?;
        done.push(g);
    }
    let rel = RelativeSullivanAlgebra::new(model.clone(), format!("{}_closure", model.name()), d)?;
    let h = cohomology(rel.total(), n);
    if let Some(k) = (1..=n).find(|&k| h.dim(k) != 0) {
        return Err(SullivanError::Internal(format!(
            "acyclic closure has H^{k} of dimension {}",
            h.dim(k)
        )));
    }
    Ok(rel)
}

/// Rational loop-space cohomology read off the acyclic closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopCohomology {
    /// `dim H^k(ΩX)` for `k = 0..=n`.
    pub dims: Vec<usize>,
    /// The generators `V̄` with their degrees.
    pub generators: Vec<(String, u32)>,
    /// `rank π_k(X) ⊗ ℚ = dim V^k` for `k = 0..=n+1`.
    pub pi_ranks: Vec<usize>,
}

/// `H*(ΩX) ≅ ΛV̄` for a minimal model `ΛV` of `X`, in degrees `0..=n`.
/// The closure's acyclicity is rechecked through `min(n, 2·max deg V)`;
/// use [`acyclic_closure`] directly for a full check.
pub fn loop_cohomology(model: &Cdga, n: u32) -> Result<LoopCohomology, SullivanError> {
    let top = model.gens().iter().map(|g| g.degree()).max().unwrap_or(0);
    let closure = acyclic_closure(model, n.min(2 * top))?;
    let fiber = fiber_model(&closure)?;
    if !fiber.differential().is_zero() {
        return Err(SullivanError::Internal(
            "fiber of the acyclic closure has nonzero differential".into(),
        ));
    }
    let dims = (0..=n)
        .map(|k| basis_of_degree(fiber.gens(), k, None).len())
        .collect();
    let mut pi_ranks = vec![0; n as usize + 2];
    for g in model.gens().iter() {
        if let Some(r) = pi_ranks.get_mut(g.degree() as usize) {
            *r += 1;
        }
    }
    Ok(LoopCohomology {
        dims,
        generators: fiber.gens().profile(),
        pi_ranks,
    })
}
