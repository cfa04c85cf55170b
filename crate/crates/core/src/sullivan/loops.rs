use super::closure::bar;
use super::relative::{base_differential_on, total_universe};
use super::{check_minimal_sullivan, RelativeSullivanAlgebra, SullivanError};
use crate::algebra::{AlgElement, Derivation, GeneratorSet};
use crate::cdga::{Cdga, CdgaError, CdgaMorphism};
use crate::Rational;

/// Default bound on the number of series terms in [`path_space_model`].
pub const DEFAULT_SERIES_CAP: usize = 64;

fn require_minimal(model: &Cdga) -> Result<(), SullivanError> {
    if check_minimal_sullivan(model)? {
        Ok(())
    } else {
        Err(SullivanError::Precondition(format!(
            "'{}' is not minimal",
            model.name()
        )))
    }
}

/// `ΛV′ ⊗ ΛV″`, with generators `v_p0` and `v_p1`.
fn doubled(model: &Cdga) -> Result<Cdga, SullivanError> {
    let n = model.gens().len();
    let mut spec: Vec<(String, u32)> = Vec::with_capacity(2 * n);
    for copy in 0..2 {
        spec.extend(
            model
                .gens()
                .iter()
                .map(|g| (format!("{}_p{copy}", g.name()), g.degree())),
        );
    }
    let u = GeneratorSet::new(spec)
        .map_err(CdgaError::from)?
        .into_universe();
    let mut d = Derivation::zero(&u, 1);
    for copy in 0..2 {
        let map: Vec<usize> = (0..n).map(|g| g + copy * n).collect();
        for g in 0..n {
            d.set(copy * n + g, model.d_of(g).remap_monotone(&u, &map))
                .map_err(CdgaError::from)?;
        }
    }
    Ok(Cdga::new(format!("{}_pair", model.name()), d)?)
}

/// Multiplication `ΛV′ ⊗ ΛV″ → ΛV`, `v′, v″ ↦ v`: the model of the
/// diagonal, with source the base of [`path_space_model`].
pub fn multiplication_morphism(model: &Cdga) -> Result<CdgaMorphism, SullivanError> {
    let source = doubled(model)?;
    let u = model.universe();
    let n = u.len();
    let images = (0..2 * n)
        .map(|g| AlgElement::generator(u, g % n))
        .collect();
    Ok(CdgaMorphism::new(source, model.clone(), images)?)
}

/// [`path_space_model_with_cap`] with the default cap.
pub fn path_space_model(model: &Cdga) -> Result<RelativeSullivanAlgebra, SullivanError> {
    path_space_model_with_cap(model, DEFAULT_SERIES_CAP)
}

/// Model of the free path fibration: `(ΛV′ ⊗ ΛV″ ⊗ ΛV̄, D)` with
/// `Dv̄ = v″ − v′ − Σ_{k≥1} (SD)^k/k! (v′)`, where `S` is the degree −1
/// derivation with `S(v′) = S(v″) = v̄` and `S(v̄) = 0`. The series is summed
/// until a term vanishes; more than `cap` nonzero terms is an error.
pub fn path_space_model_with_cap(
    model: &Cdga,
    cap: usize,
) -> Result<RelativeSullivanAlgebra, SullivanError> {
    require_minimal(model)?;
    let base = doubled(model)?;
    let n = model.gens().len();
    let u = total_universe(
        &base,
        model.gens().iter().map(|g| (bar(g.name()), g.degree() - 1)),
    )?;
    let mut s = Derivation::zero(&u, -1);
    for g in 0..n {
        let vbar = AlgElement::generator(&u, 2 * n + g);
        s.set(g, vbar.clone()).map_err(CdgaError::from)?;
        s.set(n + g, vbar).map_err(CdgaError::from)?;
    }
    let mut d = base_differential_on(&base, &u);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&g| (u.degree(g), g));
    for g in order {
        let mut sum = AlgElement::zero(&u);
        let mut term = s.apply(&d.apply(&AlgElement::generator(&u, g)));
        let mut k = 1usize;
        while !term.is_zero() {
            if k > cap {
                return Err(SullivanError::SeriesCap {
                    generator: model.gens().get(g).name().to_string(),
                    cap,
                });
            }
            sum += &term;
            k += 1;
            let inv = Rational::new(1.into(), (k as i64).into());
            term = s.apply(&d.apply(&term)).scale(&inv);
        }
        let img = &(&AlgElement::generator(&u, n + g) - &AlgElement::generator(&u, g)) - &sum;
        d.set(2 * n + g, img).map_err(CdgaError::from)?;
    }
    RelativeSullivanAlgebra::new(base, format!("{}_path", model.name()), d)
}

/// Model of the free loop space: `(ΛV ⊗ ΛV̄, D̄)` with `D̄v = dv` and
/// `D̄v̄ = −S̄(dv)`, where `S̄(v) = v̄` and `S̄(v̄) = 0`.
pub fn free_loop_model(model: &Cdga) -> Result<Cdga, SullivanError> {
    require_minimal(model)?;
    let n = model.gens().len();
    let u = total_universe(
        model,
        model.gens().iter().map(|g| (bar(g.name()), g.degree() - 1)),
    )?;
    let mut s = Derivation::zero(&u, -1);
    for g in 0..n {
        s.set(g, AlgElement::generator(&u, n + g))
            .map_err(CdgaError::from)?;
    }
    let mut d = base_differential_on(model, &u);
    for g in 0..n {
        let img = -s.apply(d.image(g));
        d.set(n + g, img).map_err(CdgaError::from)?;
    }
    Ok(Cdga::new(format!("{}_free_loop", model.name()), d)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cdga::cohomology;
    use crate::sullivan::pushout_model;

    fn s2() -> Cdga {
        Cdga::from_spec("s2", &[("y", 2), ("z", 3)], &[("z", "y^2")]).unwrap()
    }

    #[test]
    fn even_sphere_path_space() {
        let p = path_space_model(&s2()).unwrap();
        let u = p.universe();
        let ybar = u.position("y_bar").unwrap();
        let zbar = u.position("z_bar").unwrap();
        assert_eq!(p.d_of(ybar).to_string(), "-y_p0 + y_p1");
        let expected =
            crate::algebra::parse_poly(u, "z_p1 - z_p0 - y_p0*y_bar - y_bar*y_p1").unwrap();
        assert_eq!(p.d_of(zbar), &expected);
    }

    #[test]
    fn zero_differential_path_space() {
        let t = Cdga::from_spec("t", &[("a", 3), ("b", 4)], &[]).unwrap();
        let p = path_space_model(&t).unwrap();
        let u = p.universe();
        let bbar = u.position("b_bar").unwrap();
        assert_eq!(p.d_of(bbar).to_string(), "-b_p0 + b_p1");
    }

    #[test]
    fn series_cap_is_enforced() {
        let err = path_space_model_with_cap(&s2(), 1).unwrap_err();
        assert!(
            matches!(err, SullivanError::SeriesCap { ref generator, cap: 1 } if generator == "z")
        );
    }

    #[test]
    fn pushout_along_multiplication_is_free_loop_model() {
        let m = s2();
        let po = pushout_model(
            &multiplication_morphism(&m).unwrap(),
            &path_space_model(&m).unwrap(),
        )
        .unwrap();
        let fl = free_loop_model(&m).unwrap();
        assert_eq!(po.total().differential(), fl.differential());
        let zbar = fl.gens().position("z_bar").unwrap();
        assert_eq!(fl.d_of(zbar).to_string(), "-2*y*y_bar");
    }

    #[test]
    fn free_loop_cohomology() {
        let m = s2();
        let fl = free_loop_model(&m).unwrap();
        let h = cohomology(&fl, 6);
        assert_eq!(h.dim(1), 1);
        assert_eq!(h.dim(3), 1);
        assert_eq!(h.representatives(1)[0].to_string(), "y_bar");

        let s3 = Cdga::from_spec("s3", &[("x", 3)], &[]).unwrap();
        let fl = free_loop_model(&s3).unwrap();
        assert!(fl.differential().is_zero());
        assert_eq!(cohomology(&fl, 7).dims(), vec![1, 0, 1, 1, 1, 1, 1, 1]);
    }
}
