use std::collections::HashSet;

use super::{check_minimal_sullivan, SullivanError};
use crate::algebra::{AlgElement, Derivation, GeneratorSet, Universe};
use crate::cdga::{check_quasi_iso, cohomology, Cdga, CdgaMorphism, Cohomology};
use crate::linalg::{kernel_basis, solve, RatMatrix, SubspaceBasis};
use crate::Rational;

/// Generators adjoined at one stage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageLog {
    pub degree: u32,
    /// New cocycle generators, for classes missing from the image.
    pub cocycle: Vec<String>,
    /// Generators killing the kernel in the next degree.
    pub kernel: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct MinimalModelResult {
    pub model: Cdga,
    pub quasi_iso: CdgaMorphism,
    pub certified_degree: u32,
    pub stages: Vec<StageLog>,
}

impl MinimalModelResult {
    /// The model in the text format, with one comment line per stage.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.stages {
            out.push_str(&format!(
                "# stage {}: added {} cocycle gens, {} kernel gens\n",
                s.degree,
                s.cocycle.len(),
                s.kernel.len()
            ));
        }
        out.push_str(&format!(
            "# certified through degree {}\n",
            self.certified_degree
        ));
        out.push_str(&self.model.to_text());
        out
    }
}

const KILLER_NAMES: [&str; 7] = ["z", "x", "w", "v", "t", "s", "r"];

/// Model under construction: generators, differentials and images in the
/// target, all rebuilt over a fresh universe whenever generators are added.
struct Builder<'a> {
    target: &'a Cdga,
    gens: Vec<(String, u32)>,
    diffs: Vec<AlgElement>,
    images: Vec<AlgElement>,
    universe: Universe,
    used: HashSet<String>,
}

impl<'a> Builder<'a> {
    fn new(target: &'a Cdga) -> Self {
        Builder {
            target,
            gens: Vec::new(),
            diffs: Vec::new(),
            images: Vec::new(),
            universe: GeneratorSet::empty().into_universe(),
            used: HashSet::new(),
        }
    }

    fn model(&self, name: &str) -> Result<Cdga, SullivanError> {
        let d = Derivation::new(&self.universe, 1, self.diffs.iter().cloned().enumerate())
            .map_err(crate::cdga::CdgaError::from)?;
        Ok(Cdga::new(name, d)?)
    }

    /// `φ` on a model element (generators beyond `images` are not allowed).
    fn apply(&self, a: &AlgElement) -> AlgElement {
        self.target
            .reduce(&a.substitute(self.target.universe(), &self.images))
    }

    fn push(&mut self, name: String, degree: u32, d: AlgElement, image: AlgElement) {
        self.used.insert(name.clone());
        self.gens.push((name, degree));
        self.diffs.push(d);
        self.images.push(image);
    }

    /// Rebuilds the universe after `push`; elements of the old universe are
    /// carried over unchanged (new generators come last).
    fn refresh(&mut self) {
        let u = GeneratorSet::new(self.gens.clone())
            .expect("generated names are unique identifiers")
            .into_universe();
        let n_old = self.universe.len();
        let map: Vec<usize> = (0..n_old).collect();
        for d in self.diffs.iter_mut() {
            *d = d.remap_monotone(&u, &map);
        }
        self.universe = u;
    }

    fn killer_name(&self, degree: u32, i: usize) -> String {
        KILLER_NAMES
            .iter()
            .map(|s| s.to_string())
            .find(|n| !self.used.contains(n) && self.target.gens().position(n).is_none())
            .unwrap_or_else(|| self.indexed(&format!("z{degree}"), i))
    }

    fn indexed(&self, base: &str, i: usize) -> String {
        (i..)
            .map(|j| format!("{base}_{j}"))
            .find(|n| !self.used.contains(n))
            .expect("unbounded search")
    }
}

/// Matrix of `H^k(φ)` with columns indexed by the model's representatives.
fn induced(
    b: &Builder,
    hm: &Cohomology,
    ht: &Cohomology,
    k: u32,
) -> Result<RatMatrix, SullivanError> {
    let cols = hm
        .representatives(k)
        .iter()
        .map(|z| {
            ht.class_of(k, &b.apply(z)).map_err(|_| {
                SullivanError::Internal(format!("image of cocycle {z} is not a cocycle"))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RatMatrix::from_columns(ht.dim(k), &cols))
}

/// The minimal Sullivan model of `target`, built degree by degree up to
/// `n`. In each degree, generators with zero differential are first added
/// for the classes missing from the image of `H^n(φ)`, then generators
/// killing the kernel of `H^{n+1}(φ)`.
pub fn minimal_model(target: &Cdga, n: u32) -> Result<MinimalModelResult, SullivanError> {
    if n < 2 {
        return Err(SullivanError::Precondition(
            "the certified degree must be at least 2".into(),
        ));
    }
    let ht = cohomology(target, n + 1);
    if ht.dim(0) != 1 {
        return Err(SullivanError::Precondition(format!(
            "H^0 of '{}' has dimension {}, expected 1",
            target.name(),
            ht.dim(0)
        )));
    }
    if ht.dim(1) != 0 {
        return Err(SullivanError::Precondition(format!(
            "H^1 of '{}' is nonzero; the target must be simply connected",
            target.name()
        )));
    }
    let name = format!("{}_min", target.name());
    let mut b = Builder::new(target);
    let mut stages = Vec::new();
    for deg in 2..=n {
        let mut log = StageLog {
            degree: deg,
            cocycle: Vec::new(),
            kernel: Vec::new(),
        };

        // (a) cokernel of H^deg(φ)
        let hm = cohomology(&b.model(&name)?, deg);
        let m = induced(&b, &hm, &ht, deg)?;
        let columns: Vec<Vec<Rational>> = (0..m.cols()).map(|j| m.column(j)).collect();
        let image = SubspaceBasis::span(ht.dim(deg), &columns);
        let pivots: HashSet<usize> = image.pivots().iter().copied().collect();
        let missing: Vec<usize> = (0..ht.dim(deg)).filter(|j| !pivots.contains(j)).collect();
        for (i, &j) in missing.iter().enumerate() {
            let rep = ht.representatives(deg)[j].clone();
            let gen_name = single_generator(&rep)
                .map(|g| target.gens().get(g).name().to_string())
                .filter(|s| !b.used.contains(s))
                .unwrap_or_else(|| b.indexed(&format!("a{deg}"), i));
            let zero = AlgElement::zero(&b.universe);
            b.push(gen_name.clone(), deg, zero, rep);
            log.cocycle.push(gen_name);
        }
        b.refresh();

        // (b) kernel of H^{deg+1}(φ)
        let model = b.model(&name)?;
        let hm = cohomology(&model, deg + 1);
        let m = induced(&b, &hm, &ht, deg + 1)?;
        let kernel = kernel_basis(&m);
        let reps = hm.representatives(deg + 1);
        let mut killers = Vec::new();
        for (i, c) in kernel.vectors().iter().enumerate() {
            let mut z = AlgElement::zero(&b.universe);
            for (coef, r) in c.iter().zip(reps) {
                z += &r.scale(coef);
            }
            // d φ(w) = φ(z), solved in the target
            let rhs = ht.complex().space(deg + 1).coords(&b.apply(&z));
            let sol = solve(ht.complex().matrix(deg), &rhs).map_err(|e| {
                SullivanError::Internal(format!(
                    "cannot lift the kernel class {z} in degree {}: {e}",
                    deg + 1
                ))
            })?;
            let image = ht.complex().space(deg).element(&sol);
            if z.terms().keys().any(|m| m.word_length() < 2) {
                return Err(SullivanError::Internal(format!(
                    "kernel representative {z} has a linear part"
                )));
            }
            let gen_name = b.killer_name(deg, i);
            b.used.insert(gen_name.clone());
            killers.push((gen_name, z, image));
        }
        for (gen_name, z, image) in killers {
            b.push(gen_name.clone(), deg, z, image);
            log.kernel.push(gen_name);
        }
        b.refresh();
        stages.push(log);
    }

    let model = b.model(&name)?;
    let images: Vec<AlgElement> = b.images.clone();
    let quasi_iso = CdgaMorphism::new(model.clone(), target.clone(), images)?;
    if !check_minimal_sullivan(&model)? {
        return Err(SullivanError::Internal(
            "constructed model is not minimal".into(),
        ));
    }
    let report = check_quasi_iso(&quasi_iso, n);
    if let Some(k) = report.first_failure() {
        return Err(SullivanError::Internal(format!(
            "model map is not a quasi-isomorphism in degree {k}"
        )));
    }
    Ok(MinimalModelResult {
        model,
        quasi_iso,
        certified_degree: n,
        stages,
    })
}

/// Ordinal `g` when `e` is exactly the generator `g`.
fn single_generator(e: &AlgElement) -> Option<usize> {
    use num_traits::One;
    let (m, c) = e.terms().iter().next()?;
    if e.len() != 1 || !c.is_one() || m.word_length() != 1 {
        return None;
    }
    Some(m.exponents()[0].0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn truncated(name: &str, gen: &str, degree: u32, rel: &str) -> Cdga {
        Cdga::from_spec(name, &[(gen, degree)], &[])
            .unwrap()
            .with_relation_text(&[rel])
            .unwrap()
    }

    fn profile(c: &Cdga) -> Vec<(String, u32, String)> {
        c.gens()
            .iter()
            .map(|g| {
                (
                    g.name().to_string(),
                    g.degree(),
                    c.d_of(g.ordinal()).to_string(),
                )
            })
            .collect()
    }

    #[test]
    fn even_sphere() {
        let r = minimal_model(&truncated("hs2", "y", 2, "y^2"), 8).unwrap();
        assert_eq!(
            profile(&r.model),
            vec![("y".into(), 2, "0".into()), ("z".into(), 3, "y^2".into())]
        );
        assert_eq!(r.stages[0].cocycle, vec!["y"]);
        assert_eq!(r.stages[1].kernel, vec!["z"]);
        assert!(r
            .to_text()
            .contains("# stage 3: added 0 cocycle gens, 1 kernel gens"));
    }

    #[test]
    fn complex_projective_plane() {
        let r = minimal_model(&truncated("hcp2", "u", 2, "u^3"), 10).unwrap();
        let p = profile(&r.model);
        assert_eq!(p.len(), 2);
        assert_eq!((p[0].1, p[1].1), (2, 5));
        assert_eq!(p[1].2, "u^3");
    }

    #[test]
    fn odd_sphere() {
        let hs3 = Cdga::from_spec("hs3", &[("x", 3)], &[]).unwrap();
        let r = minimal_model(&hs3, 9).unwrap();
        assert_eq!(profile(&r.model), vec![("x".into(), 3, "0".into())]);
    }

    #[test]
    fn model_of_a_model_is_itself() {
        let nf = Cdga::from_spec("nf", &[("u", 3), ("v", 3), ("w", 5)], &[("w", "u*v")]).unwrap();
        let r = minimal_model(&nf, 9).unwrap();
        let degrees: Vec<u32> = r.model.gens().iter().map(|g| g.degree()).collect();
        assert_eq!(degrees, vec![3, 3, 5]);
        assert_eq!(check_quasi_iso(&r.quasi_iso, 9).first_failure(), None);
    }

    #[test]
    fn rejects_non_simply_connected() {
        let s1 = Cdga::from_spec("s1", &[("a", 1)], &[]).unwrap();
        assert!(matches!(
            minimal_model(&s1, 4),
            Err(SullivanError::Precondition(_))
        ));
    }
}
