use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::complex::{SimplexRef, SimplicialComplexFin};
use super::poly::{FormTerm, PolyForm};
use super::FormsError;
use crate::linalg::{image_basis, kernel_basis, RatMatrix, SubspaceBasis};
use crate::Rational;

/// A compatible family of polynomial forms, one per nondegenerate simplex:
/// an element of `𝒜^k(K)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalForm {
    complex: Arc<SimplicialComplexFin>,
    degree: usize,
    forms: Vec<PolyForm>,
}

/// Form on a possibly degenerate simplex `s_w τ`: degeneracy operators
/// applied innermost first.
fn evaluate(forms: &[PolyForm], r: &SimplexRef) -> PolyForm {
    let mut f = forms[r.target].clone();
    for &j in r.word.iter().rev() {
        f = f.degen(j).expect("validated degeneracy word");
    }
    f
}

/// `∂_i ω(σ) − ω(d_i σ)` for every face of every simplex.
fn residuals(k: &SimplicialComplexFin, forms: &[PolyForm]) -> Vec<(usize, usize, PolyForm)> {
    let mut out = Vec::new();
    for s in 0..k.len() {
        if k.dim(s) == 0 {
            continue;
        }
        for i in 0..=k.dim(s) {
            let lhs = forms[s].face(i).expect("face index within range");
            let rhs = evaluate(forms, k.face_of(s, i));
            out.push((s, i, &lhs - &rhs));
        }
    }
    out
}

impl GlobalForm {
    /// Validates shapes and face compatibility.
    pub fn new(
        complex: Arc<SimplicialComplexFin>,
        degree: usize,
        forms: Vec<PolyForm>,
    ) -> Result<Self, FormsError> {
        if forms.len() != complex.len() {
            return Err(FormsError::Invalid("one form per simplex required".into()));
        }
        for (s, f) in forms.iter().enumerate() {
            if f.dim() != complex.dim(s) || f.degree() != degree {
                return Err(FormsError::Invalid(format!(
                    "form on '{}' must be a {degree}-form on a {}-simplex",
                    complex.id(s),
                    complex.dim(s)
                )));
            }
        }
        if let Some((s, i, _)) = residuals(&complex, &forms)
            .into_iter()
            .find(|(_, _, r)| !r.is_zero())
        {
            return Err(FormsError::Incompatible {
                simplex: complex.id(s).to_string(),
                face: i,
            });
        }
        Ok(GlobalForm {
            complex,
            degree,
            forms,
        })
    }

    pub fn zero(complex: Arc<SimplicialComplexFin>, degree: usize) -> Self {
        let forms = (0..complex.len())
            .map(|s| PolyForm::zero(complex.dim(s), degree))
            .collect();
        GlobalForm {
            complex,
            degree,
            forms,
        }
    }

    /// Extends a form on `top` to every simplex reachable from it by faces;
    /// all other simplices get zero. Fails when the result is incompatible.
    pub fn from_simplex(
        complex: Arc<SimplicialComplexFin>,
        top: usize,
        form: PolyForm,
    ) -> Result<Self, FormsError> {
        let degree = form.degree();
        let mut forms: Vec<Option<PolyForm>> = vec![None; complex.len()];
        forms[top] = Some(form);
        let mut stack = vec![top];
        while let Some(s) = stack.pop() {
            if complex.dim(s) == 0 {
                continue;
            }
            for i in 0..=complex.dim(s) {
                let f = complex.face_of(s, i);
                if f.is_degenerate() || forms[f.target].is_some() {
                    continue;
                }
                let face = forms[s].as_ref().expect("visited").face(i)?;
                forms[f.target] = Some(face);
                stack.push(f.target);
            }
        }
        let forms = forms
            .into_iter()
            .enumerate()
            .map(|(s, f)| f.unwrap_or_else(|| PolyForm::zero(complex.dim(s), degree)))
            .collect();
        Self::new(complex, degree, forms)
    }

    pub fn complex(&self) -> &Arc<SimplicialComplexFin> {
        &self.complex
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn forms(&self) -> &[PolyForm] {
        &self.forms
    }

    pub fn form(&self, s: usize) -> &PolyForm {
        &self.forms[s]
    }

    pub fn is_zero(&self) -> bool {
        self.forms.iter().all(PolyForm::is_zero)
    }

    /// Simplexwise exterior derivative.
    pub fn d(&self) -> GlobalForm {
        GlobalForm {
            complex: self.complex.clone(),
            degree: self.degree + 1,
            forms: self.forms.iter().map(PolyForm::d).collect(),
        }
    }

    /// Simplexwise product.
    pub fn wedge(&self, other: &GlobalForm) -> GlobalForm {
        assert!(Arc::ptr_eq(&self.complex, &other.complex) || self.complex == other.complex);
        GlobalForm {
            complex: self.complex.clone(),
            degree: self.degree + other.degree,
            forms: self
                .forms
                .iter()
                .zip(&other.forms)
                .map(|(a, b)| a.wedge(b))
                .collect(),
        }
    }

    /// `∮`: integrates over every nondegenerate `k`-simplex.
    pub fn integrate(&self) -> Cochain {
        let values = self
            .complex
            .simplices_of_dim(self.degree)
            .into_iter()
            .map(|s| self.forms[s].integrate())
            .collect();
        Cochain {
            complex: self.complex.clone(),
            degree: self.degree,
            values,
        }
    }
}

/// Basis of the form terms of degree `k` on a `dim`-simplex with total
/// polynomial degree at most `cap`.
fn term_basis(dim: usize, k: usize, cap: u32) -> Vec<FormTerm> {
    fn subsets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            subsets(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    fn exponents(n: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let used: u32 = cur.iter().sum();
        for a in 0..=cap - used {
            cur.push(a);
            exponents(n, cap, cur, out);
            cur.pop();
        }
    }
    if k > dim {
        return Vec::new();
    }
    let mut exts = Vec::new();
    subsets(dim, k, 1, &mut Vec::new(), &mut exts);
    let mut exps = Vec::new();
    exponents(dim, cap, &mut Vec::new(), &mut exps);
    let mut out = Vec::new();
    for e in &exts {
        for a in &exps {
            out.push(FormTerm {
                ext: e.clone(),
                exps: a.clone(),
            });
        }
    }
    out
}

/// Linear conditions on the coefficients of a `k`-form family at
/// polynomial cap `cap`: face compatibility, plus `dω = 0` when `closed`.
/// Returns the unknowns and the kernel of the condition matrix.
fn solution_space(
    k: &SimplicialComplexFin,
    degree: usize,
    cap: u32,
    closed: bool,
) -> (Vec<(usize, FormTerm)>, SubspaceBasis) {
    let unknowns: Vec<(usize, FormTerm)> = (0..k.len())
        .flat_map(|s| {
            term_basis(k.dim(s), degree, cap)
                .into_iter()
                .map(move |t| (s, t))
        })
        .collect();
    let mut rows: HashMap<(usize, usize, FormTerm), usize> = HashMap::new();
    let mut columns: Vec<Vec<(usize, Rational)>> = Vec::with_capacity(unknowns.len());
    for (s, t) in &unknowns {
        let mut forms: Vec<PolyForm> = (0..k.len())
            .map(|x| PolyForm::zero(k.dim(x), degree))
            .collect();
        forms[*s].add_term(t.clone(), Rational::one());
        let mut col = Vec::new();
        let mut push = |key: (usize, usize, FormTerm), c: &Rational| {
            let n = rows.len();
            let r = *rows.entry(key).or_insert(n);
            col.push((r, c.clone()));
        };
        for (x, i, r) in residuals(k, &forms) {
            for (term, c) in r.terms() {
                push((x, i, term.clone()), c);
            }
        }
        if closed {
            // face slot `usize::MAX` marks the closedness rows
            for (term, c) in forms[*s].d().terms() {
                push((*s, usize::MAX, term.clone()), c);
            }
        }
        columns.push(col);
    }
    let mut m = RatMatrix::zeros(rows.len(), unknowns.len());
    for (j, col) in columns.into_iter().enumerate() {
        for (r, c) in col {
            m.set(r, j, c);
        }
    }
    (unknowns, kernel_basis(&m))
}

fn assemble(
    complex: &Arc<SimplicialComplexFin>,
    degree: usize,
    unknowns: &[(usize, FormTerm)],
    coeffs: &[Rational],
) -> GlobalForm {
    let mut forms: Vec<PolyForm> = (0..complex.len())
        .map(|x| PolyForm::zero(complex.dim(x), degree))
        .collect();
    for ((s, t), c) in unknowns.iter().zip(coeffs) {
        forms[*s].add_term(t.clone(), c.clone());
    }
    GlobalForm::new(complex.clone(), degree, forms).expect("solutions are compatible")
}

/// Dimension of the space of global `k`-forms with polynomial degree at
/// most `cap`.
pub fn global_form_space_dim(complex: &SimplicialComplexFin, degree: usize, cap: u32) -> usize {
    solution_space(complex, degree, cap, false).1.dim()
}

/// A reproducible pseudorandom global `k`-form of polynomial degree at most
/// `cap`: a random rational point of the solution space of the
/// compatibility system (zero when that space is trivial).
pub fn sample_global_form(
    complex: &Arc<SimplicialComplexFin>,
    degree: usize,
    cap: u32,
    seed: u64,
) -> GlobalForm {
    let (unknowns, kernel) = solution_space(complex, degree, cap, false);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut weights: Vec<Rational> = (0..kernel.dim())
        .map(|_| {
            Rational::new(
                rng.gen_range(-6i64..=6).into(),
                rng.gen_range(1i64..=4).into(),
            )
        })
        .collect();
    if weights.iter().all(Zero::is_zero) {
        if let Some(w) = weights.first_mut() {
            *w = Rational::one();
        }
    }
    let mut coeffs = vec![Rational::zero(); unknowns.len()];
    for (w, v) in weights.iter().zip(kernel.vectors()) {
        for (c, x) in coeffs.iter_mut().zip(v) {
            *c += w * x;
        }
    }
    assemble(complex, degree, &unknowns, &coeffs)
}

/// A basis of the closed global `k`-forms of polynomial degree at most `cap`.
pub fn closed_form_basis(
    complex: &Arc<SimplicialComplexFin>,
    degree: usize,
    cap: u32,
) -> Vec<GlobalForm> {
    let (unknowns, kernel) = solution_space(complex, degree, cap, true);
    kernel
        .vectors()
        .iter()
        .map(|v| assemble(complex, degree, &unknowns, v))
        .collect()
}

/// A normalized rational cochain: values on the nondegenerate `k`-simplices
/// (in declaration order); degenerate simplices are implicitly zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    complex: Arc<SimplicialComplexFin>,
    degree: usize,
    values: Vec<Rational>,
}

impl Cochain {
    pub fn new(
        complex: Arc<SimplicialComplexFin>,
        degree: usize,
        values: Vec<Rational>,
    ) -> Result<Self, FormsError> {
        let n = complex.simplices_of_dim(degree).len();
        if values.len() != n {
            return Err(FormsError::Invalid(format!(
                "a {degree}-cochain needs {n} values, got {}",
                values.len()
            )));
        }
        Ok(Cochain {
            complex,
            degree,
            values,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Value on any simplex of the right dimension (zero if degenerate).
    pub fn value(&self, x: &SimplexRef) -> Rational {
        if x.is_degenerate() {
            return Rational::zero();
        }
        let pos = self
            .complex
            .simplices_of_dim(self.degree)
            .iter()
            .position(|&s| s == x.target)
            .expect("simplex of the cochain's dimension");
        self.values[pos].clone()
    }
}

/// `(δc)(x) = Σ_i (−1)^i c(d_i x)`.
pub fn cochain_differential(c: &Cochain) -> Cochain {
    let k = &c.complex;
    let values = k
        .simplices_of_dim(c.degree + 1)
        .into_iter()
        .map(|s| {
            let mut v = Rational::zero();
            for i in 0..=c.degree + 1 {
                let term = c.value(k.face_of(s, i));
                if i % 2 == 0 {
                    v += term;
                } else {
                    v -= term;
                }
            }
            v
        })
        .collect();
    Cochain {
        complex: k.clone(),
        degree: c.degree + 1,
        values,
    }
}

/// Matrix of `δ: C^k → C^{k+1}`.
fn coboundary_matrix(k: &Arc<SimplicialComplexFin>, degree: usize) -> RatMatrix {
    let n = k.simplices_of_dim(degree).len();
    let columns: Vec<Vec<Rational>> = (0..n)
        .map(|j| {
            let mut values = vec![Rational::zero(); n];
            values[j] = Rational::one();
            cochain_differential(&Cochain {
                complex: k.clone(),
                degree,
                values,
            })
            .values
        })
        .collect();
    RatMatrix::from_columns(k.simplices_of_dim(degree + 1).len(), &columns)
}

/// `dim H^k(K; ℚ)` of the normalized cochains, `k = 0..=n`.
pub fn cochain_cohomology(k: &Arc<SimplicialComplexFin>, n: usize) -> Vec<usize> {
    let ranks: Vec<usize> = (0..=n).map(|d| coboundary_matrix(k, d).rank()).collect();
    (0..=n)
        .map(|d| {
            let cells = k.simplices_of_dim(d).len();
            cells - ranks[d] - if d == 0 { 0 } else { ranks[d - 1] }
        })
        .collect()
}

/// Alexander–Whitney cup product.
pub fn cup_product(a: &Cochain, b: &Cochain) -> Cochain {
    let k = &a.complex;
    let (p, q) = (a.degree, b.degree);
    let values = k
        .simplices_of_dim(p + q)
        .into_iter()
        .map(|s| {
            let x = SimplexRef::nondegenerate(s);
            let mut front = x.clone();
            for i in (p + 1..=p + q).rev() {
                front = k.face(&front, i).expect("front face");
            }
            let mut back = x;
            for _ in 0..p {
                back = k.face(&back, 0).expect("back face");
            }
            a.value(&front) * b.value(&back)
        })
        .collect();
    Cochain {
        complex: k.clone(),
        degree: p + q,
        values,
    }
}

/// Outcome of one Stokes trial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StokesTrial {
    pub degree: usize,
    pub seed: u64,
    pub form_is_zero: bool,
    pub passed: bool,
}

/// Whether `∮` detects all of `H^k`: rank of the integrals of a basis of
/// closed forms modulo coboundaries, against the cochain cohomology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyCheck {
    pub degree: usize,
    pub expected: usize,
    pub integral_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StokesReport {
    pub complex: String,
    pub trials: Vec<StokesTrial>,
    pub cohomology: Vec<CohomologyCheck>,
}

impl StokesReport {
    pub fn passed(&self) -> usize {
        self.trials.iter().filter(|t| t.passed).count()
    }

    pub fn all_passed(&self) -> bool {
        self.passed() == self.trials.len()
            && self
                .cohomology
                .iter()
                .all(|c| c.expected == c.integral_rank)
    }
}

/// Checks `∮ dω = δ ∮ ω` exactly on `trials` sampled forms (degrees cycling
/// through `0..=top`), then compares the rank of `∮` on closed forms with
/// the cochain cohomology.
pub fn verify_stokes(
    complex: &Arc<SimplicialComplexFin>,
    trials: usize,
    cap: u32,
    seed: u64,
) -> StokesReport {
    let top = complex.top_dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = (0..trials)
        .map(|t| {
            let degree = t % (top + 1);
            let s = rng.next_u64();
            let w = sample_global_form(complex, degree, cap, s);
            let passed = w.d().integrate() == cochain_differential(&w.integrate());
            StokesTrial {
                degree,
                seed: s,
                form_is_zero: w.is_zero(),
                passed,
            }
        })
        .collect();
    let dims = cochain_cohomology(complex, top);
    let cohomology = (0..=top)
        .map(|k| {
            let cells = complex.simplices_of_dim(k).len();
            let boundaries = if k == 0 {
                SubspaceBasis::zero(cells)
            } else {
                image_basis(&coboundary_matrix(complex, k - 1))
            };
            let mut span: Vec<Vec<Rational>> = boundaries.vectors().to_vec();
            span.extend(
                closed_form_basis(complex, k, cap)
                    .iter()
                    .map(|w| w.integrate().values),
            );
            let total = SubspaceBasis::span(cells, &span).dim();
            CohomologyCheck {
                degree: k,
                expected: dims[k],
                integral_rank: total - boundaries.dim(),
            }
        })
        .collect();
    StokesReport {
        complex: complex.name().to_string(),
        trials,
        cohomology,
    }
}

/// `∮` is not multiplicative: on the standard 2-simplex, `ω = t_1` and
/// `η = y_1 y_2` give `∮(ωη) = 1/6` while `(∮ω ∪ ∮η) = 0`.
#[derive(Clone, Debug)]
pub struct MultiplicativityWitness {
    pub omega: GlobalForm,
    pub eta: GlobalForm,
    pub integral_of_product: Rational,
    pub cup_of_integrals: Rational,
}

pub fn non_multiplicativity_witness() -> MultiplicativityWitness {
    let k = Arc::new(super::complex::standard_simplex(2));
    let top = k.simplices_of_dim(2)[0];
    let omega = GlobalForm::from_simplex(k.clone(), top, PolyForm::t(2, 1).expect("t_1"))
        .expect("restriction of a form is compatible");
    let eta = GlobalForm::from_simplex(
        k.clone(),
        top,
        PolyForm::monomial(2, vec![0, 0], &[1, 2], Rational::one()).expect("volume form"),
    )
    .expect("restriction of a form is compatible");
    let integral_of_product = omega.wedge(&eta).integrate().values[0].clone();
    let cup_of_integrals = cup_product(&omega.integrate(), &eta.integrate()).values[0].clone();
    MultiplicativityWitness {
        omega,
        eta,
        integral_of_product,
        cup_of_integrals,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{builtin_complex, parse_complex};

    fn arc(name: &str) -> Arc<SimplicialComplexFin> {
        Arc::new(builtin_complex(name).unwrap())
    }

    #[test]
    fn cochain_cohomology_of_builtins() {
        assert_eq!(cochain_cohomology(&arc("bddelta3"), 2), vec![1, 0, 1]);
        assert_eq!(cochain_cohomology(&arc("delta3"), 3), vec![1, 0, 0, 0]);
        let s2 = parse_complex(
            "scomplex s2\nsimplex p 0\nsimplex x 2\nface x 0 = p s0\nface x 1 = p s0\nface x 2 = p s0\n",
        )
        .unwrap();
        assert_eq!(cochain_cohomology(&Arc::new(s2), 2), vec![1, 0, 1]);
    }

    #[test]
    fn sampling_is_deterministic() {
        let k = arc("bddelta3");
        let a = sample_global_form(&k, 2, 2, 7);
        let b = sample_global_form(&k, 2, 2, 7);
        assert_eq!(a, b);
        assert!(!a.is_zero());
        assert!(global_form_space_dim(&k, 2, 2) > 0);
        let d2 = arc("delta2");
        let f = sample_global_form(&d2, 0, 1, 3);
        assert_eq!(f.d().degree(), 1);
    }

    #[test]
    fn stokes_on_builtins() {
        for name in ["delta2", "delta3", "bddelta3"] {
            let r = verify_stokes(&arc(name), 8, 2, 11);
            assert!(r.all_passed(), "{name}: {r:?}");
        }
    }

    #[test]
    fn stokes_on_collapsed_sphere() {
        let s2 = parse_complex(
            "scomplex s2\nsimplex p 0\nsimplex x 2\nface x 0 = p s0\nface x 1 = p s0\nface x 2 = p s0\n",
        )
        .unwrap();
        let r = verify_stokes(&Arc::new(s2), 6, 2, 5);
        assert!(r.all_passed(), "{r:?}");
    }

    #[test]
    fn integration_is_not_multiplicative() {
        let w = non_multiplicativity_witness();
        assert_eq!(w.integral_of_product, Rational::new(1.into(), 6.into()));
        assert!(w.cup_of_integrals.is_zero());
    }

    #[test]
    fn incompatible_family_is_rejected() {
        let k = arc("delta2");
        let mut forms: Vec<PolyForm> = (0..k.len()).map(|s| PolyForm::zero(k.dim(s), 0)).collect();
        forms[0] = PolyForm::one(0);
        assert!(matches!(
            GlobalForm::new(k, 0, forms),
            Err(FormsError::Incompatible { .. })
        ));
    }
}
