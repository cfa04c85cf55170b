use std::fmt;

use super::pure::{associated_pure, h0_dim};
use super::InvariantsError;
use crate::cdga::{cohomology, Cdga};
use crate::sullivan::check_minimal_sullivan;

/// Even exponents `a_j` (`deg = 2a_j`) and odd exponents `b_i`
/// (`deg = 2b_i − 1`) of a generator list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentProfile {
    pub even: Vec<u32>,
    pub odd: Vec<u32>,
}

impl ExponentProfile {
    pub fn from_degrees(degrees: impl IntoIterator<Item = u32>) -> Self {
        let (mut even, mut odd) = (Vec::new(), Vec::new());
        for d in degrees {
            if d % 2 == 0 {
                even.push(d / 2);
            } else {
                odd.push(d.div_ceil(2));
            }
        }
        ExponentProfile { even, odd }
    }

    pub fn of(c: &Cdga) -> Self {
        Self::from_degrees(c.gens().iter().map(|g| g.degree()))
    }

    /// `Σ(2b_i − 1)`.
    pub fn odd_degree_sum(&self) -> i64 {
        self.odd.iter().map(|&b| 2 * b as i64 - 1).sum()
    }

    /// `Σ(2a_j − 1)`.
    pub fn shifted_even_sum(&self) -> i64 {
        self.even.iter().map(|&a| 2 * a as i64 - 1).sum()
    }

    /// `n = Σ(2b_i − 1) − Σ(2a_j − 1)`.
    pub fn formal_dimension_candidate(&self) -> i64 {
        self.odd_degree_sum() - self.shifted_even_sum()
    }
}

/// The four exponent identities for formal dimension `n`:
/// (1) `Σ(2b_i−1) − Σ(2a_j−1) = n`, (2) `Σ 2a_j ≤ n`,
/// (3) `Σ(2b_i−1) ≤ 2n − 1`, (4) `dim V^even ≤ dim V^odd`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Numerology {
    pub n: i64,
    pub odd_degree_sum: i64,
    pub shifted_even_sum: i64,
    pub even_degree_sum: i64,
    pub q: usize,
    pub p: usize,
    pub checks: [bool; 4],
}

impl Numerology {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|&b| b)
    }

    /// Human-readable form of identity `i` (1-based).
    pub fn identity(&self, i: usize) -> String {
        let rel = |ok: bool, op: &str| {
            if ok {
                op.to_string()
            } else {
                format!("not {op}")
            }
        };
        match i {
            1 => format!(
                "{}−{} {} {}",
                self.odd_degree_sum,
                self.shifted_even_sum,
                rel(self.checks[0], "="),
                self.n
            ),
            2 => format!(
                "{} {} {}",
                self.even_degree_sum,
                rel(self.checks[1], "≤"),
                self.n
            ),
            3 => format!(
                "{} {} {}",
                self.odd_degree_sum,
                rel(self.checks[2], "≤"),
                2 * self.n - 1
            ),
            4 => format!("{} {} {}", self.q, rel(self.checks[3], "≤"), self.p),
            _ => String::new(),
        }
    }
}

pub fn exponent_numerology(profile: &ExponentProfile, n: i64) -> Numerology {
    let odd_degree_sum = profile.odd_degree_sum();
    let shifted_even_sum = profile.shifted_even_sum();
    let even_degree_sum: i64 = profile.even.iter().map(|&a| 2 * a as i64).sum();
    let (q, p) = (profile.even.len(), profile.odd.len());
    Numerology {
        n,
        odd_degree_sum,
        shifted_even_sum,
        even_degree_sum,
        q,
        p,
        checks: [
            odd_degree_sum - shifted_even_sum == n,
            even_degree_sum <= n,
            odd_degree_sum < 2 * n,
            q <= p,
        ],
    }
}

/// Euler characteristics of `H`, `V` and `π` (`χ_π = χ_V`), with the
/// equivalence `χ_H > 0 ⇔ H^odd = 0 ⇔ χ_V = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerCharacteristics {
    pub h: i64,
    pub v: i64,
    pub pi: i64,
    pub h_odd_zero: bool,
    pub cluster_consistent: bool,
}

fn alternating(dims: impl IntoIterator<Item = (u32, usize)>) -> i64 {
    dims.into_iter()
        .map(|(k, d)| if k % 2 == 0 { d as i64 } else { -(d as i64) })
        .sum()
}

/// Euler characteristics from `H` computed through degree `n`.
pub fn euler_characteristics(c: &Cdga, n: u32) -> EulerCharacteristics {
    euler_from_table(c, &cohomology(c, n).dims())
}

fn euler_from_table(c: &Cdga, h_dims: &[usize]) -> EulerCharacteristics {
    let h = alternating(h_dims.iter().enumerate().map(|(k, &d)| (k as u32, d)));
    let v = alternating(c.gens().iter().map(|g| (g.degree(), 1)));
    let h_odd_zero = h_dims.iter().skip(1).step_by(2).all(|&d| d == 0);
    EulerCharacteristics {
        h,
        v,
        pi: v,
        h_odd_zero,
        cluster_consistent: (h > 0) == h_odd_zero && h_odd_zero == (v == 0),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Finiteness {
    /// `H*` is finite-dimensional; `dims` covers degrees `0..=last_nonzero + 1`.
    Finite {
        total_dim: usize,
        last_nonzero: u32,
        dims: Vec<usize>,
    },
    /// No vanishing window of `H_0` was found through degree `bound`.
    ExceededBound { bound: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitenessTest {
    pub outcome: Finiteness,
    /// `dim H_0(ΛV, d_σ)` per degree, as far as computed.
    pub h0_dims: Vec<usize>,
    /// Length of the vanishing window that certifies finiteness.
    pub window: u32,
}

/// Decides `dim H*(c) < ∞` through `H_0 = ℚ[V^even]/(d_σ V^odd)`, searching
/// degrees `≤ bound` for `max deg V^even` consecutive zeros; a positive
/// answer is re-verified on `H*(c)` itself.
pub fn finiteness_test(c: &Cdga, bound: u32) -> Result<FinitenessTest, InvariantsError> {
    let pure = associated_pure(c)?;
    let window = c
        .gens()
        .iter()
        .filter(|g| g.is_even())
        .map(|g| g.degree())
        .max()
        .unwrap_or(0);
    let mut h0_dims = Vec::new();
    let mut zeros = 0;
    let mut finite = window == 0;
    if !finite {
        for m in 0..=bound {
            let dim = h0_dim(&pure, m);
            h0_dims.push(dim);
            zeros = if dim == 0 { zeros + 1 } else { 0 };
            if zeros >= window {
                finite = true;
                break;
            }
        }
    } else {
        h0_dims.push(1);
    }
    if !finite {
        return Ok(FinitenessTest {
            outcome: Finiteness::ExceededBound { bound },
            h0_dims,
            window,
        });
    }
    let n = ExponentProfile::of(c).formal_dimension_candidate().max(0) as u32;
    let dims = cohomology(c, n + 1).dims();
    let last_nonzero = (0..=n + 1)
        .rev()
        .find(|&k| dims[k as usize] != 0)
        .unwrap_or(0);
    if dims[n as usize + 1] != 0 {
        return Err(InvariantsError::Internal(format!(
            "H^{} of '{}' is nonzero beyond the formal dimension {n}",
            n + 1,
            c.name()
        )));
    }
    Ok(FinitenessTest {
        outcome: Finiteness::Finite {
            total_dim: dims.iter().sum(),
            last_nonzero,
            dims,
        },
        h0_dims,
        window,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Elliptic,
    /// `H_0` did not vanish on a window through the bound and did not shrink
    /// over its last window: evidence, not proof, of infinite cohomology.
    HyperbolicEvidence,
    Inconclusive {
        bound: u32,
    },
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Elliptic => f.write_str("Elliptic"),
            Verdict::HyperbolicEvidence => f.write_str("HyperbolicEvidence"),
            Verdict::Inconclusive { bound } => write!(f, "Inconclusive({bound})"),
        }
    }
}

/// Consequences of the exponent theorem for an elliptic minimal algebra of
/// formal dimension `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralChecks {
    /// `V = V^{≤2n−1}`.
    pub v_bounded: bool,
    /// `dim V^{>n} ≤ 1`.
    pub at_most_one_above_n: bool,
    /// `dim V ≤ n`.
    pub dim_v_bounded: bool,
}

impl StructuralChecks {
    pub fn all_hold(&self) -> bool {
        self.v_bounded && self.at_most_one_above_n && self.dim_v_bounded
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipticityReport {
    pub verdict: Verdict,
    pub formal_dimension: Option<u32>,
    pub exponents: ExponentProfile,
    /// `dim H^k(c)` through the formal dimension (elliptic case only).
    pub h_dims: Vec<usize>,
    pub h0_dims: Vec<usize>,
    /// `dim V^k` for `k = 0..=max degree`.
    pub v_dims: Vec<usize>,
    pub numerology: Option<Numerology>,
    pub chi: EulerCharacteristics,
    pub structural: Option<StructuralChecks>,
}

/// `dim V^k` for `k = 0..=max degree`.
pub fn generator_dims(c: &Cdga) -> Vec<usize> {
    let mut dims = vec![0; c.gens().max_degree() as usize + 1];
    for g in c.gens().iter() {
        dims[g.degree() as usize] += 1;
    }
    dims
}

/// Classifies a minimal Sullivan algebra with finitely many generators.
pub fn classify_ellipticity(c: &Cdga, bound: u32) -> Result<EllipticityReport, InvariantsError> {
    if !check_minimal_sullivan(c)? {
        return Err(InvariantsError::Precondition(format!(
            "'{}' is not minimal",
            c.name()
        )));
    }
    let test = finiteness_test(c, bound)?;
    let exponents = ExponentProfile::of(c);
    let v_dims = generator_dims(c);
    match test.outcome {
        Finiteness::Finite {
            last_nonzero, dims, ..
        } => {
            let n = last_nonzero;
            let h_dims = dims[..=n as usize].to_vec();
            let numerology = exponent_numerology(&exponents, n as i64);
            let degrees: Vec<u32> = c.gens().iter().map(|g| g.degree()).collect();
            let structural = StructuralChecks {
                v_bounded: degrees.iter().all(|&d| d < 2 * n),
                at_most_one_above_n: degrees.iter().filter(|&&d| d > n).count() <= 1,
                dim_v_bounded: degrees.len() <= n as usize,
            };
            let chi = euler_from_table(c, &h_dims);
            Ok(EllipticityReport {
                verdict: Verdict::Elliptic,
                formal_dimension: Some(n),
                exponents,
                h_dims,
                h0_dims: test.h0_dims,
                v_dims,
                numerology: Some(numerology),
                chi,
                structural: Some(structural),
            })
        }
        Finiteness::ExceededBound { bound } => {
            let w = test.window as usize;
            let h0 = &test.h0_dims;
            let mass = |i: usize| h0[i..i + w].iter().sum::<usize>();
            let relations = (0..c.gens().len())
                .filter(|&g| c.gens().is_odd(g))
                .filter(|&g| {
                    c.d_of(g)
                        .terms()
                        .keys()
                        .any(|m| m.odd_length(c.gens()) == 0)
                })
                .count();
            let even = c.gens().iter().filter(|g| g.is_even()).count();
            // fewer relations than polynomial variables: H_0 is infinite;
            // otherwise a non-shrinking last window is taken as evidence
            let verdict = if relations < even
                || (h0.len() >= 2 * w && mass(h0.len() - w) >= mass(h0.len() - 2 * w))
            {
                Verdict::HyperbolicEvidence
            } else {
                Verdict::Inconclusive { bound }
            };
            let chi = euler_from_table(c, &[]);
            Ok(EllipticityReport {
                verdict,
                formal_dimension: None,
                exponents,
                h_dims: Vec::new(),
                h0_dims: test.h0_dims,
                v_dims,
                numerology: None,
                chi: EulerCharacteristics {
                    h: 0,
                    h_odd_zero: false,
                    cluster_consistent: false,
                    ..chi
                },
                structural: None,
            })
        }
    }
}

/// `−χ_π`, an upper bound for the rank of a torus acting freely; defined
/// for elliptic algebras only.
pub fn torus_rank_bound(c: &Cdga, bound: u32) -> Result<i64, InvariantsError> {
    let report = classify_ellipticity(c, bound)?;
    if report.verdict != Verdict::Elliptic {
        return Err(InvariantsError::Precondition(format!(
            "'{}' is not certified elliptic ({})",
            c.name(),
            report.verdict
        )));
    }
    Ok(-report.chi.pi)
}
