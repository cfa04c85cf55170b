use super::InvariantsError;
use crate::cdga::Cdga;
use crate::sullivan::check_minimal_sullivan;

/// `∏(1 + z^m) / ∏(1 − z^m)` expanded through a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincareSeries {
    /// Exponents `m` of the numerator factors `1 + z^m`.
    pub numerator: Vec<u32>,
    /// Exponents `m` of the denominator factors `1 − z^m`.
    pub denominator: Vec<u32>,
    pub coefficients: Vec<u64>,
}

impl PoincareSeries {
    pub fn from_factors(numerator: Vec<u32>, denominator: Vec<u32>, order: u32) -> Self {
        let len = order as usize + 1;
        let mut coefficients = vec![0u64; len];
        coefficients[0] = 1;
        for &m in &numerator {
            let m = m as usize;
            for k in (m..len).rev() {
                coefficients[k] += coefficients[k - m];
            }
        }
        for &m in &denominator {
            let m = m as usize;
            assert!(m > 0, "factor 1 − z^0 is not invertible");
            for k in m..len {
                coefficients[k] += coefficients[k - m];
            }
        }
        PoincareSeries {
            numerator,
            denominator,
            coefficients,
        }
    }

    /// Factors as text, e.g. `(1+z)(1-z^2)^-1`.
    pub fn factor_string(&self) -> String {
        let pow = |m: u32| {
            if m == 1 {
                "z".to_string()
            } else {
                format!("z^{m}")
            }
        };
        let mut out: String = self
            .numerator
            .iter()
            .map(|&m| format!("(1+{})", pow(m)))
            .collect();
        out.extend(
            self.denominator
                .iter()
                .map(|&m| format!("(1-{})^-1", pow(m))),
        );
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

/// Poincaré series of `H*(ΩX) ≅ ΛV̄` for a minimal model `ΛV`: a factor
/// `1 + z^{2a−1}` per generator of degree `2a` and `(1 − z^{2b−2})^{-1}` per
/// generator of degree `2b − 1`, through degree `n`.
pub fn loop_poincare_series(model: &Cdga, n: u32) -> Result<PoincareSeries, InvariantsError> {
    if !check_minimal_sullivan(model)? {
        return Err(InvariantsError::Precondition(format!(
            "'{}' is not minimal",
            model.name()
        )));
    }
    let (mut numerator, mut denominator) = (Vec::new(), Vec::new());
    for g in model.gens().iter() {
        if g.is_even() {
            numerator.push(g.degree() - 1);
        } else {
            denominator.push(g.degree() - 1);
        }
    }
    Ok(PoincareSeries::from_factors(numerator, denominator, n))
}

/// Thresholds for [`growth_classify_with`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GrowthConfig {
    /// Exponential needs a geometric-mean ratio of partial sums above `1 + ε`.
    pub epsilon: f64,
    /// ... and a log-log slope that keeps increasing: the slope over the
    /// last half must exceed the slope over the quarter before by this factor.
    pub acceleration: f64,
}

impl Default for GrowthConfig {
    fn default() -> Self {
        GrowthConfig {
            epsilon: 1.0 / 20.0,
            acceleration: 1.25,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Growth {
    /// Coefficients stay bounded by their early maximum.
    Constant,
    /// Partial sums grow like `k^slope`.
    Polynomial { slope: f64 },
    /// Partial sums grow like `rate^k`.
    Exponential { rate: f64 },
}

impl std::fmt::Display for Growth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Growth::Constant => f.write_str("constant"),
            Growth::Polynomial { slope } => write!(f, "polynomial (slope {slope:.2})"),
            Growth::Exponential { rate } => write!(f, "exponential (rate {rate:.3})"),
        }
    }
}

pub fn growth_classify(coeffs: &[u64]) -> Growth {
    growth_classify_with(coeffs, GrowthConfig::default())
}

/// Heuristic growth class of a coefficient sequence, read from its partial
/// sums over the last half of the range.
pub fn growth_classify_with(coeffs: &[u64], config: GrowthConfig) -> Growth {
    if coeffs.len() < 5 {
        return Growth::Constant;
    }
    let n = coeffs.len() - 1;
    let h = n / 2;
    let early = coeffs[..h].iter().max().copied().unwrap_or(0);
    if coeffs[h..].iter().all(|&c| c <= early) {
        return Growth::Constant;
    }
    let sums: Vec<f64> = coeffs
        .iter()
        .scan(0f64, |acc, &c| {
            *acc += c as f64;
            Some(*acc)
        })
        .collect();
    let slope = |k: usize| (sums[k] / sums[k / 2]).ln() / (k as f64 / (k / 2) as f64).ln();
    let rate = (sums[n] / sums[n - h]).powf(1.0 / h as f64);
    let (late, earlier) = (slope(n), slope(h));
    if rate > 1.0 + config.epsilon && late > config.acceleration * earlier {
        Growth::Exponential { rate }
    } else {
        Growth::Polynomial { slope: late }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GapStatus {
    /// Some `dim V^i ≠ 0` with `i` in the open window.
    Holds(u32),
    Fails,
    /// The window reaches past the computed range.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapProbe {
    pub width: u32,
    pub windows: Vec<(u32, GapStatus)>,
}

impl GapProbe {
    pub fn no_failures(&self) -> bool {
        self.windows.iter().all(|(_, s)| *s != GapStatus::Fails)
    }
}

/// Checks that every open window `(k, k + width)`, for `k` from the first
/// generator degree through the computed range, meets a nonzero `dim V^i`.
pub fn gap_probe(v_dims: &[usize], width: u32) -> GapProbe {
    let top = v_dims.len().saturating_sub(1) as u32;
    let start = v_dims.iter().position(|&d| d != 0).unwrap_or(v_dims.len()) as u32;
    let windows = (start..=top)
        .map(|k| {
            let hit = (k + 1..k + width)
                .filter(|&i| i <= top)
                .find(|&i| v_dims[i as usize] != 0);
            let status = match hit {
                Some(i) => GapStatus::Holds(i),
                None if k + width - 1 > top => GapStatus::Inconclusive,
                None => GapStatus::Fails,
            };
            (k, status)
        })
        .collect();
    GapProbe { width, windows }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_series() {
        let s3 = Cdga::from_spec("s3", &[("x", 3)], &[]).unwrap();
        let p = loop_poincare_series(&s3, 8).unwrap();
        assert_eq!(p.coefficients, vec![1, 0, 1, 0, 1, 0, 1, 0, 1]);
        assert_eq!(p.factor_string(), "(1-z^2)^-1");
        let s2 = Cdga::from_spec("s2", &[("y", 2), ("z", 3)], &[("z", "y^2")]).unwrap();
        let p = loop_poincare_series(&s2, 8).unwrap();
        assert_eq!(p.coefficients, vec![1; 9]);
        assert_eq!(p.factor_string(), "(1+z)(1-z^2)^-1");
    }

    #[test]
    fn growth() {
        assert_eq!(growth_classify(&[1; 21]), Growth::Constant);
        let linear: Vec<u64> = (0..21)
            .map(|k| if k % 2 == 0 { k / 2 + 1 } else { 0 })
            .collect();
        assert!(matches!(
            growth_classify(&linear),
            Growth::Polynomial { .. }
        ));
        let doubling: Vec<u64> = (0..21)
            .map(|k| if k % 2 == 0 { 1 << (k / 2) } else { 0 })
            .collect();
        assert!(matches!(
            growth_classify(&doubling),
            Growth::Exponential { .. }
        ));
        let short: Vec<u64> = doubling[..10].to_vec();
        assert!(matches!(
            growth_classify(&short),
            Growth::Exponential { .. }
        ));
        let linear_short: Vec<u64> = linear[..10].to_vec();
        assert!(matches!(
            growth_classify(&linear_short),
            Growth::Polynomial { .. }
        ));
    }

    #[test]
    fn gaps() {
        // odd degrees from 3 on, as for a wedge of two 3-spheres
        let v: Vec<usize> = (0..12).map(|k| usize::from(k >= 3 && k % 2 == 1)).collect();
        let probe = gap_probe(&v, 3);
        assert!(probe.no_failures());
        assert_eq!(probe.windows[0], (3, GapStatus::Holds(5)));
        assert_eq!(probe.windows.last().unwrap().1, GapStatus::Inconclusive);
        let sparse = vec![0, 0, 0, 1, 0, 0, 0, 1, 0, 0];
        assert!(!gap_probe(&sparse, 3).no_failures());
    }
}
