use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Map, Value};
use sullivan::cdga::{cohomology as cohomology_of, Cdga};
use sullivan::forms::verify_stokes;
use sullivan::invariants::{
    cat_bounds, classify_ellipticity, growth_classify, loop_poincare_series, toomer_rank,
    EllipticityReport, Verdict,
};
use sullivan::sullivan::{
    free_loop_model, loop_cohomology, minimal_model as minimal_model_of, path_space_model_with_cap,
};

use crate::input::{complex_arg, is_complex_text, load_cdga, load_complex, load_model, read};

/// A rendered command result. `ok = false` reports a failed check with
/// exit code 1 after printing.
pub struct Report {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

fn report(command: &str, text: String, mut fields: Map<String, Value>) -> Report {
    let mut json = Map::new();
    json.insert("schema".into(), json!(1));
    json.insert("command".into(), json!(command));
    json.append(&mut fields);
    Report {
        text,
        json: Value::Object(json),
        ok: true,
    }
}

fn fields(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("fields are built from json objects"),
    }
}

fn model_json(c: &Cdga) -> Value {
    let generators: Vec<Value> = c
        .gens()
        .iter()
        .map(|g| json!({"name": g.name(), "degree": g.degree()}))
        .collect();
    let mut diffs = Map::new();
    for g in c.gens().iter() {
        diffs.insert(g.name().into(), json!(c.d_of(g.ordinal()).to_string()));
    }
    json!({"name": c.name(), "generators": generators, "differentials": diffs})
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

fn dims_table(out: &mut String, header: &str, dims: &[usize]) {
    let _ = writeln!(out, "{:>6}  {header}", "degree");
    for (k, d) in dims.iter().enumerate() {
        let _ = writeln!(out, "{k:>6}  {d}");
    }
}

pub fn cohomology(file: &Path, n: u32) -> Result<Report, String> {
    let c = load_cdga(file)?;
    let r = cohomology_of(&c, n).report();
    let mut text = format!("cohomology of {} through degree {n}\n", c.name());
    let _ = writeln!(text, "{:>6}  {:>4}  representatives", "degree", "dim");
    for (k, d) in r.dims.iter().enumerate() {
        let _ = writeln!(text, "{k:>6}  {d:>4}  {}", join(&r.representatives[k]));
    }
    Ok(report(
        "cohomology",
        text,
        fields(json!({
            "name": c.name(),
            "maxDegree": n,
            "dims": r.dims,
            "representatives": r.representatives,
        })),
    ))
}

pub fn minimal_model(file: &Path, n: u32) -> Result<Report, String> {
    let c = load_cdga(file)?;
    let r = minimal_model_of(&c, n).map_err(|e| format!("{}: {e}", file.display()))?;
    let m = model_json(&r.model);
    let stages: Vec<Value> = r
        .stages
        .iter()
        .map(|s| json!({"degree": s.degree, "cocycle": s.cocycle, "kernel": s.kernel}))
        .collect();
    Ok(report(
        "minimal-model",
        r.to_text(),
        fields(json!({
            "name": r.model.name(),
            "generators": m["generators"],
            "differentials": m["differentials"],
            "certifiedDegree": r.certified_degree,
            "stages": stages,
        })),
    ))
}

pub fn loop_space(file: &Path, n: u32) -> Result<Report, String> {
    let model = load_model(file, n + 1)?;
    let l = loop_cohomology(&model, n).map_err(|e| format!("{}: {e}", file.display()))?;
    let mut text = format!(
        "loop-space cohomology of {} through degree {n}\n",
        model.name()
    );
    let gens: Vec<String> = l
        .generators
        .iter()
        .map(|(g, d)| format!("{g}:{d}"))
        .collect();
    let _ = writeln!(text, "generators: {}", join(&gens));
    dims_table(&mut text, "dim", &l.dims);
    let ranks: Vec<String> = l
        .pi_ranks
        .iter()
        .enumerate()
        .filter(|(_, &r)| r != 0)
        .map(|(k, r)| format!("pi_{k}: {r}"))
        .collect();
    let _ = writeln!(text, "rational homotopy ranks: {}", join(&ranks));
    let generators: Vec<Value> = l
        .generators
        .iter()
        .map(|(g, d)| json!({"name": g, "degree": d}))
        .collect();
    Ok(report(
        "loop",
        text,
        fields(json!({
            "name": model.name(),
            "maxDegree": n,
            "dims": l.dims,
            "generators": generators,
            "piRanks": l.pi_ranks,
        })),
    ))
}

pub fn free_loop(file: &Path, n: u32) -> Result<Report, String> {
    let model = load_model(file, n + 1)?;
    let fl = free_loop_model(&model).map_err(|e| format!("{}: {e}", file.display()))?;
    let dims = cohomology_of(&fl, n).dims();
    let sums: Vec<usize> = dims
        .iter()
        .scan(0, |acc, &d| {
            *acc += d;
            Some(*acc)
        })
        .collect();
    let coeffs: Vec<u64> = dims.iter().map(|&d| d as u64).collect();
    let growth = growth_classify(&coeffs);
    let mut text = fl.to_text();
    let _ = writeln!(text, "\n{:>6}  {:>4}  partial sum", "degree", "dim");
    for (k, (d, s)) in dims.iter().zip(&sums).enumerate() {
        let _ = writeln!(text, "{k:>6}  {d:>4}  {s}");
    }
    let _ = writeln!(text, "growth: {growth}");
    Ok(report(
        "free-loop",
        text,
        fields(json!({
            "model": model_json(&fl),
            "maxDegree": n,
            "dims": dims,
            "partialSums": sums,
            "growth": growth.to_string(),
        })),
    ))
}

pub fn path_space(file: &Path, cap: usize) -> Result<Report, String> {
    let model = load_cdga(file)?;
    let rel =
        path_space_model_with_cap(&model, cap).map_err(|e| format!("{}: {e}", file.display()))?;
    let mut text = format!("# base {}, fiber {}\n", rel.base().name(), {
        let names: Vec<String> = rel.fiber_profile().into_iter().map(|(g, _)| g).collect();
        join(&names)
    });
    text.push_str(&rel.total().to_text());
    let fiber: Vec<String> = rel.fiber_profile().into_iter().map(|(g, _)| g).collect();
    let m = model_json(rel.total());
    Ok(report(
        "path-space",
        text,
        fields(json!({
            "name": rel.total().name(),
            "base": rel.base().name(),
            "fiber": fiber,
            "generators": m["generators"],
            "differentials": m["differentials"],
        })),
    ))
}

fn verdict_json(r: &EllipticityReport) -> Value {
    json!(r.verdict.to_string())
}

fn chi_json(r: &EllipticityReport) -> Value {
    let h = if r.verdict == Verdict::Elliptic {
        json!(r.chi.h)
    } else {
        Value::Null
    };
    json!({"H": h, "V": r.chi.v, "pi": r.chi.pi})
}

fn classify_text(out: &mut String, r: &EllipticityReport) {
    let _ = writeln!(out, "verdict: {}", r.verdict);
    let _ = writeln!(
        out,
        "exponents: even ({}), odd ({})",
        join(&r.exponents.even),
        join(&r.exponents.odd)
    );
    let _ = writeln!(out, "dim V^k: {}", join(&r.v_dims));
    match r.formal_dimension {
        Some(n) => {
            let _ = writeln!(out, "formal dimension: {n}");
            let _ = writeln!(out, "dim H^k: {}", join(&r.h_dims));
            if let Some(num) = &r.numerology {
                for i in 1..=4 {
                    let mark = if num.checks[i - 1] { "ok" } else { "FAILS" };
                    let _ = writeln!(out, "identity ({i}): {}  [{mark}]", num.identity(i));
                }
            }
            if let Some(s) = &r.structural {
                let _ = writeln!(
                    out,
                    "V = V^(<=2n-1): {}, dim V^(>n) <= 1: {}, dim V <= n: {}",
                    s.v_bounded, s.at_most_one_above_n, s.dim_v_bounded
                );
            }
            let _ = writeln!(
                out,
                "chi_H = {}, chi_V = {}, chi_pi = {}, cluster consistent: {}",
                r.chi.h, r.chi.v, r.chi.pi, r.chi.cluster_consistent
            );
        }
        None => {
            let _ = writeln!(
                out,
                "dim H_0 (pure) through the bound: {}",
                join(&r.h0_dims)
            );
            let _ = writeln!(out, "chi_V = {}, chi_pi = {}", r.chi.v, r.chi.pi);
        }
    }
}

pub fn classify(file: &Path, n: u32, bound: u32) -> Result<Report, String> {
    let model = load_model(file, n)?;
    let r = classify_ellipticity(&model, bound).map_err(|e| format!("{}: {e}", file.display()))?;
    let mut text = format!("classification of {}\n", model.name());
    classify_text(&mut text, &r);
    let numerology = r.numerology.as_ref().map(|x| json!(x.checks));
    let structural = r.structural.as_ref().map(|s| {
        json!({
            "vBounded": s.v_bounded,
            "atMostOneAboveN": s.at_most_one_above_n,
            "dimVBounded": s.dim_v_bounded,
        })
    });
    Ok(report(
        "classify",
        text,
        fields(json!({
            "name": model.name(),
            "verdict": verdict_json(&r),
            "formalDimension": r.formal_dimension,
            "exponents": {"even": r.exponents.even, "odd": r.exponents.odd},
            "hDims": r.h_dims,
            "h0Dims": r.h0_dims,
            "vDims": r.v_dims,
            "numerology": numerology,
            "structural": structural,
            "chi": chi_json(&r),
        })),
    ))
}

pub fn invariants(file: &Path, n: u32, bound: u32) -> Result<Report, String> {
    let model = load_model(file, n)?;
    let err = |e: sullivan::invariants::InvariantsError| format!("{}: {e}", file.display());
    let r = classify_ellipticity(&model, bound).map_err(err)?;
    let cat = cat_bounds(&model, n).map_err(err)?;
    let toomer = toomer_rank(&model, n.max(1), n).map_err(err)?;
    let series = loop_poincare_series(&model, n).map_err(err)?;
    let growth = growth_classify(&series.coefficients);
    let mut text = format!("invariants of {}\n", model.name());
    classify_text(&mut text, &r);
    let opt = |x: Option<u32>| x.map_or("-".to_string(), |v| v.to_string());
    let _ = writeln!(text, "cuplength: {}", cat.lower);
    let _ = writeln!(text, "cat upper bound: {}", opt(cat.upper));
    let _ = writeln!(
        text,
        "first injective word-length quotient: {}",
        opt(toomer.first_injective)
    );
    let _ = writeln!(text, "loop Poincaré series: {}", series.factor_string());
    let _ = writeln!(text, "coefficients: {}", join(&series.coefficients));
    let _ = writeln!(text, "growth: {growth}");
    Ok(report(
        "invariants",
        text,
        fields(json!({
            "name": model.name(),
            "verdict": verdict_json(&r),
            "formalDimension": r.formal_dimension,
            "exponents": {"even": r.exponents.even, "odd": r.exponents.odd},
            "numerology": r.numerology.as_ref().map(|x| json!(x.checks)),
            "chi": chi_json(&r),
            "cuplength": cat.lower,
            "catUpper": cat.upper,
            "toomerN": toomer.first_injective,
            "poincare": {
                "factors": series.factor_string(),
                "coeffs": series.coefficients,
                "growth": growth.to_string(),
            },
        })),
    ))
}

pub fn pl_verify(
    file: Option<&Path>,
    builtin: Option<&str>,
    trials: usize,
    cap: u32,
    seed: u64,
) -> Result<Report, String> {
    let k = complex_arg(file, builtin)?;
    let r = verify_stokes(&k, trials, cap, seed);
    let mut text = format!(
        "complex {}: {trials} trials, poly cap {cap}, seed {seed}\n",
        r.complex
    );
    let _ = writeln!(text, "stokes: {}/{} passed", r.passed(), r.trials.len());
    let _ = writeln!(text, "{:>6}  {:>6}  {:>6}", "degree", "trials", "passed");
    let top = k.top_dim();
    let mut by_degree = Vec::new();
    for d in 0..=top {
        let ts: Vec<_> = r.trials.iter().filter(|t| t.degree == d).collect();
        let passed = ts.iter().filter(|t| t.passed).count();
        let _ = writeln!(text, "{d:>6}  {:>6}  {passed:>6}", ts.len());
        by_degree.push(json!({"degree": d, "trials": ts.len(), "passed": passed}));
    }
    let _ = writeln!(
        text,
        "{:>6}  {:>8}  {:>13}",
        "degree", "expected", "integral rank"
    );
    let mut checks = Vec::new();
    for c in &r.cohomology {
        let _ = writeln!(
            text,
            "{:>6}  {:>8}  {:>13}",
            c.degree, c.expected, c.integral_rank
        );
        checks.push(
            json!({"degree": c.degree, "expected": c.expected, "integralRank": c.integral_rank}),
        );
    }
    let ok = r.all_passed();
    let _ = writeln!(text, "result: {}", if ok { "pass" } else { "FAIL" });
    let mut rep = report(
        "pl-verify",
        text,
        fields(json!({
            "complex": r.complex,
            "trials": r.trials.len(),
            "passed": r.passed(),
            "polyCap": cap,
            "seed": seed,
            "byDegree": by_degree,
            "cohomology": checks,
            "ok": ok,
        })),
    );
    rep.ok = ok;
    Ok(rep)
}

pub fn validate(file: &Path) -> Result<Report, String> {
    let text = read(file)?;
    if is_complex_text(&text) {
        let k = load_complex(file)?;
        let counts: Vec<usize> = (0..=k.top_dim())
            .map(|d| k.simplices_of_dim(d).len())
            .collect();
        return Ok(report(
            "validate",
            format!(
                "ok: scomplex {} ({} nondegenerate simplices, top dimension {})\n",
                k.name(),
                k.len(),
                k.top_dim()
            ),
            fields(
                json!({"kind": "scomplex", "name": k.name(), "simplices": counts, "valid": true}),
            ),
        ));
    }
    let c = load_cdga(file)?;
    Ok(report(
        "validate",
        format!(
            "ok: cdga {} ({} generators, {} relations{})\n",
            c.name(),
            c.gens().len(),
            c.relations().len(),
            if c.is_free() { ", free" } else { "" }
        ),
        fields(json!({
            "kind": "cdga",
            "name": c.name(),
            "generators": c.gens().len(),
            "relations": c.relations().len(),
            "free": c.is_free(),
            "valid": true,
        })),
    ))
}
