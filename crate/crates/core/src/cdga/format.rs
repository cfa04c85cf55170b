//! Text format for CDGA presentations:
//!
//! ```text
//! cdga <name>
//! gen <ident> <degree>
//! diff <ident> = <poly>        # absent diff lines mean d(gen)=0
//! rel <degree> : <poly>        # optional relation
//! ```

use thiserror::Error;

use super::{Cdga, Presentation};
use crate::algebra::{
    is_identifier, parse_poly, AlgElement, Derivation, GeneratorSet, Homogeneity,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        line,
        message: message.into(),
    }
}

enum Pending {
    Diff {
        line: usize,
        gen: usize,
        poly: AlgElement,
    },
    Rel {
        line: usize,
        degree: u32,
        poly: AlgElement,
    },
}

/// Parses a presentation. The result is not validated; pass it to
/// [`Cdga::from_presentation`] (or [`super::validate`]).
pub fn parse_cdga(text: &str) -> Result<Presentation, FormatError> {
    let mut name: Option<String> = None;
    let mut gens: Vec<(String, u32)> = Vec::new();
    let mut pending: Vec<Pending> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (keyword, rest) = content
            .split_once(char::is_whitespace)
            .map(|(k, r)| (k, r.trim()))
            .unwrap_or((content, ""));
        match keyword {
            "cdga" => {
                if name.is_some() {
                    return Err(err(line, "duplicate 'cdga' header"));
                }
                if rest.is_empty() || rest.split_whitespace().count() != 1 {
                    return Err(err(line, "expected 'cdga <name>'"));
                }
                name = Some(rest.to_string());
            }
            "gen" => {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                let [ident, deg] = parts.as_slice() else {
                    return Err(err(line, "expected 'gen <ident> <degree>'"));
                };
                if !is_identifier(ident) {
                    return Err(err(line, format!("'{ident}' is not a valid identifier")));
                }
                let degree: u32 = deg
                    .parse()
                    .map_err(|_| err(line, format!("invalid degree '{deg}'")))?;
                if degree == 0 {
                    return Err(err(
                        line,
                        format!("generator '{ident}' must have positive degree"),
                    ));
                }
                if gens.iter().any(|(n, _)| n == ident) {
                    return Err(err(line, format!("duplicate generator '{ident}'")));
                }
                gens.push((ident.to_string(), degree));
            }
            "diff" => {
                let (lhs, rhs) = rest
                    .split_once('=')
                    .ok_or_else(|| err(line, "expected 'diff <ident> = <poly>'"))?;
                let ident = lhs.trim();
                let u = GeneratorSet::new(gens.clone())
                    .map_err(|e| err(line, e.to_string()))?
                    .into_universe();
                let gen = u
                    .position(ident)
                    .ok_or_else(|| err(line, format!("undeclared generator '{ident}'")))?;
                if pending
                    .iter()
                    .any(|p| matches!(p, Pending::Diff { gen: g, .. } if *g == gen))
                {
                    return Err(err(line, format!("second 'diff' for '{ident}'")));
                }
                let poly = parse_poly(&u, rhs).map_err(|e| err(line, e.to_string()))?;
                pending.push(Pending::Diff { line, gen, poly });
            }
            "rel" => {
                let (lhs, rhs) = rest
                    .split_once(':')
                    .ok_or_else(|| err(line, "expected 'rel <degree> : <poly>'"))?;
                let degree: u32 = lhs
                    .trim()
                    .parse()
                    .map_err(|_| err(line, format!("invalid degree '{}'", lhs.trim())))?;
                let u = GeneratorSet::new(gens.clone())
                    .map_err(|e| err(line, e.to_string()))?
                    .into_universe();
                let poly = parse_poly(&u, rhs).map_err(|e| err(line, e.to_string()))?;
                pending.push(Pending::Rel { line, degree, poly });
            }
            other => return Err(err(line, format!("unknown keyword '{other}'"))),
        }
    }
    let name = name.ok_or_else(|| err(1, "missing 'cdga <name>' header"))?;
    let u = GeneratorSet::new(gens)
        .map_err(|e| err(1, e.to_string()))?
        .into_universe();
    let mut d = Derivation::zero(&u, 1);
    let mut relations = Vec::new();
    for p in pending {
        match p {
            Pending::Diff { line, gen, poly } => {
                // declared-so-far universes are prefixes, so ordinals carry over
                let ids: Vec<usize> = (0..poly.gens().len()).collect();
                let poly = poly.remap_monotone(&u, &ids);
                d.set(gen, poly).map_err(|e| err(line, e.to_string()))?;
            }
            Pending::Rel { line, degree, poly } => {
                let ids: Vec<usize> = (0..poly.gens().len()).collect();
                let poly = poly.remap_monotone(&u, &ids);
                match poly.homogeneity() {
                    Homogeneity::Degree(k) if k == degree => relations.push(poly),
                    _ => {
                        return Err(err(
                            line,
                            format!("relation '{poly}' is not homogeneous of degree {degree}"),
                        ))
                    }
                }
            }
        }
    }
    Ok(Presentation {
        name,
        differential: d,
        relations,
        word_cap: None,
    })
}

pub(super) fn write_cdga(c: &Cdga) -> String {
    let mut out = format!("cdga {}\n", c.name());
    for g in c.gens().iter() {
        out.push_str(&format!("gen {} {}\n", g.name(), g.degree()));
    }
    for g in c.gens().iter() {
        let dg = c.d_of(g.ordinal());
        if !dg.is_zero() {
            out.push_str(&format!("diff {} = {}\n", g.name(), dg));
        }
    }
    for r in c.relations() {
        let deg = r.degree().ok().flatten().unwrap_or(0);
        out.push_str(&format!("rel {deg} : {r}\n"));
    }
    if let Some(cap) = c.word_cap() {
        out.push_str(&format!("# quotient by words of length > {cap}\n"));
    }
    out
}
