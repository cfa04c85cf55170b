#![allow(dead_code)]

use std::path::PathBuf;

use sullivan::algebra::{basis_of_degree, AlgElement};
use sullivan::cdga::{parse_cdga, Cdga};
use sullivan::Rational;

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn fixture(name: &str) -> Cdga {
    let text = std::fs::read_to_string(fixtures_dir().join(format!("{name}.cdga")))
        .unwrap_or_else(|e| panic!("{name}: {e}"));
    Cdga::from_presentation(parse_cdga(&text).unwrap()).unwrap()
}

/// Every `.cdga` fixture, sorted by file name.
pub fn all_fixtures() -> Vec<Cdga> {
    let mut names: Vec<String> = std::fs::read_dir(fixtures_dir())
        .unwrap()
        .filter_map(|e| {
            let p = e.unwrap().path();
            (p.extension()? == "cdga").then(|| p.file_stem()?.to_str().map(String::from))?
        })
        .collect();
    names.sort();
    names.iter().map(|n| fixture(n)).collect()
}

/// Homogeneous element of degree `deg` from (monomial index, coefficient)
/// picks; zero when the degree is empty.
pub fn element(c: &Cdga, deg: u32, picks: &[(usize, i64)]) -> AlgElement {
    let basis = basis_of_degree(c.gens(), deg, None);
    let mut out = AlgElement::zero(c.universe());
    if basis.is_empty() {
        return out;
    }
    for &(i, k) in picks {
        out += &AlgElement::from_monomial(
            c.universe(),
            basis[i % basis.len()].clone(),
            Rational::from_integer(k.into()),
        );
    }
    c.reduce(&out)
}
