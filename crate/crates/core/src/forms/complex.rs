use std::collections::HashMap;
use std::fmt;

use super::FormsError;

/// A simplex written as `s_{w_1} s_{w_2} ⋯ s_{w_r} τ` with `τ` nondegenerate;
/// the word is outermost first and kept in the normal form
/// `w_1 > w_2 > ⋯ > w_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplexRef {
    pub target: usize,
    pub word: Vec<usize>,
}

impl SimplexRef {
    pub fn nondegenerate(target: usize) -> Self {
        SimplexRef {
            target,
            word: Vec::new(),
        }
    }

    pub fn is_degenerate(&self) -> bool {
        !self.word.is_empty()
    }
}

/// Brings a degeneracy word (outermost first) to strictly decreasing form
/// using `s_i s_j = s_{j+1} s_i` for `i ≤ j`.
pub fn normalize_word(word: &[usize]) -> Vec<usize> {
    let mut w = word.to_vec();
    loop {
        let Some(p) = (0..w.len().saturating_sub(1)).find(|&p| w[p] <= w[p + 1]) else {
            return w;
        };
        let (i, j) = (w[p], w[p + 1]);
        w[p] = j + 1;
        w[p + 1] = i;
    }
}

/// A finite simplicial set given by its nondegenerate simplices and their
/// faces (each a degeneracy of a nondegenerate simplex).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplexFin {
    name: String,
    ids: Vec<String>,
    dims: Vec<usize>,
    /// `faces[σ][i] = d_i σ`; empty for vertices.
    faces: Vec<Vec<SimplexRef>>,
}

impl SimplicialComplexFin {
    /// Validates dimensions, face completeness and the simplicial identities
    /// `d_i d_j = d_{j−1} d_i` (`i < j`).
    pub fn new(
        name: impl Into<String>,
        simplices: Vec<(String, usize)>,
        faces: Vec<Vec<SimplexRef>>,
    ) -> Result<Self, FormsError> {
        let mut seen = HashMap::new();
        for (k, (id, _)) in simplices.iter().enumerate() {
            if seen.insert(id.clone(), k).is_some() {
                return Err(FormsError::Invalid(format!("duplicate simplex '{id}'")));
            }
        }
        if faces.len() != simplices.len() {
            return Err(FormsError::Invalid(
                "one face list per simplex required".into(),
            ));
        }
        let (ids, dims): (Vec<String>, Vec<usize>) = simplices.into_iter().unzip();
        let faces = faces
            .into_iter()
            .map(|fs| {
                fs.into_iter()
                    .map(|f| SimplexRef {
                        target: f.target,
                        word: normalize_word(&f.word),
                    })
                    .collect()
            })
            .collect();
        let k = SimplicialComplexFin {
            name: name.into(),
            ids,
            dims,
            faces,
        };
        k.validate()?;
        Ok(k)
    }

    fn validate(&self) -> Result<(), FormsError> {
        for s in 0..self.len() {
            let n = self.dims[s];
            let expected = if n == 0 { 0 } else { n + 1 };
            if self.faces[s].len() != expected {
                return Err(FormsError::Invalid(format!(
                    "simplex '{}' of dimension {n} needs {expected} faces, has {}",
                    self.ids[s],
                    self.faces[s].len()
                )));
            }
            for (i, f) in self.faces[s].iter().enumerate() {
                if f.target >= self.len() {
                    return Err(FormsError::Invalid(format!(
                        "face {i} of '{}' points to an unknown simplex",
                        self.ids[s]
                    )));
                }
                if self.dim_of(f) != Some(n - 1) {
                    return Err(FormsError::Invalid(format!(
                        "face {i} of '{}' has the wrong dimension",
                        self.ids[s]
                    )));
                }
            }
        }
        for s in 0..self.len() {
            let n = self.dims[s];
            if n < 2 {
                continue;
            }
            let x = SimplexRef::nondegenerate(s);
            for j in 1..=n {
                for i in 0..j {
                    let lhs = self.face(&self.face(&x, j)?, i)?;
                    let rhs = self.face(&self.face(&x, i)?, j - 1)?;
                    if lhs != rhs {
                        return Err(FormsError::Invalid(format!(
                            "d_{i} d_{j} != d_{} d_{i} on '{}'",
                            j - 1,
                            self.ids[s]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Dimension of `s_w τ`, or `None` when the word is not applicable.
    fn dim_of(&self, r: &SimplexRef) -> Option<usize> {
        let mut d = self.dims[r.target];
        for &j in r.word.iter().rev() {
            if j > d {
                return None;
            }
            d += 1;
        }
        Some(d)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn id(&self, s: usize) -> &str {
        &self.ids[s]
    }

    pub fn position(&self, id: &str) -> Option<usize> {
        self.ids.iter().position(|x| x == id)
    }

    pub fn dim(&self, s: usize) -> usize {
        self.dims[s]
    }

    pub fn top_dim(&self) -> usize {
        self.dims.iter().copied().max().unwrap_or(0)
    }

    /// Nondegenerate simplices of dimension `k`, in declaration order.
    pub fn simplices_of_dim(&self, k: usize) -> Vec<usize> {
        (0..self.len()).filter(|&s| self.dims[s] == k).collect()
    }

    /// `d_i σ` for a nondegenerate `σ` of positive dimension.
    pub fn face_of(&self, s: usize, i: usize) -> &SimplexRef {
        &self.faces[s][i]
    }

    /// `d_i` of an arbitrary simplex, pushed through its degeneracies by the
    /// simplicial identities.
    pub fn face(&self, x: &SimplexRef, i: usize) -> Result<SimplexRef, FormsError> {
        let dim = self.dim_of(x).expect("valid simplex reference");
        if dim == 0 || i > dim {
            return Err(FormsError::IndexOutOfRange { index: i, dim });
        }
        let Some((&j, rest)) = x.word.split_first() else {
            return Ok(self.faces[x.target][i].clone());
        };
        let inner = SimplexRef {
            target: x.target,
            word: rest.to_vec(),
        };
        let (prefix, r) = if i < j {
            (Some(j - 1), self.face(&inner, i)?)
        } else if i == j || i == j + 1 {
            (None, inner)
        } else {
            (Some(j), self.face(&inner, i - 1)?)
        };
        let mut word: Vec<usize> = prefix.into_iter().collect();
        word.extend(r.word);
        Ok(SimplexRef {
            target: r.target,
            word: normalize_word(&word),
        })
    }

    /// Simplicial-set text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("scomplex {}\n", self.name);
        for s in 0..self.len() {
            out.push_str(&format!("simplex {} {}\n", self.ids[s], self.dims[s]));
        }
        for s in 0..self.len() {
            for (i, f) in self.faces[s].iter().enumerate() {
                out.push_str(&format!(
                    "face {} {i} = {}",
                    self.ids[s], self.ids[f.target]
                ));
                for j in &f.word {
                    out.push_str(&format!(" s{j}"));
                }
                out.push('\n');
            }
        }
        out
    }
}

impl fmt::Display for SimplicialComplexFin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

fn ferr(line: usize, message: impl Into<String>) -> FormsError {
    FormsError::Format {
        line,
        message: message.into(),
    }
}

/// Parses
///
/// ```text
/// scomplex <name>
/// simplex <id> <dim>
/// face <id> <i> = <target-id> [s<j> ...]   # degeneracy word, outermost first
/// ```
pub fn parse_complex(text: &str) -> Result<SimplicialComplexFin, FormsError> {
    let mut name = None;
    let mut simplices: Vec<(String, usize)> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut faces: Vec<Vec<Option<SimplexRef>>> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let words: Vec<&str> = content.split_whitespace().collect();
        match words[0] {
            "scomplex" => {
                if words.len() != 2 || name.is_some() {
                    return Err(ferr(line, "expected a single 'scomplex <name>' header"));
                }
                name = Some(words[1].to_string());
            }
            "simplex" => {
                let [_, id, dim] = words.as_slice() else {
                    return Err(ferr(line, "expected 'simplex <id> <dim>'"));
                };
                let dim: usize = dim
                    .parse()
                    .map_err(|_| ferr(line, format!("invalid dimension '{dim}'")))?;
                if index.insert(id.to_string(), simplices.len()).is_some() {
                    return Err(ferr(line, format!("duplicate simplex '{id}'")));
                }
                simplices.push((id.to_string(), dim));
                faces.push(vec![None; if dim == 0 { 0 } else { dim + 1 }]);
            }
            "face" => {
                if words.len() < 5 || words[3] != "=" {
                    return Err(ferr(line, "expected 'face <id> <i> = <target> [s<j> ...]'"));
                }
                let s = *index
                    .get(words[1])
                    .ok_or_else(|| ferr(line, format!("unknown simplex '{}'", words[1])))?;
                let i: usize = words[2]
                    .parse()
                    .map_err(|_| ferr(line, format!("invalid face index '{}'", words[2])))?;
                let target = *index
                    .get(words[4])
                    .ok_or_else(|| ferr(line, format!("unknown simplex '{}'", words[4])))?;
                let word = words[5..]
                    .iter()
                    .map(|w| {
                        w.strip_prefix('s')
                            .and_then(|j| j.parse::<usize>().ok())
                            .ok_or_else(|| ferr(line, format!("invalid degeneracy '{w}'")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let slot = faces[s]
                    .get_mut(i)
                    .ok_or_else(|| ferr(line, format!("face index {i} out of range")))?;
                if slot.is_some() {
                    return Err(ferr(
                        line,
                        format!("face {i} of '{}' given twice", words[1]),
                    ));
                }
                *slot = Some(SimplexRef { target, word });
            }
            other => return Err(ferr(line, format!("unknown keyword '{other}'"))),
        }
    }
    let name = name.ok_or_else(|| ferr(1, "missing 'scomplex <name>' header"))?;
    let faces = faces
        .into_iter()
        .enumerate()
        .map(|(s, fs)| {
            fs.into_iter()
                .enumerate()
                .map(|(i, f)| {
                    f.ok_or_else(|| {
                        FormsError::Invalid(format!("face {i} of '{}' is missing", simplices[s].0))
                    })
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    SimplicialComplexFin::new(name, simplices, faces)
}

/// Subcomplex of the standard `n`-simplex made of the faces with vertex
/// sets satisfying `keep`. Simplex ids list the vertices, e.g. `v012`.
fn standard(name: &str, n: usize, keep: impl Fn(&[usize]) -> bool) -> SimplicialComplexFin {
    let mut sets: Vec<Vec<usize>> = (1u32..(1 << (n + 1)))
        .map(|mask| {
            (0..=n)
                .filter(|&v| mask & (1 << v) != 0)
                .collect::<Vec<_>>()
        })
        .filter(|s| keep(s))
        .collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    let id = |s: &[usize]| format!("v{}", s.iter().map(|v| v.to_string()).collect::<String>());
    let pos: HashMap<Vec<usize>, usize> = sets
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();
    let simplices = sets.iter().map(|s| (id(s), s.len() - 1)).collect();
    let faces = sets
        .iter()
        .map(|s| {
            if s.len() == 1 {
                return Vec::new();
            }
            (0..s.len())
                .map(|i| {
                    let mut f = s.clone();
                    f.remove(i);
                    SimplexRef::nondegenerate(pos[&f])
                })
                .collect()
        })
        .collect();
    SimplicialComplexFin::new(name, simplices, faces).expect("standard simplices are valid")
}

/// The standard `n`-simplex with all its faces.
pub fn standard_simplex(n: usize) -> SimplicialComplexFin {
    standard(&format!("delta{n}"), n, |_| true)
}

/// The boundary of the standard `n`-simplex.
pub fn simplex_boundary(n: usize) -> SimplicialComplexFin {
    standard(&format!("bddelta{n}"), n, |s| s.len() <= n)
}

/// Built-in complexes: `delta2`, `delta3`, `bddelta3`.
pub fn builtin_complex(name: &str) -> Option<SimplicialComplexFin> {
    match name {
        "delta2" => Some(standard_simplex(2)),
        "delta3" => Some(standard_simplex(3)),
        "bddelta3" => Some(simplex_boundary(3)),
        _ => None,
    }
}
