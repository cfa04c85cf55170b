use std::path::Path;
use std::sync::Arc;

use sullivan::cdga::{parse_cdga, Cdga};
use sullivan::forms::{builtin_complex, parse_complex, FormsError, SimplicialComplexFin};
use sullivan::sullivan::{check_minimal_sullivan, minimal_model};

pub fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn load_cdga(path: &Path) -> Result<Cdga, String> {
    let text = read(path)?;
    let p =
        parse_cdga(&text).map_err(|e| format!("{}:{}: {}", path.display(), e.line, e.message))?;
    Cdga::from_presentation(p).map_err(|e| format!("{}: {e}", path.display()))
}

/// The input itself when it is a minimal Sullivan algebra, otherwise its
/// minimal model certified through degree `n`.
pub fn load_model(path: &Path, n: u32) -> Result<Cdga, String> {
    let c = load_cdga(path)?;
    if c.is_free() && check_minimal_sullivan(&c).unwrap_or(false) {
        return Ok(c);
    }
    minimal_model(&c, n.max(2))
        .map(|r| r.model)
        .map_err(|e| format!("{}: {e}", path.display()))
}

pub fn load_complex(path: &Path) -> Result<SimplicialComplexFin, String> {
    let text = read(path)?;
    parse_complex(&text).map_err(|e| match e {
        FormsError::Format { line, message } => format!("{}:{line}: {message}", path.display()),
        e => format!("{}: {e}", path.display()),
    })
}

pub fn complex_arg(
    file: Option<&Path>,
    builtin: Option<&str>,
) -> Result<Arc<SimplicialComplexFin>, String> {
    match (file, builtin) {
        (_, Some(name)) => builtin_complex(name)
            .map(Arc::new)
            .ok_or_else(|| format!("unknown built-in complex '{name}' (delta2, delta3, bddelta3)")),
        (Some(path), None) => load_complex(path).map(Arc::new),
        (None, None) => Err("no complex given".into()),
    }
}

/// Whether a file holds a simplicial set rather than a CDGA.
pub fn is_complex_text(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("scomplex"))
}
