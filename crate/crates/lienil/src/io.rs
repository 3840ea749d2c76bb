//! Text input: field specs (`p^k`), algebra specs (`t:2`, `aff1`,
//! `file:path`, sums joined with `+`), and the algebra definition file
//! format.
//!
//! File format, one directive per line, `#` starts a comment:
//!
//! ```text
//! field 3^1
//! dim 2
//! labels x y          # optional, defaults to b1..bn
//! sc 1 2 2 1          # [b_i, b_j] += value * b_k, 1-based i j k,
//! ```                 #   value = canonical element index
//!
//! Only one orientation of each bracket needs to be given; the
//! antisymmetric counterpart is filled in automatically and conflicting
//! duplicates are rejected. The full set of axioms is validated on load.

use std::path::Path;
use std::sync::Arc;

use crate::algebra::{direct_sum, LieAlgebra};
use crate::constructions;
use crate::error::Error;
use crate::field::Field;

pub fn parse_field_spec(s: &str) -> Result<(u64, u32), Error> {
    let s = s.trim();
    let (p_str, k_str) = match s.split_once('^') {
        Some((p, k)) => (p, k),
        None => (s, "1"),
    };
    let p = p_str
        .parse::<u64>()
        .map_err(|_| Error::Parse(format!("bad field spec '{}': expected p^k", s)))?;
    let k = k_str
        .parse::<u32>()
        .map_err(|_| Error::Parse(format!("bad field spec '{}': expected p^k", s)))?;
    Ok((p, k))
}

pub fn parse_field(s: &str) -> Result<Arc<Field>, Error> {
    let (p, k) = parse_field_spec(s)?;
    Ok(Arc::new(Field::new(p, k)?))
}

/// Parse the definition file format described in the module docs.
pub fn algebra_from_str(text: &str) -> Result<LieAlgebra, Error> {
    let mut field: Option<Arc<Field>> = None;
    let mut dim: Option<usize> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut entries: Vec<(usize, usize, usize, u64)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let directive = tokens.next().unwrap();
        let err = |msg: &str| Error::Parse(format!("line {}: {}", lineno + 1, msg));
        match directive {
            "field" => {
                let spec = tokens.next().ok_or_else(|| err("missing field spec"))?;
                field = Some(parse_field(spec)?);
            }
            "dim" => {
                let n = tokens
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| err("bad dimension"))?;
                dim = Some(n);
            }
            "labels" => {
                labels = Some(tokens.map(str::to_string).collect());
            }
            "sc" => {
                let mut next = || {
                    tokens
                        .next()
                        .and_then(|t| t.parse::<u64>().ok())
                        .ok_or_else(|| err("sc needs: i j k value"))
                };
                let (i, j, k, v) = (next()?, next()?, next()?, next()?);
                if i == 0 || j == 0 || k == 0 {
                    return Err(err("sc indices are 1-based"));
                }
                entries.push((i as usize - 1, j as usize - 1, k as usize - 1, v));
            }
            other => return Err(err(&format!("unknown directive '{}'", other))),
        }
    }

    let field = field.ok_or_else(|| Error::Parse("missing 'field' directive".into()))?;
    let dim = dim.ok_or_else(|| Error::Parse("missing 'dim' directive".into()))?;
    let labels = match labels {
        Some(l) if l.len() == dim => l,
        Some(l) => {
            return Err(Error::Parse(format!("{} labels for dimension {}", l.len(), dim)))
        }
        None => (1..=dim).map(|i| format!("b{}", i)).collect(),
    };
    for &(i, j, k, v) in &entries {
        if i >= dim || j >= dim || k >= dim {
            return Err(Error::Parse(format!("sc index out of range for dimension {}", dim)));
        }
        if v >= field.q() {
            return Err(Error::Parse(format!("value {} is not a field element index", v)));
        }
    }
    LieAlgebra::from_brackets(field, labels, &entries)
}

pub fn algebra_from_file(path: impl AsRef<Path>) -> Result<LieAlgebra, Error> {
    algebra_from_str(&std::fs::read_to_string(path)?)
}

fn named_algebra(part: &str, field: Option<&Arc<Field>>) -> Result<LieAlgebra, Error> {
    if let Some(path) = part.strip_prefix("file:") {
        let l = algebra_from_file(path)?;
        if let Some(f) = field {
            if f.q() != l.field().q() {
                return Err(Error::MixedFields);
            }
        }
        return Ok(l);
    }
    let field = field
        .ok_or_else(|| Error::Parse(format!("algebra '{}' needs a field (use --field p^k)", part)))?
        .clone();
    let (name, arg) = match part.split_once(':') {
        Some((n, a)) => (n, Some(a)),
        None => (part, None),
    };
    let n = match arg {
        Some(a) => a
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| Error::Parse(format!("bad matrix size in '{}'", part)))?,
        None => 0,
    };
    let dim_of = |d: usize| {
        if d > 64 {
            Err(Error::Parse(format!("'{}' has dimension {}, far past any cap", part, d)))
        } else {
            Ok(())
        }
    };
    match name {
        "gl" if arg.is_some() => {
            dim_of(n * n)?;
            Ok(constructions::gl(n, field))
        }
        "t" if arg.is_some() => {
            dim_of(n * (n + 1) / 2)?;
            Ok(constructions::t(n, field))
        }
        "u" if arg.is_some() => {
            dim_of(n * (n - 1) / 2)?;
            Ok(constructions::u(n, field))
        }
        "sl" if arg.is_some() => {
            dim_of(n * n - 1)?;
            Ok(constructions::sl(n, field))
        }
        "aff1" if arg.is_none() => Ok(constructions::two_dim_nonabelian(field)),
        "ex3d" if arg.is_none() => Ok(constructions::three_dim_example(field)),
        _ => Err(Error::Parse(format!(
            "unknown algebra '{}' (expected gl:n, t:n, u:n, sl:n, aff1, ex3d, file:path)",
            part
        ))),
    }
}

/// `spec(+spec)*`: each part a named algebra or `file:path`; parts are
/// combined with direct sums, left to right.
pub fn parse_algebra_spec(spec: &str, field: Option<&Arc<Field>>) -> Result<LieAlgebra, Error> {
    let mut parts = spec.split('+').map(str::trim);
    let first = parts
        .next()
        .filter(|p| !p.is_empty())
        .ok_or_else(|| Error::Parse("empty algebra spec".into()))?;
    let mut acc = named_algebra(first, field)?;
    for part in parts {
        if part.is_empty() {
            return Err(Error::Parse("empty summand in algebra spec".into()));
        }
        acc = direct_sum(&acc, &named_algebra(part, field)?)?.algebra;
    }
    Ok(acc)
}
