//! Inline scaling and relabeling syntax, e.g. `J=0,P=1,K=1,Hbar=0,M=2`.
//!
//! A name that is a generator stands for itself. Otherwise it is a group:
//! lowercased, it matches the generator of that exact name and every
//! generator made of the name, at most one more letter and a numeric index
//! (`P` covers `p1 p2 p3`, `K` covers `kp1` or `kg1`, `Hbar` covers `hbar`).
//! `all` covers every generator.

use std::collections::{BTreeMap, HashMap};

use super::{ContractionError, GradedScaling};
use crate::algebra::LieAlgebra;

fn in_group(stem: &str, generator: &str) -> bool {
    if generator == stem {
        return true;
    }
    let Some(rest) = generator.strip_prefix(stem) else {
        return false;
    };
    let digits = rest.trim_start_matches(|c: char| c.is_ascii_lowercase());
    rest.len() - digits.len() <= 1
        && !digits.is_empty()
        && digits.chars().all(|c| c.is_ascii_digit())
}

/// Generators denoted by `name` in `algebra`.
pub fn expand_group(algebra: &LieAlgebra, name: &str) -> Result<Vec<String>, ContractionError> {
    if algebra.index_of(name).is_some() {
        return Ok(vec![name.to_string()]);
    }
    let stem = name.to_lowercase();
    let hits: Vec<String> = algebra
        .generators()
        .iter()
        .filter(|g| stem == "all" || in_group(&stem, g))
        .cloned()
        .collect();
    if hits.is_empty() {
        return Err(ContractionError::UnknownGenerator(name.to_string()));
    }
    Ok(hits)
}

fn pairs(spec: &str) -> Result<Vec<(&str, &str)>, ContractionError> {
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| {
            item.split_once('=')
                .map(|(a, b)| (a.trim(), b.trim()))
                .filter(|(a, b)| !a.is_empty() && !b.is_empty())
                .ok_or_else(|| ContractionError::Parse {
                    input: item.to_string(),
                    reason: "expected NAME=VALUE".to_string(),
                })
        })
        .collect()
}

/// Parses `NAME=int,...`; later items override earlier ones.
pub fn parse_scale(spec: &str, algebra: &LieAlgebra) -> Result<GradedScaling, ContractionError> {
    let mut exponents = BTreeMap::new();
    for (name, value) in pairs(spec)? {
        let n: i64 = value.parse().map_err(|_| ContractionError::Parse {
            input: format!("{name}={value}"),
            reason: "exponent must be an integer".to_string(),
        })?;
        for g in expand_group(algebra, name)? {
            exponents.insert(g, n);
        }
    }
    Ok(GradedScaling::from_map(exponents))
}

/// Parses `FROM=TO,...` into a generator renaming from `source` to
/// `target` names. Group pairs keep the index: `KP=KG` sends `kp2` to `kg2`.
pub fn parse_relabel(
    spec: &str,
    source: &LieAlgebra,
) -> Result<HashMap<String, String>, ContractionError> {
    let mut map = HashMap::new();
    for (from, to) in pairs(spec)? {
        if source.index_of(from).is_some() {
            map.insert(from.to_string(), to.to_string());
            continue;
        }
        let (fs, ts) = (from.to_lowercase(), to.to_lowercase());
        for g in expand_group(source, from)? {
            let suffix = g.strip_prefix(fs.as_str()).unwrap_or("");
            map.insert(g.clone(), format!("{ts}{suffix}"));
        }
    }
    Ok(map)
}
