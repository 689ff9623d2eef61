//! Bundled structure-constant tables and file lookup.
//!
//! A name is resolved first as a filesystem path, then inside the directory
//! named by [`LIBRARY_ENV`] (as `<name>` or `<name>.json`), and finally
//! against the tables compiled into the crate.

use std::path::{Path, PathBuf};

use super::file::AnyStructureConstants;
use super::StructureConstants;
use crate::error::{AlgebraError, Result};
use crate::ring::Rationals;

include!(concat!(env!("OUT_DIR"), "/library.rs"));

/// Environment variable naming a directory that overrides the bundled tables.
pub const LIBRARY_ENV: &str = "ULTRALIE_LIBRARY";

pub fn bundled_names() -> Vec<&'static str> {
    BUNDLED.iter().map(|(name, _)| *name).collect()
}

pub fn bundled_json(name: &str) -> Option<&'static str> {
    let name = name.strip_suffix(".json").unwrap_or(name);
    BUNDLED.iter().find(|(n, _)| *n == name).map(|(_, json)| *json)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| AlgebraError::InvalidArgument(format!("cannot read {}: {e}", path.display())))
}

/// Where a table came from, and its JSON text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolved {
    pub source: String,
    pub json: String,
}

pub fn resolve(spec: &str) -> Result<Resolved> {
    let direct = Path::new(spec);
    if direct.is_file() {
        return Ok(Resolved {
            source: spec.to_string(),
            json: read(direct)?,
        });
    }
    if let Some(dir) = std::env::var_os(LIBRARY_ENV) {
        let dir = PathBuf::from(dir);
        for candidate in [dir.join(spec), dir.join(format!("{spec}.json"))] {
            if candidate.is_file() {
                return Ok(Resolved {
                    source: candidate.display().to_string(),
                    json: read(&candidate)?,
                });
            }
        }
    }
    bundled_json(spec)
        .map(|json| Resolved {
            source: format!("bundled:{}", spec.trim_end_matches(".json")),
            json: json.to_string(),
        })
        .ok_or_else(|| {
            AlgebraError::InvalidArgument(format!(
                "no algebra file or bundled table named '{spec}' (bundled: {})",
                bundled_names().join(", ")
            ))
        })
}

pub fn load(spec: &str) -> Result<AnyStructureConstants> {
    AnyStructureConstants::from_json(&resolve(spec)?.json)
}

/// A bundled table known to be over Q.
pub fn load_bundled_rational(name: &str) -> Result<StructureConstants<Rationals>> {
    let json =
        bundled_json(name).ok_or_else(|| AlgebraError::InvalidArgument(format!("no bundled table named '{name}'")))?;
    match AnyStructureConstants::from_json(json)? {
        AnyStructureConstants::Rational(sc) => Ok(sc),
        _ => Err(AlgebraError::RingMismatch),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_bundled_table_loads() {
        for name in bundled_names() {
            let sc = load_bundled_rational(name).unwrap();
            assert!(sc.dim() >= 1, "{name}");
        }
        assert_eq!(load_bundled_rational("gl3").unwrap().dim(), 9);
        assert!(load("no-such-algebra").is_err());
    }
}
