use std::fs;
use std::path::Path;

use matroid_core::spec::MatroidSpec;

use crate::{CliError, Result};

/// A parsed spec with a stable identifier.
#[derive(Debug, Clone)]
pub struct Input {
    pub id: String,
    pub spec: MatroidSpec,
}

/// Parse `text` as one spec, a JSON array of specs, or one spec per line.
pub fn parse_specs(text: &str) -> std::result::Result<Vec<MatroidSpec>, String> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    if trimmed.starts_with('[') {
        return serde_json::from_str(trimmed).map_err(|e| e.to_string());
    }
    if let Ok(one) = serde_json::from_str::<MatroidSpec>(trimmed) {
        return Ok(vec![one]);
    }
    trimmed
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| serde_json::from_str(l).map_err(|e| format!("line {}: {e}", i + 1)))
        .collect()
}

pub fn load_inputs(paths: &[impl AsRef<Path>]) -> Result<Vec<Input>> {
    let mut out = Vec::new();
    for path in paths {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| CliError::Parse {
            path: path.to_path_buf(),
            message: e.to_string(),
        })?;
        let specs = parse_specs(&text).map_err(|message| CliError::Parse {
            path: path.to_path_buf(),
            message,
        })?;
        let stem = path.file_stem().map_or("input".into(), |s| s.to_string_lossy().into_owned());
        let many = specs.len() > 1;
        for (i, spec) in specs.into_iter().enumerate() {
            let id = match (&spec.name, many) {
                (Some(name), _) => name.clone(),
                (None, false) => stem.clone(),
                (None, true) => format!("{stem}#{i}"),
            };
            out.push(Input { id, spec });
        }
    }
    Ok(out)
}
