//! Reading frames, vectors, sampling configs and filter files.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use framekit::io::{parse_matrix_auto, MatrixFile};
use framekit::{Frame64, Matrix64, C64};
use serde::Deserialize;

use crate::CliError;

pub(crate) fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        detail: e.to_string(),
    })
}

pub(crate) fn read_matrix_file(path: &Path) -> Result<MatrixFile, CliError> {
    let text = read_text(path)?;
    Ok(parse_matrix_auto(&path.to_string_lossy(), &text)?)
}

pub(crate) fn read_matrix(path: &Path) -> Result<Matrix64, CliError> {
    Ok(read_matrix_file(path)?.to_matrix()?)
}

pub(crate) fn read_vector(path: &Path) -> Result<Vec<C64>, CliError> {
    Ok(read_matrix_file(path)?.to_vector()?)
}

/// Frame vectors are the rows of the file.
pub(crate) fn read_frame(path: &Path) -> Result<Frame64, CliError> {
    Ok(Frame64::from_vector_rows(read_matrix(path)?)?)
}

/// Sampling experiment config; every field is optional and may be
/// overridden from the command line.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SamplingConfig {
    pub n: Option<usize>,
    pub band: Option<usize>,
    pub period: Option<usize>,
    pub sigma2: Option<f64>,
    pub trials: Option<usize>,
    pub seed: Option<u64>,
    pub filter: Option<String>,
    pub noise: Option<String>,
}

/// Don't-care filter values: `{"dontcare": [{"bin": 5, "re": 2.0, "im": 0.0}, ...]}`.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FilterFile {
    pub dontcare: Vec<FilterEntry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FilterEntry {
    pub bin: i64,
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

pub(crate) fn read_config(path: &Path) -> Result<SamplingConfig, CliError> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| framekit::Error::Parse(format!("config {}: {e}", path.display())).into())
}

pub(crate) fn read_filter_file(path: &Path) -> Result<BTreeMap<i64, C64>, CliError> {
    let text = read_text(path)?;
    let f: FilterFile =
        serde_json::from_str(&text).map_err(|e| framekit::Error::Parse(format!("filter {}: {e}", path.display())))?;
    let mut map = BTreeMap::new();
    for entry in f.dontcare {
        if !entry.re.is_finite() || !entry.im.is_finite() {
            return Err(framekit::Error::NonFinite("filter value").into());
        }
        if map.insert(entry.bin, C64::new(entry.re, entry.im)).is_some() {
            return Err(framekit::Error::Parse(format!("filter {}: bin {} listed twice", path.display(), entry.bin)).into());
        }
    }
    Ok(map)
}

/// Relative paths inside a config file are taken relative to that file.
pub(crate) fn resolve_relative(base: Option<&Path>, name: &str) -> PathBuf {
    let p = PathBuf::from(name);
    match base.and_then(Path::parent) {
        Some(dir) if p.is_relative() => dir.join(p),
        _ => p,
    }
}

pub(crate) fn vector_json(v: &[C64]) -> serde_json::Value {
    serde_json::Value::Array(v.iter().map(|z| serde_json::json!([z.re, z.im])).collect())
}
