//! Solution fields on disk.

use std::io::Write;
use std::path::Path;

use biharm_core::solver::SolutionField;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

pub const FIELD_FORMAT: &str = "biharm-field";
pub const FIELD_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FieldHeader {
    pub format: String,
    pub version: u32,
    pub tool_version: String,
    pub fingerprint: String,
    pub n_r: usize,
    pub n_theta: usize,
    pub r_max: f64,
    pub gradient: bool,
    /// `[node index, reason]` for every node without a value.
    pub holes: Vec<(usize, String)>,
}

/// Rows are `[r, θ, re Φ, im Φ]`, extended by `re Φ_z, im Φ_z, re Φ_z̄,
/// im Φ_z̄` when gradients are present; holes carry nulls.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FieldFile {
    pub header: FieldHeader,
    pub rows: Vec<Vec<Option<f64>>>,
}

impl FieldFile {
    pub fn from_field(field: &SolutionField) -> Self {
        let grid = &field.grid;
        let points = grid.points();
        let rows = points
            .iter()
            .enumerate()
            .map(|(idx, &(r, t))| {
                let mut row = vec![Some(r), Some(t)];
                let v = field.values[idx];
                row.extend([v.map(|v| v.re), v.map(|v| v.im)]);
                if let Some(gs) = &field.gradients {
                    let g = gs[idx];
                    row.extend([
                        g.map(|g| g.d_z.re),
                        g.map(|g| g.d_z.im),
                        g.map(|g| g.d_zbar.re),
                        g.map(|g| g.d_zbar.im),
                    ]);
                }
                row
            })
            .collect();
        FieldFile {
            header: FieldHeader {
                format: FIELD_FORMAT.into(),
                version: FIELD_VERSION,
                tool_version: env!("CARGO_PKG_VERSION").into(),
                fingerprint: field.fingerprint.clone(),
                n_r: grid.n_r,
                n_theta: grid.n_theta,
                r_max: grid.r_max,
                gradient: field.gradients.is_some(),
                holes: field.failures.clone(),
            },
            rows,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("field files always serialize");
        s.push('\n');
        s
    }

    pub fn read(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
            path: path.to_path_buf(),
            source,
        })?;
        serde_json::from_str(&text).map_err(|e| CliError::Parse {
            path: path.to_path_buf(),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }
}

/// Writes through a temporary file in the target directory and renames it
/// into place, so a failed write leaves nothing behind.
pub fn write_atomic(path: &Path, contents: &str) -> CliResult<()> {
    let err = |source| CliError::Write {
        path: path.to_path_buf(),
        source,
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(err)?;
    tmp.write_all(contents.as_bytes()).map_err(err)?;
    tmp.as_file().sync_all().map_err(err)?;
    tmp.persist(path).map_err(|e| err(e.error))?;
    Ok(())
}
