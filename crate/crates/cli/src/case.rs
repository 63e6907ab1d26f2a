//! JSON case files.
//!
//! ```json
//! {
//!   "schema": 1,
//!   "f": {"fourier": [[1, 1.0, 0.0]]},
//!   "h": {"samples": [[0.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]]},
//!   "g": {"terms": [[0, 0, 4.0, 0.0]]},
//!   "quadrature": {"circle_nodes": 4096, "disk_radial": 128, "disk_angular": 256},
//!   "seed": 42
//! }
//! ```
//!
//! Fourier triples are `[mode, re, im]`, monomial quadruples `[a, b, re, im]`
//! for `c·z^a·z̄^b`. Every key is optional; omitted data is zero.

use std::path::Path;

use biharm_core::lipschitz::DEFAULT_SEED;
use biharm_core::quadrature::{DEFAULT_ANGULAR, DEFAULT_CIRCLE_NODES, DEFAULT_RADIAL};
use biharm_core::solver::{BoundaryData, Case, Monomial, Rules, SourceTerm, MAX_EXPONENT};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseFile {
    #[serde(default = "schema_version")]
    pub schema: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<BoundarySpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<BoundarySpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<SourceSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quadrature: Option<QuadratureSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

fn schema_version() -> u32 {
    SCHEMA_VERSION
}

/// Exactly one of `fourier` and `samples`; `n` sets the sample count for
/// Fourier input.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundarySpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fourier: Option<Vec<(i64, f64, f64)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<Vec<(f64, f64)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SourceSpec {
    #[serde(default)]
    pub terms: Vec<(i64, i64, f64, f64)>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadratureSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circle_nodes: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub disk_radial: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub disk_angular: Option<usize>,
}

/// A validated case with its quadrature sizes and seed.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadedCase {
    pub case: Case,
    pub rules: Rules,
    pub seed: u64,
}

pub fn parse_case(path: &Path) -> CliResult<LoadedCase> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    parse_case_str(&text, path)
}

pub fn parse_case_str(text: &str, origin: &Path) -> CliResult<LoadedCase> {
    let file: CaseFile = serde_json::from_str(text).map_err(|e| CliError::Parse {
        path: origin.to_path_buf(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.validate()
}

impl CaseFile {
    pub fn validate(&self) -> CliResult<LoadedCase> {
        if self.schema != SCHEMA_VERSION {
            return Err(CliError::invalid(
                "schema",
                format!("unsupported version {} (expected {SCHEMA_VERSION})", self.schema),
            ));
        }
        let f = boundary(self.f.as_ref(), "f")?;
        let h = boundary(self.h.as_ref(), "h")?;
        let g = source(self.g.as_ref())?;
        let q = self.quadrature.clone().unwrap_or_default();
        let rules = Rules::new(
            q.circle_nodes.unwrap_or(DEFAULT_CIRCLE_NODES),
            q.disk_radial.unwrap_or(DEFAULT_RADIAL),
            q.disk_angular.unwrap_or(DEFAULT_ANGULAR),
        )
        .map_err(|e| CliError::invalid("quadrature", e.to_string()))?;
        Ok(LoadedCase {
            case: Case::new(f, h, g),
            rules,
            seed: self.seed.unwrap_or(DEFAULT_SEED),
        })
    }

    /// The canonical file for a case: boundary data as samples, the source
    /// as monomials.
    pub fn from_loaded(loaded: &LoadedCase) -> Self {
        let samples = |d: &BoundaryData| BoundarySpec {
            samples: Some(d.samples().iter().map(|c| (c.re, c.im)).collect()),
            ..Default::default()
        };
        let rules = &loaded.rules;
        CaseFile {
            schema: SCHEMA_VERSION,
            f: Some(samples(&loaded.case.f)),
            h: Some(samples(&loaded.case.h)),
            g: Some(SourceSpec {
                terms: loaded
                    .case
                    .g
                    .terms()
                    .iter()
                    .map(|t| (t.a as i64, t.b as i64, t.coeff.re, t.coeff.im))
                    .collect(),
            }),
            quadrature: Some(QuadratureSpec {
                circle_nodes: Some(rules.circle.n_nodes()),
                disk_radial: Some(rules.disk_radial),
                disk_angular: Some(rules.disk_angular),
            }),
            seed: Some(loaded.seed),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("case files always serialize")
    }
}

fn boundary(spec: Option<&BoundarySpec>, field: &str) -> CliResult<BoundaryData> {
    let Some(spec) = spec else {
        return Ok(BoundaryData::zero());
    };
    let invalid = |e: biharm_core::Error| CliError::invalid(field, e.to_string());
    match (&spec.fourier, &spec.samples) {
        (Some(_), Some(_)) => Err(CliError::invalid(
            field,
            "give either \"fourier\" or \"samples\", not both",
        )),
        (None, None) => Ok(BoundaryData::zero()),
        (Some(terms), None) => {
            let terms: Vec<(i64, Complex64)> = terms.iter().map(|&(m, re, im)| (m, Complex64::new(re, im))).collect();
            BoundaryData::from_fourier(&terms, spec.n).map_err(invalid)
        }
        (None, Some(samples)) => {
            if spec.n.is_some_and(|n| n != samples.len()) {
                return Err(CliError::invalid(
                    field,
                    format!("\"n\" = {} disagrees with {} samples", spec.n.unwrap(), samples.len()),
                ));
            }
            BoundaryData::from_samples(samples.iter().map(|&(re, im)| Complex64::new(re, im)).collect())
                .map_err(invalid)
        }
    }
}

fn source(spec: Option<&SourceSpec>) -> CliResult<SourceTerm> {
    let Some(spec) = spec else {
        return Ok(SourceTerm::zero());
    };
    let mut terms = Vec::with_capacity(spec.terms.len());
    for (k, &(a, b, re, im)) in spec.terms.iter().enumerate() {
        let field = format!("g.terms[{k}]");
        if a < 0 || b < 0 {
            return Err(CliError::invalid(field, "negative exponent"));
        }
        if a > MAX_EXPONENT as i64 || b > MAX_EXPONENT as i64 {
            return Err(CliError::invalid(field, format!("exponent above {MAX_EXPONENT}")));
        }
        terms.push(Monomial {
            a: a as u32,
            b: b as u32,
            coeff: Complex64::new(re, im),
        });
    }
    SourceTerm::new(terms).map_err(|e| CliError::invalid("g", e.to_string()))
}
