//! Instance files: one JSON object bundling the data for a single example.
//!
//! ```json
//! {"schema": 1, "name": "s1_k1", "dimension": 1, "truncation": 30,
//!  "morse": {...}, "orbits": {...}, "cover": {...},
//!  "presentation": {...}, "novikov": {...}, "complex": {...}}
//! ```
//!
//! Every block is optional; unknown keys are rejected.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complexes::BasedComplex;
use crate::cover::{CoverComplex, PresentationMatrix};
use crate::morse::MorseData;
use crate::novikov::NovikovBlock;
use crate::orbits::OrbitSet;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("cannot read the file: {err}")]
    Io { path: String, err: std::io::Error },
    #[error("invalid instance JSON: {0}")]
    Json(serde_json::Error),
    #[error("unsupported schema version {0}, expected {SCHEMA_VERSION}")]
    Schema(u32),
    #[error("morse block has dimension {morse} but the instance says {instance}")]
    Dimension { morse: usize, instance: usize },
    #[error("truncation order must be at least 2, got {0}")]
    Truncation(usize),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub schema: u32,
    pub name: String,
    pub dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub morse: Option<MorseData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbits: Option<OrbitSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cover: Option<CoverComplex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub presentation: Option<PresentationMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub novikov: Option<NovikovBlock>,
    /// A free-standing based complex, for plain torsion computations.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complex: Option<BasedComplex>,
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self, InstanceError> {
        let f: InstanceFile = serde_json::from_str(text).map_err(InstanceError::Json)?;
        if f.schema != SCHEMA_VERSION {
            return Err(InstanceError::Schema(f.schema));
        }
        if let Some(m) = &f.morse {
            if m.dimension() != f.dimension {
                return Err(InstanceError::Dimension {
                    morse: m.dimension(),
                    instance: f.dimension,
                });
            }
        }
        if let Some(n) = f.truncation.filter(|&n| n < 2) {
            return Err(InstanceError::Truncation(n));
        }
        Ok(f)
    }

    pub fn load(path: &Path) -> Result<Self, InstanceError> {
        let text = std::fs::read_to_string(path).map_err(|err| InstanceError::Io {
            path: path.display().to_string(),
            err,
        })?;
        Self::parse(&text)
    }

    /// Truncation order: the file's own, else `default`.
    pub fn order(&self, default: usize) -> usize {
        self.truncation.unwrap_or(default)
    }
}
