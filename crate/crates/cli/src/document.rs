//! The JSON file format for structures, tournaments and sign matrices.

use std::fs;
use std::io::{self, Read};
use std::path::Path;

use serde::{Deserialize, Serialize};
use spectramono_core::{
    ApproxComplex, GaussianRational, HermitianStructure, Scalar, SignMatrix, Tournament,
};
use thiserror::Error;

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Hermitian,
    Tournament,
    SignMatrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exact,
    Approx,
}

/// A matrix of scalar strings plus enough metadata to parse it.
///
/// Exact entries use the `a/b+c/di` grammar, approximate entries `re,im`,
/// sign matrices `-1`/`0`/`1` and tournaments `0`/`1` (row `i`, column `j`
/// is `1` when `i → j`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDocument {
    pub format_version: String,
    pub kind: Kind,
    pub n: usize,
    pub mode: Mode,
    pub entries: Vec<Vec<String>>,
}

/// A parsed document.
#[derive(Debug, Clone)]
pub enum Structure {
    Exact(HermitianStructure<GaussianRational>),
    Approx(HermitianStructure<ApproxComplex>),
    Tournament(Tournament),
    SignMatrix(SignMatrix),
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format_version {0:?}, expected \"1\"")]
    Version(String),
    #[error("{kind:?} documents must use exact mode")]
    ModeForKind { kind: Kind },
    #[error("declared n = {n} but entries have shape {rows}x{cols}")]
    Shape { n: usize, rows: usize, cols: usize },
    #[error("entry ({row}, {col}) = {value:?} is not a valid {expected}")]
    Entry { row: usize, col: usize, value: String, expected: &'static str },
    #[error("invalid structure: {0}")]
    Structure(#[from] spectramono_core::Error),
}

impl StructureDocument {
    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Reads a document from a file, or from standard input for `-`.
    pub fn read(path: &Path) -> Result<Self, DocumentError> {
        let io_err = |source| DocumentError::Io { path: path.display().to_string(), source };
        let text = if path.as_os_str() == "-" {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text).map_err(io_err)?;
            text
        } else {
            fs::read_to_string(path).map_err(io_err)?
        };
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("documents always serialize");
        text.push('\n');
        text
    }

    pub fn parse(&self) -> Result<Structure, DocumentError> {
        if self.format_version != FORMAT_VERSION {
            return Err(DocumentError::Version(self.format_version.clone()));
        }
        let n = self.n;
        let cols = self.entries.iter().map(Vec::len).find(|&len| len != n).unwrap_or(n);
        if self.entries.len() != n || cols != n {
            return Err(DocumentError::Shape { n, rows: self.entries.len(), cols });
        }
        if self.kind != Kind::Hermitian && self.mode != Mode::Exact {
            return Err(DocumentError::ModeForKind { kind: self.kind });
        }
        Ok(match (self.kind, self.mode) {
            (Kind::Hermitian, Mode::Exact) => {
                Structure::Exact(HermitianStructure::from_rows(self.cells("exact scalar", |s| s.parse().ok())?)?)
            }
            (Kind::Hermitian, Mode::Approx) => {
                Structure::Approx(HermitianStructure::from_rows(self.cells("approximate scalar", |s| s.parse().ok())?)?)
            }
            (Kind::Tournament, _) => {
                let arcs = self.cells("tournament entry (0 or 1)", |s| match s {
                    "0" => Some(false),
                    "1" => Some(true),
                    _ => None,
                })?;
                Structure::Tournament(Tournament::from_matrix(n, arcs.concat())?)
            }
            (Kind::SignMatrix, _) => {
                let rows = self.cells("sign entry (-1, 0 or 1)", |s| match s {
                    "-1" => Some(-1),
                    "0" => Some(0),
                    "1" => Some(1),
                    _ => None,
                })?;
                Structure::SignMatrix(SignMatrix::from_rows(rows)?)
            }
        })
    }

    fn cells<T>(
        &self,
        expected: &'static str,
        parse: impl Fn(&str) -> Option<T>,
    ) -> Result<Vec<Vec<T>>, DocumentError> {
        self.entries
            .iter()
            .enumerate()
            .map(|(row, cells)| {
                cells
                    .iter()
                    .enumerate()
                    .map(|(col, value)| {
                        parse(value).ok_or_else(|| DocumentError::Entry {
                            row,
                            col,
                            value: value.clone(),
                            expected,
                        })
                    })
                    .collect()
            })
            .collect()
    }
}

fn document(kind: Kind, mode: Mode, entries: Vec<Vec<String>>) -> StructureDocument {
    StructureDocument {
        format_version: FORMAT_VERSION.to_owned(),
        kind,
        n: entries.len(),
        mode,
        entries,
    }
}

fn hermitian_entries<S: Scalar>(g: &HermitianStructure<S>) -> Vec<Vec<String>> {
    g.rows().map(|row| row.iter().map(ToString::to_string).collect()).collect()
}

impl From<&HermitianStructure<GaussianRational>> for StructureDocument {
    fn from(g: &HermitianStructure<GaussianRational>) -> Self {
        document(Kind::Hermitian, Mode::Exact, hermitian_entries(g))
    }
}

impl From<&HermitianStructure<ApproxComplex>> for StructureDocument {
    fn from(g: &HermitianStructure<ApproxComplex>) -> Self {
        document(Kind::Hermitian, Mode::Approx, hermitian_entries(g))
    }
}

impl From<&Tournament> for StructureDocument {
    fn from(t: &Tournament) -> Self {
        let n = t.order();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| if t.dominates(i, j) { "1" } else { "0" }.to_owned()).collect())
            .collect();
        document(Kind::Tournament, Mode::Exact, entries)
    }
}

impl From<&SignMatrix> for StructureDocument {
    fn from(m: &SignMatrix) -> Self {
        let entries = m.rows().map(|row| row.iter().map(ToString::to_string).collect()).collect();
        document(Kind::SignMatrix, Mode::Exact, entries)
    }
}

impl From<&Structure> for StructureDocument {
    fn from(s: &Structure) -> Self {
        match s {
            Structure::Exact(g) => g.into(),
            Structure::Approx(g) => g.into(),
            Structure::Tournament(t) => t.into(),
            Structure::SignMatrix(m) => m.into(),
        }
    }
}
