//! Collection manifests and raw document loading.
//!
//! A manifest is a UTF-8 text file with one document per line:
//!
//! ```text
//! # doc_id <TAB> url <TAB> path
//! d1 <TAB> www.microsoft.com/athome/setup/optimize.aspx <TAB> pages/d1.html
//! ```
//!
//! Blank lines and lines starting with `#` are skipped. Relative paths are
//! resolved against the directory containing the manifest.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("cannot read manifest {path}: {source}")]
    ManifestUnreadable {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("manifest line {line}: expected 3 TAB-separated fields, found {found}")]
    FieldCount { line: usize, found: usize },
    #[error("manifest line {line}: empty {field}")]
    EmptyField { line: usize, field: &'static str },
    #[error("manifest line {line}: duplicate doc_id {doc_id:?} (first seen on line {first})")]
    DuplicateId { line: usize, first: usize, doc_id: String },
    #[error("cannot read document {doc_id:?} at {path}: {source}")]
    Unreadable {
        doc_id: String,
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub doc_id: String,
    pub url: String,
    /// Location of the stored HTML, already resolved against the manifest directory.
    pub path: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawDocument {
    pub entry: ManifestEntry,
    pub body: String,
}

impl RawDocument {
    /// Builds a document directly from in-memory HTML, bypassing the filesystem.
    pub fn from_html(doc_id: impl Into<String>, url: impl Into<String>, html: impl Into<String>) -> Self {
        RawDocument {
            entry: ManifestEntry {
                doc_id: doc_id.into(),
                url: url.into(),
                path: PathBuf::new(),
            },
            body: html.into(),
        }
    }
}

pub fn load_manifest(path: impl AsRef<Path>) -> Result<Vec<ManifestEntry>, IngestError> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(|source| IngestError::ManifestUnreadable {
        path: path.to_path_buf(),
        source,
    })?;
    let text = String::from_utf8(bytes).map_err(|e| IngestError::ManifestUnreadable {
        path: path.to_path_buf(),
        source: std::io::Error::new(std::io::ErrorKind::InvalidData, e),
    })?;
    let base = path.parent().unwrap_or_else(|| Path::new(""));
    parse_manifest(&text, base)
}

/// Parses manifest text, resolving relative document paths against `base`.
pub fn parse_manifest(text: &str, base: &Path) -> Result<Vec<ManifestEntry>, IngestError> {
    let mut entries = Vec::new();
    let mut seen: HashMap<&str, usize> = HashMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 3 {
            return Err(IngestError::FieldCount {
                line: line_no,
                found: fields.len(),
            });
        }
        let (doc_id, url, rel) = (fields[0].trim(), fields[1].trim(), fields[2].trim());
        for (value, field) in [(doc_id, "doc_id"), (url, "url"), (rel, "path")] {
            if value.is_empty() {
                return Err(IngestError::EmptyField { line: line_no, field });
            }
        }
        if let Some(&first) = seen.get(doc_id) {
            return Err(IngestError::DuplicateId {
                line: line_no,
                first,
                doc_id: doc_id.to_string(),
            });
        }
        seen.insert(doc_id, line_no);
        entries.push(ManifestEntry {
            doc_id: doc_id.to_string(),
            url: url.to_string(),
            path: base.join(rel),
        });
    }
    Ok(entries)
}

pub fn read_document(entry: &ManifestEntry) -> Result<RawDocument, IngestError> {
    let bytes = fs::read(&entry.path).map_err(|source| IngestError::Unreadable {
        doc_id: entry.doc_id.clone(),
        path: entry.path.clone(),
        source,
    })?;
    Ok(RawDocument {
        entry: entry.clone(),
        body: String::from_utf8_lossy(&bytes).into_owned(),
    })
}
