//! Ranked retrieval, per-document weight explanations and scheme comparison.

use std::fmt::Write as _;

use thiserror::Error;

use crate::index::{candidates, Index};
use crate::vector::{build_query_vector, cosine};
use crate::weighting::{idf, Scheme};
use crate::zoner::Zone;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error("no document {0:?} in the index")]
    UnknownDocument(String),
    #[error("indexes were built from different collections: {0}")]
    CollectionMismatch(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankedResult {
    pub doc_id: String,
    pub url: String,
    pub score: f64,
}

/// Top `k` documents by cosine similarity. Zero-score documents are omitted;
/// ties go to the smaller doc_id.
pub fn search(index: &Index, query: &str, k: usize) -> Vec<RankedResult> {
    let q = build_query_vector(query);
    if q.is_empty() || k == 0 {
        return Vec::new();
    }
    let mut results: Vec<RankedResult> = candidates(index, q.iter().map(|(t, _)| t))
        .into_iter()
        .filter_map(|id| {
            let doc = index.document(id)?;
            let score = cosine(doc, &q);
            (score > 0.0).then(|| RankedResult {
                doc_id: doc.doc_id.clone(),
                url: doc.url.clone(),
                score,
            })
        })
        .collect();
    results.sort_by(|a, b| b.score.total_cmp(&a.score).then_with(|| a.doc_id.cmp(&b.doc_id)));
    results.truncate(k);
    results
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExplanationRow {
    pub head: String,
    pub synonyms: Vec<String>,
    pub counts: crate::zoner::ZoneCounts,
    /// `count*boost` terms (or the raw tf under TF-IDF) and their total.
    pub frequency: f64,
    pub breakdown: String,
    pub idf: f64,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeightExplanation {
    pub doc_id: String,
    pub url: String,
    pub scheme: Scheme,
    /// Ascending by weight, in the same order as the document's groups.
    pub rows: Vec<ExplanationRow>,
}

/// Recomputes every group weight of `doc_id` from its zone counts, the
/// boost profile and the collection IDF.
pub fn explain(index: &Index, doc_id: &str) -> Result<WeightExplanation, SearchError> {
    let doc = index
        .document(doc_id)
        .ok_or_else(|| SearchError::UnknownDocument(doc_id.to_string()))?;
    let rows = doc
        .groups
        .iter()
        .map(|g| {
            let term_idf = index
                .stats
                .df(&g.head)
                .and_then(|df| idf(index.stats.n, df).ok())
                .unwrap_or(0.0);
            let (frequency, breakdown) = match index.scheme {
                Scheme::BtfIdf => {
                    let mut parts = Vec::new();
                    let mut total = 0.0;
                    for zone in Zone::ALL {
                        let c = g.counts.get(zone);
                        if c > 0 {
                            let boosted = f64::from(c) * index.profile.get(zone);
                            total += boosted;
                            parts.push(format!("{zone}:{c}*{}", index.profile.get(zone)));
                        }
                    }
                    (total, format!("{} = {}", parts.join(" + "), total))
                }
                Scheme::TfIdf => {
                    let tf = g.counts.total();
                    (tf as f64, format!("tf = {tf}"))
                }
            };
            ExplanationRow {
                head: g.head.clone(),
                synonyms: g.synonyms().to_vec(),
                counts: g.counts,
                frequency,
                breakdown,
                idf: term_idf,
                weight: frequency * term_idf,
            }
        })
        .collect();
    Ok(WeightExplanation {
        doc_id: doc.doc_id.clone(),
        url: doc.url.clone(),
        scheme: index.scheme,
        rows,
    })
}

impl WeightExplanation {
    /// TAB-separated table, one row per term.
    pub fn to_table(&self) -> String {
        let freq_header = match self.scheme {
            Scheme::BtfIdf => "btf",
            Scheme::TfIdf => "tf",
        };
        let mut out = String::new();
        let _ = writeln!(out, "# {}\t{}\t{}", self.doc_id, self.url, self.scheme);
        let _ = writeln!(out, "term\tsynonyms\tfrequency\t{freq_header}\tidf\tweight");
        for r in &self.rows {
            let zones: Vec<String> = r
                .counts
                .iter()
                .filter(|(_, c)| *c > 0)
                .map(|(z, c)| format!("{z}:{c}"))
                .collect();
            let synonyms = if r.synonyms.is_empty() {
                "-".to_string()
            } else {
                r.synonyms.join(",")
            };
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{:.4}\t{:.4}",
                r.head,
                synonyms,
                zones.join(" "),
                r.breakdown,
                r.idf,
                r.weight
            );
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub a: Vec<RankedResult>,
    pub b: Vec<RankedResult>,
}

/// Runs `query` against two indexes of the same collection.
pub fn compare(a: &Index, b: &Index, query: &str, k: usize) -> Result<Comparison, SearchError> {
    if a.stats.n != b.stats.n {
        return Err(SearchError::CollectionMismatch(format!(
            "{} documents vs {}",
            a.stats.n, b.stats.n
        )));
    }
    if !a.documents.keys().eq(b.documents.keys()) {
        return Err(SearchError::CollectionMismatch("document ids differ".to_string()));
    }
    Ok(Comparison {
        a: search(a, query, k),
        b: search(b, query, k),
    })
}
