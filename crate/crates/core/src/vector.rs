//! Synonym-group document vectors, query vectors and cosine scoring.
//!
//! A document vector holds one [`SynonymGroup`] per distinct document term.
//! Every member of a group (the term itself plus its thesaurus synonyms)
//! carries the term's weight, so a query word matches a document through any
//! member. The norm squares each group weight once, however many members the
//! group has; swapping thesauri never moves the norm.

use std::collections::BTreeMap;

use crate::thesaurus::Thesaurus;
use crate::weighting::{btf, btf_idf, tf_idf, BoostProfile, IdfSource, Scheme, WeightError};
use crate::zoner::{tokenize, ZoneCounts, ZonedTermCounts};

#[derive(Debug, Clone, PartialEq)]
pub struct SynonymGroup {
    pub head: String,
    /// Head first, then its synonyms in thesaurus order.
    pub members: Vec<String>,
    pub weight: f64,
    /// Zone counts of the head term the weight was computed from.
    pub counts: ZoneCounts,
}

impl SynonymGroup {
    pub fn synonyms(&self) -> &[String] {
        &self.members[1..]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DocumentVector {
    pub doc_id: String,
    pub url: String,
    /// Ascending by weight, ties by head.
    pub groups: Vec<SynonymGroup>,
    pub norm: f64,
}

impl DocumentVector {
    /// Sorts `groups` into canonical order and computes the norm.
    pub fn from_groups(doc_id: impl Into<String>, url: impl Into<String>, mut groups: Vec<SynonymGroup>) -> Self {
        groups.sort_by(|a, b| a.weight.total_cmp(&b.weight).then_with(|| a.head.cmp(&b.head)));
        let norm = group_norm(&groups);
        DocumentVector {
            doc_id: doc_id.into(),
            url: url.into(),
            groups,
            norm,
        }
    }

    pub fn group(&self, head: &str) -> Option<&SynonymGroup> {
        self.groups.iter().find(|g| g.head == head)
    }

    pub fn weight(&self, head: &str) -> Option<f64> {
        self.group(head).map(|g| g.weight)
    }
}

pub(crate) fn group_norm(groups: &[SynonymGroup]) -> f64 {
    groups.iter().map(|g| g.weight * g.weight).sum::<f64>().sqrt()
}

pub fn build_document_vector<S: IdfSource + ?Sized>(
    counts: &ZonedTermCounts,
    thesaurus: &Thesaurus,
    idf: &S,
    profile: &BoostProfile,
    scheme: Scheme,
) -> Result<DocumentVector, WeightError> {
    let groups = counts
        .iter()
        .map(|(term, zc)| {
            let term_idf = idf.idf_of(term)?;
            let weight = match scheme {
                Scheme::BtfIdf => btf_idf(btf(zc, profile), term_idf),
                Scheme::TfIdf => tf_idf(zc.total(), term_idf),
            };
            let members = std::iter::once(term.to_string())
                .chain(thesaurus.synonyms(term).iter().cloned())
                .collect();
            Ok(SynonymGroup {
                head: term.to_string(),
                members,
                weight,
                counts: *zc,
            })
        })
        .collect::<Result<Vec<_>, WeightError>>()?;
    Ok(DocumentVector::from_groups(&counts.doc_id, &counts.url, groups))
}

/// Raw query term counts. No synonym expansion, no IDF.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct QueryVector(BTreeMap<String, f64>);

impl QueryVector {
    pub fn parse(query: &str) -> Self {
        let mut terms = BTreeMap::new();
        for t in tokenize(query) {
            *terms.entry(t).or_insert(0.0) += 1.0;
        }
        QueryVector(terms)
    }

    pub fn from_weights<S: Into<String>>(weights: impl IntoIterator<Item = (S, f64)>) -> Self {
        QueryVector(weights.into_iter().map(|(t, w)| (t.into(), w)).collect())
    }

    pub fn get(&self, term: &str) -> Option<f64> {
        self.0.get(term).copied()
    }

    pub fn norm(&self) -> f64 {
        self.0.values().map(|w| w * w).sum::<f64>().sqrt()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, f64)> {
        self.0.iter().map(|(t, &w)| (t.as_str(), w))
    }

    pub fn scaled(&self, factor: f64) -> Self {
        QueryVector(self.0.iter().map(|(t, w)| (t.clone(), w * factor)).collect())
    }
}

pub fn build_query_vector(query: &str) -> QueryVector {
    QueryVector::parse(query)
}

/// Sum of group weight × query weight over every (group, member) match.
pub fn dot(doc: &DocumentVector, query: &QueryVector) -> f64 {
    if query.is_empty() {
        return 0.0;
    }
    doc.groups
        .iter()
        .map(|g| {
            g.members
                .iter()
                .filter_map(|m| query.get(m))
                .map(|qw| g.weight * qw)
                .fold(0.0, |acc, x| acc + x)
        })
        .fold(0.0, |acc, x| acc + x)
}

/// Cosine similarity, clamped to `[0, 1]`; zero if either vector is empty.
///
/// Matches through several members of one group can push the raw ratio past 1
/// because the norm counts each group once.
pub fn cosine(doc: &DocumentVector, query: &QueryVector) -> f64 {
    let q_norm = query.norm();
    if doc.norm == 0.0 || q_norm == 0.0 {
        return 0.0;
    }
    (dot(doc, query) / (doc.norm * q_norm)).clamp(0.0, 1.0)
}
