//! Collection indexing and the on-disk index format.
//!
//! Indexing runs in two passes: every document is parsed and document
//! frequencies are counted over literal terms, then each document vector is
//! built against the finished statistics.
//!
//! The saved index is UTF-8 text, one TAB-separated record per line:
//!
//! ```text
//! SWVMIDX  1
//! N        <document count>
//! SCHEME   btf-idf | tf-idf
//! BOOST    title=<v>  meta=<v>  h1=<v>  url=<v>  other=<v>
//! DOC      <doc_id>  <url>  <norm>
//! GRP      <doc_id>  <ordinal>  <head>  <weight>  <member,member,...>  <title,meta,h1,url,other counts>
//! DF       <term>  <count>
//! ```
//!
//! DOC records are sorted by doc_id, GRP records by doc_id then numeric
//! ordinal, DF records by term. Floats are written in shortest round-trip
//! form, so loading reproduces every weight bit for bit.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use thiserror::Error;

use crate::ingest::{read_document, IngestError, ManifestEntry};
use crate::thesaurus::Thesaurus;
use crate::vector::{build_document_vector, group_norm, DocumentVector, SynonymGroup};
use crate::weighting::{BoostProfile, CollectionStats, Scheme, WeightError};
use crate::zoner::{extract_zones, Zone, ZoneCounts, ZonedTermCounts};

pub const FORMAT_VERSION: u32 = 1;
const MAGIC: &str = "SWVMIDX";

#[derive(Debug, Error)]
pub enum IndexError {
    #[error("cannot access index file {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("unsupported index version {found} (expected {FORMAT_VERSION})")]
    Version { found: String },
    #[error("index line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("index is inconsistent: {0}")]
    Corrupt(String),
    #[error("document {0:?} appears more than once")]
    DuplicateDocument(String),
    #[error("{what} {value:?} cannot be stored (contains a separator character)")]
    Unencodable { what: &'static str, value: String },
    #[error(transparent)]
    Weight(#[from] WeightError),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Posting {
    pub doc_id: String,
    pub ordinal: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Index {
    pub stats: CollectionStats,
    pub scheme: Scheme,
    pub profile: BoostProfile,
    pub documents: BTreeMap<String, DocumentVector>,
    /// Every group member → the groups containing it, sorted by (doc_id, ordinal).
    pub inverted: BTreeMap<String, Vec<Posting>>,
}

/// An index together with the documents that could not be read.
#[derive(Debug)]
pub struct BuildReport {
    pub index: Index,
    pub failures: Vec<IngestError>,
}

impl Index {
    pub fn empty(scheme: Scheme, profile: BoostProfile) -> Self {
        Index {
            stats: CollectionStats::new(0),
            scheme,
            profile,
            documents: BTreeMap::new(),
            inverted: BTreeMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.documents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.documents.is_empty()
    }

    pub fn document(&self, doc_id: &str) -> Option<&DocumentVector> {
        self.documents.get(doc_id)
    }

    pub fn postings(&self, token: &str) -> &[Posting] {
        self.inverted.get(token).map_or(&[], Vec::as_slice)
    }

    fn rebuild_inverted(&mut self) {
        self.inverted = invert(&self.documents);
    }

    /// Checks every structural invariant; `load_index` runs this on each file.
    pub fn validate(&self) -> Result<(), IndexError> {
        let corrupt = |msg: String| Err(IndexError::Corrupt(msg));
        if self.stats.n != self.documents.len() as u64 {
            return corrupt(format!(
                "N is {} but {} documents are stored",
                self.stats.n,
                self.documents.len()
            ));
        }
        let mut df: BTreeMap<String, u64> = BTreeMap::new();
        for (id, doc) in &self.documents {
            if &doc.doc_id != id {
                return corrupt(format!("document keyed {id:?} carries id {:?}", doc.doc_id));
            }
            let mut heads = HashSet::new();
            for g in &doc.groups {
                if g.members.first() != Some(&g.head) {
                    return corrupt(format!("{id}: group {:?} does not lead with its head", g.head));
                }
                if g.members.iter().collect::<HashSet<_>>().len() != g.members.len() {
                    return corrupt(format!("{id}: group {:?} repeats a member", g.head));
                }
                if !heads.insert(g.head.as_str()) {
                    return corrupt(format!("{id}: head {:?} appears twice", g.head));
                }
                if !(g.weight.is_finite() && g.weight >= 0.0) {
                    return corrupt(format!("{id}: group {:?} has weight {}", g.head, g.weight));
                }
                *df.entry(g.head.clone()).or_default() += 1;
            }
            let ordered = doc.groups.windows(2).all(|w| {
                w[0].weight
                    .total_cmp(&w[1].weight)
                    .then_with(|| w[0].head.cmp(&w[1].head))
                    .is_lt()
            });
            if !ordered {
                return corrupt(format!("{id}: groups are not in ascending weight order"));
            }
            let norm = group_norm(&doc.groups);
            if (norm - doc.norm).abs() > 1e-9 * norm.max(1.0) {
                return corrupt(format!("{id}: stored norm {} but groups give {norm}", doc.norm));
            }
        }
        if df != self.stats.df {
            return corrupt("document frequencies do not match stored documents".to_string());
        }
        if self.inverted != invert(&self.documents) {
            return corrupt("inverted map does not match stored groups".to_string());
        }
        Ok(())
    }
}

fn invert(documents: &BTreeMap<String, DocumentVector>) -> BTreeMap<String, Vec<Posting>> {
    let mut inverted: BTreeMap<String, Vec<Posting>> = BTreeMap::new();
    for (id, doc) in documents {
        for (ordinal, g) in doc.groups.iter().enumerate() {
            for m in &g.members {
                inverted.entry(m.clone()).or_default().push(Posting {
                    doc_id: id.clone(),
                    ordinal,
                });
            }
        }
    }
    for postings in inverted.values_mut() {
        postings.sort();
    }
    inverted
}

/// Reads, parses and indexes every manifest entry. Unreadable documents are
/// skipped and reported; they do not count towards N.
pub fn build_index(
    manifest: &[ManifestEntry],
    thesaurus: &Thesaurus,
    profile: &BoostProfile,
    scheme: Scheme,
) -> Result<BuildReport, IndexError> {
    let parsed: Vec<Result<ZonedTermCounts, IngestError>> = manifest
        .par_iter()
        .map(|entry| read_document(entry).map(|doc| extract_zones(&doc)))
        .collect();
    let mut docs = Vec::with_capacity(parsed.len());
    let mut failures = Vec::new();
    for r in parsed {
        match r {
            Ok(c) => docs.push(c),
            Err(e) => failures.push(e),
        }
    }
    let index = index_counts(&docs, thesaurus, profile, scheme)?;
    Ok(BuildReport { index, failures })
}

/// Indexes already-extracted term counts.
pub fn index_counts(
    docs: &[ZonedTermCounts],
    thesaurus: &Thesaurus,
    profile: &BoostProfile,
    scheme: Scheme,
) -> Result<Index, IndexError> {
    let mut stats = CollectionStats::new(docs.len() as u64);
    let mut seen = HashSet::new();
    for d in docs {
        if !seen.insert(d.doc_id.as_str()) {
            return Err(IndexError::DuplicateDocument(d.doc_id.clone()));
        }
        for term in d.terms() {
            *stats.df.entry(term.to_string()).or_default() += 1;
        }
    }

    let vectors = docs
        .par_iter()
        .map(|d| build_document_vector(d, thesaurus, &stats, profile, scheme))
        .collect::<Result<Vec<_>, WeightError>>()?;

    let mut index = Index {
        stats,
        scheme,
        profile: *profile,
        documents: vectors.into_iter().map(|v| (v.doc_id.clone(), v)).collect(),
        inverted: BTreeMap::new(),
    };
    index.rebuild_inverted();
    Ok(index)
}

fn check_field(what: &'static str, value: &str, extra: &[char]) -> Result<(), IndexError> {
    if value.contains(['\t', '\n', '\r']) || value.contains(extra) {
        return Err(IndexError::Unencodable {
            what,
            value: value.to_string(),
        });
    }
    Ok(())
}

/// Renders `index` in the text format described in the module docs.
pub fn encode_index(index: &Index) -> Result<String, IndexError> {
    let mut out = String::new();
    // writing to a String cannot fail
    let _ = writeln!(out, "{MAGIC}\t{FORMAT_VERSION}");
    let _ = writeln!(out, "N\t{}", index.stats.n);
    let _ = writeln!(out, "SCHEME\t{}", index.scheme);
    let boosts: Vec<String> = index.profile.iter().map(|(z, v)| format!("{z}={v}")).collect();
    let _ = writeln!(out, "BOOST\t{}", boosts.join("\t"));

    for (id, doc) in &index.documents {
        check_field("doc_id", id, &[])?;
        check_field("url", &doc.url, &[])?;
        let _ = writeln!(out, "DOC\t{id}\t{}\t{}", doc.url, doc.norm);
    }
    for (id, doc) in &index.documents {
        for (ordinal, g) in doc.groups.iter().enumerate() {
            for m in &g.members {
                check_field("term", m, &[','])?;
            }
            let counts: Vec<String> = g.counts.iter().map(|(_, c)| c.to_string()).collect();
            let _ = writeln!(
                out,
                "GRP\t{id}\t{ordinal}\t{}\t{}\t{}\t{}",
                g.head,
                g.weight,
                g.members.join(","),
                counts.join(",")
            );
        }
    }
    for (term, df) in &index.stats.df {
        check_field("term", term, &[])?;
        let _ = writeln!(out, "DF\t{term}\t{df}");
    }
    Ok(out)
}

pub fn save_index(index: &Index, path: impl AsRef<Path>) -> Result<(), IndexError> {
    let path = path.as_ref();
    let text = encode_index(index)?;
    fs::write(path, text).map_err(|source| IndexError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_index(path: impl AsRef<Path>) -> Result<Index, IndexError> {
    let path = path.as_ref();
    let io = |source| IndexError::Io {
        path: path.to_path_buf(),
        source,
    };
    let bytes = fs::read(path).map_err(io)?;
    let text = String::from_utf8(bytes).map_err(|e| io(std::io::Error::new(std::io::ErrorKind::InvalidData, e)))?;
    decode_index(&text)
}

/// Parses the text format and validates the result.
pub fn decode_index(text: &str) -> Result<Index, IndexError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)));
    let malformed = |line: usize, reason: &str| IndexError::Malformed {
        line,
        reason: reason.to_string(),
    };

    let mut header = |key: &str| -> Result<(usize, Vec<&str>), IndexError> {
        let (no, line) = lines
            .next()
            .ok_or_else(|| malformed(0, &format!("missing {key} header")))?;
        let mut parts = line.split_whitespace();
        if parts.next() != Some(key) {
            return Err(malformed(no, &format!("expected {key} header")));
        }
        Ok((no, parts.collect()))
    };

    let (no, version) = header(MAGIC)?;
    match version.as_slice() {
        [v] if *v == FORMAT_VERSION.to_string() => {}
        [v] => return Err(IndexError::Version { found: v.to_string() }),
        _ => return Err(malformed(no, "expected a single version number")),
    }
    let (no, n) = header("N")?;
    let n: u64 = match n.as_slice() {
        [v] => v
            .parse()
            .map_err(|_| malformed(no, "document count is not an integer"))?,
        _ => return Err(malformed(no, "expected N <count>")),
    };
    let (no, scheme) = header("SCHEME")?;
    let scheme: Scheme = match scheme.as_slice() {
        [s] => s.parse().map_err(|e: WeightError| malformed(no, &e.to_string()))?,
        _ => return Err(malformed(no, "expected SCHEME <name>")),
    };
    let (no, boosts) = header("BOOST")?;
    if boosts.len() != Zone::ALL.len() {
        return Err(malformed(no, "expected five zone=value boosts"));
    }
    let mut profile = BoostProfile::uniform();
    for (zone, pair) in Zone::ALL.into_iter().zip(&boosts) {
        let value = pair
            .strip_prefix(zone.name())
            .and_then(|r| r.strip_prefix('='))
            .ok_or_else(|| malformed(no, &format!("expected {zone}=<value>")))?;
        let value: f64 = value.parse().map_err(|_| malformed(no, "boost is not a number"))?;
        profile = profile.with(zone, value).map_err(|e| malformed(no, &e.to_string()))?;
    }

    #[derive(PartialEq, PartialOrd)]
    enum Section {
        Doc,
        Grp,
        Df,
    }
    let mut section = Section::Doc;
    let mut docs: BTreeMap<String, (String, f64, Vec<SynonymGroup>)> = BTreeMap::new();
    let mut stats = CollectionStats::new(n);

    for (no, line) in lines {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let float = |s: &str, what: &str| -> Result<f64, IndexError> {
            s.parse::<f64>()
                .map_err(|_| malformed(no, &format!("{what} is not a number")))
        };
        let now = match fields[0] {
            "DOC" => Section::Doc,
            "GRP" => Section::Grp,
            "DF" => Section::Df,
            other => return Err(malformed(no, &format!("unknown record {other:?}"))),
        };
        if now < section {
            return Err(malformed(no, "record out of section order"));
        }
        section = now;
        match section {
            Section::Doc => {
                let [_, id, url, norm] = fields[..] else {
                    return Err(malformed(no, "DOC needs doc_id, url and norm"));
                };
                let norm = float(norm, "norm")?;
                if docs
                    .insert(id.to_string(), (url.to_string(), norm, Vec::new()))
                    .is_some()
                {
                    return Err(malformed(no, &format!("duplicate DOC {id:?}")));
                }
            }
            Section::Grp => {
                let [_, id, ordinal, head, weight, members, counts] = fields[..] else {
                    return Err(malformed(
                        no,
                        "GRP needs doc_id, ordinal, head, weight, members and counts",
                    ));
                };
                let ordinal: usize = ordinal
                    .parse()
                    .map_err(|_| malformed(no, "ordinal is not an integer"))?;
                let weight = float(weight, "weight")?;
                let members: Vec<String> = members.split(',').map(str::to_string).collect();
                if members.first().map(String::as_str) != Some(head) {
                    return Err(malformed(no, "members must start with the head"));
                }
                let counts: Vec<u32> = counts
                    .split(',')
                    .map(str::parse)
                    .collect::<Result<_, _>>()
                    .map_err(|_| malformed(no, "zone counts are not integers"))?;
                let [t, m, h, u, o] = counts[..] else {
                    return Err(malformed(no, "expected five zone counts"));
                };
                let (_, _, groups) = docs
                    .get_mut(id)
                    .ok_or_else(|| malformed(no, &format!("GRP for unknown document {id:?}")))?;
                if ordinal != groups.len() {
                    return Err(malformed(
                        no,
                        &format!("expected ordinal {}, found {ordinal}", groups.len()),
                    ));
                }
                groups.push(SynonymGroup {
                    head: head.to_string(),
                    members,
                    weight,
                    counts: ZoneCounts::new(t, m, h, u, o),
                });
            }
            Section::Df => {
                let [_, term, count] = fields[..] else {
                    return Err(malformed(no, "DF needs term and count"));
                };
                let count: u64 = count.parse().map_err(|_| malformed(no, "df is not an integer"))?;
                if count == 0 || count > n {
                    return Err(malformed(no, &format!("df {count} outside 1..={n}")));
                }
                if stats.df.insert(term.to_string(), count).is_some() {
                    return Err(malformed(no, &format!("duplicate DF {term:?}")));
                }
            }
        }
    }

    let documents = docs
        .into_iter()
        .map(|(id, (url, norm, groups))| {
            let doc = DocumentVector {
                doc_id: id.clone(),
                url,
                groups,
                norm,
            };
            (id, doc)
        })
        .collect();
    let mut index = Index {
        stats,
        scheme,
        profile,
        documents,
        inverted: BTreeMap::new(),
    };
    index.rebuild_inverted();
    index.validate()?;
    Ok(index)
}

/// Document ids reachable from any token of `terms` through the inverted map.
pub fn candidates<'a>(index: &'a Index, terms: impl IntoIterator<Item = &'a str>) -> BTreeSet<&'a str> {
    terms
        .into_iter()
        .flat_map(|t| index.postings(t).iter().map(|p| p.doc_id.as_str()))
        .collect()
}
