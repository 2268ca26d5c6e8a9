//! Retrieval for HTML pages with tag-zone boosted term weights and
//! synonym-group document vectors.
//!
//! The pipeline:
//!
//! 1. [`ingest`] reads a manifest (`doc_id<TAB>url<TAB>path`) and the raw HTML.
//! 2. [`zoner`] tokenizes each page and counts every term per zone: `<title>`,
//!    keyword/description `<meta>`, `<h1>`, the URL, and everything else.
//! 3. [`weighting`] turns counts into weights. BTF multiplies each zone's
//!    count by a boost (title 18, meta 16, h1 14, URL 18, other 1) and BTF-IDF
//!    multiplies that by `log10(n / df)`. Plain TF-IDF is available as a baseline.
//! 4. [`vector`] builds one synonym group per term from a [`Thesaurus`]; every
//!    synonym inherits the term's weight, so queries match through synonyms.
//! 5. [`index`] assembles the collection, maintains the inverted map and
//!    persists everything in a line-oriented text format.
//! 6. [`search`] ranks by cosine similarity and explains stored weights.
//!
//! ```
//! use swvm::{index_counts, sample, search, BoostProfile, Scheme};
//!
//! let page = sample::page_zone_counts();
//! let idx = index_counts(&[page], &sample::page_thesaurus(), &BoostProfile::default(), Scheme::BtfIdf).unwrap();
//! assert_eq!(idx.document("d1").unwrap().groups.len(), 8);
//! // a one-document collection has zero IDF everywhere, so nothing scores
//! assert!(search(&idx, "improve pc speed", 5).is_empty());
//! ```

pub mod cli;
pub mod index;
pub mod ingest;
pub mod sample;
pub mod search;
pub mod thesaurus;
pub mod vector;
pub mod weighting;
pub mod zoner;

pub use index::{
    build_index, decode_index, encode_index, index_counts, load_index, save_index, BuildReport, Index, IndexError,
    Posting,
};
pub use ingest::{load_manifest, read_document, IngestError, ManifestEntry, RawDocument};
pub use search::{compare, explain, search, Comparison, RankedResult, SearchError, WeightExplanation};
pub use thesaurus::{Thesaurus, ThesaurusError};
pub use vector::{build_document_vector, build_query_vector, cosine, dot, DocumentVector, QueryVector, SynonymGroup};
pub use weighting::{
    boolean_weight, btf, btf_idf, idf, tf_idf, BoostProfile, CollectionStats, IdfSource, IdfTable, Scheme, WeightError,
};
pub use zoner::{extract_zones, tokenize, url_tokens, zone_counts, Zone, ZoneCounts, ZonedTermCounts};
