#![allow(dead_code)]

use std::collections::BTreeMap;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use swvm::{BoostProfile, Scheme, Thesaurus, Zone, ZoneCounts, ZonedTermCounts};

/// A runner with a fixed seed so every run sees the same cases.
pub fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

pub fn term() -> impl Strategy<Value = String> {
    "[a-f]{1,2}"
}

pub fn zone_counts() -> impl Strategy<Value = ZoneCounts> {
    (0u32..3, 0u32..2, 0u32..3, 0u32..2, 0u32..12)
        .prop_map(|(t, m, h, u, o)| ZoneCounts::new(t, m, h, u, o))
        .prop_filter("at least one occurrence", |c| !c.is_empty())
}

/// Up to `max_terms` distinct terms with random zone counts.
pub fn document(max_terms: usize) -> impl Strategy<Value = BTreeMap<String, ZoneCounts>> {
    proptest::collection::btree_map(term(), zone_counts(), 0..=max_terms)
}

pub fn collection(
    docs: std::ops::RangeInclusive<usize>,
    max_terms: usize,
) -> impl Strategy<Value = Vec<ZonedTermCounts>> {
    proptest::collection::vec(document(max_terms), docs).prop_map(|docs| {
        docs.into_iter()
            .enumerate()
            .map(|(i, terms)| {
                let mut c = ZonedTermCounts::new(format!("d{i:03}"), format!("site.test/page{i}"));
                for (t, z) in terms {
                    c.set(t, z);
                }
                c
            })
            .collect()
    })
}

pub fn thesaurus() -> impl Strategy<Value = Thesaurus> {
    proptest::collection::btree_map(term(), proptest::collection::vec("[a-h]{1,2}", 0..4), 0..10).prop_map(|m| {
        let mut th = Thesaurus::new();
        for (head, syns) in m {
            th.insert(head, syns);
        }
        th
    })
}

pub fn profile() -> impl Strategy<Value = BoostProfile> {
    proptest::array::uniform5(0.25f64..25.0).prop_map(|v| {
        Zone::ALL
            .into_iter()
            .zip(v)
            .fold(BoostProfile::uniform(), |p, (z, x)| p.with(z, x).unwrap())
    })
}

pub fn scheme() -> impl Strategy<Value = Scheme> {
    prop_oneof![Just(Scheme::BtfIdf), Just(Scheme::TfIdf)]
}

pub fn query() -> impl Strategy<Value = String> {
    proptest::collection::vec("[a-h]{1,2}", 0..5).prop_map(|t| t.join(" "))
}

/// Textbook vector space model: dense TF-IDF vectors and cosine, written
/// without any of the crate's vector or weighting code.
pub struct NaiveVsm {
    pub weights: BTreeMap<String, BTreeMap<String, f64>>,
}

impl NaiveVsm {
    pub fn new(docs: &[ZonedTermCounts]) -> Self {
        let n = docs.len() as f64;
        let mut df: BTreeMap<String, f64> = BTreeMap::new();
        for d in docs {
            for (t, _) in d.iter() {
                *df.entry(t.to_string()).or_default() += 1.0;
            }
        }
        let weights = docs
            .iter()
            .map(|d| {
                let w = d
                    .iter()
                    .map(|(t, c)| {
                        let tf: u32 = Zone::ALL.iter().map(|&z| c[z]).sum();
                        (t.to_string(), f64::from(tf) * (n / df[t]).log10())
                    })
                    .collect();
                (d.doc_id.clone(), w)
            })
            .collect();
        NaiveVsm { weights }
    }

    pub fn cosine(&self, doc_id: &str, query_terms: &[&str]) -> f64 {
        let mut q: BTreeMap<&str, f64> = BTreeMap::new();
        for t in query_terms {
            *q.entry(t).or_default() += 1.0;
        }
        let d = &self.weights[doc_id];
        let dot: f64 = q.iter().map(|(t, qw)| qw * d.get(*t).copied().unwrap_or(0.0)).sum();
        let dn = d.values().map(|w| w * w).sum::<f64>().sqrt();
        let qn = q.values().map(|w| w * w).sum::<f64>().sqrt();
        if dn == 0.0 || qn == 0.0 {
            0.0
        } else {
            dot / (dn * qn)
        }
    }
}
