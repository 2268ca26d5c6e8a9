//! Acceptance criteria for the retrieval engine.
//!
//! Each criterion prints one PASS/FAIL line; run with
//! `cargo test -p swvm --test acceptance -- --nocapture` to see them.

mod common;

use std::path::PathBuf;
use std::process::Command;

use proptest::prelude::*;
use swvm::sample::{self, PAGE_ID, PAGE_URL};
use swvm::{
    btf, btf_idf, build_document_vector, cosine, decode_index, encode_index, idf, index_counts, search, tf_idf,
    BoostProfile, DocumentVector, IdfTable, QueryVector, Scheme, Thesaurus,
};

type Outcome = Result<String, String>;

fn within(name: &str, got: f64, want: f64, tol: f64) -> Result<(), String> {
    if (got - want).abs() <= tol {
        Ok(())
    } else {
        Err(format!("{name}: got {got}, want {want} ± {tol}"))
    }
}

/// Terms in ascending published-weight order.
const TERMS: [&str; 8] = [
    "computer",
    "microsoft",
    "disk",
    "check",
    "windows",
    "error",
    "performance",
    "optimize",
];

fn swvm_fixture() -> DocumentVector {
    build_document_vector(
        &sample::page_zone_counts(),
        &sample::page_thesaurus(),
        &sample::page_idf(),
        &BoostProfile::default(),
        Scheme::BtfIdf,
    )
    .expect("fixture vector")
}

fn baseline_fixture() -> DocumentVector {
    build_document_vector(
        &sample::page_term_frequencies(),
        &Thesaurus::new(),
        &sample::page_idf(),
        &BoostProfile::default(),
        Scheme::TfIdf,
    )
    .expect("baseline vector")
}

fn tf_idf_products() -> Outcome {
    let rows: [(u64, f64, f64); 8] = [
        (52, 0.008, 0.41),
        (1, 1.52, 1.52),
        (11, 0.19, 2.09),
        (16, 0.14, 2.24),
        (8, 0.32, 2.56),
        (30, 0.09, 2.70),
        (26, 0.12, 3.12),
        (10, 0.51, 5.10),
    ];
    for (tf, term_idf, printed) in rows {
        within(&format!("{tf} x {term_idf}"), tf_idf(tf, term_idf), printed, 0.01)?;
    }
    Ok("8 products within ±0.01".into())
}

fn btf_values() -> Outcome {
    let counts = sample::page_zone_counts();
    let expected = [83.0, 11.0, 30.0, 26.0, 32.0, 10.0, 37.0, 66.0];
    let got: Vec<f64> = TERMS
        .iter()
        .map(|t| btf(counts.get(t).expect("fixture term"), &BoostProfile::default()))
        .collect();
    if got == expected {
        Ok(format!("{got:?}"))
    } else {
        Err(format!("got {got:?}, want {expected:?}"))
    }
}

fn btf_idf_weights() -> Outcome {
    let counts = sample::page_zone_counts();
    let idf_table: IdfTable = sample::page_idf();
    let expected = [0.66, 2.09, 2.70, 3.12, 4.48, 5.10, 11.84, 100.32];
    for (t, want) in TERMS.iter().zip(expected) {
        let b = btf(counts.get(t).expect("fixture term"), &BoostProfile::default());
        let w = btf_idf(b, idf_table.0[*t]);
        within(t, w, want, 0.02)?;
    }
    // the assembled vector carries the same weights in the same order
    let v = swvm_fixture();
    let heads: Vec<&str> = v.groups.iter().map(|g| g.head.as_str()).collect();
    if heads != TERMS {
        return Err(format!("group order {heads:?}"));
    }
    Ok("8 weights within ±0.02, ascending order matches".into())
}

fn vector_norms() -> Outcome {
    let swvm = swvm_fixture();
    let base = baseline_fixture();
    within("swvm norm", swvm.norm, 101.35, 0.02)?;
    within("baseline norm", base.norm, 7.83, 0.01)?;
    Ok(format!("swvm {:.4}, baseline {:.4}", swvm.norm, base.norm))
}

fn query_cosines() -> Outcome {
    let swvm = swvm_fixture();
    let base = baseline_fixture();
    let q1 = QueryVector::parse("optimize computer performance");
    let q2 = QueryVector::parse("improve PC speed");
    let (s1, b1, s2, b2) = (
        cosine(&swvm, &q1),
        cosine(&base, &q1),
        cosine(&swvm, &q2),
        cosine(&base, &q2),
    );
    within("swvm q1", s1, 0.64, 0.01)?;
    within("baseline q1", b1, 0.33, 0.01)?;
    within("swvm q2", s2, 0.64, 0.01)?;
    if b2 != 0.0 {
        return Err(format!("baseline q2 = {b2}, want exactly 0"));
    }
    Ok(format!(
        "q1 swvm {s1:.4} / baseline {b1:.4}; q2 swvm {s2:.4} / baseline {b2}"
    ))
}

fn idf_spot_values() -> Outcome {
    let a = idf(100, 3).map_err(|e| e.to_string())?;
    let b = idf(100, 31).map_err(|e| e.to_string())?;
    within("idf(100,3)", a, 1.5229, 0.001)?;
    within("idf(100,31)", b, 0.5086, 0.001)?;
    within("idf(100,3) rounded", (a * 100.0).round() / 100.0, 1.52, 1e-12)?;
    within("idf(100,31) rounded", (b * 100.0).round() / 100.0, 0.51, 1e-12)?;
    Ok(format!("{a:.4}, {b:.4}"))
}

fn reduction_to_textbook_vsm() -> Outcome {
    // 20 collections x 10 documents = 200 documents
    let strategy = (
        common::collection(10..=10, 10),
        proptest::collection::vec(common::query(), 5),
    );
    common::runner(20)
        .run(&strategy, |(docs, queries)| {
            let idx = index_counts(&docs, &Thesaurus::new(), &BoostProfile::uniform(), Scheme::TfIdf).unwrap();
            let oracle = common::NaiveVsm::new(&docs);
            for q in &queries {
                let terms: Vec<&str> = q.split_whitespace().collect();
                let qv = QueryVector::parse(q);
                for d in &docs {
                    let got = cosine(idx.document(&d.doc_id).unwrap(), &qv);
                    let want = oracle.cosine(&d.doc_id, &terms);
                    prop_assert!((got - want).abs() <= 1e-9, "{} {q:?}: {got} vs {want}", d.doc_id);
                }
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok("200 documents, 100 queries, all within 1e-9".into())
}

fn norm_invariance() -> Outcome {
    let strategy = (
        common::document(12),
        common::thesaurus(),
        common::profile(),
        common::scheme(),
        proptest::collection::vec(0.0f64..3.0, 12),
    );
    common::runner(200)
        .run(&strategy, |(terms, th, profile, scheme, idfs)| {
            let mut counts = swvm::ZonedTermCounts::new("d", "u");
            for (t, z) in &terms {
                counts.set(t.clone(), *z);
            }
            let table: IdfTable = terms.keys().cloned().zip(idfs.iter().copied()).collect();
            let bare = build_document_vector(&counts, &Thesaurus::new(), &table, &profile, scheme).unwrap();
            let rich = build_document_vector(&counts, &th, &table, &profile, scheme).unwrap();
            prop_assert_eq!(bare.norm.to_bits(), rich.norm.to_bits());
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok("200 documents, norms bit-identical".into())
}

fn persistence_round_trip() -> Outcome {
    let strategy = (
        common::collection(1..=8, 8),
        common::thesaurus(),
        common::profile(),
        common::scheme(),
    );
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let case = std::sync::atomic::AtomicUsize::new(0);
    common::runner(100)
        .run(&strategy, |(docs, th, profile, scheme)| {
            let case = case.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
            let idx = index_counts(&docs, &th, &profile, scheme).unwrap();
            let first = dir.path().join(format!("{case}-a.idx"));
            let second = dir.path().join(format!("{case}-b.idx"));
            swvm::save_index(&idx, &first).unwrap();
            swvm::save_index(&idx, &second).unwrap();
            let bytes = std::fs::read(&first).unwrap();
            prop_assert_eq!(&bytes, &std::fs::read(&second).unwrap());
            let back = swvm::load_index(&first).unwrap();
            prop_assert_eq!(&back, &idx);
            for (id, doc) in &idx.documents {
                let other = &back.documents[id];
                prop_assert_eq!(doc.norm.to_bits(), other.norm.to_bits());
                for (g, h) in doc.groups.iter().zip(&other.groups) {
                    prop_assert_eq!(g.weight.to_bits(), h.weight.to_bits());
                }
            }
            let text = String::from_utf8(bytes).unwrap();
            prop_assert_eq!(encode_index(&decode_index(&text).unwrap()).unwrap(), text);
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok("100 indexes round-trip bit-exact, saves byte-identical".into())
}

fn search_matches_exhaustive_scoring() -> Outcome {
    let strategy = (
        common::collection(1..=50, 8),
        common::thesaurus(),
        common::profile(),
        common::scheme(),
        proptest::collection::vec(common::query(), 4),
    );
    common::runner(60)
        .run(&strategy, |(docs, th, profile, scheme, queries)| {
            let idx = index_counts(&docs, &th, &profile, scheme).unwrap();
            for q in &queries {
                let qv = QueryVector::parse(q);
                let mut brute: Vec<(String, f64)> = idx
                    .documents
                    .values()
                    .map(|d| (d.doc_id.clone(), cosine(d, &qv)))
                    .filter(|(_, s)| *s > 0.0)
                    .collect();
                brute.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
                let got: Vec<(String, f64)> = search(&idx, q, docs.len())
                    .into_iter()
                    .map(|r| (r.doc_id, r.score))
                    .collect();
                prop_assert_eq!(&got, &brute, "query {:?}", q);
                for k in 1..=got.len() {
                    let top = search(&idx, q, k);
                    prop_assert_eq!(top.len(), k);
                    prop_assert!(top.iter().zip(&got).all(|(a, b)| a.doc_id == b.0));
                }
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok("60 collections (≤50 docs), 240 queries identical".into())
}

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/demo")
}

fn cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_swvm"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "swvm {args:?} exited {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn end_to_end_cli() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let idx = dir.path().join("demo.idx");
    let idx = idx.to_str().ok_or("non-UTF-8 temp path")?;
    let manifest = fixture_dir().join("manifest.tsv");
    let thesaurus = fixture_dir().join("thesaurus.txt");
    cli(&[
        "index",
        "--manifest",
        manifest.to_str().ok_or("path")?,
        "--thesaurus",
        thesaurus.to_str().ok_or("path")?,
        "--out",
        idx,
        "--scheme",
        "btf-idf",
    ])?;
    let want = format!("1\t0.6427\t{PAGE_ID}\t{PAGE_URL}");
    for query in ["optimize computer performance", "improve PC speed"] {
        let out = cli(&["query", "--index", idx, "--top", "5", query])?;
        let first = out.lines().next().unwrap_or_default();
        if first != want {
            return Err(format!("{query:?}: first line {first:?}, want {want:?}"));
        }
    }
    Ok(format!("both queries -> {want:?}"))
}

type Criterion = (&'static str, fn() -> Outcome);

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 11] = [
        ("TF-IDF column reproduction", tf_idf_products),
        ("BTF column reproduction", btf_values),
        ("BTF-IDF weight reproduction", btf_idf_weights),
        ("vector norms", vector_norms),
        ("query cosines", query_cosines),
        ("IDF spot values", idf_spot_values),
        ("reduction to textbook VSM", reduction_to_textbook_vsm),
        ("norm invariance under thesaurus swap", norm_invariance),
        ("persistence round trip", persistence_round_trip),
        (
            "inverted-map search = exhaustive scoring",
            search_matches_exhaustive_scoring,
        ),
        ("end-to-end CLI", end_to_end_cli),
    ];
    let mut failures = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS  {:>2}. {name}: {detail}", i + 1),
            Err(why) => {
                println!("FAIL  {:>2}. {name}: {why}", i + 1);
                failures.push(i + 1);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
