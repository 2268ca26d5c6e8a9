//! Indexes the demo collection twice, once per weighting scheme, and
//! compares rankings for the same queries.
//!
//! ```bash
//! cargo run -p swvm --example compare_schemes
//! ```

use std::path::PathBuf;

use swvm::{build_index, compare, load_manifest, BoostProfile, Scheme, Thesaurus};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/demo");
    let manifest = load_manifest(dir.join("manifest.tsv"))?;
    let thesaurus = Thesaurus::load(dir.join("thesaurus.txt"))?;

    // The baseline is the classical model: raw term frequency, no synonyms.
    let baseline = build_index(&manifest, &Thesaurus::new(), &BoostProfile::default(), Scheme::TfIdf)?.index;
    let boosted = build_index(&manifest, &thesaurus, &BoostProfile::default(), Scheme::BtfIdf)?.index;

    for query in ["optimize computer performance", "improve PC speed", "error check"] {
        let c = compare(&baseline, &boosted, query, 3)?;
        println!("{query:?}");
        println!("  tf-idf : {}", render(&c.a));
        println!("  btf-idf: {}", render(&c.b));
    }
    Ok(())
}

fn render(results: &[swvm::RankedResult]) -> String {
    if results.is_empty() {
        return "(no match)".to_string();
    }
    results
        .iter()
        .map(|r| format!("{} {:.4}", r.doc_id, r.score))
        .collect::<Vec<_>>()
        .join(", ")
}
