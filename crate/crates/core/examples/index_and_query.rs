//! Indexes the demo HTML collection, saves and reloads the index, runs the
//! two reference queries and explains the top document's weights.
//!
//! ```bash
//! cargo run -p swvm --example index_and_query
//! ```

use std::path::PathBuf;

use swvm::{build_index, explain, load_index, load_manifest, save_index, search, BoostProfile, Scheme, Thesaurus};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/demo");
    let manifest = load_manifest(dir.join("manifest.tsv"))?;
    let thesaurus = Thesaurus::load(dir.join("thesaurus.txt"))?;

    let report = build_index(&manifest, &thesaurus, &BoostProfile::default(), Scheme::BtfIdf)?;
    for failure in &report.failures {
        eprintln!("skipped: {failure}");
    }
    let index = report.index;
    println!(
        "indexed {} documents, {} distinct terms",
        index.stats.n,
        index.stats.df.len()
    );

    let path = std::env::temp_dir().join("swvm-demo.idx");
    save_index(&index, &path)?;
    let index = load_index(&path)?;
    println!("saved and reloaded {}", path.display());

    for query in ["optimize computer performance", "improve PC speed", "diskette"] {
        println!("\n{query:?}");
        for (rank, r) in search(&index, query, 3).iter().enumerate() {
            println!("  {}  {:.4}  {}  {}", rank + 1, r.score, r.doc_id, r.url);
        }
    }

    println!();
    print!("{}", explain(&index, "d1")?.to_table());
    Ok(())
}
