//! Builds synonym-group and plain vectors for the optimize page and scores
//! two queries: one using the page's own words, one using only synonyms.
//!
//! ```bash
//! cargo run -p swvm --example synonym_matching
//! ```

use swvm::sample::{page_idf, page_term_frequencies, page_thesaurus, page_zone_counts};
use swvm::{build_document_vector, build_query_vector, cosine, dot, BoostProfile, Scheme, Thesaurus};

fn main() {
    let thesaurus = page_thesaurus();
    let idfs = page_idf();
    let profile = BoostProfile::default();

    let grouped = build_document_vector(&page_zone_counts(), &thesaurus, &idfs, &profile, Scheme::BtfIdf).unwrap();
    let plain = build_document_vector(
        &page_term_frequencies(),
        &Thesaurus::new(),
        &idfs,
        &profile,
        Scheme::TfIdf,
    )
    .unwrap();

    println!("synonym groups (norm {:.2}):", grouped.norm);
    for g in &grouped.groups {
        println!("  {:>7.2}  {}", g.weight, g.members.join(" ; "));
    }
    println!("plain vector norm {:.2}\n", plain.norm);

    for query in ["optimize computer performance", "improve PC speed"] {
        let q = build_query_vector(query);
        println!("{query:?}");
        println!(
            "  tf-idf : dot {:>7.2}  cosine {:.4}",
            dot(&plain, &q),
            cosine(&plain, &q)
        );
        println!(
            "  btf-idf: dot {:>7.2}  cosine {:.4}",
            dot(&grouped, &q),
            cosine(&grouped, &q)
        );
    }

    // Lookups are directional: "improve" is a synonym of "optimize", not a head.
    println!("\nsynonyms(optimize) = {:?}", thesaurus.synonyms("optimize"));
    println!("synonyms(improve)  = {:?}", thesaurus.synonyms("improve"));
}
