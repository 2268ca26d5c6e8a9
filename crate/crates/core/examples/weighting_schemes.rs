//! Side-by-side TF-IDF and BTF-IDF weights for the optimize page.
//!
//! ```bash
//! cargo run -p swvm --example weighting_schemes
//! ```

use swvm::sample::{page_idf, page_term_frequencies, page_zone_counts};
use swvm::{btf, btf_idf, idf, tf_idf, BoostProfile, Zone};

fn main() {
    let profile = BoostProfile::default();
    println!("boosts: {profile}\n");

    let idfs = page_idf();
    let zoned = page_zone_counts();
    let plain = page_term_frequencies();

    println!(
        "{:<12} {:>4} {:>6} {:>8} {:>5} {:>8}",
        "term", "tf", "idf", "tf*idf", "btf", "btf*idf"
    );
    let mut rows: Vec<_> = zoned.iter().collect();
    rows.sort_by(|a, b| {
        let wa = btf_idf(btf(a.1, &profile), idfs.0[a.0]);
        let wb = btf_idf(btf(b.1, &profile), idfs.0[b.0]);
        wa.total_cmp(&wb)
    });
    for (term, counts) in rows {
        let term_idf = idfs.0[term];
        let tf = plain.tf(term);
        let boosted = btf(counts, &profile);
        println!(
            "{:<12} {:>4} {:>6} {:>8.2} {:>5} {:>8.2}",
            term,
            tf,
            term_idf,
            tf_idf(tf, term_idf),
            boosted,
            btf_idf(boosted, term_idf)
        );
    }

    // Boosts are configurable; with every zone at 1 BTF is plain term frequency.
    let flat = BoostProfile::uniform();
    let optimize = zoned.get("optimize").unwrap();
    println!(
        "\noptimize with uniform boosts: btf = {} (tf = {})",
        btf(optimize, &flat),
        optimize.total()
    );
    let h1_heavy: BoostProfile = "h1=40".parse().unwrap();
    println!("optimize with h1=40:          btf = {}", btf(optimize, &h1_heavy));
    println!("h1 boost now {}", h1_heavy.get(Zone::H1));

    println!(
        "\nidf(100, 3) = {:.4}, idf(100, 31) = {:.4}",
        idf(100, 3).unwrap(),
        idf(100, 31).unwrap()
    );
}
