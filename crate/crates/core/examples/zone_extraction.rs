//! Tokenizes an HTML page and shows which zone every term was counted in.
//!
//! ```bash
//! cargo run -p swvm --example zone_extraction
//! ```

use swvm::sample::{page_html, PAGE_ID, PAGE_URL};
use swvm::{url_tokens, zone_counts, Zone};

fn main() {
    let html = page_html();
    println!("URL tokens of {PAGE_URL}: {:?}\n", url_tokens(PAGE_URL));

    let counts = zone_counts(PAGE_ID, PAGE_URL, &html);
    println!(
        "{:<12} {:>5} {:>5} {:>5} {:>5} {:>5} {:>5}",
        "term", "title", "meta", "h1", "url", "other", "tf"
    );
    for (term, zc) in counts.iter() {
        println!(
            "{:<12} {:>5} {:>5} {:>5} {:>5} {:>5} {:>5}",
            term,
            zc[Zone::Title],
            zc[Zone::Meta],
            zc[Zone::H1],
            zc[Zone::Url],
            zc[Zone::Other],
            zc.total()
        );
    }

    // Scripts, styles and comments never contribute; malformed markup still parses.
    let messy = "<p>Fast<script>var fast = 1</script> <b>disk<i>check</b> &amp; <!-- gone --> tips";
    println!(
        "\nmessy input -> {:?}",
        zone_counts("x", "", messy).terms().collect::<Vec<_>>()
    );
}
