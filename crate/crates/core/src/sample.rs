//! The "optimize your PC" worked example and a demo collection built around it.
//!
//! The page counts, synonym lists and two-decimal IDF figures below are the
//! published measurements for a Microsoft help page; they are inputs for
//! reproducing the reference weights, not something re-derived from HTML.
//!
//! [`demo_collection`] turns the same page into a real 100-document HTML
//! collection whose document frequencies invert those IDF figures, so the
//! whole pipeline (manifest → HTML → index → query) can be exercised end to
//! end.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use crate::thesaurus::Thesaurus;
use crate::weighting::{CollectionStats, IdfTable};
use crate::zoner::{ZoneCounts, ZonedTermCounts};

pub const PAGE_ID: &str = "d1";
pub const PAGE_URL: &str = "www.microsoft.com/athome/setup/optimize.aspx";

pub const PAGE_THESAURUS: &str = "\
# Synonym lists for the terms of the optimize page.
computer: workstation, pc, processor
microsoft:
disk: hard-disk, diskette
check: examine, test, try
windows:
error: fault, mistake, bug, glitch
performance: execution, efficiency, speed
optimize: enhance, improve, boost
";

/// (term, title, meta, h1, url, other)
const PAGE_ZONES: [(&str, u32, u32, u32, u32, u32); 8] = [
    ("computer", 1, 0, 1, 0, 51),
    ("microsoft", 0, 0, 0, 0, 11),
    ("disk", 0, 0, 0, 0, 30),
    ("check", 0, 0, 0, 0, 26),
    ("windows", 0, 1, 0, 0, 16),
    ("error", 0, 0, 0, 0, 10),
    ("performance", 0, 1, 1, 0, 7),
    ("optimize", 1, 1, 1, 1, 0),
];

/// Plain term frequencies used for the unboosted baseline.
const PAGE_TF: [(&str, u32); 8] = [
    ("computer", 52),
    ("optimize", 1),
    ("microsoft", 11),
    ("windows", 16),
    ("performance", 8),
    ("disk", 30),
    ("check", 26),
    ("error", 10),
];

/// Published two-decimal IDF values over the 100-page collection.
const PAGE_IDF: [(&str, f64); 8] = [
    ("computer", 0.008),
    ("microsoft", 0.19),
    ("disk", 0.09),
    ("check", 0.12),
    ("windows", 0.14),
    ("error", 0.51),
    ("performance", 0.32),
    ("optimize", 1.52),
];

pub const COLLECTION_SIZE: u64 = 100;

/// Integer document frequencies whose base-10 IDF over 100 documents lands
/// within 0.02 of each published figure.
pub const PAGE_DF: [(&str, u64); 8] = [
    ("computer", 98),
    ("microsoft", 64),
    ("disk", 81),
    ("check", 76),
    ("windows", 72),
    ("error", 31),
    ("performance", 48),
    ("optimize", 3),
];

/// Document frequencies used by [`demo_collection`]. Identical to [`PAGE_DF`]
/// except for `microsoft`: the live page also credits `microsoft` to the URL
/// zone, and df 84 brings its boosted weight back in line with the published one.
pub const DEMO_DF: [(&str, u64); 8] = [
    ("computer", 98),
    ("microsoft", 84),
    ("disk", 81),
    ("check", 76),
    ("windows", 72),
    ("error", 31),
    ("performance", 48),
    ("optimize", 3),
];

pub fn page_thesaurus() -> Thesaurus {
    PAGE_THESAURUS.parse().expect("built-in thesaurus parses")
}

pub fn page_zone_counts() -> ZonedTermCounts {
    let mut c = ZonedTermCounts::new(PAGE_ID, PAGE_URL);
    for (term, t, m, h, u, o) in PAGE_ZONES {
        c.set(term, ZoneCounts::new(t, m, h, u, o));
    }
    c
}

/// The page as the baseline sees it: every occurrence in one undifferentiated zone.
pub fn page_term_frequencies() -> ZonedTermCounts {
    let mut c = ZonedTermCounts::new(PAGE_ID, PAGE_URL);
    for (term, tf) in PAGE_TF {
        c.set(term, ZoneCounts::new(0, 0, 0, 0, tf));
    }
    c
}

pub fn page_idf() -> IdfTable {
    PAGE_IDF.into_iter().collect()
}

pub fn page_collection_stats() -> CollectionStats {
    let mut s = CollectionStats::new(COLLECTION_SIZE);
    for (term, df) in PAGE_DF {
        s.df.insert(term.to_string(), df);
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DemoPage {
    pub doc_id: String,
    pub url: String,
    /// Path relative to the collection directory.
    pub file: String,
    pub html: String,
}

/// The optimize page as HTML, laid out so that zone extraction reproduces
/// the published counts (plus `microsoft` in the URL).
pub fn page_html() -> String {
    let mut body_words: Vec<(&str, u32)> = PAGE_ZONES.iter().filter(|z| z.5 > 0).map(|z| (z.0, z.5)).collect();
    let mut words = Vec::new();
    while body_words.iter().any(|(_, n)| *n > 0) {
        for (w, n) in body_words.iter_mut() {
            if *n > 0 {
                words.push(*w);
                *n -= 1;
            }
        }
    }
    let mut html = String::from(
        "<!DOCTYPE html>\n<html>\n<head>\n<title>Computer Optimize</title>\n\
         <meta charset=\"utf-8\">\n\
         <meta name=\"keywords\" content=\"optimize, performance, windows\">\n\
         <script>var page = \"optimize\";</script>\n</head>\n<body>\n\
         <h1>Optimize <em>computer</em> performance</h1>\n<!-- body copy -->\n",
    );
    for chunk in words.chunks(12) {
        let _ = writeln!(html, "<p>{}</p>", chunk.join(" "));
    }
    html.push_str("</body>\n</html>\n");
    html
}

/// One hundred pages: the optimize page plus 99 fillers that give every page
/// term the document frequency listed in [`DEMO_DF`]. Filler URLs share the
/// `athome/setup` path so those URL tokens carry zero IDF.
pub fn demo_collection() -> Vec<DemoPage> {
    let mut pages = vec![DemoPage {
        doc_id: PAGE_ID.to_string(),
        url: PAGE_URL.to_string(),
        file: "pages/d1.html".to_string(),
        html: page_html(),
    }];
    for i in 2..=COLLECTION_SIZE {
        let words: Vec<&str> = DEMO_DF
            .iter()
            .filter(|(_, df)| i - 2 < df - 1)
            .map(|(t, _)| *t)
            .collect();
        let mut html = format!("<html><head><title>Note {i:03}</title></head><body>\n");
        if !words.is_empty() {
            let _ = writeln!(html, "<p>{}</p>", words.join(" "));
        }
        html.push_str("</body></html>\n");
        pages.push(DemoPage {
            doc_id: format!("d{i}"),
            url: format!("www.example.net/athome/setup/note{i:03}.htm"),
            file: format!("pages/d{i}.html"),
            html,
        });
    }
    pages
}

pub fn demo_manifest() -> String {
    let mut out = String::from("# doc_id\turl\tpath\n");
    for p in demo_collection() {
        let _ = writeln!(out, "{}\t{}\t{}", p.doc_id, p.url, p.file);
    }
    out
}

/// Writes `manifest.tsv`, `thesaurus.txt` and `pages/*.html` under `dir`;
/// returns the manifest path.
pub fn write_demo_collection(dir: impl AsRef<Path>) -> io::Result<PathBuf> {
    let dir = dir.as_ref();
    fs::create_dir_all(dir.join("pages"))?;
    for p in demo_collection() {
        fs::write(dir.join(&p.file), &p.html)?;
    }
    fs::write(dir.join("thesaurus.txt"), PAGE_THESAURUS)?;
    let manifest = dir.join("manifest.tsv");
    fs::write(&manifest, demo_manifest())?;
    Ok(manifest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weighting::idf;
    use crate::zoner::zone_counts;

    #[test]
    fn inverted_df_matches_published_idf() {
        for ((term, df), (t2, printed)) in PAGE_DF.iter().zip(PAGE_IDF.iter()) {
            assert_eq!(term, t2);
            let v = idf(COLLECTION_SIZE, *df).unwrap();
            assert!((v - printed).abs() <= 0.02, "{term}: {v} vs {printed}");
        }
    }

    #[test]
    fn page_html_reproduces_zone_counts() {
        let extracted = zone_counts(PAGE_ID, PAGE_URL, &page_html());
        let mut expected = page_zone_counts();
        // the URL also names the site and its section
        expected.set("microsoft", ZoneCounts::new(0, 0, 0, 1, 11));
        expected.set("athome", ZoneCounts::new(0, 0, 0, 1, 0));
        expected.set("setup", ZoneCounts::new(0, 0, 0, 1, 0));
        assert_eq!(extracted, expected);
    }

    #[test]
    fn demo_collection_document_frequencies() {
        let pages = demo_collection();
        assert_eq!(pages.len() as u64, COLLECTION_SIZE);
        for (term, df) in DEMO_DF.iter().chain([("athome", 100), ("setup", 100)].iter()) {
            let n = pages
                .iter()
                .filter(|p| zone_counts(&p.doc_id, &p.url, &p.html).get(term).is_some())
                .count() as u64;
            assert_eq!(n, *df, "{term}");
        }
    }
}
