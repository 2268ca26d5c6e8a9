//! Tokenization and per-zone term counting for HTML pages.
//!
//! Every token occurrence in a page is attributed to exactly one [`Zone`]:
//! the `<title>` text, the `content` of keyword/description `<meta>` tags,
//! text under an `<h1>`, the page URL, or everything else. The scanner is a
//! forgiving tag-soup reader: unknown tags are transparent, unclosed elements
//! run to the end of input, and nothing in the markup can make it fail.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Index;

use crate::ingest::RawDocument;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Zone {
    Title,
    Meta,
    H1,
    Url,
    Other,
}

impl Zone {
    pub const ALL: [Zone; 5] = [Zone::Title, Zone::Meta, Zone::H1, Zone::Url, Zone::Other];

    pub fn name(self) -> &'static str {
        match self {
            Zone::Title => "title",
            Zone::Meta => "meta",
            Zone::H1 => "h1",
            Zone::Url => "url",
            Zone::Other => "other",
        }
    }

    pub fn from_name(name: &str) -> Option<Zone> {
        Zone::ALL
            .into_iter()
            .find(|z| z.name().eq_ignore_ascii_case(name.trim()))
    }

    fn slot(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Zone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Occurrence counts of one term, one slot per [`Zone`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ZoneCounts([u32; 5]);

impl ZoneCounts {
    pub fn new(title: u32, meta: u32, h1: u32, url: u32, other: u32) -> Self {
        ZoneCounts([title, meta, h1, url, other])
    }

    pub fn only(zone: Zone, count: u32) -> Self {
        let mut c = ZoneCounts::default();
        c.add(zone, count);
        c
    }

    pub fn get(&self, zone: Zone) -> u32 {
        self.0[zone.slot()]
    }

    pub fn add(&mut self, zone: Zone, count: u32) {
        let slot = &mut self.0[zone.slot()];
        *slot = slot.saturating_add(count);
    }

    /// Raw term frequency: the sum over all zones.
    pub fn total(&self) -> u64 {
        self.0.iter().map(|&c| u64::from(c)).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Zone, u32)> + '_ {
        Zone::ALL.into_iter().map(move |z| (z, self.get(z)))
    }
}

impl Index<Zone> for ZoneCounts {
    type Output = u32;

    fn index(&self, zone: Zone) -> &u32 {
        &self.0[zone.slot()]
    }
}

/// Per-document term → zone counts. Terms with all-zero counts are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ZonedTermCounts {
    pub doc_id: String,
    pub url: String,
    terms: BTreeMap<String, ZoneCounts>,
}

impl ZonedTermCounts {
    pub fn new(doc_id: impl Into<String>, url: impl Into<String>) -> Self {
        ZonedTermCounts {
            doc_id: doc_id.into(),
            url: url.into(),
            terms: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, term: &str, zone: Zone, count: u32) {
        if count == 0 {
            return;
        }
        match self.terms.get_mut(term) {
            Some(c) => c.add(zone, count),
            None => {
                self.terms.insert(term.to_string(), ZoneCounts::only(zone, count));
            }
        }
    }

    /// Replaces the counts for `term`; all-zero counts remove it.
    pub fn set(&mut self, term: impl Into<String>, counts: ZoneCounts) {
        let term = term.into();
        if counts.is_empty() {
            self.terms.remove(&term);
        } else {
            self.terms.insert(term, counts);
        }
    }

    pub fn get(&self, term: &str) -> Option<&ZoneCounts> {
        self.terms.get(term)
    }

    pub fn tf(&self, term: &str) -> u64 {
        self.terms.get(term).map_or(0, ZoneCounts::total)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &ZoneCounts)> {
        self.terms.iter().map(|(t, c)| (t.as_str(), c))
    }

    pub fn terms(&self) -> impl Iterator<Item = &str> {
        self.terms.keys().map(String::as_str)
    }
}

/// Splits text into lowercase tokens: maximal runs of letters, digits and
/// hyphens, with leading and trailing hyphens stripped.
pub fn tokenize(text: &str) -> Vec<String> {
    let lower = text.to_lowercase();
    lower
        .split(|c: char| !(c.is_alphanumeric() || c == '-'))
        .map(|run| run.trim_matches('-'))
        .filter(|tok| !tok.is_empty())
        .map(str::to_string)
        .collect()
}

const GENERIC_TLDS: [&str; 5] = ["com", "org", "net", "edu", "gov"];
const PAGE_EXTENSIONS: [&str; 5] = ["html", "htm", "aspx", "php", "jsp"];

/// Content-bearing tokens of a URL.
///
/// The scheme, the `www` host label, a trailing generic or two-letter country
/// suffix of the host, and page extensions such as `.aspx` are not content.
pub fn url_tokens(url: &str) -> Vec<String> {
    let url = url.trim();
    let rest = match url.find("://") {
        Some(i) if i > 0 && url[..i].chars().all(|c| c.is_ascii_alphanumeric() || "+-.".contains(c)) => &url[i + 3..],
        _ => url,
    };
    let split = rest.find(['/', '?', '#']).unwrap_or(rest.len());
    let (authority, path) = rest.split_at(split);

    let host = authority.rsplit_once('@').map_or(authority, |(_, h)| h);
    let host = host.split_once(':').map_or(host, |(h, _)| h);
    let mut labels: Vec<String> = host
        .split('.')
        .filter(|l| !l.is_empty())
        .map(str::to_lowercase)
        .collect();
    if labels.len() > 1 {
        let last = labels.last().map(String::as_str).unwrap_or_default();
        let country = last.len() == 2 && last.chars().all(|c| c.is_ascii_alphabetic());
        if country || GENERIC_TLDS.contains(&last) {
            labels.pop();
        }
    }

    let mut out: Vec<String> = labels
        .iter()
        .filter(|l| l.as_str() != "www")
        .flat_map(|l| tokenize(l))
        .collect();

    let query_at = path.find(['?', '#']).unwrap_or(path.len());
    let (path, query) = path.split_at(query_at);
    for segment in path.split('/') {
        let segment = match segment.rsplit_once('.') {
            Some((stem, ext)) if PAGE_EXTENSIONS.contains(&ext.to_ascii_lowercase().as_str()) => stem,
            _ => segment,
        };
        out.extend(tokenize(segment));
    }
    out.extend(tokenize(query));
    out
}

/// Counts every token of `doc` in the zone it occurs in.
pub fn extract_zones(doc: &RawDocument) -> ZonedTermCounts {
    zone_counts(&doc.entry.doc_id, &doc.entry.url, &doc.body)
}

/// Same as [`extract_zones`], for HTML that is not wrapped in a [`RawDocument`].
pub fn zone_counts(doc_id: &str, url: &str, html: &str) -> ZonedTermCounts {
    let mut counts = ZonedTermCounts::new(doc_id, url);
    for term in url_tokens(url) {
        counts.add(&term, Zone::Url, 1);
    }
    for (zone, text) in zoned_text(html) {
        for term in tokenize(&text) {
            counts.add(&term, zone, 1);
        }
    }
    counts
}

/// Splits HTML into decoded text segments labelled with their zone.
pub fn zoned_text(html: &str) -> Vec<(Zone, String)> {
    let mut scanner = Scanner {
        src: html,
        bytes: html.as_bytes(),
        pos: 0,
        text_start: 0,
        h1_depth: 0,
        out: Vec::new(),
    };
    scanner.run();
    scanner.out
}

struct Scanner<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    text_start: usize,
    h1_depth: usize,
    out: Vec<(Zone, String)>,
}

struct Tag {
    name: String,
    attrs: Vec<(String, String)>,
    self_closing: bool,
}

impl Tag {
    fn attr(&self, name: &str) -> Option<&str> {
        self.attrs.iter().find(|(k, _)| k == name).map(|(_, v)| v.as_str())
    }
}

impl<'a> Scanner<'a> {
    fn run(&mut self) {
        while self.pos < self.bytes.len() {
            if self.bytes[self.pos] != b'<' {
                self.pos += 1;
                continue;
            }
            let next = self.bytes.get(self.pos + 1).copied();
            let after = self.bytes.get(self.pos + 2).copied();
            match next {
                Some(b'!') if self.src[self.pos..].starts_with("<!--") => {
                    self.flush();
                    self.pos = find_from(self.src, self.pos + 4, "-->").map_or(self.bytes.len(), |e| e + 3);
                    self.text_start = self.pos;
                }
                Some(b'!') | Some(b'?') => {
                    self.flush();
                    self.pos = find_byte(self.bytes, self.pos, b'>').map_or(self.bytes.len(), |e| e + 1);
                    self.text_start = self.pos;
                }
                Some(b'/') if after.is_some_and(|c| c.is_ascii_alphabetic()) => {
                    self.flush();
                    let (tag, end) = parse_tag(self.src, self.pos + 2);
                    if tag.name == "h1" {
                        self.h1_depth = self.h1_depth.saturating_sub(1);
                    }
                    self.pos = end;
                    self.text_start = end;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    self.flush();
                    let (tag, end) = parse_tag(self.src, self.pos + 1);
                    self.pos = end;
                    self.text_start = end;
                    self.start_tag(tag);
                }
                _ => self.pos += 1,
            }
        }
        self.flush();
    }

    fn start_tag(&mut self, tag: Tag) {
        match tag.name.as_str() {
            "script" | "style" if !tag.self_closing => {
                self.skip_raw_text(&tag.name);
            }
            "title" if !tag.self_closing => {
                let body_start = self.pos;
                let body_end = self.skip_raw_text("title");
                let text = decode(&self.src[body_start..body_end]);
                self.out.push((Zone::Title, text));
            }
            "h1" if !tag.self_closing => self.h1_depth += 1,
            "meta" => {
                let name = tag.attr("name").map(str::trim).unwrap_or_default();
                if name.eq_ignore_ascii_case("keywords") || name.eq_ignore_ascii_case("description") {
                    if let Some(content) = tag.attr("content") {
                        self.out.push((Zone::Meta, content.to_string()));
                    }
                }
            }
            _ => {}
        }
    }

    /// Skips to just past `</name ...>` and returns where the raw text ended.
    fn skip_raw_text(&mut self, name: &str) -> usize {
        let close = format!("</{name}");
        let mut from = self.pos;
        let body_end = loop {
            match find_ascii_ci(self.bytes, from, close.as_bytes()) {
                Some(at) => {
                    let boundary = self.bytes.get(at + close.len()).copied();
                    if boundary.is_none_or(|b| !b.is_ascii_alphanumeric()) {
                        break at;
                    }
                    from = at + 1;
                }
                None => break self.bytes.len(),
            }
        };
        self.pos = find_byte(self.bytes, body_end, b'>').map_or(self.bytes.len(), |e| e + 1);
        self.text_start = self.pos;
        body_end
    }

    fn flush(&mut self) {
        if self.text_start < self.pos {
            let zone = if self.h1_depth > 0 { Zone::H1 } else { Zone::Other };
            let raw = &self.src[self.text_start..self.pos];
            if !raw.trim().is_empty() {
                self.out.push((zone, decode(raw)));
            }
        }
        self.text_start = self.pos;
    }
}

fn decode(raw: &str) -> String {
    html_escape::decode_html_entities(raw).into_owned()
}

fn find_from(src: &str, from: usize, needle: &str) -> Option<usize> {
    src.get(from..)?.find(needle).map(|i| i + from)
}

fn find_byte(bytes: &[u8], from: usize, b: u8) -> Option<usize> {
    bytes.get(from..)?.iter().position(|&c| c == b).map(|i| i + from)
}

fn find_ascii_ci(bytes: &[u8], from: usize, needle: &[u8]) -> Option<usize> {
    if needle.is_empty() || from >= bytes.len() {
        return None;
    }
    bytes[from..]
        .windows(needle.len())
        .position(|w| w.eq_ignore_ascii_case(needle))
        .map(|i| i + from)
}

/// Parses a tag starting at its name; returns the tag and the offset just
/// past its closing `>` (or end of input).
fn parse_tag(src: &str, name_start: usize) -> (Tag, usize) {
    let bytes = src.as_bytes();
    let len = bytes.len();
    let mut i = name_start;
    while i < len && !bytes[i].is_ascii_whitespace() && bytes[i] != b'>' && bytes[i] != b'/' {
        i += 1;
    }
    let name = src[name_start..i].to_ascii_lowercase();
    let mut attrs = Vec::new();
    let mut self_closing = false;

    loop {
        while i < len && (bytes[i].is_ascii_whitespace() || bytes[i] == b'/') {
            self_closing = bytes[i] == b'/';
            i += 1;
        }
        if i >= len {
            break;
        }
        if bytes[i] == b'>' {
            i += 1;
            break;
        }
        let key_start = i;
        while i < len && !bytes[i].is_ascii_whitespace() && !matches!(bytes[i], b'=' | b'>' | b'/') {
            i += 1;
        }
        let key = src[key_start..i].to_ascii_lowercase();
        while i < len && bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        let mut value = String::new();
        if i < len && bytes[i] == b'=' {
            i += 1;
            while i < len && bytes[i].is_ascii_whitespace() {
                i += 1;
            }
            if i < len && (bytes[i] == b'"' || bytes[i] == b'\'') {
                let quote = bytes[i];
                let v_start = i + 1;
                let v_end = find_byte(bytes, v_start, quote).unwrap_or(len);
                value = decode(&src[v_start..v_end]);
                i = (v_end + 1).min(len);
            } else {
                let v_start = i;
                while i < len && !bytes[i].is_ascii_whitespace() && bytes[i] != b'>' {
                    i += 1;
                }
                value = decode(&src[v_start..i]);
            }
        }
        self_closing = false;
        if !key.is_empty() {
            attrs.push((key, value));
        }
    }
    (
        Tag {
            name,
            attrs,
            self_closing,
        },
        i,
    )
}
