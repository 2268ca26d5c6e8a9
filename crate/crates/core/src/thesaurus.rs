//! Synonym lists loaded from a plain-text thesaurus.
//!
//! ```text
//! # head: synonym, synonym, ...
//! optimize: enhance, improve, boost
//! check: examine, test, try
//! ```
//!
//! Lookups are directional: `optimize` lists `improve`, but `improve` has no
//! entry unless the file gives it one.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::zoner::tokenize;

#[derive(Debug, Error)]
pub enum ThesaurusError {
    #[error("cannot read thesaurus {path}: {source}")]
    Unreadable {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("thesaurus line {line}: expected `head: synonym, ...`")]
    Malformed { line: usize },
    #[error("thesaurus line {line}: {text:?} is not a single token")]
    NotSingleToken { line: usize, text: String },
    #[error("thesaurus line {line}: duplicate head {head:?} (first defined on line {first})")]
    DuplicateHead { line: usize, first: usize, head: String },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Thesaurus {
    entries: HashMap<String, Vec<String>>,
}

impl Thesaurus {
    pub fn new() -> Self {
        Thesaurus::default()
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, ThesaurusError> {
        let path = path.as_ref();
        let text = fs::read(path)
            .and_then(|b| String::from_utf8(b).map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e)))
            .map_err(|source| ThesaurusError::Unreadable {
                path: path.to_path_buf(),
                source,
            })?;
        text.parse()
    }

    /// Synonyms of `term` in file order; empty for unknown terms.
    pub fn synonyms(&self, term: &str) -> &[String] {
        self.entries.get(term).map_or(&[], Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Adds or replaces an entry. The head is dropped from its own list and
    /// repeated synonyms keep their first position.
    pub fn insert(&mut self, head: impl Into<String>, synonyms: impl IntoIterator<Item = String>) {
        let head = head.into();
        let mut list: Vec<String> = Vec::new();
        for s in synonyms {
            if s != head && !list.contains(&s) {
                list.push(s);
            }
        }
        self.entries.insert(head, list);
    }
}

impl std::str::FromStr for Thesaurus {
    type Err = ThesaurusError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut th = Thesaurus::new();
        let mut first_seen: HashMap<String, usize> = HashMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (head, rest) = trimmed.split_once(':').ok_or(ThesaurusError::Malformed { line })?;
            let head = single_token(head, line)?;
            let synonyms = rest
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| single_token(s, line))
                .collect::<Result<Vec<_>, _>>()?;
            match first_seen.entry(head.clone()) {
                Entry::Occupied(first) => {
                    return Err(ThesaurusError::DuplicateHead {
                        line,
                        first: *first.get(),
                        head,
                    })
                }
                Entry::Vacant(slot) => {
                    slot.insert(line);
                }
            }
            th.insert(head, synonyms);
        }
        Ok(th)
    }
}

fn single_token(text: &str, line: usize) -> Result<String, ThesaurusError> {
    let mut tokens = tokenize(text);
    if tokens.len() != 1 {
        return Err(ThesaurusError::NotSingleToken {
            line,
            text: text.trim().to_string(),
        });
    }
    Ok(tokens.remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const PAGE_THESAURUS: &str = "\
# synonyms for the optimize page
computer: workstation, PC, processor
microsoft:
disk: hard-disk, diskette
check: examine, test, try
windows: windows
error: fault, mistake, bug, glitch
performance: execution, efficiency, speed
optimize: enhance, improve, boost
";

    #[test]
    fn parses_entries_in_file_order() {
        let th: Thesaurus = "optimize: enhance, improve, boost".parse().unwrap();
        assert_eq!(th.synonyms("optimize"), ["enhance", "improve", "boost"]);
        let th: Thesaurus = "check: examine, test, try".parse().unwrap();
        assert_eq!(th.synonyms("check"), ["examine", "test", "try"]);
    }

    #[test]
    fn lookups() {
        let th: Thesaurus = PAGE_THESAURUS.parse().unwrap();
        assert_eq!(th.len(), 8);
        assert_eq!(th.synonyms("performance"), ["execution", "efficiency", "speed"]);
        assert_eq!(th.synonyms("computer"), ["workstation", "pc", "processor"]);
        assert_eq!(th.synonyms("disk"), ["hard-disk", "diskette"]);
        assert!(th.synonyms("microsoft").is_empty());
        assert!(th.synonyms("windows").is_empty());
        assert!(th.synonyms("zzz-unknown").is_empty());
        // directional
        assert!(th.synonyms("improve").is_empty());
    }

    #[test]
    fn empty_input() {
        assert!("".parse::<Thesaurus>().unwrap().is_empty());
        assert!("# only a comment\n\n".parse::<Thesaurus>().unwrap().is_empty());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = "a: b\nno colon here\n".parse::<Thesaurus>().unwrap_err();
        assert!(matches!(err, ThesaurusError::Malformed { line: 2 }));

        let err = "fast car: auto".parse::<Thesaurus>().unwrap_err();
        assert!(matches!(err, ThesaurusError::NotSingleToken { line: 1, .. }));

        let err = "car: motor vehicle".parse::<Thesaurus>().unwrap_err();
        assert!(matches!(err, ThesaurusError::NotSingleToken { line: 1, .. }));

        let err = "car: auto\n# c\ncar: vehicle".parse::<Thesaurus>().unwrap_err();
        assert!(matches!(err, ThesaurusError::DuplicateHead { line: 3, first: 1, .. }));
    }

    #[test]
    fn duplicates_and_self_references_are_dropped() {
        let th: Thesaurus = "Car: auto, car, AUTO, vehicle".parse().unwrap();
        assert_eq!(th.synonyms("car"), ["auto", "vehicle"]);
    }

    #[test]
    fn missing_file() {
        assert!(matches!(
            Thesaurus::load("/no/such/thesaurus.txt"),
            Err(ThesaurusError::Unreadable { .. })
        ));
    }

    proptest! {
        #[test]
        fn no_term_is_its_own_synonym(
            lines in proptest::collection::vec(("[a-e]{1,2}", proptest::collection::vec("[a-e]{1,2}", 0..5)), 0..12)
        ) {
            let mut th = Thesaurus::new();
            for (head, syns) in lines {
                th.insert(head, syns);
            }
            for term in ["a", "b", "ab", "e", "ee"] {
                let syns = th.synonyms(term);
                prop_assert!(!syns.iter().any(|s| s == term));
                let mut dedup = syns.to_vec();
                dedup.dedup();
                dedup.sort();
                dedup.dedup();
                prop_assert_eq!(dedup.len(), syns.len());
            }
        }
    }
}
