//! The `swvm` command line.
//!
//! Exit status is 0 on success, 1 for usage errors and 2 for data errors.
//! Every error is reported on stderr as a single line starting with `error:`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::index::{build_index, load_index, save_index};
use crate::ingest::load_manifest;
use crate::search::{compare, explain, search, RankedResult};
use crate::thesaurus::Thesaurus;
use crate::weighting::{BoostProfile, Scheme};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "swvm",
    version,
    about = "Index and search HTML collections with zone-boosted, synonym-aware weights"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build an index from a manifest of HTML files and save it
    Index {
        /// Manifest file: doc_id<TAB>url<TAB>path per line
        #[arg(long)]
        manifest: PathBuf,
        /// Thesaurus file: `head: syn1, syn2` per line
        #[arg(long)]
        thesaurus: PathBuf,
        /// Where to write the index
        #[arg(long)]
        out: PathBuf,
        /// Weighting scheme: btf-idf or tf-idf
        #[arg(long, default_value = "btf-idf", value_parser = parse_scheme)]
        scheme: Scheme,
        /// Zone boost overrides, e.g. title=18,meta=16,h1=14,url=18,other=1
        #[arg(long, value_parser = parse_boost)]
        boost: Option<BoostProfile>,
    },
    /// Rank documents against a query
    Query {
        /// Index file written by `index`
        #[arg(long)]
        index: PathBuf,
        /// Number of results to print
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        top: u64,
        /// Query text
        #[arg(required = true, num_args = 1..)]
        query: Vec<String>,
    },
    /// Print how every term weight of one document was computed
    Explain {
        /// Index file written by `index`
        #[arg(long)]
        index: PathBuf,
        /// Document id to explain
        #[arg(long)]
        doc: String,
    },
    /// Run one query against two indexes of the same collection
    Compare {
        /// First index (printed with prefix `a`)
        #[arg(long = "index-a")]
        index_a: PathBuf,
        /// Second index (printed with prefix `b`)
        #[arg(long = "index-b")]
        index_b: PathBuf,
        /// Number of results per index
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        top: u64,
        /// Query text
        #[arg(required = true, num_args = 1..)]
        query: Vec<String>,
    },
}

fn parse_scheme(s: &str) -> Result<Scheme, String> {
    s.parse().map_err(|e: crate::weighting::WeightError| e.to_string())
}

fn parse_boost(s: &str) -> Result<BoostProfile, String> {
    s.parse().map_err(|e: crate::weighting::WeightError| e.to_string())
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(out, "{e}");
                    if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                        EXIT_USAGE
                    } else {
                        EXIT_OK
                    }
                }
                _ => {
                    let text = e.to_string();
                    let first = text.lines().next().unwrap_or_default();
                    let first = first.strip_prefix("error: ").unwrap_or(first);
                    let _ = writeln!(err, "error: {first}");
                    EXIT_USAGE
                }
            };
        }
    };

    match execute(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(msg) => {
            let _ = writeln!(err, "error: {}", msg.replace('\n', " "));
            EXIT_DATA
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), String> {
    let s = |e: &dyn std::fmt::Display| e.to_string();
    match command {
        Command::Index {
            manifest,
            thesaurus,
            out: path,
            scheme,
            boost,
        } => {
            let entries = load_manifest(&manifest).map_err(|e| s(&e))?;
            let thesaurus = Thesaurus::load(&thesaurus).map_err(|e| s(&e))?;
            let profile = boost.unwrap_or_default();
            let report = build_index(&entries, &thesaurus, &profile, scheme).map_err(|e| s(&e))?;
            for f in &report.failures {
                let _ = writeln!(err, "warning: skipped {f}");
            }
            save_index(&report.index, &path).map_err(|e| s(&e))?;
            let _ = writeln!(
                out,
                "indexed {} documents ({} skipped) with {} into {}",
                report.index.stats.n,
                report.failures.len(),
                scheme,
                path.display()
            );
        }
        Command::Query { index, top, query } => {
            let index = load_index(&index).map_err(|e| s(&e))?;
            print_results(out, None, &search(&index, &query.join(" "), top as usize));
        }
        Command::Explain { index, doc } => {
            let index = load_index(&index).map_err(|e| s(&e))?;
            let e = explain(&index, &doc).map_err(|e| s(&e))?;
            let _ = write!(out, "{}", e.to_table());
        }
        Command::Compare {
            index_a,
            index_b,
            top,
            query,
        } => {
            let a = load_index(&index_a).map_err(|e| s(&e))?;
            let b = load_index(&index_b).map_err(|e| s(&e))?;
            let c = compare(&a, &b, &query.join(" "), top as usize).map_err(|e| s(&e))?;
            print_results(out, Some("a"), &c.a);
            print_results(out, Some("b"), &c.b);
        }
    }
    Ok(())
}

fn print_results(out: &mut dyn Write, prefix: Option<&str>, results: &[RankedResult]) {
    for (rank, r) in results.iter().enumerate() {
        if let Some(p) = prefix {
            let _ = write!(out, "{p}\t");
        }
        let _ = writeln!(out, "{}\t{:.4}\t{}\t{}", rank + 1, r.score, r.doc_id, r.url);
    }
}
