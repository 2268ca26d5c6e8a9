//! Writes the 100-page demo collection (manifest, thesaurus, HTML pages).
//!
//! ```bash
//! cargo run -p swvm --example write_demo_collection -- crates/core/fixtures/demo
//! ```

use std::path::PathBuf;

fn main() -> std::io::Result<()> {
    let dir = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/demo"));
    let manifest = swvm::sample::write_demo_collection(&dir)?;
    println!("wrote {}", manifest.display());
    Ok(())
}
