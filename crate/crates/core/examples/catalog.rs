//! Generates the minimally 2-connected graphs, solves them and prints the
//! census. Pass a directory to also save the catalog there.
//!
//!     cargo run --release --example catalog [max-order] [out-dir]

use mvd::catalog::{build_catalog, save_catalog};
use mvd::Result;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let max: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(8);
    let cat = build_catalog(max)?;
    print!("{}", cat.census());
    if let Some(dir) = args.next() {
        save_catalog(&cat, &dir)?;
        println!("\nsaved {} entries to {dir}", cat.len());
    }
    Ok(())
}
