//! Computes mvd(G) three ways and shows the block-by-block trail.
//!
//!     cargo run --release --example solve [graph-file] [catalog-dir]

use mvd::catalog::load_catalog;
use mvd::io::read_graph;
use mvd::solve::{counting_formula_result, mvd_exact, mvd_via_blocks, EXACT_MAX_ORDER};
use mvd::Result;

fn main() -> Result<()> {
    let root = env!("CARGO_MANIFEST_DIR");
    let mut args = std::env::args().skip(1);
    let path = args.next().unwrap_or_else(|| format!("{root}/resources/example_2_2.txt"));
    let cat_dir = args.next().unwrap_or_else(|| format!("{root}/resources/catalog"));

    let g = read_graph(&path)?.graph;
    let catalog = load_catalog(&cat_dir)?;
    println!("catalog: {} entries from {cat_dir}", catalog.len());

    let sol = mvd_via_blocks(&g, Some(&catalog))?;
    for (b, r) in sol.decomposition.blocks.iter().zip(&sol.per_block) {
        let via = r.catalog_id.as_deref().map_or(r.result.method.to_string(), |id| format!("catalog {id}"));
        println!("  {:?}: mvd {} via {via}", b.sorted_labels(), r.result.value);
    }
    println!("block-composed mvd = {}", sol.result.value);
    if let Ok(v) = counting_formula_result(&sol) {
        println!("counting formula    = {v}");
    }

    if g.order() <= EXACT_MAX_ORDER {
        println!("exact search        = {}", mvd_exact(&g)?.value);
    }

    let c = sol.result.coloring.renumbered();
    let mut labels: Vec<_> = g.vertices().collect();
    labels.sort_by_key(|&v| g.label(v));
    let line: Vec<String> = labels.iter().map(|&v| format!("{}:{}", g.label(v), c.color(v))).collect();
    println!("coloring: {}", line.join(" "));
    Ok(())
}
