//! Matches the example's blocks against the resource catalog and pulls the
//! stored colorings across.

use mvd::catalog::load_catalog;
use mvd::io::read_graph;
use mvd::iso::{canonical_form, transfer_coloring};
use mvd::{decompose, is_mvd_coloring, Result};

fn main() -> Result<()> {
    let root = env!("CARGO_MANIFEST_DIR");
    let g = read_graph(format!("{root}/resources/example_2_2.txt"))?.graph;
    let cat = load_catalog(format!("{root}/resources/catalog"))?;

    for b in &decompose(&g)?.blocks {
        println!("block {:?}", b.sorted_labels());
        println!("  key {}", canonical_form(&b.graph)?);
        let Some((entry, m)) = cat.lookup(&b.graph) else {
            println!("  no catalog match");
            continue;
        };
        println!("  matches {}", entry.id);
        for v in b.graph.vertices() {
            println!("    {} -> {}", b.graph.label(v), entry.graph.label(m.image(v)));
        }
        let c = transfer_coloring(&m, &entry.coloring);
        println!("  transferred coloring verifies: {}", is_mvd_coloring(&b.graph, &c)?.ok);
    }
    Ok(())
}
