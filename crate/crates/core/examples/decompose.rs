//! Splits a graph into blocks and prints the DFS table.
//!
//!     cargo run --example decompose [graph-file]

use mvd::io::read_graph;
use mvd::{decompose, Result};

fn main() -> Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/resources/example_2_2.txt").into());
    let g = read_graph(&path)?.graph;
    let dec = decompose(&g)?;

    println!("{} vertices, {} edges", g.order(), g.size());
    let cuts: Vec<&str> = dec.cut_vertices.iter().map(|&v| g.label(v)).collect();
    println!("cut vertices: {cuts:?}");
    for (i, b) in dec.blocks.iter().enumerate() {
        println!("block {}: {:?} ({:?}, {} edges)", i + 1, b.sorted_labels(), b.kind, b.graph.size());
    }

    println!("\nvertex  dfs  low  parent");
    for v in g.vertices() {
        let r = dec.records[v];
        let parent = r.parent.map_or("-", |p| g.label(p));
        println!("{:>6} {:>4} {:>4}  {parent}", g.label(v), r.dfs_number, r.low);
    }
    Ok(())
}
