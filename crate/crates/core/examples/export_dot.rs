//! Solves a graph and writes it as Graphviz DOT with color classes filled.
//!
//!     cargo run --example export_dot [graph-file] > g.dot && dot -Tsvg g.dot

use mvd::io::{read_graph, to_dot};
use mvd::solve::{solve, Strategy};
use mvd::Result;

fn main() -> Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/resources/example_2_2.txt").into());
    let g = read_graph(&path)?.graph;
    let sol = solve(&g, Strategy::Auto, None)?;
    print!("{}", to_dot(&g, Some(&sol.result.coloring.renumbered())));
    Ok(())
}
