//! Upper bounds next to exact values.

use mvd::analysis::{bound_blocks, bound_half_order};
use mvd::catalog::theta_graph;
use mvd::solve::mvd_via_blocks;
use mvd::{Graph, Result};

fn main() -> Result<()> {
    let two_squares = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)])?;
    let cases = [
        ("C10", Graph::cycle(10)),
        ("K2,3", theta_graph(&[1, 1, 1])?),
        ("P(3,3,1)", theta_graph(&[3, 3, 1])?),
        ("two C4", two_squares),
        ("path", Graph::path(7)),
        ("K4", Graph::complete(4)),
    ];
    for (name, g) in cases {
        let mvd = mvd_via_blocks(&g, None)?.result.value;
        println!("{name:<9} mvd {mvd}");
        println!("          {}", bound_half_order(&g));
        println!("          {}", bound_blocks(&g)?);
    }
    Ok(())
}
