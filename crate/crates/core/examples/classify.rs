//! Classifies a few graphs whose blocks are minimal and triangle-free.

use mvd::analysis::classify;
use mvd::catalog::theta_graph;
use mvd::{Graph, Result};

fn with_tail(mut g: Graph, len: usize) -> Result<Graph> {
    let mut prev = 0;
    for i in 0..len {
        let v = g.add_vertex(&format!("t{i}"))?;
        g.add_edge(prev, v)?;
        prev = v;
    }
    Ok(g)
}

fn main() -> Result<()> {
    let cases = [
        ("path", Graph::path(6)),
        ("C4 + tail", with_tail(Graph::cycle(4), 3)?),
        ("K2,3 + tail", with_tail(theta_graph(&[1, 1, 1])?, 2)?),
        ("P(3,1,1) + tail", with_tail(theta_graph(&[3, 1, 1])?, 2)?),
        ("P(5,1,1)", theta_graph(&[5, 1, 1])?),
        ("C10 + tail", with_tail(Graph::cycle(10), 1)?),
    ];
    for (name, g) in cases {
        let c = classify(&g, None)?;
        println!(
            "{name:<16} n={:<2} mvd={:<2} regime {:<4} {} {:?}",
            c.n, c.mvd, c.regime.to_string(), c.family, c.core_shapes
        );
    }
    match classify(&Graph::complete(4), None) {
        Err(e) => println!("K4: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
