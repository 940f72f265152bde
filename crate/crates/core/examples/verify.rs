//! Checks colorings against the definition and prints certificates.
//!
//!     cargo run --example verify

use mvd::io::{parse_coloring, read_graph};
use mvd::verify::monochromatic_cut_exists;
use mvd::{is_mvd_coloring, Graph, Result, VertexColoring};

fn report(g: &Graph, c: &VertexColoring) -> Result<()> {
    let v = is_mvd_coloring(g, c)?;
    match v.witness {
        None => println!("PASS, {} nonadjacent pairs certified", v.certificate.len()),
        Some((x, y)) => println!("FAIL: nothing monochromatic separates {} and {}", g.label(x), g.label(y)),
    }
    Ok(())
}

fn main() -> Result<()> {
    let root = env!("CARGO_MANIFEST_DIR");
    let g = read_graph(format!("{root}/resources/example_2_2.txt"))?.graph;
    let printed = parse_coloring(&std::fs::read_to_string(format!("{root}/resources/example_2_2_coloring.txt"))?, &g)?;
    print!("example graph, printed coloring: ");
    report(&g, &printed)?;
    let (a, o) = (g.vertex("A")?, g.vertex("O")?);
    println!("  A-O separated by color {:?}", monochromatic_cut_exists(&g, &printed, a, o)?);

    let c4 = Graph::cycle(4);
    print!("C4 with 1,2,1,3: ");
    report(&c4, &VertexColoring::new(vec![1, 2, 1, 3])?)?;
    print!("C4 with 1,2,1,2: ");
    report(&c4, &VertexColoring::new(vec![1, 2, 1, 2])?)?;
    print!("K5 with one color: ");
    report(&Graph::complete(5), &VertexColoring::uniform(5, 1))?;
    Ok(())
}
