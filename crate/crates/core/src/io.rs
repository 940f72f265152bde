//! Text formats: adjacency matrix (optionally with colors), edge list,
//! `label:color` colorings and Graphviz DOT.
//!
//! Matrix format:
//!
//! ```text
//! a:1, b:2, c:1, d:2
//! 0, 1, 0, 1
//! 1, 0, 1, 0
//! 0, 1, 0, 1
//! 1, 0, 1, 0
//! ```
//!
//! The first line lists labels, each optionally suffixed with `:color`; the
//! following lines are the rows of a symmetric 0/1 matrix with zero
//! diagonal. Whitespace around tokens is ignored, blank lines and `//`
//! comment lines are skipped. Rows may also be whitespace separated.
//!
//! Edge-list format:
//!
//! ```text
//! n 4
//! v a
//! a b
//! b c
//! ```
//!
//! `n <count>` comes first; `v <label>` declares a vertex (needed for
//! isolated ones), any other line is an edge `labelU labelV`. Vertices are
//! numbered in order of first mention.

use std::fmt::Write as _;
use std::path::Path;

use crate::coloring::{Color, VertexColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Graph read from a matrix document, with its coloring when the header
/// carried one.
#[derive(Clone, Debug)]
pub struct ColoredGraph {
    pub graph: Graph,
    pub coloring: Option<VertexColoring>,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let t = l.trim();
        (!t.is_empty() && !t.starts_with("//") && !t.starts_with('#')).then_some((i + 1, t))
    })
}

fn split_row(line: &str) -> Vec<&str> {
    if line.contains(',') {
        line.split(',').map(str::trim).collect()
    } else {
        line.split_whitespace().collect()
    }
}

fn parse_color(tok: &str, line: usize, col: usize) -> Result<Color> {
    match tok.trim().parse::<Color>() {
        Ok(c) if c > 0 => Ok(c),
        _ => Err(Error::parse(line, col, format!("bad color {:?}; expected a positive integer", tok.trim()))),
    }
}

/// Parses the adjacency-matrix format.
pub fn parse_matrix(text: &str) -> Result<ColoredGraph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, 1, "empty document: expected a label line"))?;

    let mut labels = Vec::new();
    let mut colors = Vec::new();
    for (i, tok) in header.split(',').enumerate() {
        let col = i + 1;
        let (label, color) = match tok.split_once(':') {
            Some((l, c)) => (l.trim(), Some(parse_color(c, hline, col)?)),
            None => (tok.trim(), None),
        };
        if label.is_empty() || label.chars().any(char::is_whitespace) {
            return Err(Error::parse(hline, col, format!("malformed label {:?}", tok.trim())));
        }
        if labels.contains(&label) {
            return Err(Error::parse(hline, col, format!("duplicate label {label:?}")));
        }
        labels.push(label);
        colors.push(color);
    }
    let colored = colors.iter().filter(|c| c.is_some()).count();
    if colored != 0 && colored != colors.len() {
        return Err(Error::parse(hline, 1, "either every label or no label carries a color"));
    }

    let n = labels.len();
    let mut rows: Vec<(usize, Vec<bool>)> = Vec::with_capacity(n);
    for (lno, line) in lines {
        if rows.len() == n {
            return Err(Error::parse(lno, 1, format!("matrix is not square: more than {n} rows")));
        }
        let toks = split_row(line);
        if toks.len() != n {
            return Err(Error::parse(
                lno,
                toks.len().min(n) + 1,
                format!("matrix is not square: row has {} entries, expected {n}", toks.len()),
            ));
        }
        let mut row = Vec::with_capacity(n);
        for (j, t) in toks.iter().enumerate() {
            row.push(match *t {
                "0" => false,
                "1" => true,
                other => return Err(Error::parse(lno, j + 1, format!("malformed entry {other:?}; expected 0 or 1"))),
            });
        }
        rows.push((lno, row));
    }
    if rows.len() != n {
        let lno = rows.last().map_or(hline, |r| r.0);
        return Err(Error::parse(lno, 1, format!("matrix is not square: {} rows for {n} labels", rows.len())));
    }

    let mut graph = Graph::with_labels(&labels).map_err(|e| Error::parse(hline, 1, e.to_string()))?;
    for i in 0..n {
        let (lno, row) = &rows[i];
        if row[i] {
            return Err(Error::parse(*lno, i + 1, format!("nonzero diagonal at {}", labels[i])));
        }
        for j in 0..n {
            if row[j] != rows[j].1[i] {
                return Err(Error::parse(
                    *lno,
                    j + 1,
                    format!("asymmetric matrix: ({}, {}) differs from ({}, {})", labels[i], labels[j], labels[j], labels[i]),
                ));
            }
            if j > i && row[j] {
                graph.add_edge(i, j)?;
            }
        }
    }
    let coloring = if colored == n && n > 0 {
        Some(VertexColoring::new(colors.into_iter().map(Option::unwrap).collect())?)
    } else {
        None
    };
    Ok(ColoredGraph { graph, coloring })
}

/// Writes the matrix format, with a colored header when `coloring` is given.
pub fn write_matrix(g: &Graph, coloring: Option<&VertexColoring>) -> String {
    let mut out = String::new();
    let header: Vec<String> = g
        .vertices()
        .map(|v| match coloring {
            Some(c) => format!("{}:{}", g.label(v), c.color(v)),
            None => g.label(v).to_string(),
        })
        .collect();
    out.push_str(&header.join(", "));
    out.push('\n');
    for u in g.vertices() {
        let row: Vec<&str> = g.vertices().map(|v| if g.adjacent(u, v) { "1" } else { "0" }).collect();
        out.push_str(&row.join(", "));
        out.push('\n');
    }
    out
}

/// Parses the edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (nline, first) = lines.next().ok_or_else(|| Error::parse(1, 1, "empty document: expected `n <count>`"))?;
    let count = match first.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", c] => c
            .parse::<usize>()
            .map_err(|_| Error::parse(nline, 3, format!("bad vertex count {c:?}")))?,
        _ => return Err(Error::parse(nline, 1, "first line must be `n <count>`")),
    };
    let mut g = Graph::with_labels(Vec::<String>::new())?;
    let mut edges = Vec::new();
    fn ensure(g: &mut Graph, label: &str, lno: usize, col: usize) -> Result<usize> {
        match g.vertex(label) {
            Ok(v) => Ok(v),
            Err(_) => g.add_vertex(label).map_err(|e| Error::parse(lno, col, e.to_string())),
        }
    }
    for (lno, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[..] {
            ["v", l] => {
                if g.vertex(l).is_ok() {
                    return Err(Error::parse(lno, 3, format!("vertex {l:?} declared twice")));
                }
                ensure(&mut g, l, lno, 3)?;
            }
            ["n", _] => return Err(Error::parse(lno, 1, "repeated `n` line")),
            [a, b] => {
                let u = ensure(&mut g, a, lno, 1)?;
                let v = ensure(&mut g, b, lno, 2)?;
                if u == v {
                    return Err(Error::parse(lno, 1, format!("self-loop at {a:?}")));
                }
                edges.push((u, v));
            }
            _ => return Err(Error::parse(lno, 1, format!("malformed line {line:?}; expected `labelU labelV`"))),
        }
    }
    if g.order() != count {
        return Err(Error::parse(nline, 3, format!("declared {count} vertices, found {}", g.order())));
    }
    for (u, v) in edges {
        g.add_edge(u, v)?;
    }
    Ok(g)
}

/// Writes the edge-list format. Every vertex is declared with a `v` line so
/// that vertex order survives a round trip.
pub fn write_edge_list(g: &Graph) -> Result<String> {
    let mut out = format!("n {}\n", g.order());
    for v in g.vertices() {
        let l = g.label(v);
        if l == "n" || l == "v" {
            return Err(Error::InvalidGraph(format!("label {l:?} is reserved in the edge-list format")));
        }
        writeln!(out, "v {l}").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", g.label(u), g.label(v)).unwrap();
    }
    Ok(out)
}

/// Reads either format, choosing by the first content line.
pub fn parse_graph(text: &str) -> Result<ColoredGraph> {
    let first = content_lines(text).next().map(|(_, l)| l).unwrap_or("");
    let mut toks = first.split_whitespace();
    if toks.next() == Some("n") && toks.next().is_some_and(|t| t.parse::<usize>().is_ok()) && toks.next().is_none() {
        Ok(ColoredGraph {
            graph: parse_edge_list(text)?,
            coloring: None,
        })
    } else {
        parse_matrix(text)
    }
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<ColoredGraph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

/// Parses a coloring of `g`: `label:color` tokens separated by commas or
/// newlines, or a complete colored matrix document whose labels match `g`.
pub fn parse_coloring(text: &str, g: &Graph) -> Result<VertexColoring> {
    if let Ok(cg) = parse_matrix(text) {
        if cg.graph.order() > 0 && cg.graph.labels().len() == g.order() && content_lines(text).count() > 1 {
            let c = cg
                .coloring
                .ok_or_else(|| Error::Coloring("matrix document carries no colors".into()))?;
            let pairs: Vec<(&str, Color)> = cg.graph.vertices().map(|v| (cg.graph.label(v), c.color(v))).collect();
            return VertexColoring::from_labels(g, &pairs);
        }
    }
    let mut pairs = Vec::new();
    for (lno, line) in content_lines(text) {
        for (i, tok) in line.split(',').enumerate() {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let (l, c) = tok
                .split_once(':')
                .ok_or_else(|| Error::parse(lno, i + 1, format!("expected `label:color`, found {tok:?}")))?;
            pairs.push((l.trim().to_string(), parse_color(c, lno, i + 1)?));
        }
    }
    VertexColoring::from_labels(g, &pairs)
}

/// `label:color` lines in label order.
pub fn write_coloring(g: &Graph, c: &VertexColoring) -> String {
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by(|&a, &b| g.label(a).cmp(g.label(b)));
    let mut out = String::new();
    for v in order {
        writeln!(out, "{}:{}", g.label(v), c.color(v)).unwrap();
    }
    out
}

const PALETTE: [&str; 12] = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd",
    "#ccebc5", "#ffed6f",
];

/// Fill color for a color id.
pub fn palette_color(c: Color) -> &'static str {
    PALETTE[(c as usize - 1) % PALETTE.len()]
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz export. Colored nodes get a palette fill and a `class="cK"`
/// attribute carrying the color id.
pub fn to_dot(g: &Graph, coloring: Option<&VertexColoring>) -> String {
    let mut out = String::from("graph G {\n");
    if coloring.is_some() {
        out.push_str("  node [style=filled];\n");
    }
    for v in g.vertices() {
        let l = dot_quote(g.label(v));
        match coloring {
            Some(c) => {
                let k = c.color(v);
                writeln!(out, "  {l} [label={l}, fillcolor=\"{}\", class=\"c{k}\"];", palette_color(k)).unwrap()
            }
            None => writeln!(out, "  {l} [label={l}];").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {} -- {};", dot_quote(g.label(u)), dot_quote(g.label(v))).unwrap();
    }
    out.push_str("}\n");
    out
}

fn dot_unquote(s: &str) -> Option<String> {
    let s = s.trim().strip_prefix('"')?.strip_suffix('"')?;
    Some(s.replace("\\\"", "\"").replace("\\\\", "\\"))
}

/// Reads back the subset of DOT written by [`to_dot`].
pub fn parse_dot(text: &str) -> Result<ColoredGraph> {
    let mut labels = Vec::new();
    let mut colors = Vec::new();
    let mut edges = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let t = line.trim().trim_end_matches(';');
        if t.is_empty() || t.starts_with("graph") || t == "}" || t.starts_with("node ") {
            continue;
        }
        if let Some((a, b)) = t.split_once(" -- ") {
            let (a, b) = (dot_unquote(a), dot_unquote(b));
            match (a, b) {
                (Some(a), Some(b)) => edges.push((a, b)),
                _ => return Err(Error::parse(i + 1, 1, "malformed edge")),
            }
        } else if let Some((name, attrs)) = t.split_once(" [") {
            let name = dot_unquote(name).ok_or_else(|| Error::parse(i + 1, 1, "malformed node"))?;
            let class = attrs.split("class=\"c").nth(1).and_then(|r| r.split('"').next());
            colors.push(match class {
                Some(k) => Some(parse_color(k, i + 1, 1)?),
                None => None,
            });
            labels.push(name);
        } else {
            return Err(Error::parse(i + 1, 1, format!("unrecognized line {t:?}")));
        }
    }
    let mut graph = Graph::with_labels(&labels)?;
    for (a, b) in edges {
        graph.add_edge_by_label(&a, &b)?;
    }
    let coloring = if !colors.is_empty() && colors.iter().all(Option::is_some) {
        Some(VertexColoring::new(colors.into_iter().map(Option::unwrap).collect())?)
    } else {
        None
    };
    Ok(ColoredGraph { graph, coloring })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const C4: &str = "a,b,c,d\n0,1,0,1\n1,0,1,0\n0,1,0,1\n1,0,1,0\n";

    #[test]
    fn parses_c4() {
        let g = parse_matrix(C4).unwrap().graph;
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 4);
        assert!(g.cycle_order().is_some());
    }

    #[test]
    fn parses_resource_file_with_colors() {
        let text = "a:1, b:2, c:1, d:2, e:1, f:2, g:1, h:1, i:2
0, 1, 0, 0, 0, 1, 0, 0, 0
1, 0, 1, 0, 0, 0, 1, 0, 0
0, 1, 0, 1, 0, 0, 0, 1, 1
0, 0, 1, 0, 1, 0, 0, 0, 0
0, 0, 0, 1, 0, 1, 0, 0, 1
1, 0, 0, 0, 1, 0, 1, 1, 0
0, 1, 0, 0, 0, 1, 0, 0, 0
0, 0, 1, 0, 0, 1, 0, 0, 0
0, 0, 1, 0, 1, 0, 0, 0, 0
";
        let cg = parse_matrix(text).unwrap();
        assert_eq!(cg.graph.order(), 9);
        let c = cg.coloring.unwrap();
        let classes = c.classes();
        let names = |k: Color| -> Vec<&str> { classes[&k].iter().map(|v| cg.graph.label(v)).collect() };
        assert_eq!(names(1), ["a", "c", "e", "g", "h"]);
        assert_eq!(names(2), ["b", "d", "f", "i"]);
    }

    fn parse_err(text: &str) -> (usize, usize, String) {
        match parse_matrix(text) {
            Err(Error::Parse { line, column, msg }) => (line, column, msg),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn matrix_errors_carry_positions() {
        let (l, _, m) = parse_err("a,b,c\n0,1,0\n1,0,1\n");
        assert_eq!(l, 3);
        assert!(m.contains("not square"), "{m}");
        let (l, _, m) = parse_err("a,b\n0,1,0\n1,0\n");
        assert_eq!(l, 2);
        assert!(m.contains("not square"));
        let (l, c, m) = parse_err("a,b\n0,1\n0,0\n");
        assert_eq!((l, c), (2, 2));
        assert!(m.contains("asymmetric"));
        let (l, c, m) = parse_err("a,b\n1,1\n1,0\n");
        assert_eq!((l, c), (2, 1));
        assert!(m.contains("diagonal"));
        let (l, c, m) = parse_err("a,b,a\n0,0,0\n0,0,0\n0,0,0\n");
        assert_eq!((l, c), (1, 3));
        assert!(m.contains("duplicate"));
        let (l, c, m) = parse_err("a,b\n0,x\n1,0\n");
        assert_eq!((l, c), (2, 2));
        assert!(m.contains("malformed"));
        let (_, _, m) = parse_err("a:1,b\n0,1\n1,0\n");
        assert!(m.contains("every label"));
        let (l, c, _) = parse_err("a:0,b:1\n0,1\n1,0\n");
        assert_eq!((l, c), (1, 1));
    }

    #[test]
    fn labels_are_case_sensitive_and_trimmed() {
        let g = parse_matrix("  A , a \n0,1\n1,0\n").unwrap().graph;
        assert_eq!(g.labels(), &["A", "a"]);
    }

    #[test]
    fn whitespace_rows() {
        let g = parse_matrix("a,b,c\n0\t1\t0\t\n1\t0\t1\t\n0\t1\t0\t\n").unwrap().graph;
        assert_eq!(g.size(), 2);
    }

    #[test]
    fn edge_list() {
        let g = parse_edge_list("n 4\nv z\na b\nb c\n").unwrap();
        assert_eq!(g.labels(), &["z", "a", "b", "c"]);
        assert_eq!(g.size(), 2);
        assert!(parse_edge_list("n 3\na b\n").is_err());
        assert!(parse_edge_list("a b\n").is_err());
        assert!(parse_edge_list("n 1\na a\n").is_err());
        let text = write_edge_list(&g).unwrap();
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert_eq!(parse_graph(&text).unwrap().graph, g);
        let reserved = Graph::with_labels(["v", "x"]).unwrap();
        assert!(write_edge_list(&reserved).is_err());
    }

    #[test]
    fn coloring_files() {
        let g = parse_matrix(C4).unwrap().graph;
        let c = parse_coloring("a:1\nb:2, c:1\nd:3\n", &g).unwrap();
        assert_eq!(c.as_slice(), &[1, 2, 1, 3]);
        assert!(matches!(parse_coloring("a:1\nb:2\n", &g), Err(Error::Coloring(_))));
        let combined = write_matrix(&g, Some(&c));
        assert_eq!(parse_coloring(&combined, &g).unwrap(), c);
        assert_eq!(parse_coloring(&write_coloring(&g, &c), &g).unwrap(), c);
    }

    #[test]
    fn dot_round_trip() {
        let g = parse_matrix(C4).unwrap().graph;
        let c = VertexColoring::new(vec![1, 2, 1, 14]).unwrap();
        let dot = to_dot(&g, Some(&c));
        assert!(dot.contains("\"a\" -- \"b\""));
        let back = parse_dot(&dot).unwrap();
        assert_eq!(back.graph, g);
        assert_eq!(back.coloring.unwrap(), c);
        assert_eq!(palette_color(1), palette_color(13));
        let plain = parse_dot(&to_dot(&g, None)).unwrap();
        assert_eq!(plain.graph, g);
        assert!(plain.coloring.is_none());
    }

    fn arb_colored_graph() -> impl Strategy<Value = (Graph, VertexColoring)> {
        (1usize..12).prop_flat_map(|n| {
            (
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
                proptest::collection::vec(1u32..6, n),
            )
                .prop_map(move |(bits, colors)| {
                    let mut g = Graph::empty(n);
                    let mut k = 0;
                    for u in 0..n {
                        for v in u + 1..n {
                            if bits[k] {
                                g.add_edge(u, v).unwrap();
                            }
                            k += 1;
                        }
                    }
                    (g, VertexColoring::new(colors).unwrap())
                })
        })
    }

    proptest! {
        #[test]
        fn matrix_round_trip((g, c) in arb_colored_graph()) {
            let plain = parse_matrix(&write_matrix(&g, None)).unwrap();
            prop_assert_eq!(&plain.graph, &g);
            prop_assert!(plain.coloring.is_none());
            let colored = parse_matrix(&write_matrix(&g, Some(&c))).unwrap();
            prop_assert_eq!(&colored.graph, &g);
            prop_assert_eq!(colored.coloring.unwrap(), c);
        }
    }
}
