//! Command-line front end. [`run`] takes the argument list and two output
//! streams and returns the process exit code:
//!
//! * 0 success,
//! * 1 verification failure or failed self-check,
//! * 2 input error (parse, disconnected graph, non-total coloring, IO),
//! * 3 guard or limit error (order too large, unsolvable block, gate).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::{bound_blocks, bound_half_order, classify};
use crate::blocks::decompose;
use crate::catalog::{build_catalog, load_catalog, save_catalog, Catalog};
use crate::coloring::VertexColoring;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::io::{parse_coloring, read_graph, to_dot, write_matrix};
use crate::iso::find_isomorphism;
use crate::solve::{solve, verify_coloring, Strategy};
use crate::verify::is_mvd_coloring;

#[derive(Parser, Debug)]
#[command(name = "mvd", version, about = "Monochromatic vertex-disconnection colorings")]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Exact,
    Blocks,
    Auto,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Cut vertices and blocks.
    Decompose { graph: PathBuf },
    /// mvd(G) with a verified coloring.
    Solve {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        /// Directory of catalog entries used for block lookup.
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long)]
        emit_dot: Option<PathBuf>,
        /// Keep solver color numbers instead of renumbering 1..k.
        #[arg(long)]
        preserve_colors: bool,
    },
    /// Check a coloring; without COLORING the colors in the graph header are used.
    Verify { graph: PathBuf, coloring: Option<PathBuf> },
    /// Isomorphism between two graphs.
    Iso { a: PathBuf, b: PathBuf },
    /// Catalog of minimally 2-connected graphs.
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
    /// Regime and family of a graph with minimal, triangle-free blocks.
    Classify {
        graph: PathBuf,
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Half-order and block-formula upper bounds.
    Bound { graph: PathBuf },
    /// Graphviz DOT output.
    ExportDot {
        graph: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCmd {
    /// Generate, solve and save every minimal block of orders 4..=N.
    Build {
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Load a catalog directory, re-verifying every entry.
    Check { dir: PathBuf },
}

#[derive(Serialize)]
struct InputDigest {
    order: usize,
    size: usize,
}

#[derive(Serialize)]
struct RunReport {
    command: Vec<String>,
    input: Option<InputDigest>,
    result: Value,
    exit_code: i32,
}

struct Outcome {
    text: String,
    json: Value,
    code: i32,
    input: Option<InputDigest>,
}

impl Outcome {
    fn new(text: String, json: Value) -> Self {
        Outcome {
            text,
            json,
            code: 0,
            input: None,
        }
    }

    fn on(mut self, g: &Graph) -> Self {
        self.input = Some(InputDigest {
            order: g.order(),
            size: g.size(),
        });
        self
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::GuardExceeded { .. } | Error::Unsolvable { .. } | Error::GateFailure { .. } => 3,
        Error::Inconsistent(_) => 1,
        _ => 2,
    }
}

pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                2
            } else {
                let _ = write!(out, "{e}");
                0
            };
            return code;
        }
    };
    let echo: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match dispatch(&cli.cmd) {
        Ok(o) => {
            let res = if cli.json {
                let report = RunReport {
                    command: echo,
                    input: o.input,
                    result: o.json,
                    exit_code: o.code,
                };
                writeln!(out, "{}", serde_json::to_string_pretty(&report).unwrap())
            } else {
                write!(out, "{}", o.text)
            };
            if res.is_err() {
                return 2;
            }
            o.code
        }
        Err(e) => {
            let code = exit_code(&e);
            if cli.json {
                let report = RunReport {
                    command: echo,
                    input: None,
                    result: json!({ "error": e.to_string() }),
                    exit_code: code,
                };
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).unwrap());
            }
            let _ = writeln!(err, "error: {e}");
            code
        }
    }
}

fn dispatch(cmd: &Cmd) -> Result<Outcome> {
    match cmd {
        Cmd::Decompose { graph } => cmd_decompose(graph),
        Cmd::Solve {
            graph,
            method,
            catalog,
            emit_dot,
            preserve_colors,
        } => cmd_solve(graph, *method, catalog.as_deref(), emit_dot.as_deref(), *preserve_colors),
        Cmd::Verify { graph, coloring } => cmd_verify(graph, coloring.as_deref()),
        Cmd::Iso { a, b } => cmd_iso(a, b),
        Cmd::Catalog {
            action: CatalogCmd::Build { max_order, out },
        } => cmd_catalog_build(*max_order, out),
        Cmd::Catalog {
            action: CatalogCmd::Check { dir },
        } => cmd_catalog_check(dir),
        Cmd::Classify { graph, catalog } => cmd_classify(graph, catalog.as_deref()),
        Cmd::Bound { graph } => cmd_bound(graph),
        Cmd::ExportDot { graph, coloring, out } => cmd_export_dot(graph, coloring.as_deref(), out.as_deref()),
    }
}

fn by_label(g: &Graph) -> Vec<Vertex> {
    let mut vs: Vec<Vertex> = g.vertices().collect();
    vs.sort_by(|&a, &b| g.label(a).cmp(g.label(b)));
    vs
}

fn sorted_labels(g: &Graph, vs: &[Vertex]) -> Vec<String> {
    let mut l: Vec<String> = vs.iter().map(|&v| g.label(v).to_string()).collect();
    l.sort();
    l
}

fn load_connected(path: &Path) -> Result<(Graph, Option<VertexColoring>)> {
    let cg = read_graph(path)?;
    if cg.graph.order() < 2 {
        return Err(Error::Trivial(cg.graph.order()));
    }
    if !cg.graph.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok((cg.graph, cg.coloring))
}

fn load_catalog_opt(dir: Option<&Path>) -> Result<Option<Catalog>> {
    dir.map(load_catalog).transpose()
}

fn coloring_lines(g: &Graph, c: &VertexColoring) -> (String, Value) {
    let mut text = String::new();
    let mut map = serde_json::Map::new();
    for v in by_label(g) {
        writeln!(text, "{}:{}", g.label(v), c.color(v)).unwrap();
        map.insert(g.label(v).to_string(), json!(c.color(v)));
    }
    (text, Value::Object(map))
}

fn cmd_decompose(path: &Path) -> Result<Outcome> {
    let (g, _) = load_connected(path)?;
    let dec = decompose(&g)?;
    let cuts = sorted_labels(&g, &dec.cut_vertices);
    let mut text = format!("order {} size {}\n", g.order(), g.size());
    writeln!(text, "cut vertices: {{{}}}", cuts.join(",")).unwrap();
    writeln!(text, "blocks: {}", dec.num_blocks()).unwrap();
    let mut blocks = Vec::new();
    for (i, b) in dec.blocks.iter().enumerate() {
        let labels = b.sorted_labels();
        writeln!(text, "\nblock {} {{{}}}", i + 1, labels.join(",")).unwrap();
        let ordered = b.graph.induced_on(&by_label(&b.graph));
        text.push_str(&write_matrix(&ordered, None));
        blocks.push(json!({
            "vertices": labels,
            "size": b.graph.size(),
            "trivial": b.order() == 2,
        }));
    }
    let json = json!({ "cut_vertices": cuts, "blocks": blocks });
    Ok(Outcome::new(text, json).on(&g))
}

fn cmd_solve(
    path: &Path,
    method: MethodArg,
    catalog_dir: Option<&Path>,
    emit_dot: Option<&Path>,
    preserve: bool,
) -> Result<Outcome> {
    let (g, _) = load_connected(path)?;
    let catalog = load_catalog_opt(catalog_dir)?;
    let strategy = match method {
        MethodArg::Exact => Strategy::Exact,
        MethodArg::Blocks => Strategy::Blocks,
        MethodArg::Auto => Strategy::Auto,
    };
    let sol = solve(&g, strategy, catalog.as_ref())?;
    let coloring = if preserve {
        sol.result.coloring.clone()
    } else {
        sol.result.coloring.renumbered_along(&by_label(&g))
    };

    let dec = match &sol.blocks {
        Some(b) => b.decomposition.clone(),
        None => decompose(&g)?,
    };
    if !verify_coloring(&g, &dec, &coloring)? || coloring.num_colors() != sol.result.value {
        return Err(Error::Inconsistent("solver output failed self-verification".into()));
    }

    let mut text = format!("order {} size {}\n", g.order(), g.size());
    writeln!(text, "mvd {}", sol.result.value).unwrap();
    writeln!(text, "method {}", sol.result.method).unwrap();
    let mut trail = Vec::new();
    if let Some(bs) = &sol.blocks {
        for (i, (b, r)) in bs.decomposition.blocks.iter().zip(&bs.per_block).enumerate() {
            let labels = b.sorted_labels();
            let via = match &r.catalog_id {
                Some(id) => format!("catalog {id}"),
                None => r.result.method.to_string(),
            };
            writeln!(text, "block {} {{{}}} mvd {} via {via}", i + 1, labels.join(","), r.result.value).unwrap();
            trail.push(json!({
                "vertices": labels,
                "mvd": r.result.value,
                "method": r.result.method,
                "catalog_id": r.catalog_id,
            }));
        }
    }
    writeln!(text, "verify PASS").unwrap();
    writeln!(text, "coloring").unwrap();
    let (lines, cmap) = coloring_lines(&g, &coloring);
    text.push_str(&lines);

    if let Some(p) = emit_dot {
        std::fs::write(p, to_dot(&g, Some(&coloring)))?;
    }
    let json = json!({
        "mvd": sol.result.value,
        "method": sol.result.method,
        "blocks": trail,
        "verified": true,
        "coloring": cmap,
    });
    Ok(Outcome::new(text, json).on(&g))
}

fn cmd_verify(graph: &Path, coloring: Option<&Path>) -> Result<Outcome> {
    let (g, header) = load_connected(graph)?;
    let c = match coloring {
        Some(p) => parse_coloring(&std::fs::read_to_string(p)?, &g)?,
        None => header.ok_or_else(|| Error::Coloring("no coloring file given and the graph header has no colors".into()))?,
    };
    let v = is_mvd_coloring(&g, &c)?;
    let mut out = if v.ok {
        let mut text = String::from("PASS\n");
        let mut certs = Vec::new();
        for p in &v.certificate {
            writeln!(text, "{} {} color {}", g.label(p.x), g.label(p.y), p.color).unwrap();
            certs.push(json!([g.label(p.x), g.label(p.y), p.color]));
        }
        Outcome::new(text, json!({ "pass": true, "certificate": certs }))
    } else {
        let (x, y) = v.witness.unwrap();
        let text = format!(
            "FAIL\nwitness {} {}: no monochromatic cut separates them\n",
            g.label(x),
            g.label(y)
        );
        let mut o = Outcome::new(text, json!({ "pass": false, "witness": [g.label(x), g.label(y)] }));
        o.code = 1;
        o
    };
    out = out.on(&g);
    Ok(out)
}

fn cmd_iso(a: &Path, b: &Path) -> Result<Outcome> {
    let ga = read_graph(a)?.graph;
    let gb = read_graph(b)?.graph;
    let o = match find_isomorphism(&ga, &gb) {
        Some(m) => {
            let mut text = String::new();
            let mut pairs = Vec::new();
            for v in by_label(&ga) {
                writeln!(text, "{} -> {}", ga.label(v), gb.label(m.image(v))).unwrap();
                pairs.push(json!([ga.label(v), gb.label(m.image(v))]));
            }
            Outcome::new(text, json!({ "isomorphic": true, "mapping": pairs }))
        }
        None => Outcome::new("NOT ISOMORPHIC\n".into(), json!({ "isomorphic": false })),
    };
    Ok(o.on(&ga))
}

fn census_json(cat: &Catalog) -> Value {
    let entries: Vec<Value> = cat
        .entries()
        .iter()
        .map(|e| json!({ "id": e.id, "order": e.order, "mvd": e.mvd_value, "shape": e.shape() }))
        .collect();
    json!({ "entries": entries })
}

fn cmd_catalog_build(max_order: usize, out: &Path) -> Result<Outcome> {
    if !(3..=10).contains(&max_order) {
        return Err(Error::InvalidArgument(format!("--max-order {max_order} outside 3..=10")));
    }
    let cat = build_catalog(max_order)?;
    save_catalog(&cat, out)?;
    let mut text = cat.census();
    writeln!(text, "\nwrote {} entries to {}", cat.len(), out.display()).unwrap();
    Ok(Outcome::new(text, census_json(&cat)))
}

fn cmd_catalog_check(dir: &Path) -> Result<Outcome> {
    let cat = load_catalog(dir)?;
    let mut text = cat.census();
    writeln!(text, "\n{} entries verified", cat.len()).unwrap();
    Ok(Outcome::new(text, census_json(&cat)))
}

fn cmd_classify(path: &Path, catalog_dir: Option<&Path>) -> Result<Outcome> {
    let (g, _) = load_connected(path)?;
    let catalog = load_catalog_opt(catalog_dir)?;
    let c = classify(&g, catalog.as_ref())?;
    let mut text = String::from("gate pass\n");
    writeln!(text, "n {}", c.n).unwrap();
    writeln!(text, "mvd {}", c.mvd).unwrap();
    writeln!(text, "regime {}", c.regime).unwrap();
    writeln!(text, "family {}", c.family).unwrap();
    writeln!(text, "core {{{}}}", c.core_shapes.join(",")).unwrap();
    writeln!(text, "core-key {}", c.core_key.as_deref().unwrap_or("-")).unwrap();
    let json = json!({
        "gate": c.gate,
        "n": c.n,
        "mvd": c.mvd,
        "regime": c.regime.to_string(),
        "family": c.family,
        "core_shapes": c.core_shapes,
        "core_key": c.core_key,
    });
    Ok(Outcome::new(text, json).on(&g))
}

fn cmd_bound(path: &Path) -> Result<Outcome> {
    let (g, _) = load_connected(path)?;
    let half = bound_half_order(&g);
    let blocks = bound_blocks(&g)?;
    let text = format!("{half}\n{blocks}\n");
    Ok(Outcome::new(text, json!({ "half_order": half, "block_formula": blocks })).on(&g))
}

fn cmd_export_dot(path: &Path, coloring: Option<&Path>, out: Option<&Path>) -> Result<Outcome> {
    let cg = read_graph(path)?;
    let g = cg.graph;
    let c = match coloring {
        Some(p) => Some(parse_coloring(&std::fs::read_to_string(p)?, &g)?),
        None => cg.coloring,
    };
    let dot = to_dot(&g, c.as_ref());
    let o = match out {
        Some(p) => {
            std::fs::write(p, &dot)?;
            Outcome::new(format!("wrote {}\n", p.display()), json!({ "path": p.display().to_string() }))
        }
        None => Outcome::new(dot.clone(), json!({ "dot": dot })),
    };
    Ok(o.on(&g))
}
