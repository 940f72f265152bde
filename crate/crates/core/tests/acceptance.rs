//! Acceptance gate. Prints one line per criterion and exits nonzero if any
//! criterion fails. Set `MVD_ACCEPTANCE_ORDER10=1` to include order 10 in
//! the catalog regeneration check.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use common::*;
use mvd::analysis::{bound_blocks, classify, Family, Regime};
use mvd::blocks::{decompose, BlockDecomposition};
use mvd::catalog::{build_catalog, generate_minimal_blocks, generate_minimal_blocks_up_to, load_catalog, save_catalog, theta_graph};
use mvd::io::{parse_coloring, read_graph};
use mvd::iso::find_isomorphism;
use mvd::solve::{counting_formula, mvd_compose, mvd_exact, mvd_exact_with, mvd_via_blocks, ExactOptions};
use mvd::{is_mvd_coloring, Graph, VertexColoring};
use rand::Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn resources() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("resources")
}

/// Decompositions with their per-block values, collected for criterion 10.
#[derive(Default)]
struct Ledger {
    decompositions: Vec<(BlockDecomposition, Vec<usize>, usize)>,
}

fn criterion_1() -> Outcome {
    for n in 4..=10 {
        let v = mvd_exact(&Graph::cycle(n)).map_err(|e| e.to_string())?.value;
        ensure!(v == n / 2, "C{n}: got {v}, want {}", n / 2);
    }
    let v = mvd_exact(&Graph::cycle(3)).map_err(|e| e.to_string())?.value;
    ensure!(v == 3, "C3: got {v}");
    Ok("C3..C10".into())
}

fn criterion_2() -> Outcome {
    for n in 2..=6 {
        let v = mvd_via_blocks(&Graph::complete(n), None).map_err(|e| e.to_string())?.result.value;
        ensure!(v == n, "K{n}: got {v}");
    }
    let mut r = rng(2);
    for _ in 0..20 {
        let n = r.gen_range(2..=10);
        let t = random_tree(&mut r, n);
        let v = mvd_via_blocks(&t, None).map_err(|e| e.to_string())?.result.value;
        ensure!(v == n, "tree of order {n}: got {v}");
    }
    Ok("K2..K6 and 20 random trees".into())
}

fn criterion_3() -> Outcome {
    let ex = resources().join("example_2_2.txt");
    let cat = resources().join("catalog");
    let g = read_graph(&ex).map_err(|e| e.to_string())?.graph;
    let dec = decompose(&g).map_err(|e| e.to_string())?;
    let cuts: Vec<&str> = dec.cut_vertices.iter().map(|&v| g.label(v)).collect();
    ensure!(cuts == ["H"], "cut vertices {cuts:?}");
    let blocks: BTreeSet<String> = dec.blocks.iter().map(|b| b.sorted_labels().join(",")).collect();
    let want: BTreeSet<String> = ["B,C,D,H,I,L,M,O,Q", "A,E,F,G,H,J,K,N,P"].iter().map(|s| s.to_string()).collect();
    ensure!(blocks == want, "blocks {blocks:?}");

    let mut out = Vec::new();
    let mut err = Vec::new();
    let args = ["mvd", "solve", ex.to_str().unwrap(), "--method", "blocks", "--catalog", cat.to_str().unwrap()];
    let code = mvd::cli::run(args, &mut out, &mut err);
    let out = String::from_utf8(out).unwrap();
    ensure!(code == 0, "solve exited {code}: {}", String::from_utf8_lossy(&err));
    ensure!(out.contains("\nmvd 3\n"), "solve output lacks value 3");
    let coloring_text = out.split("coloring\n").nth(1).ok_or("no coloring section")?;
    let c = parse_coloring(coloring_text, &g).map_err(|e| e.to_string())?;
    ensure!(c.num_colors() == 3, "coloring uses {} colors", c.num_colors());
    ensure!(is_mvd_coloring(&g, &c).map_err(|e| e.to_string())?.ok, "coloring fails verification");
    for b in &dec.blocks {
        let local = c.restrict_to(&b.vertices);
        ensure!(local.num_colors() == 2, "block restriction uses {} colors", local.num_colors());
        ensure!(is_mvd_coloring(&b.graph, &local).map_err(|e| e.to_string())?.ok, "block restriction fails");
    }
    Ok("cut {H}, two 9-vertex blocks, value 3".into())
}

fn criterion_4(ledger: &mut Ledger) -> Outcome {
    let mut r = rng(4);
    let mut count = 0;
    while count < 320 {
        let n = r.gen_range(2..=9);
        let p = r.gen_range(0.05..0.6);
        let g = random_connected(&mut r, n, p);
        let blocks = mvd_via_blocks(&g, None).map_err(|e| e.to_string())?;
        let exact = mvd_exact(&g).map_err(|e| e.to_string())?;
        ensure!(
            blocks.result.value == exact.value,
            "blocks {} vs exact {} on {:?}",
            blocks.result.value,
            exact.value,
            g.edges().collect::<Vec<_>>()
        );
        let values: Vec<usize> = blocks.per_block.iter().map(|b| b.result.value).collect();
        ledger.decompositions.push((blocks.decomposition, values, blocks.result.value));
        count += 1;
    }
    Ok(format!("{count} random graphs"))
}

fn same_class_set(got: &[Graph], want: &[Graph]) -> bool {
    got.len() == want.len() && want.iter().all(|w| got.iter().any(|g| find_isomorphism(g, w).is_some()))
}

fn criterion_5() -> Outcome {
    let t = |m: &[usize]| theta_graph(m).unwrap();
    let cases = [
        (4, vec![Graph::cycle(4)]),
        (5, vec![Graph::cycle(5), t(&[1, 1, 1])]),
        (6, vec![Graph::cycle(6), t(&[2, 1, 1]), t(&[1, 1, 1, 1])]),
    ];
    for (n, want) in cases {
        let got = generate_minimal_blocks(n).map_err(|e| e.to_string())?;
        ensure!(same_class_set(&got, &want), "order {n}: {} graphs, not the expected set", got.len());
    }
    Ok("{C4}, {C5, P(1,1,1)}, {C6, P(2,1,1), P(1,1,1,1)}".into())
}

fn criterion_6() -> Outcome {
    let max = if std::env::var_os("MVD_ACCEPTANCE_ORDER10").is_some() { 10 } else { 9 };
    let levels = generate_minimal_blocks_up_to(max).map_err(|e| e.to_string())?;
    let mut odd_attainers = Vec::new();
    for (n, graphs) in levels.iter().enumerate().skip(4) {
        let mut attainers = Vec::new();
        for g in graphs {
            let v = mvd_exact_with(g, ExactOptions { minimal_block_bound: false })
                .map_err(|e| e.to_string())?
                .value;
            ensure!(v <= n / 2, "order {n}: value {v} above bound");
            if v == n / 2 {
                attainers.push(g);
            }
        }
        let cycle_attains = attainers.iter().any(|g| g.cycle_order().is_some());
        ensure!(cycle_attains, "C{n} does not attain the bound");
        if n % 2 == 0 {
            ensure!(attainers.len() == 1, "order {n}: {} graphs attain the bound", attainers.len());
        } else {
            odd_attainers.push(format!("{n}:{}", attainers.len()));
        }
    }
    let cat = build_catalog(max).map_err(|e| e.to_string())?;
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    save_catalog(&cat, dir.path()).map_err(|e| e.to_string())?;
    let back = load_catalog(dir.path()).map_err(|e| e.to_string())?;
    ensure!(back.len() == cat.len(), "reloaded {} of {} entries", back.len(), cat.len());
    Ok(format!(
        "{} blocks up to order {max}; only cycles attain at even orders; attainers at odd orders {}",
        cat.len(),
        odd_attainers.join(" ")
    ))
}

fn criterion_7(ledger: &mut Ledger) -> Outcome {
    let mut r = rng(7);
    let cycles: Vec<Graph> = [4, 6, 8, 10].iter().map(|&n| Graph::cycle(n)).collect();
    for i in 0..100 {
        let (g, k) = glue_random(&mut r, &cycles, 1 + i % 8, 0.4);
        let bound = (k.n + 2 * k.t + 1 - k.r) / 2;
        let rep = bound_blocks(&g).map_err(|e| e.to_string())?;
        ensure!(rep.applicable && rep.value == bound, "bound report {rep:?}, expected {bound}");
        let s = mvd_via_blocks(&g, None).map_err(|e| e.to_string())?;
        ensure!(s.result.value == bound, "cactus: mvd {} vs bound {bound}", s.result.value);
        let values = s.per_block.iter().map(|b| b.result.value).collect();
        ledger.decompositions.push((s.decomposition, values, s.result.value));
    }
    let pieces: Vec<Graph> = generate_minimal_blocks_up_to(8)
        .map_err(|e| e.to_string())?
        .into_iter()
        .skip(4)
        .flatten()
        .collect();
    for i in 0..100 {
        let (g, k) = glue_random(&mut r, &pieces, 1 + i % 6, 0.35);
        let bound = (k.n + 2 * k.t + 1 - k.r) / 2;
        let s = mvd_via_blocks(&g, None).map_err(|e| e.to_string())?;
        ensure!(s.result.value <= bound, "gated: mvd {} above bound {bound}", s.result.value);
        let values = s.per_block.iter().map(|b| b.result.value).collect();
        ledger.decompositions.push((s.decomposition, values, s.result.value));
    }
    Ok("100 even cactuses at the bound, 100 gated graphs under it".into())
}

fn with_tree(core: &Graph, r: &mut impl Rng) -> Graph {
    let mut g = core.clone();
    let extra = r.gen_range(0..6);
    add_pendants(r, &mut g, extra);
    g
}

fn criterion_8() -> Outcome {
    let mut r = rng(8);
    let t = |m: &[usize]| theta_graph(m).unwrap();
    let check = |g: &Graph, regime: Regime, family: Family, what: &str| -> Outcome {
        let c = classify(g, None).map_err(|e| format!("{what}: {e}"))?;
        ensure!(c.regime == regime, "{what}: regime {} (mvd {} of {})", c.regime, c.mvd, c.n);
        ensure!(c.family == family, "{what}: family {}", c.family);
        Ok(String::new())
    };
    for _ in 0..10 {
        let n = r.gen_range(2..=12);
        check(&random_tree(&mut r, n), Regime::N, Family::Tree, "tree")?;
        check(&with_tree(&Graph::cycle(4), &mut r), Regime::NMinus2, Family::UnicyclicC4, "unicyclic C4")?;
    }
    let class_a = [("C5", Graph::cycle(5)), ("K2,3", t(&[1, 1, 1])), ("C6", Graph::cycle(6))];
    let class_b = [
        ("C7", Graph::cycle(7)),
        ("P(3,1,1)", t(&[3, 1, 1])),
        ("P(2,1,1)", t(&[2, 1, 1])),
        ("P(1,1,1,1)", t(&[1, 1, 1, 1])),
        ("C8", Graph::cycle(8)),
    ];
    let class_c = [
        ("C9", Graph::cycle(9)),
        ("P(5,1,1)", t(&[5, 1, 1])),
        ("P(3,3,1)", t(&[3, 3, 1])),
        ("C10", Graph::cycle(10)),
    ];
    for _ in 0..4 {
        for (name, core) in &class_a {
            check(&with_tree(core, &mut r), Regime::NMinus3, Family::ClassA, name)?;
        }
        for (name, core) in &class_b {
            check(&with_tree(core, &mut r), Regime::NMinus4, Family::ClassB, name)?;
        }
        for (name, core) in &class_c {
            check(&with_tree(core, &mut r), Regime::NMinus5, Family::ClassC, name)?;
        }
        let mut adjacent = Graph::cycle(4);
        attach(&mut adjacent, 0, &Graph::cycle(4), 0);
        check(&with_tree(&adjacent, &mut r), Regime::NMinus4, Family::ClassB, "two C4 sharing a vertex")?;
        let mut apart = Graph::cycle(4);
        let len = r.gen_range(2..5);
        attach(&mut apart, 0, &Graph::path(len), 0);
        let end = apart.order() - 1;
        attach(&mut apart, end, &Graph::cycle(4), 0);
        check(&with_tree(&apart, &mut r), Regime::NMinus4, Family::ClassB, "two C4 joined by a path")?;
    }
    let pieces: Vec<Graph> = generate_minimal_blocks_up_to(8)
        .map_err(|e| e.to_string())?
        .into_iter()
        .skip(4)
        .flatten()
        .collect();
    for i in 0..150 {
        let (g, _) = glue_random(&mut r, &pieces, 1 + i % 6, 0.4);
        let c = classify(&g, None).map_err(|e| format!("gated instance: {e}"))?;
        ensure!(c.regime != Regime::NMinus1, "gated instance with mvd = n-1");
    }
    Ok("all constructed families in their regimes; no n-1 among 150 gated graphs".into())
}

fn criterion_9() -> Outcome {
    let mut checked = 0u64;
    for n in 2..=6 {
        for g in connected_graphs_up_to_iso(n) {
            let adj = adjacency(&g);
            for code in 0..3usize.pow(n as u32) {
                let colors: Vec<u32> = (0..n).map(|i| (code / 3usize.pow(i as u32) % 3) as u32 + 1).collect();
                let c = VertexColoring::new(colors.clone()).unwrap();
                let got = is_mvd_coloring(&g, &c).map_err(|e| e.to_string())?.ok;
                ensure!(got == oracle_is_mvd(&adj, &colors), "disagreement on {:?} with {colors:?}", g.edges().collect::<Vec<_>>());
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} graph/coloring pairs"))
}

fn criterion_10(ledger: &Ledger) -> Outcome {
    let mut defined = 0;
    for (dec, values, value) in &ledger.decompositions {
        if !values.iter().all(|v| (2..=5).contains(v)) {
            continue;
        }
        let results: Vec<mvd::MvdResult> = values
            .iter()
            .map(|&v| mvd::MvdResult {
                value: v,
                coloring: VertexColoring::distinct(1),
                method: mvd::Method::Exact,
            })
            .collect();
        let composed = mvd_compose(dec, &results).map_err(|e| e.to_string())?;
        let counted = counting_formula(dec, values).map_err(|e| e.to_string())?;
        ensure!(composed == counted && composed == *value, "counting {counted} vs composition {composed}");
        defined += 1;
    }
    ensure!(defined >= 300, "only {defined} decompositions had every block value in 2..=5");
    Ok(format!(
        "{defined} of {} decompositions (the rest have a block value outside 2..=5)",
        ledger.decompositions.len()
    ))
}

fn main() {
    let mut ledger = Ledger::default();
    let limits = [30, 10, 5, 600, 60, 900, 300, 600, 600, 600].map(Duration::from_secs);
    let mut failed = 0;
    for (i, limit) in limits.iter().enumerate() {
        let id = i + 1;
        let start = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(|| match id {
            1 => criterion_1(),
            2 => criterion_2(),
            3 => criterion_3(),
            4 => criterion_4(&mut ledger),
            5 => criterion_5(),
            6 => criterion_6(),
            7 => criterion_7(&mut ledger),
            8 => criterion_8(),
            9 => criterion_9(),
            _ => criterion_10(&ledger),
        }))
        .unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let took = start.elapsed();
        let res = match res {
            Ok(_) if took > *limit => Err(format!("took {took:.1?}, limit {limit:?}")),
            other => other,
        };
        match res {
            Ok(detail) => println!("criterion {id}: PASS ({detail}; {took:.2?})"),
            Err(why) => {
                failed += 1;
                println!("criterion {id}: FAIL ({why}; {took:.2?})");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
