//! Theta graphs, minimally 2-connected graph generation and the catalog of
//! graphs with known `mvd` and a certified coloring.
//!
//! Catalog directories hold one colored matrix file per entry, named
//! `graph_<n>Vertex-<index>.txt`, plus a `census.txt` summary.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::path::Path;

use crate::coloring::VertexColoring;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::io::{parse_matrix, write_matrix};
use crate::iso::{canonical_form, canonical_order, find_isomorphism, IsoMapping, CANONICAL_MAX_ORDER};
use crate::solve::mvd_exact;
use crate::verify::is_mvd_coloring;

/// Largest order [`generate_minimal_blocks`] handles.
pub const GENERATE_MAX_ORDER: usize = 10;

/// `P(m1, ..., mk)`: hubs `u` and `v` joined by `k` internally disjoint
/// paths, the `i`-th with `m_i` internal vertices. Vertex 0 is `u`, vertex 1
/// is `v`, then the paths in order. A zero entry stands for the edge `uv`
/// and may occur at most once.
pub fn theta_graph(m: &[usize]) -> Result<Graph> {
    if m.is_empty() {
        return Err(Error::InvalidArgument("theta graph needs at least one path".into()));
    }
    if m.len() == 1 && m[0] == 0 {
        return Err(Error::InvalidArgument("P(0) is a bare edge, not 2-connected".into()));
    }
    if m.iter().filter(|&&x| x == 0).count() > 1 {
        return Err(Error::InvalidArgument("at most one path may be the edge uv".into()));
    }
    let mut labels = vec!["u".to_string(), "v".to_string()];
    for (i, &len) in m.iter().enumerate() {
        for j in 1..=len {
            labels.push(format!("p{}_{}", i + 1, j));
        }
    }
    let mut g = Graph::with_labels(&labels)?;
    let mut next = 2;
    for &len in m {
        let mut prev = 0;
        for _ in 0..len {
            g.add_edge(prev, next)?;
            prev = next;
            next += 1;
        }
        g.add_edge(prev, 1)?;
    }
    Ok(g)
}

/// Parses `P(3,1,1)`, `3,1,1` or the shorthand `P(2,3*1)`.
pub fn parse_theta(text: &str) -> Result<Vec<usize>> {
    let s = text.trim();
    let inner = s
        .strip_prefix("P(")
        .and_then(|r| r.strip_suffix(')'))
        .unwrap_or(s);
    let bad = || Error::InvalidArgument(format!("bad theta notation {text:?}"));
    let mut out = Vec::new();
    for tok in inner.split(',') {
        let tok = tok.trim();
        match tok.split_once('*') {
            Some((j, m)) => {
                let j: usize = j.trim().parse().map_err(|_| bad())?;
                let m: usize = m.trim().parse().map_err(|_| bad())?;
                out.extend(std::iter::repeat_n(m, j));
            }
            None => out.push(tok.parse().map_err(|_| bad())?),
        }
    }
    Ok(out)
}

/// 2-connected, and deleting any edge destroys 2-connectivity.
pub fn is_minimally_two_connected(g: &Graph) -> bool {
    g.is_k_connected(2) && g.edges().all(|(u, v)| !g.without_edge(u, v).is_k_connected(2))
}

pub fn triangle_free(g: &Graph) -> bool {
    g.triangle_free()
}

/// Path lengths of a theta graph (descending), or `None`. Cycles are not
/// reported as theta graphs here.
pub fn theta_signature(g: &Graph) -> Option<Vec<usize>> {
    let hubs: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) != 2).collect();
    if hubs.len() != 2 || hubs.iter().any(|&h| g.degree(h) < 3) || !g.is_connected() {
        return None;
    }
    let (u, v) = (hubs[0], hubs[1]);
    let mut lens = Vec::new();
    for start in g.neighbors(u) {
        let (mut prev, mut cur, mut len) = (u, start, 0);
        while cur != v {
            if cur == u {
                return None;
            }
            len += 1;
            let next = g.neighbors(cur).find(|&w| w != prev)?;
            prev = cur;
            cur = next;
        }
        lens.push(len);
    }
    if lens.len() != g.degree(v) {
        return None;
    }
    lens.sort_unstable_by(|a, b| b.cmp(a));
    Some(lens)
}

/// `C<n>` for cycles, `P(...)` for theta graphs.
pub fn shape_name(g: &Graph) -> Option<String> {
    if g.cycle_order().is_some() {
        return Some(format!("C{}", g.order()));
    }
    theta_signature(g).map(|m| {
        let parts: Vec<String> = m.iter().map(usize::to_string).collect();
        format!("P({})", parts.join(","))
    })
}

fn add_ear(g: &Graph, u: Vertex, v: Vertex, internal: usize) -> Graph {
    let n = g.order();
    let mut h = Graph::empty(n + internal);
    for (a, b) in g.edges() {
        h.add_edge(a, b).unwrap();
    }
    let mut prev = u;
    for i in 0..internal {
        h.add_edge(prev, n + i).unwrap();
        prev = n + i;
    }
    h.add_edge(prev, v).unwrap();
    h
}

fn canonical_copy(g: &Graph) -> Result<(String, Graph)> {
    let order = canonical_order(g)?;
    let mut perm = vec![0; g.order()];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    let relabeled = g.permuted(&perm).relabeled((1..=g.order()).map(|i| format!("v{i}")))?;
    Ok((canonical_form(g)?, relabeled))
}

/// All minimally 2-connected graphs of each order `3..=max_order`, up to
/// isomorphism; index `n` of the result holds order `n`.
///
/// Every minimally 2-connected graph other than a cycle has an ear
/// decomposition in which each ear has an internal vertex, and every
/// intermediate graph of such a decomposition is itself minimally
/// 2-connected. So growing each level by ears with at least one internal
/// vertex, then filtering and deduplicating, reaches every graph.
pub fn generate_minimal_blocks_up_to(max_order: usize) -> Result<Vec<Vec<Graph>>> {
    if !(3..=GENERATE_MAX_ORDER).contains(&max_order) {
        return Err(Error::InvalidArgument(format!(
            "order {max_order} outside 3..={GENERATE_MAX_ORDER}"
        )));
    }
    let mut pending: Vec<BTreeMap<String, Graph>> = vec![BTreeMap::new(); max_order + 1];
    let mut levels: Vec<Vec<Graph>> = vec![Vec::new(); max_order + 1];
    for m in 3..=max_order {
        let (key, c) = canonical_copy(&Graph::cycle(m))?;
        pending[m].insert(key, c);
        let candidates = std::mem::take(&mut pending[m]);
        let mut level: Vec<(usize, String, Graph)> = candidates
            .into_iter()
            .filter(|(_, g)| is_minimally_two_connected(g))
            .map(|(k, g)| (g.size(), k, g))
            .collect();
        level.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        levels[m] = level.into_iter().map(|(_, _, g)| g).collect();

        for g in &levels[m] {
            for u in g.vertices() {
                for v in u + 1..m {
                    // an ear parallel to an edge makes that edge redundant
                    if g.adjacent(u, v) {
                        continue;
                    }
                    for internal in 1..=max_order - m {
                        let h = add_ear(g, u, v, internal);
                        let key = canonical_form(&h)?;
                        let slot = &mut pending[m + internal];
                        if !slot.contains_key(&key) {
                            let (_, c) = canonical_copy(&h)?;
                            slot.insert(key, c);
                        }
                    }
                }
            }
        }
    }
    Ok(levels)
}

/// All minimally 2-connected graphs of order `n`, pairwise non-isomorphic,
/// ordered by edge count and then canonical key.
pub fn generate_minimal_blocks(n: usize) -> Result<Vec<Graph>> {
    let mut levels = generate_minimal_blocks_up_to(n)?;
    Ok(levels.swap_remove(n))
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub graph: Graph,
    pub mvd_value: usize,
    pub coloring: VertexColoring,
    pub order: usize,
    /// Not minimally 2-connected; added by hand rather than generated.
    pub extra: bool,
    key: Option<String>,
}

impl CatalogEntry {
    /// Checks the coloring and color count, then wraps the graph.
    pub fn new(id: impl Into<String>, graph: Graph, mvd_value: usize, coloring: VertexColoring) -> Result<Self> {
        let id = id.into();
        let fail = |msg: String| Error::Catalog { path: id.clone(), msg };
        if coloring.len() != graph.order() {
            return Err(fail("coloring does not cover the graph".into()));
        }
        let verdict = is_mvd_coloring(&graph, &coloring).map_err(|e| fail(e.to_string()))?;
        if !verdict.ok {
            let (x, y) = verdict.witness.unwrap();
            return Err(fail(format!(
                "coloring is not an MVD-coloring: no monochromatic cut separates {} and {}",
                graph.label(x),
                graph.label(y)
            )));
        }
        if coloring.num_colors() != mvd_value {
            return Err(fail(format!(
                "coloring uses {} colors, recorded mvd is {mvd_value}",
                coloring.num_colors()
            )));
        }
        let key = if graph.order() <= CANONICAL_MAX_ORDER {
            Some(canonical_form(&graph)?)
        } else {
            None
        };
        Ok(CatalogEntry {
            order: graph.order(),
            extra: !is_minimally_two_connected(&graph),
            id,
            graph,
            mvd_value,
            coloring,
            key,
        })
    }

    pub fn canonical_key(&self) -> Option<&str> {
        self.key.as_deref()
    }

    pub fn shape(&self) -> String {
        shape_name(&self.graph).unwrap_or_else(|| "-".into())
    }
}

/// Graphs with known `mvd`, at most one per isomorphism class.
#[derive(Clone, Debug, Default)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
    by_key: HashMap<String, usize>,
}

impl Catalog {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn by_order(&self, n: usize) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(move |e| e.order == n)
    }

    pub fn get(&self, id: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    fn find_index(&self, g: &Graph) -> Option<usize> {
        if g.order() <= CANONICAL_MAX_ORDER {
            let key = canonical_form(g).ok()?;
            self.by_key.get(&key).copied()
        } else {
            self.entries
                .iter()
                .position(|e| e.key.is_none() && e.order == g.order() && find_isomorphism(g, &e.graph).is_some())
        }
    }

    pub fn insert(&mut self, entry: CatalogEntry) -> Result<()> {
        if let Some(i) = self.find_index(&entry.graph) {
            return Err(Error::Catalog {
                path: entry.id.clone(),
                msg: format!("isomorphic to existing entry {}", self.entries[i].id),
            });
        }
        if let Some(k) = &entry.key {
            self.by_key.insert(k.clone(), self.entries.len());
        }
        self.entries.push(entry);
        Ok(())
    }

    /// The entry isomorphic to `g`, with a mapping from `g` onto it.
    pub fn lookup(&self, g: &Graph) -> Option<(&CatalogEntry, IsoMapping)> {
        let e = &self.entries[self.find_index(g)?];
        let m = find_isomorphism(g, &e.graph)?;
        Some((e, m))
    }

    /// Census table: per order the entry count and values, then one line
    /// per entry.
    pub fn census(&self) -> String {
        let mut by_order: BTreeMap<usize, Vec<&CatalogEntry>> = BTreeMap::new();
        for e in &self.entries {
            by_order.entry(e.order).or_default().push(e);
        }
        let mut out = String::from("# order count mvd\n");
        for (n, es) in &by_order {
            let vals: Vec<String> = es.iter().map(|e| e.mvd_value.to_string()).collect();
            writeln!(out, "{n} {} {}", es.len(), vals.join(",")).unwrap();
        }
        out.push_str("\n# id order mvd shape\n");
        for e in &self.entries {
            writeln!(out, "{} {} {} {}", e.id, e.order, e.mvd_value, e.shape()).unwrap();
        }
        out
    }
}

/// Catalog of all minimally 2-connected graphs of orders `4..=max_order`,
/// valued by exact search.
pub fn build_catalog(max_order: usize) -> Result<Catalog> {
    let levels = generate_minimal_blocks_up_to(max_order)?;
    let mut cat = Catalog::new();
    for (n, graphs) in levels.iter().enumerate().skip(4) {
        for (i, g) in graphs.iter().enumerate() {
            let r = mvd_exact(g)?;
            let entry = CatalogEntry::new(format!("graph_{n}Vertex-{}", i + 1), g.clone(), r.value, r.coloring)?;
            cat.insert(entry)?;
        }
    }
    Ok(cat)
}

pub fn save_catalog(cat: &Catalog, dir: impl AsRef<Path>) -> Result<()> {
    let dir = dir.as_ref();
    std::fs::create_dir_all(dir)?;
    for e in cat.entries() {
        std::fs::write(dir.join(format!("{}.txt", e.id)), write_matrix(&e.graph, Some(&e.coloring)))?;
    }
    std::fs::write(dir.join("census.txt"), cat.census())?;
    Ok(())
}

fn parse_census(text: &str) -> HashMap<String, usize> {
    let mut out = HashMap::new();
    let mut in_entries = false;
    for line in text.lines() {
        let t = line.trim();
        if t.starts_with("# id") {
            in_entries = true;
            continue;
        }
        if !in_entries || t.is_empty() || t.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = t.split_whitespace().collect();
        if let [id, _, mvd, ..] = toks[..] {
            if let Ok(v) = mvd.parse() {
                out.insert(id.to_string(), v);
            }
        }
    }
    out
}

/// `(order, index)` from `graph_<n>Vertex-<index>`.
fn entry_sort_key(stem: &str) -> (usize, usize, String) {
    let parsed = stem
        .strip_prefix("graph_")
        .and_then(|r| r.split_once("Vertex-"))
        .and_then(|(n, i)| Some((n.parse().ok()?, i.parse().ok()?)));
    match parsed {
        Some((n, i)) => (n, i, stem.to_string()),
        None => (usize::MAX, usize::MAX, stem.to_string()),
    }
}

/// Loads every `graph_*.txt` in `dir`, re-verifying each coloring. The
/// recorded value is taken from `census.txt` when present, otherwise from
/// the file's color count.
pub fn load_catalog(dir: impl AsRef<Path>) -> Result<Catalog> {
    let dir = dir.as_ref();
    let census = match std::fs::read_to_string(dir.join("census.txt")) {
        Ok(t) => parse_census(&t),
        Err(_) => HashMap::new(),
    };
    let mut files: Vec<(usize, usize, String)> = Vec::new();
    for ent in std::fs::read_dir(dir)? {
        let name = ent?.file_name().to_string_lossy().into_owned();
        if let Some(stem) = name.strip_suffix(".txt") {
            if stem.starts_with("graph_") {
                files.push(entry_sort_key(stem));
            }
        }
    }
    files.sort();
    let mut cat = Catalog::new();
    for (_, _, stem) in files {
        let path = dir.join(format!("{stem}.txt"));
        let shown = path.display().to_string();
        let fail = |msg: String| Error::Catalog {
            path: shown.clone(),
            msg,
        };
        let text = std::fs::read_to_string(&path)?;
        let cg = parse_matrix(&text).map_err(|e| fail(e.to_string()))?;
        let coloring = cg.coloring.ok_or_else(|| fail("labels carry no colors".into()))?;
        let recorded = census.get(&stem).copied().unwrap_or_else(|| coloring.num_colors());
        let entry = CatalogEntry::new(stem.clone(), cg.graph, recorded, coloring).map_err(|e| match e {
            Error::Catalog { msg, .. } => fail(msg),
            other => fail(other.to_string()),
        })?;
        cat.insert(entry).map_err(|e| match e {
            Error::Catalog { msg, .. } => fail(msg),
            other => other,
        })?;
    }
    Ok(cat)
}
