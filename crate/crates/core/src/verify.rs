//! Checking colorings against the MVD definition.
//!
//! A nonadjacent pair `x, y` has a monochromatic `x-y` cut iff some whole
//! color class, minus `x` and `y`, separates them: any monochromatic cut
//! lies inside one class, and adding vertices outside `{x, y}` to a
//! separator keeps it a separator. Each pair therefore costs one
//! reachability check per color.

use crate::coloring::{Color, VertexColoring};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::vset::VertexSet;

/// A color whose class separates a nonadjacent pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairCertificate {
    pub x: Vertex,
    pub y: Vertex,
    pub color: Color,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvdVerdict {
    pub ok: bool,
    /// Least failing pair by label, when not ok.
    pub witness: Option<(Vertex, Vertex)>,
    /// One entry per nonadjacent pair, when ok; pairs ordered by label.
    pub certificate: Vec<PairCertificate>,
}

/// Adjacency as bit masks, for graphs of at most 64 vertices.
#[derive(Clone, Debug)]
pub(crate) struct MaskGraph {
    adj: Vec<u64>,
    /// Nonadjacent pairs `(x, y)`, `x < y`.
    pub(crate) pairs: Vec<(u8, u8)>,
}

impl MaskGraph {
    pub(crate) fn new(g: &Graph) -> Option<Self> {
        let adj = g.masks()?;
        let n = adj.len();
        let mut pairs = Vec::new();
        for x in 0..n {
            for y in x + 1..n {
                if adj[x] >> y & 1 == 0 {
                    pairs.push((x as u8, y as u8));
                }
            }
        }
        Some(MaskGraph { adj, pairs })
    }

    #[inline]
    fn reach(&self, x: usize, blocked: u64) -> u64 {
        let mut seen = 1u64 << x;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                next |= self.adj[f.trailing_zeros() as usize];
                f &= f - 1;
            }
            next &= !blocked & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    #[inline]
    pub(crate) fn class_separates(&self, class: u64, x: usize, y: usize) -> bool {
        let blocked = class & !(1u64 << x) & !(1u64 << y);
        blocked != 0 && self.reach(x, blocked) >> y & 1 == 0
    }

    /// Index into `classes` of the first class separating the pair.
    #[inline]
    pub(crate) fn separating_class(&self, classes: &[u64], x: usize, y: usize) -> Option<usize> {
        classes.iter().position(|&c| self.class_separates(c, x, y))
    }
}

fn check_pair(g: &Graph, x: Vertex, y: Vertex) -> Result<()> {
    if x >= g.order() || y >= g.order() {
        return Err(Error::InvalidArgument("vertex out of range".into()));
    }
    if x == y {
        return Err(Error::InvalidArgument("x and y must differ".into()));
    }
    if g.adjacent(x, y) {
        return Err(Error::InvalidArgument(format!(
            "{} and {} are adjacent; no vertex cut separates them",
            g.label(x),
            g.label(y)
        )));
    }
    Ok(())
}

/// Least color whose class separates `x` from `y`, if any. `None` means no
/// monochromatic `x-y` cut exists at all.
pub fn monochromatic_cut_exists(g: &Graph, c: &VertexColoring, x: Vertex, y: Vertex) -> Result<Option<Color>> {
    check_pair(g, x, y)?;
    check_total(g, c)?;
    let classes = c.classes();
    Ok(first_separating_color(g, &classes, x, y))
}

fn first_separating_color(
    g: &Graph,
    classes: &std::collections::BTreeMap<Color, VertexSet>,
    x: Vertex,
    y: Vertex,
) -> Option<Color> {
    classes.iter().find_map(|(&k, class)| {
        let mut blocked = class.clone();
        blocked.remove(x);
        blocked.remove(y);
        (!blocked.is_empty() && !g.reachable_avoiding(x, &blocked).contains(y)).then_some(k)
    })
}

fn check_total(g: &Graph, c: &VertexColoring) -> Result<()> {
    if c.len() != g.order() {
        return Err(Error::Coloring(format!(
            "coloring covers {} vertices, graph has {}",
            c.len(),
            g.order()
        )));
    }
    Ok(())
}

/// Nonadjacent pairs ordered by `(label(x), label(y))` with `label(x) < label(y)`.
pub fn nonadjacent_pairs_by_label(g: &Graph) -> Vec<(Vertex, Vertex)> {
    let mut pairs = Vec::new();
    for u in g.vertices() {
        for v in u + 1..g.order() {
            if !g.adjacent(u, v) {
                if g.label(u) <= g.label(v) {
                    pairs.push((u, v));
                } else {
                    pairs.push((v, u));
                }
            }
        }
    }
    pairs.sort_by(|a, b| (g.label(a.0), g.label(a.1)).cmp(&(g.label(b.0), g.label(b.1))));
    pairs
}

/// Decides whether `c` is an MVD-coloring of the connected graph `g`.
pub fn is_mvd_coloring(g: &Graph, c: &VertexColoring) -> Result<MvdVerdict> {
    if g.order() < 2 {
        return Err(Error::Trivial(g.order()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    check_total(g, c)?;
    let pairs = nonadjacent_pairs_by_label(g);
    let mut certificate = Vec::with_capacity(pairs.len());

    if let Some(mg) = MaskGraph::new(g) {
        let classes = c.classes();
        let colors: Vec<Color> = classes.keys().copied().collect();
        let masks: Vec<u64> = classes.values().map(VertexSet::as_mask).collect();
        for (x, y) in pairs {
            match mg.separating_class(&masks, x, y) {
                Some(i) => certificate.push(PairCertificate { x, y, color: colors[i] }),
                None => return Ok(failed(x, y)),
            }
        }
    } else {
        let classes = c.classes();
        for (x, y) in pairs {
            match first_separating_color(g, &classes, x, y) {
                Some(color) => certificate.push(PairCertificate { x, y, color }),
                None => return Ok(failed(x, y)),
            }
        }
    }
    Ok(MvdVerdict {
        ok: true,
        witness: None,
        certificate,
    })
}

fn failed(x: Vertex, y: Vertex) -> MvdVerdict {
    MvdVerdict {
        ok: false,
        witness: Some((x, y)),
        certificate: Vec::new(),
    }
}

/// Restriction of a coloring to `G[S]` (indexing follows
/// [`Graph::induced_subgraph`]).
pub fn restrict(c: &VertexColoring, s: &VertexSet) -> VertexColoring {
    c.restrict(s)
}
