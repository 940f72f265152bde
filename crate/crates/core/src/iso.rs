//! Isomorphism testing, coloring transfer and canonical keys.

use crate::coloring::VertexColoring;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest order accepted by [`canonical_form`].
pub const CANONICAL_MAX_ORDER: usize = 12;

/// Bijection from the vertices of `G` to those of `H` preserving adjacency
/// and non-adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoMapping {
    /// `map[v]` is the image of `v`.
    pub map: Vec<Vertex>,
}

impl IsoMapping {
    pub fn identity(n: usize) -> Self {
        IsoMapping { map: (0..n).collect() }
    }

    pub fn image(&self, v: Vertex) -> Vertex {
        self.map[v]
    }

    /// Checks the mapping against both graphs.
    pub fn is_valid(&self, g: &Graph, h: &Graph) -> bool {
        let n = g.order();
        if h.order() != n || self.map.len() != n {
            return false;
        }
        let mut used = vec![false; n];
        for &t in &self.map {
            if t >= n || std::mem::replace(&mut used[t], true) {
                return false;
            }
        }
        (0..n).all(|u| (u + 1..n).all(|v| g.adjacent(u, v) == h.adjacent(self.map[u], self.map[v])))
    }
}

/// Degree plus the sorted degrees of the neighbors.
fn signatures(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    g.vertices()
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect()
}

/// Complete backtracking search. Vertices of `g` are assigned in index
/// order and candidates tried in ascending order, so the mapping returned is
/// the lexicographically least one.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<IsoMapping> {
    let n = g.order();
    if h.order() != n || g.size() != h.size() {
        return None;
    }
    let sg = signatures(g);
    let sh = signatures(h);
    let mut a = sg.clone();
    let mut b = sh.clone();
    a.sort();
    b.sort();
    if a != b {
        return None;
    }
    let candidates: Vec<Vec<Vertex>> = (0..n).map(|u| (0..n).filter(|&x| sh[x] == sg[u]).collect()).collect();

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    // cursor[u] = next index into candidates[u] to try
    let mut cursor = vec![0usize; n];
    let mut u = 0usize;
    loop {
        if u == n {
            return Some(IsoMapping { map });
        }
        let mut placed = false;
        while cursor[u] < candidates[u].len() {
            let x = candidates[u][cursor[u]];
            cursor[u] += 1;
            if used[x] {
                continue;
            }
            if (0..u).all(|w| g.adjacent(u, w) == h.adjacent(x, map[w])) {
                map[u] = x;
                used[x] = true;
                placed = true;
                break;
            }
        }
        if placed {
            u += 1;
            if u < n {
                cursor[u] = 0;
            }
        } else {
            if u == 0 {
                return None;
            }
            u -= 1;
            used[map[u]] = false;
            map[u] = usize::MAX;
        }
    }
}

/// Pulls a coloring of `H` back to `G` along `m`: `v` gets the color of
/// `m(v)`.
pub fn transfer_coloring(m: &IsoMapping, source: &VertexColoring) -> VertexColoring {
    VertexColoring::new(m.map.iter().map(|&t| source.color(t)).collect()).expect("source colors are positive")
}

/// Splits every cell by neighbor counts into each splitter cell until the
/// ordered partition is equitable.
fn refine(g: &Graph, cells: &mut Vec<Vec<Vertex>>) {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s].clone();
            let mut next: Vec<Vec<Vertex>> = Vec::with_capacity(cells.len());
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(usize, Vertex)> = cell
                    .iter()
                    .map(|&v| (splitter.iter().filter(|&&w| g.adjacent(v, w)).count(), v))
                    .collect();
                keyed.sort_by_key(|&(k, _)| k);
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            if next.len() != cells.len() {
                changed = true;
            }
            *cells = next;
            s += 1;
        }
        if !changed {
            return;
        }
    }
}

fn key_for(g: &Graph, order: &[Vertex]) -> Vec<u8> {
    let n = order.len();
    let mut bits = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for i in 0..n {
        for j in i + 1..n {
            bits.push(g.adjacent(order[i], order[j]) as u8);
        }
    }
    bits
}

fn are_twins(g: &Graph, u: Vertex, v: Vertex) -> bool {
    g.vertices()
        .filter(|&w| w != u && w != v)
        .all(|w| g.adjacent(u, w) == g.adjacent(v, w))
}

fn search(g: &Graph, cells: Vec<Vec<Vertex>>, best: &mut Option<(Vec<u8>, Vec<Vertex>)>) {
    let Some(ci) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<Vertex> = cells.into_iter().flatten().collect();
        let key = key_for(g, &order);
        if best.as_ref().is_none_or(|(b, _)| key > *b) {
            *best = Some((key, order));
        }
        return;
    };
    let cell = cells[ci].clone();
    let mut tried: Vec<Vertex> = Vec::new();
    for &v in &cell {
        // swapping twins is an automorphism fixing the current partition
        if tried.iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next = cells.clone();
        let rest: Vec<Vertex> = cell.iter().copied().filter(|&w| w != v).collect();
        next.splice(ci..=ci, [vec![v], rest]);
        refine(g, &mut next);
        search(g, next, best);
    }
}

/// Canonical vertex order: relabeling `g` along it gives the same adjacency
/// for every graph isomorphic to `g`.
pub fn canonical_order(g: &Graph) -> Result<Vec<Vertex>> {
    let n = g.order();
    if n > CANONICAL_MAX_ORDER {
        return Err(Error::GuardExceeded {
            order: n,
            limit: CANONICAL_MAX_ORDER,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut cells = vec![g.vertices().collect::<Vec<_>>()];
    refine(g, &mut cells);
    let mut best = None;
    search(g, cells, &mut best);
    Ok(best.expect("at least one leaf").1)
}

/// Text key that is equal for two graphs iff they are isomorphic. Formed
/// from the order and the upper-triangle adjacency bits under
/// [`canonical_order`], packed as hex.
pub fn canonical_form(g: &Graph) -> Result<String> {
    let order = canonical_order(g)?;
    let bits = key_for(g, &order);
    let mut hex = String::with_capacity(bits.len() / 4 + 1);
    for chunk in bits.chunks(4) {
        let mut nib = 0u32;
        for (i, &b) in chunk.iter().enumerate() {
            nib |= (b as u32) << (3 - i);
        }
        hex.push(char::from_digit(nib, 16).unwrap());
    }
    Ok(format!("{}:{}", g.order(), hex))
}
