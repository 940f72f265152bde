//! Block decomposition by depth-first search with low-link values.
//!
//! The search is iterative, rooted at vertex 0 and explores neighbors in
//! ascending index order, so the output is fully determined by the input.
//! When the search retreats from `v` to `parent(v)` and
//! `low(v) >= dfs(parent(v))`, the vertices stacked since `v` was
//! discovered, together with `parent(v)`, form a block.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::vset::VertexSet;

/// Per-vertex DFS bookkeeping.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DfsRecord {
    /// Discovery index, starting at 1.
    pub dfs_number: usize,
    pub low: usize,
    pub parent: Option<Vertex>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    /// A bridge, `K2`.
    Trivial,
    /// A 2-connected block.
    Nontrivial,
}

#[derive(Clone, Debug)]
pub struct Block {
    /// Vertices of the parent graph, ascending.
    pub vertices: Vec<Vertex>,
    /// Induced subgraph; its vertex `i` is `vertices[i]`.
    pub graph: Graph,
    pub kind: BlockKind,
}

impl Block {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Local index of parent-graph vertex `v`.
    pub fn local(&self, v: Vertex) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    /// Labels sorted lexicographically.
    pub fn sorted_labels(&self) -> Vec<String> {
        let mut l = self.graph.labels().to_vec();
        l.sort();
        l
    }
}

#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    order: usize,
    /// Blocks in emission order.
    pub blocks: Vec<Block>,
    /// Cut vertices, ascending.
    pub cut_vertices: Vec<Vertex>,
    /// DFS table indexed by vertex.
    pub records: Vec<DfsRecord>,
}

impl BlockDecomposition {
    /// Order of the decomposed graph.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of blocks `r`.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Number of trivial blocks `t`.
    pub fn num_trivial(&self) -> usize {
        self.blocks.iter().filter(|b| b.kind == BlockKind::Trivial).count()
    }

    pub fn cut_vertex_set(&self) -> VertexSet {
        VertexSet::from_iter_cap(self.order, self.cut_vertices.iter().copied())
    }

    pub fn is_cut_vertex(&self, v: Vertex) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }

    /// Indices of the blocks containing `v`.
    pub fn blocks_containing(&self, v: Vertex) -> Vec<usize> {
        (0..self.blocks.len()).filter(|&i| self.blocks[i].contains(v)).collect()
    }

    /// Blocks in breadth-first order over the block-cut tree, starting from
    /// block 0. Each entry carries the cut vertex through which the block
    /// was reached; the first entry has none. Every block after the first
    /// meets the earlier ones in exactly that vertex.
    pub fn tree_order(&self) -> Vec<(usize, Option<Vertex>)> {
        let r = self.blocks.len();
        let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); self.order];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in &b.vertices {
                by_vertex[v].push(i);
            }
        }
        let mut seen = vec![false; r];
        let mut visited_cut = VertexSet::new(self.order);
        let mut out = Vec::with_capacity(r);
        let mut queue = VecDeque::new();
        if r > 0 {
            seen[0] = true;
            queue.push_back((0, None));
        }
        while let Some((b, via)) = queue.pop_front() {
            out.push((b, via));
            for &v in &self.blocks[b].vertices {
                if !self.is_cut_vertex(v) || !visited_cut.insert(v) {
                    continue;
                }
                for &nb in &by_vertex[v] {
                    if !seen[nb] {
                        seen[nb] = true;
                        queue.push_back((nb, Some(v)));
                    }
                }
            }
        }
        out
    }
}

/// Decomposes a connected graph with at least 2 vertices into blocks.
pub fn decompose(g: &Graph) -> Result<BlockDecomposition> {
    let n = g.order();
    if n < 2 {
        return Err(Error::Trivial(n));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let nbrs: Vec<Vec<Vertex>> = g.vertices().map(|v| g.neighbors(v).collect()).collect();
    let mut rec = vec![
        DfsRecord {
            dfs_number: 0,
            low: 0,
            parent: None,
        };
        n
    ];
    let mut counter = 1;
    rec[0].dfs_number = 1;
    rec[0].low = 1;
    let mut stacked = vec![0];
    let mut call: Vec<(Vertex, usize)> = vec![(0, 0)];
    let mut raw_blocks: Vec<Vec<Vertex>> = Vec::new();

    while let Some(top) = call.last_mut() {
        let v = top.0;
        if top.1 < nbrs[v].len() {
            let w = nbrs[v][top.1];
            top.1 += 1;
            if rec[w].dfs_number == 0 {
                counter += 1;
                rec[w] = DfsRecord {
                    dfs_number: counter,
                    low: counter,
                    parent: Some(v),
                };
                stacked.push(w);
                call.push((w, 0));
            } else if rec[v].parent != Some(w) {
                rec[v].low = rec[v].low.min(rec[w].dfs_number);
            }
            continue;
        }
        call.pop();
        let Some(p) = rec[v].parent else { continue };
        if rec[v].low >= rec[p].dfs_number {
            let mut block = vec![p];
            loop {
                let u = stacked.pop().expect("v is on the stack");
                block.push(u);
                if u == v {
                    break;
                }
            }
            block.sort_unstable();
            raw_blocks.push(block);
        } else {
            rec[p].low = rec[p].low.min(rec[v].low);
        }
    }

    let cut_vertices: Vec<Vertex> = g.vertices().filter(|&v| is_cut_vertex_by_lowlink(&rec, v)).collect();
    let blocks = raw_blocks
        .into_iter()
        .map(|vertices| {
            let graph = g.induced_on(&vertices);
            let kind = if vertices.len() == 2 {
                BlockKind::Trivial
            } else {
                BlockKind::Nontrivial
            };
            Block { vertices, graph, kind }
        })
        .collect();
    Ok(BlockDecomposition {
        order: n,
        blocks,
        cut_vertices,
        records: rec,
    })
}

/// Cut-vertex test on a finished DFS table: the root is a cut vertex iff it
/// has at least two tree children; any other `u` is one iff some child `w`
/// has `low(w) >= dfs(u)`.
pub fn is_cut_vertex_by_lowlink(records: &[DfsRecord], v: Vertex) -> bool {
    let children = records.iter().filter(|r| r.parent == Some(v));
    if records[v].parent.is_none() {
        children.count() >= 2
    } else {
        let d = records[v].dfs_number;
        children.into_iter().any(|c| c.low >= d)
    }
}

/// Cut vertices by definition: `v` is one iff `G - v` is disconnected.
pub fn naive_cut_vertices(g: &Graph) -> Result<VertexSet> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    let mut out = VertexSet::new(n);
    for v in g.vertices() {
        let removed = VertexSet::from_iter_cap(n, [v]);
        if n > 1 {
            let start = if v == 0 { 1 } else { 0 };
            if g.reachable_avoiding(start, &removed).len() + 1 != n {
                out.insert(v);
            }
        }
    }
    Ok(out)
}
