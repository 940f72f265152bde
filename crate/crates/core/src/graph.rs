//! Labeled simple undirected graphs and elementary connectivity queries.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::vset::VertexSet;

/// 0-based vertex index into a [`Graph`].
pub type Vertex = usize;

/// Simple undirected graph with distinct vertex labels.
///
/// Vertices are identified by index; labels are used only for I/O and for
/// deterministic ordering of reports. Graphs are immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, Vertex>,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("labels", &self.labels)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

fn check_label(label: &str) -> Result<String> {
    let l = label.trim();
    if l.is_empty() {
        return Err(Error::InvalidGraph("empty vertex label".into()));
    }
    if l.chars().any(|c| c.is_whitespace() || c == ',' || c == ':') {
        return Err(Error::InvalidGraph(format!(
            "label {l:?} contains whitespace, ',' or ':'"
        )));
    }
    Ok(l.to_string())
}

impl Graph {
    /// Edgeless graph on the given labels.
    pub fn with_labels<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let labels = labels
            .into_iter()
            .map(|l| check_label(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate label {l:?}")));
            }
        }
        let n = labels.len();
        Ok(Graph {
            labels,
            index,
            adj: vec![VertexSet::new(n); n],
        })
    }

    /// Edgeless graph labeled `v1..vn`.
    pub fn empty(n: usize) -> Self {
        Self::with_labels((1..=n).map(|i| format!("v{i}"))).expect("generated labels are valid")
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Cycle `v1 v2 ... vn v1`; `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges).unwrap()
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// `K(1,leaves)`; the center is vertex 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::from_edges(leaves + 1, &edges).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        let n = self.order();
        if u >= n || v >= n {
            return Err(Error::InvalidGraph(format!("edge ({u}, {v}) out of range")));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!(
                "self-loop at {}",
                self.labels[u]
            )));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn add_edge_by_label(&mut self, a: &str, b: &str) -> Result<()> {
        let u = self.vertex(a)?;
        let v = self.vertex(b)?;
        self.add_edge(u, v)
    }

    /// Appends an isolated vertex and returns its index.
    pub fn add_vertex(&mut self, label: &str) -> Result<Vertex> {
        let l = check_label(label)?;
        if self.index.contains_key(&l) {
            return Err(Error::InvalidGraph(format!("duplicate label {l:?}")));
        }
        let n = self.order() + 1;
        let mut adj: Vec<VertexSet> = Vec::with_capacity(n);
        for row in &self.adj {
            adj.push(VertexSet::from_iter_cap(n, row.iter()));
        }
        adj.push(VertexSet::new(n));
        self.adj = adj;
        self.index.insert(l.clone(), n - 1);
        self.labels.push(l);
        Ok(n - 1)
    }

    /// Graph with the same edges and new labels.
    pub fn relabeled<I, S>(&self, labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut g = Self::with_labels(labels)?;
        if g.order() != self.order() {
            return Err(Error::InvalidArgument("label count differs from order".into()));
        }
        g.adj = self.adj.clone();
        Ok(g)
    }

    /// Returns the graph in which old vertex `v` becomes `perm[v]`, keeping
    /// each vertex's label attached to it.
    pub fn permuted(&self, perm: &[Vertex]) -> Self {
        let n = self.order();
        assert_eq!(perm.len(), n);
        let mut labels = vec![String::new(); n];
        for v in 0..n {
            labels[perm[v]] = self.labels[v].clone();
        }
        let mut g = Self::with_labels(labels).expect("permutation keeps labels distinct");
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]).unwrap();
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Result<Vertex> {
        self.index
            .get(label.trim())
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn vertex_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet> {
        let mut s = VertexSet::new(self.order());
        for l in labels {
            s.insert(self.vertex(l.as_ref())?);
        }
        Ok(s)
    }

    #[inline]
    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter()
    }

    pub fn neighbor_set(&self, v: Vertex) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.order()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Neighbor bit masks; `None` above 64 vertices.
    pub(crate) fn masks(&self) -> Option<Vec<u64>> {
        (self.order() <= 64).then(|| self.adj.iter().map(VertexSet::as_mask).collect())
    }

    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Self {
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        g
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        (0..n).all(|v| self.degree(v) + 1 == n)
    }

    /// Connected and acyclic, with at least one vertex.
    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.size() + 1 == self.order() && self.is_connected()
    }

    /// Vertices in cyclic order when the graph is a single cycle.
    pub fn cycle_order(&self) -> Option<Vec<Vertex>> {
        let n = self.order();
        if n < 3 || self.size() != n || !(0..n).all(|v| self.degree(v) == 2) || !self.is_connected() {
            return None;
        }
        let mut order = Vec::with_capacity(n);
        let (mut prev, mut cur) = (usize::MAX, 0);
        for _ in 0..n {
            order.push(cur);
            let next = self.neighbors(cur).find(|&w| w != prev).expect("degree two");
            prev = cur;
            cur = next;
        }
        Some(order)
    }

    /// Vertices reachable from `start` without entering `blocked`.
    pub fn reachable_avoiding(&self, start: Vertex, blocked: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::new(self.order());
        if blocked.contains(start) {
            return seen;
        }
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in self.adj[v].iter() {
                if !blocked.contains(w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// True iff every vertex is reachable from vertex 0; the empty graph
    /// counts as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        n == 0 || self.reachable_avoiding(0, &VertexSet::new(n)).len() == n
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.order();
        let mut seen = VertexSet::new(n);
        let mut out = Vec::new();
        for v in 0..n {
            if seen.contains(v) {
                continue;
            }
            let comp = self.reachable_avoiding(v, &VertexSet::new(n));
            seen.union_with(&comp);
            out.push(comp.iter().collect());
        }
        out
    }

    fn check_members(&self, s: &VertexSet) -> Result<()> {
        if s.capacity() != self.order() {
            if let Some(v) = s.iter().find(|&v| v >= self.order()) {
                return Err(Error::InvalidArgument(format!("vertex {v} not in graph")));
            }
        }
        Ok(())
    }

    /// `G[S]`; vertices keep their relative order and labels.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Self> {
        self.check_members(s)?;
        if s.is_empty() {
            return Err(Error::InvalidArgument("induced subgraph of an empty set".into()));
        }
        let verts: Vec<Vertex> = s.iter().collect();
        Ok(self.induced_on(&verts))
    }

    /// Induced subgraph whose vertex `i` is `verts[i]`.
    pub fn induced_on(&self, verts: &[Vertex]) -> Self {
        let mut g = Self::with_labels(verts.iter().map(|&v| self.labels[v].as_str()))
            .expect("distinct source vertices");
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        g
    }

    /// `G - S`; `S` must be a proper subset of the vertices.
    pub fn remove_vertices(&self, s: &VertexSet) -> Result<Self> {
        self.check_members(s)?;
        let rest: Vec<Vertex> = self.vertices().filter(|&v| !s.contains(v)).collect();
        if rest.is_empty() {
            return Err(Error::InvalidArgument("cannot remove every vertex".into()));
        }
        Ok(self.induced_on(&rest))
    }

    /// True iff `x` and `y` lie in different components of `G - S`.
    pub fn separates(&self, s: &VertexSet, x: Vertex, y: Vertex) -> Result<bool> {
        self.check_members(s)?;
        if x >= self.order() || y >= self.order() {
            return Err(Error::InvalidArgument("vertex out of range".into()));
        }
        if x == y {
            return Err(Error::InvalidArgument("x and y must differ".into()));
        }
        if s.contains(x) || s.contains(y) {
            return Err(Error::InvalidArgument(format!(
                "{} or {} belongs to the separator",
                self.labels[x], self.labels[y]
            )));
        }
        Ok(!self.reachable_avoiding(x, s).contains(y))
    }

    /// True iff `|G| > k` and no set of fewer than `k` vertices disconnects
    /// `G`. Exhaustive over all small separators.
    pub fn is_k_connected(&self, k: usize) -> bool {
        let n = self.order();
        if n <= k {
            return false;
        }
        for size in 0..k {
            let mut combo: Vec<usize> = (0..size).collect();
            loop {
                let removed = VertexSet::from_iter_cap(n, combo.iter().copied());
                let start = (0..n).find(|v| !removed.contains(*v)).expect("n > k");
                if self.reachable_avoiding(start, &removed).len() + size != n {
                    return false;
                }
                if !next_combination(&mut combo, n) {
                    break;
                }
            }
        }
        true
    }

    /// Contains no 3-clique.
    pub fn triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| {
            let mut common = self.adj[u].clone();
            common.intersect_with(&self.adj[v]);
            common.is_empty()
        })
    }
}

/// Advances `combo` (strictly increasing, values `< n`) to the next
/// combination in lexicographic order.
pub(crate) fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Collapses a loop-free multigraph, given as a symmetric matrix of edge
/// multiplicities, into its underlying simple graph.
pub fn simplify<S: AsRef<str>>(labels: &[S], multiplicity: &[Vec<u32>]) -> Result<Graph> {
    let n = labels.len();
    if multiplicity.len() != n || multiplicity.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidGraph("multiplicity matrix must be n x n".into()));
    }
    let mut g = Graph::with_labels(labels)?;
    for u in 0..n {
        if multiplicity[u][u] != 0 {
            return Err(Error::InvalidGraph(format!(
                "loop at {}",
                labels[u].as_ref()
            )));
        }
        for v in u + 1..n {
            if multiplicity[u][v] != multiplicity[v][u] {
                return Err(Error::InvalidGraph(format!(
                    "asymmetric multiplicity between {} and {}",
                    labels[u].as_ref(),
                    labels[v].as_ref()
                )));
            }
            if multiplicity[u][v] > 0 {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}
