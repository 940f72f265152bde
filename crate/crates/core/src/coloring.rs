use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::vset::VertexSet;

/// Positive color identifier.
pub type Color = u32;

/// Total map from the vertices of a graph to positive colors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexColoring {
    colors: Vec<Color>,
}

impl VertexColoring {
    pub fn new(colors: Vec<Color>) -> Result<Self> {
        if let Some(i) = colors.iter().position(|&c| c == 0) {
            return Err(Error::Coloring(format!("vertex {i} has color 0; colors are positive")));
        }
        Ok(VertexColoring { colors })
    }

    /// Every vertex gets its own color `1..=n`.
    pub fn distinct(n: usize) -> Self {
        VertexColoring {
            colors: (1..=n as Color).collect(),
        }
    }

    pub fn uniform(n: usize, c: Color) -> Self {
        assert!(c > 0);
        VertexColoring { colors: vec![c; n] }
    }

    /// Builds a coloring of `g` from `(label, color)` pairs; every vertex of
    /// `g` must appear exactly once.
    pub fn from_labels<S: AsRef<str>>(g: &Graph, pairs: &[(S, Color)]) -> Result<Self> {
        let mut colors = vec![0; g.order()];
        for (l, c) in pairs {
            let v = g
                .vertex(l.as_ref())
                .map_err(|_| Error::Coloring(format!("unknown vertex {:?}", l.as_ref())))?;
            if colors[v] != 0 {
                return Err(Error::Coloring(format!("vertex {} colored twice", g.label(v))));
            }
            if *c == 0 {
                return Err(Error::Coloring(format!("vertex {} has color 0", g.label(v))));
            }
            colors[v] = *c;
        }
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::Coloring(format!(
                "coloring is not total: {} has no color",
                g.label(v)
            )));
        }
        Ok(VertexColoring { colors })
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    #[inline]
    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.colors
    }

    /// Distinct colors in ascending order.
    pub fn palette(&self) -> Vec<Color> {
        let mut p = self.colors.clone();
        p.sort_unstable();
        p.dedup();
        p
    }

    pub fn num_colors(&self) -> usize {
        self.palette().len()
    }

    /// Color classes keyed by color.
    pub fn classes(&self) -> BTreeMap<Color, VertexSet> {
        let n = self.colors.len();
        let mut out: BTreeMap<Color, VertexSet> = BTreeMap::new();
        for (v, &c) in self.colors.iter().enumerate() {
            out.entry(c).or_insert_with(|| VertexSet::new(n)).insert(v);
        }
        out
    }

    /// Restriction to `s`, indexed like `Graph::induced_subgraph(s)`.
    /// Colors are kept as they are.
    pub fn restrict(&self, s: &VertexSet) -> Self {
        VertexColoring {
            colors: s.iter().map(|v| self.colors[v]).collect(),
        }
    }

    /// Restriction to `verts`, where vertex `i` of the result is `verts[i]`.
    pub fn restrict_to(&self, verts: &[Vertex]) -> Self {
        VertexColoring {
            colors: verts.iter().map(|&v| self.colors[v]).collect(),
        }
    }

    /// Renames colors to `1..=k` in order of first appearance along
    /// `order`.
    pub fn renumbered_along(&self, order: &[Vertex]) -> Self {
        let mut map: BTreeMap<Color, Color> = BTreeMap::new();
        for &v in order {
            let next = map.len() as Color + 1;
            map.entry(self.colors[v]).or_insert(next);
        }
        for &c in &self.colors {
            let next = map.len() as Color + 1;
            map.entry(c).or_insert(next);
        }
        VertexColoring {
            colors: self.colors.iter().map(|c| map[c]).collect(),
        }
    }

    pub fn renumbered(&self) -> Self {
        let order: Vec<Vertex> = (0..self.colors.len()).collect();
        self.renumbered_along(&order)
    }

    /// True when the two colorings induce the same partition.
    pub fn same_partition(&self, other: &VertexColoring) -> bool {
        self.len() == other.len() && self.renumbered() == other.renumbered()
    }
}
