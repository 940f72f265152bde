//! Upper bounds on `mvd` and the classification of connected graphs whose
//! value is within five of their order.

use std::fmt;

use serde::Serialize;

use crate::blocks::{decompose, BlockKind};
use crate::catalog::{is_minimally_two_connected, shape_name, Catalog};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::{canonical_form, CANONICAL_MAX_ORDER};
use crate::solve::mvd_via_blocks;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    /// `floor(n/2)` for minimally 2-connected graphs with `n >= 4`.
    HalfOrder,
    /// `floor((n + 2t - r + 1) / 2)` over the block decomposition.
    BlockFormula,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub applicable: bool,
    pub reason: String,
    pub value: usize,
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            BoundKind::HalfOrder => "half-order",
            BoundKind::BlockFormula => "block-formula",
        };
        if self.applicable {
            write!(f, "{name}: {} ({})", self.value, self.reason)
        } else {
            write!(f, "{name}: not applicable ({})", self.reason)
        }
    }
}

pub fn bound_half_order(g: &Graph) -> BoundReport {
    let n = g.order();
    let (applicable, reason) = if n < 4 {
        (false, format!("order {n} is below 4"))
    } else if !is_minimally_two_connected(g) {
        (false, "not minimally 2-connected".to_string())
    } else {
        (true, "minimally 2-connected".to_string())
    };
    BoundReport {
        kind: BoundKind::HalfOrder,
        applicable,
        reason,
        value: n / 2,
    }
}

/// The offending block, if some nontrivial block is not minimally
/// 2-connected or contains a triangle.
fn gate_violation(g: &Graph) -> Result<Option<(String, String)>> {
    let dec = decompose(g)?;
    for b in dec.blocks.iter().filter(|b| b.kind == BlockKind::Nontrivial) {
        let reason = if !b.graph.triangle_free() {
            "contains a triangle"
        } else if !is_minimally_two_connected(&b.graph) {
            "is not minimally 2-connected"
        } else {
            continue;
        };
        return Ok(Some((format!("{{{}}}", b.sorted_labels().join(",")), reason.to_string())));
    }
    Ok(None)
}

pub fn bound_blocks(g: &Graph) -> Result<BoundReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let dec = decompose(g)?;
    let (n, r, t) = (g.order(), dec.num_blocks(), dec.num_trivial());
    let value = (n + 2 * t + 1 - r) / 2;
    let (applicable, reason) = match gate_violation(g)? {
        Some((block, why)) => (false, format!("block {block} {why}")),
        None => (true, format!("n={n} r={r} t={t}")),
    };
    Ok(BoundReport {
        kind: BoundKind::BlockFormula,
        applicable,
        reason,
        value,
    })
}

/// `n - mvd` as a regime label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Regime {
    N,
    NMinus1,
    NMinus2,
    NMinus3,
    NMinus4,
    NMinus5,
    Other,
}

impl Regime {
    pub fn from_gap(gap: usize) -> Self {
        match gap {
            0 => Regime::N,
            1 => Regime::NMinus1,
            2 => Regime::NMinus2,
            3 => Regime::NMinus3,
            4 => Regime::NMinus4,
            5 => Regime::NMinus5,
            _ => Regime::Other,
        }
    }

    pub fn gap(self) -> Option<usize> {
        match self {
            Regime::N => Some(0),
            Regime::NMinus1 => Some(1),
            Regime::NMinus2 => Some(2),
            Regime::NMinus3 => Some(3),
            Regime::NMinus4 => Some(4),
            Regime::NMinus5 => Some(5),
            Regime::Other => None,
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.gap() {
            Some(0) => f.write_str("n"),
            Some(k) => write!(f, "n-{k}"),
            None => f.write_str("other"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Tree,
    UnicyclicC4,
    ClassA,
    ClassB,
    ClassC,
    Unclassified,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Tree => "tree",
            Family::UnicyclicC4 => "unicyclic-C4",
            Family::ClassA => "class-A",
            Family::ClassB => "class-B",
            Family::ClassC => "class-C",
            Family::Unclassified => "unclassified",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationResult {
    /// Every nontrivial block is minimally 2-connected and triangle-free.
    pub gate: bool,
    pub n: usize,
    pub mvd: usize,
    pub regime: Regime,
    pub family: Family,
    /// Shapes of the nontrivial blocks (`C4`, `P(3,1,1)`, ...), sorted.
    pub core_shapes: Vec<String>,
    /// Canonical key of the subgraph induced by the nontrivial blocks.
    #[serde(skip)]
    pub core: Graph,
    pub core_key: Option<String>,
}

const CLASS_A: &[&str] = &["C5", "P(1,1,1)", "C6"];
const CLASS_B: &[&str] = &["C7", "P(3,1,1)", "P(2,1,1)", "P(1,1,1,1)", "C8"];

fn family_of(shapes: &[String], regime: Regime) -> Family {
    let s: Vec<&str> = shapes.iter().map(String::as_str).collect();
    match (s.as_slice(), regime) {
        ([], _) => Family::Tree,
        (["C4"], _) => Family::UnicyclicC4,
        ([one], _) if CLASS_A.contains(one) => Family::ClassA,
        ([one], _) if CLASS_B.contains(one) => Family::ClassB,
        (["C4", "C4"], _) => Family::ClassB,
        (_, Regime::NMinus5) => Family::ClassC,
        _ => Family::Unclassified,
    }
}

/// Expected regime of the structurally recognized families.
pub fn family_regime(f: Family) -> Option<Regime> {
    match f {
        Family::Tree => Some(Regime::N),
        Family::UnicyclicC4 => Some(Regime::NMinus2),
        Family::ClassA => Some(Regime::NMinus3),
        Family::ClassB => Some(Regime::NMinus4),
        Family::ClassC => Some(Regime::NMinus5),
        Family::Unclassified => None,
    }
}

/// Classifies a connected graph whose nontrivial blocks are all minimally
/// 2-connected and triangle-free. The regime comes from the solver; the
/// family is read off the shapes of the nontrivial blocks.
pub fn classify(g: &Graph, catalog: Option<&Catalog>) -> Result<ClassificationResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some((block, reason)) = gate_violation(g)? {
        return Err(Error::GateFailure { block, reason });
    }
    let sol = mvd_via_blocks(g, catalog)?;
    let n = g.order();
    let mvd = sol.result.value;
    let regime = Regime::from_gap(n - mvd);
    if regime == Regime::NMinus1 {
        return Err(Error::Inconsistent(format!(
            "mvd = n-1 = {mvd} on a graph passing the gate"
        )));
    }
    let mut core_vertices: Vec<usize> = Vec::new();
    let mut shapes = Vec::new();
    for i in sol.nontrivial_blocks() {
        let b = &sol.decomposition.blocks[i];
        core_vertices.extend(&b.vertices);
        shapes.push(shape_name(&b.graph).unwrap_or_else(|| format!("B{}", b.order())));
    }
    shapes.sort();
    core_vertices.sort_unstable();
    core_vertices.dedup();
    let core = g.induced_on(&core_vertices);
    let core_key = (core.order() <= CANONICAL_MAX_ORDER)
        .then(|| canonical_form(&core))
        .transpose()?;
    let family = family_of(&shapes, regime);
    Ok(ClassificationResult {
        gate: true,
        n,
        mvd,
        regime,
        family,
        core_shapes: shapes,
        core,
        core_key,
    })
}

/// `n` when every nontrivial block is a triangle (vacuously for trees).
pub fn triangle_blocks_value(g: &Graph) -> Result<Option<usize>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let dec = decompose(g)?;
    let all_triangles = dec
        .blocks
        .iter()
        .filter(|b| b.kind == BlockKind::Nontrivial)
        .all(|b| b.order() == 3);
    Ok(all_triangles.then_some(g.order()))
}
