//! Computing `mvd(G)` with a witnessing coloring.
//!
//! Three routes are available:
//!
//! * [`mvd_exact`] searches set partitions directly, for small graphs;
//! * [`mvd_closed_form`] covers cycles, complete graphs and trees;
//! * [`mvd_via_blocks`] decomposes the graph, solves every block on its own
//!   and stitches the block colorings together. Blocks meet in single cut
//!   vertices, so the value composes as `sum(mvd(B)) - r + 1` over the `r`
//!   blocks.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::blocks::{decompose, BlockDecomposition, BlockKind};
use crate::catalog::{is_minimally_two_connected, Catalog};
use crate::coloring::{Color, VertexColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::transfer_coloring;
use crate::partition::Partitions;
use crate::verify::{is_mvd_coloring, MaskGraph};

/// Largest order [`mvd_exact`] accepts.
pub const EXACT_MAX_ORDER: usize = 11;

/// Above this order the stitched coloring is re-checked block by block
/// instead of pair by pair over the whole graph.
pub const FULL_VERIFY_MAX_ORDER: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exact,
    ClosedForm,
    Catalog,
    BlockComposed,
    CountingFormula,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Exact => "exact",
            Method::ClosedForm => "closed-form",
            Method::Catalog => "catalog",
            Method::BlockComposed => "block-composed",
            Method::CountingFormula => "counting-formula",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvdResult {
    pub value: usize,
    pub coloring: VertexColoring,
    pub method: Method,
}

fn require_solvable(g: &Graph) -> Result<()> {
    if g.order() < 2 {
        return Err(Error::Trivial(g.order()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Tuning for [`mvd_exact_with`].
#[derive(Clone, Copy, Debug)]
pub struct ExactOptions {
    /// Start the descent at `floor(n/2)` for minimally 2-connected inputs
    /// with `n >= 4`.
    pub minimal_block_bound: bool,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            minimal_block_bound: true,
        }
    }
}

/// Exact `mvd` by exhaustive partition search.
///
/// Class counts are tried from the top down; within a count, partitions
/// come in restricted-growth order and the first MVD-coloring found is
/// returned, so its class count is the maximum.
pub fn mvd_exact(g: &Graph) -> Result<MvdResult> {
    mvd_exact_with(g, ExactOptions::default())
}

pub fn mvd_exact_with(g: &Graph, opts: ExactOptions) -> Result<MvdResult> {
    let n = g.order();
    if n > EXACT_MAX_ORDER {
        return Err(Error::GuardExceeded {
            order: n,
            limit: EXACT_MAX_ORDER,
        });
    }
    require_solvable(g)?;
    if g.is_complete() {
        return Ok(MvdResult {
            value: n,
            coloring: VertexColoring::distinct(n),
            method: Method::Exact,
        });
    }
    let top = if opts.minimal_block_bound && n >= 4 && is_minimally_two_connected(g) {
        n / 2
    } else {
        n
    };
    let mg = MaskGraph::new(g).expect("order is below 64");
    let mut masks = vec![0u64; n];
    // the pair that failed last is tried first on the next partition
    let mut hot = 0usize;
    for k in (1..=top).rev() {
        let mut parts = Partitions::new(n, k);
        while parts.advance() {
            let rgs = parts.current();
            masks[..k].fill(0);
            for (v, &c) in rgs.iter().enumerate() {
                masks[c as usize] |= 1 << v;
            }
            let classes = &masks[..k];
            let (hx, hy) = mg.pairs[hot];
            if mg.separating_class(classes, hx as usize, hy as usize).is_none() {
                continue;
            }
            let failed = mg
                .pairs
                .iter()
                .position(|&(x, y)| mg.separating_class(classes, x as usize, y as usize).is_none());
            match failed {
                Some(i) => hot = i,
                None => {
                    let coloring = VertexColoring::new(rgs.iter().map(|&c| c as Color + 1).collect())?;
                    return Ok(MvdResult {
                        value: k,
                        coloring,
                        method: Method::Exact,
                    });
                }
            }
        }
    }
    Err(Error::Inconsistent(
        "no partition passed; the single-class coloring always should".into(),
    ))
}

/// Closed forms: `mvd(Kn) = n`, `mvd(T) = n` for trees with the all-distinct
/// coloring, `mvd(Cn) = floor(n/2)` for `n >= 4` with `v_j` colored
/// `j mod floor(n/2)` along the cycle. `None` for any other graph.
pub fn mvd_closed_form(g: &Graph) -> Option<MvdResult> {
    let n = g.order();
    if n < 2 || !g.is_connected() {
        return None;
    }
    if g.is_complete() || g.is_tree() {
        return Some(MvdResult {
            value: n,
            coloring: VertexColoring::distinct(n),
            method: Method::ClosedForm,
        });
    }
    let order = g.cycle_order()?;
    let half = n / 2;
    let mut colors = vec![0; n];
    for (j, &v) in order.iter().enumerate() {
        colors[v] = (j % half) as Color + 1;
    }
    Some(MvdResult {
        value: half,
        coloring: VertexColoring::new(colors).expect("positive"),
        method: Method::ClosedForm,
    })
}

fn check_count(dec: &BlockDecomposition, got: usize) -> Result<()> {
    if got != dec.num_blocks() {
        return Err(Error::InvalidArgument(format!(
            "{} per-block values for {} blocks",
            got,
            dec.num_blocks()
        )));
    }
    Ok(())
}

/// `sum(mvd(B_i)) - r + 1`.
pub fn mvd_compose(dec: &BlockDecomposition, per_block: &[MvdResult]) -> Result<usize> {
    check_count(dec, per_block.len())?;
    let sum: usize = per_block.iter().map(|r| r.value).sum();
    Ok(sum + 1 - dec.num_blocks())
}

/// `4 n5 + 3 n4 + 2 n3 + n2 + 1`, where `n_i` counts blocks of value `i`.
pub fn counting_formula(dec: &BlockDecomposition, block_values: &[usize]) -> Result<usize> {
    check_count(dec, block_values.len())?;
    let mut tally = [0usize; 6];
    for &v in block_values {
        if !(2..=5).contains(&v) {
            return Err(Error::InvalidArgument(format!("block value {v} outside 2..=5")));
        }
        tally[v] += 1;
    }
    Ok(4 * tally[5] + 3 * tally[4] + 2 * tally[3] + tally[2] + 1)
}

/// Glues per-block MVD-colorings into one coloring of `g`.
///
/// Blocks are visited in block-cut tree order. The first block keeps its
/// classes under fresh colors. Every later block meets the visited part in
/// exactly one cut vertex `w`; the class of `w` takes `w`'s existing color
/// and the other classes get fresh colors. Fresh colors are consecutive
/// integers from 1 in visiting order.
pub fn stitch_colorings(g: &Graph, dec: &BlockDecomposition, per_block: &[VertexColoring]) -> Result<VertexColoring> {
    check_count(dec, per_block.len())?;
    if dec.order() != g.order() {
        return Err(Error::InvalidArgument("decomposition does not belong to this graph".into()));
    }
    for (i, (b, c)) in dec.blocks.iter().zip(per_block).enumerate() {
        if c.len() != b.order() {
            return Err(Error::Coloring(format!("coloring of block {} has wrong length", i + 1)));
        }
        if !is_mvd_coloring(&b.graph, c)?.ok {
            return Err(Error::Coloring(format!(
                "coloring of block {{{}}} is not an MVD-coloring",
                b.sorted_labels().join(",")
            )));
        }
    }
    let mut global: Vec<Color> = vec![0; g.order()];
    let mut next: Color = 1;
    for (bi, via) in dec.tree_order() {
        let block = &dec.blocks[bi];
        let local = &per_block[bi];
        let mut rename: BTreeMap<Color, Color> = BTreeMap::new();
        if let Some(w) = via {
            let lw = block.local(w).expect("attachment vertex lies in the block");
            rename.insert(local.color(lw), global[w]);
        }
        for (li, &v) in block.vertices.iter().enumerate() {
            let target = *rename.entry(local.color(li)).or_insert_with(|| {
                next += 1;
                next - 1
            });
            if Some(v) == via {
                continue;
            }
            debug_assert_eq!(global[v], 0, "blocks overlap outside their attachment vertex");
            global[v] = target;
        }
    }
    VertexColoring::new(global)
}

/// MVD check that goes pair by pair up to [`FULL_VERIFY_MAX_ORDER`]
/// vertices and block by block above it. A coloring is an MVD-coloring of
/// `g` iff its restriction to every block is one.
pub fn verify_coloring(g: &Graph, dec: &BlockDecomposition, c: &VertexColoring) -> Result<bool> {
    if g.order() <= FULL_VERIFY_MAX_ORDER {
        return Ok(is_mvd_coloring(g, c)?.ok);
    }
    for b in &dec.blocks {
        if !is_mvd_coloring(&b.graph, &c.restrict_to(&b.vertices))?.ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// How one block was solved.
#[derive(Clone, Debug)]
pub struct BlockResult {
    pub result: MvdResult,
    /// Catalog entry used, when the block was found there.
    pub catalog_id: Option<String>,
}

#[derive(Clone, Debug)]
pub struct BlockSolution {
    pub result: MvdResult,
    pub decomposition: BlockDecomposition,
    /// Indexed like `decomposition.blocks`.
    pub per_block: Vec<BlockResult>,
}

/// Solves a single block: `K2` directly, then catalog, closed forms and
/// finally exact search.
pub fn solve_block(block: &Graph, catalog: Option<&Catalog>) -> Result<BlockResult> {
    if block.order() == 2 {
        return Ok(BlockResult {
            result: MvdResult {
                value: 2,
                coloring: VertexColoring::distinct(2),
                method: Method::ClosedForm,
            },
            catalog_id: None,
        });
    }
    if let Some((entry, mapping)) = catalog.and_then(|c| c.lookup(block)) {
        return Ok(BlockResult {
            result: MvdResult {
                value: entry.mvd_value,
                coloring: transfer_coloring(&mapping, &entry.coloring),
                method: Method::Catalog,
            },
            catalog_id: Some(entry.id.clone()),
        });
    }
    if let Some(r) = mvd_closed_form(block) {
        return Ok(BlockResult {
            result: r,
            catalog_id: None,
        });
    }
    match mvd_exact(block) {
        Ok(r) => Ok(BlockResult {
            result: r,
            catalog_id: None,
        }),
        Err(Error::GuardExceeded { order, limit }) => {
            let mut labels = block.labels().to_vec();
            labels.sort();
            Err(Error::Unsolvable {
                block: format!("{{{}}}", labels.join(",")),
                reason: format!("order {order} exceeds the exact-search limit {limit} and no catalog entry or closed form applies"),
            })
        }
        Err(e) => Err(e),
    }
}

/// Block-wise solve: decompose, solve each block, stitch, re-verify.
pub fn mvd_via_blocks(g: &Graph, catalog: Option<&Catalog>) -> Result<BlockSolution> {
    require_solvable(g)?;
    let dec = decompose(g)?;
    let per_block = dec
        .blocks
        .iter()
        .map(|b| solve_block(&b.graph, catalog))
        .collect::<Result<Vec<_>>>()?;
    let results: Vec<MvdResult> = per_block.iter().map(|b| b.result.clone()).collect();
    let value = mvd_compose(&dec, &results)?;
    let colorings: Vec<VertexColoring> = results.into_iter().map(|r| r.coloring).collect();
    let coloring = stitch_colorings(g, &dec, &colorings)?;

    if coloring.num_colors() != value {
        return Err(Error::Inconsistent(format!(
            "stitched coloring uses {} colors, composition gives {value}",
            coloring.num_colors()
        )));
    }
    let ok = verify_coloring(g, &dec, &coloring)?;
    if !ok {
        return Err(Error::Inconsistent("stitched coloring failed verification".into()));
    }
    Ok(BlockSolution {
        result: MvdResult {
            value,
            coloring,
            method: Method::BlockComposed,
        },
        decomposition: dec,
        per_block,
    })
}

/// Strategy selector for [`solve`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    Exact,
    Blocks,
    /// Closed form when one applies, otherwise blocks.
    #[default]
    Auto,
}

/// Outcome of [`solve`]; `blocks` is present for block-wise solves.
#[derive(Clone, Debug)]
pub struct Solution {
    pub result: MvdResult,
    pub blocks: Option<BlockSolution>,
}

pub fn solve(g: &Graph, strategy: Strategy, catalog: Option<&Catalog>) -> Result<Solution> {
    match strategy {
        Strategy::Exact => Ok(Solution {
            result: mvd_exact(g)?,
            blocks: None,
        }),
        Strategy::Auto if mvd_closed_form(g).is_some() => Ok(Solution {
            result: mvd_closed_form(g).unwrap(),
            blocks: None,
        }),
        Strategy::Auto | Strategy::Blocks => {
            let bs = mvd_via_blocks(g, catalog)?;
            Ok(Solution {
                result: bs.result.clone(),
                blocks: Some(bs),
            })
        }
    }
}

/// Per-block values of a decomposition tallied through the counting
/// formula, when every block value lies in `2..=5`.
pub fn counting_formula_result(sol: &BlockSolution) -> Result<usize> {
    let values: Vec<usize> = sol.per_block.iter().map(|b| b.result.value).collect();
    counting_formula(&sol.decomposition, &values)
}

impl BlockSolution {
    pub fn nontrivial_blocks(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.decomposition.num_blocks()).filter(|&i| self.decomposition.blocks[i].kind == BlockKind::Nontrivial)
    }
}
